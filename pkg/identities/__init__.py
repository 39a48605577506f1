# identities package
from base_model.check_collection import CheckCollection
from config.setup                import DEFAULT_BUDGETS, Budgets

from .epsilon_delta           import EpsilonDeltaCheck, check_epsilon_delta
from .form_identities         import FormContractionCheck, FormSwapCheck, check_form_contraction, check_form_swap
from .structure_traces        import (JacobiAsTracesCheck, StructureConstantsFromTracesCheck, TraceDecompositionCheck,
                                      check_jacobi_as_traces, check_structure_constants_from_traces,
                                      check_trace_decomposition)
from .pfaffian_correspondence import PfaffianCorrespondenceCheck, check_pfaffian_correspondence, pfaffian_self_test
from .chevalley               import (DEFAULT_SEED, CasimirEvaluationCheck, ChevalleyDegreesCheck, KillingTraceCheck,
                                      OddTraceVanishingCheck, check_casimir_evaluation, check_chevalley_degrees,
                                      check_killing_trace, check_odd_trace_vanishing)
from .automorphism            import OuterAutomorphismCheck, check_outer_automorphism

EPSILON_DELTA_RANGE = (2, 3, 4, 5)


def default_collection(seed: int | None = None, budgets: Budgets = DEFAULT_BUDGETS,
                       epsilon_delta_range=EPSILON_DELTA_RANGE) -> CheckCollection:
  """Every identity check in report order."""
  collection = CheckCollection()
  for n in epsilon_delta_range:
    collection.add_check(EpsilonDeltaCheck(n, budgets.entries))
  collection.add_check(FormContractionCheck())
  collection.add_check(FormSwapCheck())
  collection.add_check(KillingTraceCheck(budgets))
  collection.add_check(StructureConstantsFromTracesCheck(budgets))
  collection.add_check(TraceDecompositionCheck(budgets))
  collection.add_check(JacobiAsTracesCheck(budgets=budgets))
  collection.add_check(OddTraceVanishingCheck())
  seed = DEFAULT_SEED if seed is None else seed
  collection.add_check(CasimirEvaluationCheck(seed=seed, budgets=budgets))
  collection.add_check(PfaffianCorrespondenceCheck(seed, budgets))
  collection.add_check(ChevalleyDegreesCheck())
  collection.add_check(OuterAutomorphismCheck(budgets=budgets))
  return collection


__all__ = [
  "CasimirEvaluationCheck",
  "ChevalleyDegreesCheck",
  "EpsilonDeltaCheck",
  "FormContractionCheck",
  "FormSwapCheck",
  "JacobiAsTracesCheck",
  "KillingTraceCheck",
  "OddTraceVanishingCheck",
  "OuterAutomorphismCheck",
  "PfaffianCorrespondenceCheck",
  "StructureConstantsFromTracesCheck",
  "TraceDecompositionCheck",
  "check_casimir_evaluation",
  "check_chevalley_degrees",
  "check_epsilon_delta",
  "check_form_contraction",
  "check_form_swap",
  "check_jacobi_as_traces",
  "check_killing_trace",
  "check_odd_trace_vanishing",
  "check_outer_automorphism",
  "check_pfaffian_correspondence",
  "check_structure_constants_from_traces",
  "check_trace_decomposition",
  "default_collection",
  "pfaffian_self_test",
]
