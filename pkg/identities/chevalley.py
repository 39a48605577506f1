"""
Checks around the Chevalley invariants x -> tr(pi(x)^k) and the Killing form.

A symmetric tensor vanishes exactly when its diagonal polynomial does, so
nonvanishing and vanishing of symmetrized traces are decided on exact polynomials.
"""
from collections import Counter
from fractions   import Fraction
from math        import factorial

import numpy as np

from base_model.identity_check  import IdentityCheck, IdentityResult
from classical_lie.algebra      import ClassicalAlgebra, killing_ratio
from classical_lie.algebra_spec import Family
from classical_lie.exponents    import primitive_degrees_from_exponents, tabulated_exponents
from config.setup               import DEFAULT_BUDGETS, LOGGER, Budgets
from generators.descriptor      import Representation
from generators.epsilon_chain   import pfaffian_polynomial
from generators.traces          import chevalley_polynomial, symmetrized_trace, trace_power_polynomial, trace_tensor
from identities.pfaffian_correspondence import DEFAULT_SEED
from tensor_core.adjoint_tensor import as_exact_array, evaluate, exact, format_rational


def polynomial_coefficients(polynomial) -> np.ndarray:
  coefficients = [exact(Fraction(int(c.numerator), int(c.denominator))) for c in polynomial.coeffs()] if polynomial else []
  return np.array(coefficients or [0], dtype=object)


def closed_form_ratio(algebra: ClassicalAlgebra) -> int:
  n = algebra.dim_v
  if algebra.family is Family.A:
    return 2 * n
  if algebra.family is Family.C:
    return n + 2
  return n - 2


class ChevalleyDegreesCheck(IdentityCheck):
  """
  The computed primitive degrees match e_i + 1, and each is realized by a nonzero
  symmetrized trace (by the Pfaffian at degree r for D_r).
  """
  name = "chevalley_degrees"

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    LOGGER.info(f"[PROCESS] Chevalley degrees on {algebra.label}")
    computed = algebra.exponents
    tabulated = tabulated_exponents(algebra.spec)
    details = {"computed_exponents": str(computed), "tabulated_exponents": str(tabulated)}
    failures = []
    if computed != tabulated:
      failures.append("computed exponents differ from the closed form")

    for degree, multiplicity in sorted(Counter(primitive_degrees_from_exponents(computed)).items()):
      if algebra.family is Family.D and degree == algebra.rank:
        realized = bool(pfaffian_polynomial(algebra))
        details[f"degree_{degree}_pfaffian"] = "nonzero" if realized else "zero"
        multiplicity -= 1
        if not realized:
          failures.append(f"Pfaffian vanishes at degree {degree}")
      if multiplicity > 0:
        realized = bool(trace_power_polynomial(algebra, degree))
        details[f"degree_{degree}_trace"] = "nonzero" if realized else "zero"
        if not realized:
          failures.append(f"symmetrized trace vanishes at primitive degree {degree}")

    return IdentityResult.from_defect(self.name, algebra.label, np.zeros(1, dtype=object), details=details,
                                      extra_failure="; ".join(failures) or None)


class OddTraceVanishingCheck(IdentityCheck):
  """
  Odd symmetrized traces vanish in the adjoint representation of every algebra,
  and in the defining representation of B, C and D, where the even degrees stay nonzero.
  """
  name = "odd_trace_vanishing"

  def __init__(self, degrees=(3, 5), adjoint_degrees=(3,), even_degrees=(2, 4)):
    self.degrees = tuple(degrees)
    self.even_degrees = tuple(even_degrees)
    self.adjoint_degrees = tuple(adjoint_degrees)

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    defects, details = [], {}
    extra_failure = None
    if algebra.family is not Family.A:
      for degree in self.degrees:
        polynomial = trace_power_polynomial(algebra, degree)
        details[f"defining_{degree}"] = "zero" if not polynomial else "nonzero"
        defects.append(polynomial_coefficients(polynomial))
      vanishing = []
      for degree in self.even_degrees:
        polynomial = trace_power_polynomial(algebra, degree)
        details[f"defining_{degree}"] = "zero" if not polynomial else "nonzero"
        if not polynomial:
          vanishing.append(degree)
      if vanishing:
        extra_failure = f"even defining traces of degree {vanishing} vanish"
    for degree in self.adjoint_degrees:
      polynomial = trace_power_polynomial(algebra, degree, Representation.ADJOINT)
      details[f"adjoint_{degree}"] = "zero" if not polynomial else "nonzero"
      defects.append(polynomial_coefficients(polynomial))
    return IdentityResult.from_defect(self.name, algebra.label, defects, details=details, extra_failure=extra_failure)


class CasimirEvaluationCheck(IdentityCheck):
  """tr(M_V^k) built through K and K^-1 agrees with the symmetrized trace and with tr(pi(x)^k) at sample points."""
  name = "casimir_evaluation"

  def __init__(self, degrees=(2, 3, 4), points: int = 2, seed: int = DEFAULT_SEED, budgets: Budgets = DEFAULT_BUDGETS):
    self.degrees = tuple(degrees)
    self.points = points
    self.seed = seed
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    rng = np.random.default_rng(self.seed)
    samples = [[int(v) for v in rng.integers(-3, 4, size=algebra.dim_g)] for _ in range(self.points)]
    defects, details = [], {}
    for degree in self.degrees:
      if algebra.dim_g ** degree * factorial(degree) > self.budgets.entries:
        details[f"degree_{degree}"] = "skipped: over budget"
        continue
      symmetric = symmetrized_trace(algebra, degree, budgets=self.budgets)
      polynomial = trace_power_polynomial(algebra, degree)
      values = []
      for point in samples:
        through_killing = chevalley_polynomial(algebra, degree, point)
        from_tensor = evaluate(symmetric, point)
        value = polynomial(*point)
        from_polynomial = exact(Fraction(int(value.numerator), int(value.denominator)))
        defects.append(as_exact_array([through_killing - from_tensor, through_killing - from_polynomial]))
        values.append(format_rational(through_killing))
      details[f"degree_{degree}"] = ",".join(values)
    return IdentityResult.from_defect(self.name, algebra.label, defects or np.zeros(1, dtype=object), details=details)


class KillingTraceCheck(IdentityCheck):
  """K equals the adjoint trace form and lambda times the defining one."""
  name = "killing_trace"

  def __init__(self, budgets: Budgets = DEFAULT_BUDGETS):
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    ratio = killing_ratio(algebra)
    adjoint_form = trace_tensor(algebra, 2, Representation.ADJOINT, self.budgets).entries
    expected = closed_form_ratio(algebra)
    details = {"closed_form": str(expected), "matches_closed_form": str(ratio == expected).lower()}
    defect = as_exact_array(adjoint_form - algebra.killing)
    return IdentityResult.from_defect(self.name, algebra.label, defect, normalization=ratio, details=details)


def check_chevalley_degrees(algebra: ClassicalAlgebra) -> IdentityResult:
  return ChevalleyDegreesCheck().run(algebra)


def check_odd_trace_vanishing(algebra: ClassicalAlgebra, degrees=(3, 5), adjoint_degrees=(3,),
                              even_degrees=(2, 4)) -> IdentityResult:
  return OddTraceVanishingCheck(degrees, adjoint_degrees, even_degrees).run(algebra)


def check_casimir_evaluation(algebra: ClassicalAlgebra, degrees=(2, 3, 4), points: int = 2, seed: int = DEFAULT_SEED,
                             budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return CasimirEvaluationCheck(degrees, points, seed, budgets).run(algebra)


def check_killing_trace(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return KillingTraceCheck(budgets).run(algebra)
