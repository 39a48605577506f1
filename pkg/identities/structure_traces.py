"""
Identities that rebuild the Lie structure from traces in the defining representation.

With K = lambda * tr_V(pi pi):
  c_{ab}^c  = lambda * tr([pi(X_a), pi(X_b)] pi(X_d)) K^{dc}
  pi_a pi_b = 1/2 {pi_a, pi_b} + 1/2 c_{ab}^c pi_c
and the Jacobi tensor c_{ab}^d c_{dc}^e K_{ef}, written through traces, is a combination
of the cyclic quartic traces tr(X_1 X_a X_b X_c) and the pairings tr(X X) tr(X X).
"""
from fractions import Fraction
from itertools import permutations

import numpy as np

from base_model.identity_check  import IdentityCheck, IdentityResult
from classical_lie.algebra      import ClassicalAlgebra, exact_inverse, killing_ratio
from config.setup               import DEFAULT_BUDGETS, LOGGER, Budgets
from generators.enumeration     import slot_order_permutation
from generators.traces          import trace_tensor
from invariant_space.action     import weight_zero_indices
from tensor_core.adjoint_tensor import AdjointTensor, as_exact_array, format_rational, permute, symmetrize_slots, tensor_product
from tensor_core.row_echelon    import solve_rational


def _commutator_traces(algebra: ClassicalAlgebra, budgets: Budgets) -> np.ndarray:
  """F[a, b, d] = tr([pi_a, pi_b] pi_d)."""
  cubic = trace_tensor(algebra, 3, budgets=budgets).entries
  return as_exact_array(cubic - np.transpose(cubic, (1, 0, 2)))


def _trace_killing(algebra: ClassicalAlgebra, ratio) -> tuple[np.ndarray, np.ndarray]:
  form = as_exact_array(algebra.trace_form * ratio)
  return form, exact_inverse(form)


def structure_from_traces(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> tuple[np.ndarray, object]:
  ratio = killing_ratio(algebra)
  _, inverse = _trace_killing(algebra, ratio)
  commutators = _commutator_traces(algebra, budgets)
  return as_exact_array(np.tensordot(commutators, inverse, axes=([2], [0])) * ratio), ratio


class StructureConstantsFromTracesCheck(IdentityCheck):
  name = "structure_constants_from_traces"

  def __init__(self, budgets: Budgets = DEFAULT_BUDGETS):
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    rebuilt, ratio = structure_from_traces(algebra, self.budgets)
    diagonal = np.array([rebuilt[a, a] for a in range(algebra.dim_g)], dtype=object)
    return IdentityResult.from_defect(self.name, algebra.label, [rebuilt - algebra.structure, diagonal],
                                      normalization=ratio)


class TraceDecompositionCheck(IdentityCheck):
  """Matrix identity, then its traced form T3 = sym_12(T3) + 1/2 c T2."""
  name = "trace_decomposition"

  def __init__(self, budgets: Budgets = DEFAULT_BUDGETS):
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    basis = algebra.basis
    products = np.transpose(np.tensordot(basis, basis, axes=([2], [1])), (0, 2, 1, 3))
    anticommutators = products + np.transpose(products, (1, 0, 2, 3))
    brackets = np.tensordot(algebra.structure, basis, axes=([2], [0]))
    matrix_defect = as_exact_array(products - anticommutators * Fraction(1, 2) - brackets * Fraction(1, 2))

    cubic = trace_tensor(algebra, 3, budgets=self.budgets)
    symmetric_part = symmetrize_slots(cubic, (0, 1)).entries
    bracket_part = np.tensordot(algebra.structure, algebra.trace_form, axes=([2], [0])) * Fraction(1, 2)
    tensor_defect = as_exact_array(cubic.entries - symmetric_part - bracket_part)
    return IdentityResult.from_defect(self.name, algebra.label, [matrix_defect, tensor_defect])


def quartic_trace_basis(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> dict[str, AdjointTensor]:
  """The six cyclic orders tr(X_1 X_a X_b X_c) and the three pairings tr(X X) tr(X X)."""
  quartic = trace_tensor(algebra, 4, budgets=budgets)
  quadratic = trace_tensor(algebra, 2, budgets=budgets)
  pair = tensor_product(quadratic, quadratic)
  basis = {}
  for order in permutations((2, 3, 4)):
    sequence = (1,) + order
    basis["tr(" + " ".join(map(str, sequence)) + ")"] = permute(slot_order_permutation(sequence), quartic)
  for sequence in ((1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3)):
    name = f"tr({sequence[0]} {sequence[1]})tr({sequence[2]} {sequence[3]})"
    basis[name] = permute(slot_order_permutation(sequence), pair)
  return basis


def jacobi_trace_term(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> tuple[AdjointTensor, object]:
  """
  J[a, b, c, f] = c_{ab}^d c_{dc}^e K_{ef} with c and K both taken from traces.
  c_{dc}^e K_{ef} is lambda * tr([pi_d, pi_c] pi_f), so J = lambda * c_tr . F.
  """
  rebuilt, ratio = structure_from_traces(algebra, budgets)
  commutators = _commutator_traces(algebra, budgets)
  term = as_exact_array(np.tensordot(rebuilt, commutators, axes=([2], [0])) * ratio)
  return AdjointTensor(algebra.dim_g, term), ratio


def decompose_in_basis(algebra: ClassicalAlgebra, target: AdjointTensor, basis: dict[str, AdjointTensor]) -> dict[str, object] | None:
  """Exact coefficients expressing `target` in `basis`, solved on the weight-zero entries."""
  names = list(basis)
  rows, rhs = [], []
  for index in weight_zero_indices(algebra, target.degree):
    row = [basis[name].entries[index] for name in names]
    if any(value != 0 for value in row) or target.entries[index] != 0:
      rows.append(row)
      rhs.append(target.entries[index])
  solution = solve_rational(rows, rhs)
  if solution is None:
    return None
  return dict(zip(names, solution))


def cyclic_sum(entries: np.ndarray, flip_term: int | None = None) -> np.ndarray:
  """J[a, b, c] + J[b, c, a] + J[c, a, b] over the first three slots."""
  terms = [entries, np.transpose(entries, (2, 0, 1, 3)), np.transpose(entries, (1, 2, 0, 3))]
  if flip_term is not None:
    terms[flip_term] = -terms[flip_term]
  return as_exact_array(terms[0] + terms[1] + terms[2])


class JacobiAsTracesCheck(IdentityCheck):
  name = "jacobi_as_traces"

  def __init__(self, flip_term: int | None = None, budgets: Budgets = DEFAULT_BUDGETS):
    if flip_term is not None and flip_term not in (0, 1, 2):
      raise ValueError(f"flip_term must be 0, 1 or 2, got {flip_term}")
    self.flip_term = flip_term
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    LOGGER.info(f"[PROCESS] Jacobi identity through traces on {algebra.label}")
    term, ratio = jacobi_trace_term(algebra, self.budgets)
    basis = quartic_trace_basis(algebra, self.budgets)
    coefficients = decompose_in_basis(algebra, term, basis)
    if coefficients is None:
      return IdentityResult.from_defect(self.name, algebra.label, term.entries, normalization=ratio,
                                        extra_failure="Jacobi term is not a combination of quartic trace tensors")

    combination = AdjointTensor.zeros(algebra.dim_g, 4)
    for name, coefficient in coefficients.items():
      if coefficient != 0:
        combination = combination + basis[name] * coefficient
    expansion_defect = as_exact_array(term.entries - combination.entries)
    jacobi = cyclic_sum(combination.entries, self.flip_term)

    details = {name: format_rational(value) for name, value in coefficients.items()}
    if self.flip_term is not None:
      details["flipped_term"] = str(self.flip_term)
    return IdentityResult.from_defect(self.name, algebra.label, [expansion_defect, jacobi],
                                      normalization=ratio, details=details)


def check_structure_constants_from_traces(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return StructureConstantsFromTracesCheck(budgets).run(algebra)


def check_trace_decomposition(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return TraceDecompositionCheck(budgets).run(algebra)


def check_jacobi_as_traces(algebra: ClassicalAlgebra, flip_term: int | None = None,
                           budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return JacobiAsTracesCheck(flip_term, budgets).run(algebra)
