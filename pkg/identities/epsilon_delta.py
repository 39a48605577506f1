"""
eps_{a_1..a_n} eps^{b_1..b_n} = lambda_n * delta^{[b_1}_{a_1} .. delta^{b_n]}_{a_n}

The bracket carries weight 1/n!, so lambda_n = n!. The convention constant
lambda_n / n! is determined once at n = 2 and must agree at every other n.
"""
from fractions import Fraction
from itertools import permutations
from math      import factorial

import numpy as np

from base_model.errors          import BudgetExceeded
from base_model.identity_check  import IdentityCheck, IdentityResult
from config.setup               import BUDGET_ENTRIES, LOGGER
from tensor_core.adjoint_tensor import exact
from tensor_core.permutation    import Permutation

MIN_N = 2
MAX_N = 6


def levi_civita(n: int) -> np.ndarray:
  epsilon = np.zeros((n,) * n, dtype=np.int64)
  for images in permutations(range(n)):
    epsilon[images] = Permutation([i + 1 for i in images]).sign()
  return epsilon


def delta_product(n: int) -> np.ndarray:
  """D[a_1..a_n, b_1..b_n] = prod_i delta(a_i, b_i)."""
  product = np.ones((), dtype=np.int64)
  for _ in range(n):
    product = np.multiply.outer(product, np.identity(n, dtype=np.int64))
  # outer products give (a_1, b_1, a_2, b_2, ..); regroup the a slots first
  return np.transpose(product, list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2)))


def antisymmetrized_sum(array: np.ndarray, slots: list[int]) -> np.ndarray:
  """Signed sum over all orderings of `slots`, without the 1/n! weight."""
  total = np.zeros_like(array)
  for images in permutations(range(len(slots))):
    axes = list(range(array.ndim))
    for position, image in enumerate(images):
      axes[slots[position]] = slots[image]
    sign = Permutation([i + 1 for i in images]).sign()
    total += sign * np.transpose(array, axes)
  return total


class EpsilonDeltaCheck(IdentityCheck):
  name = "epsilon_delta"
  families = None

  def __init__(self, n: int, budget: int = BUDGET_ENTRIES):
    if not MIN_N <= n <= MAX_N:
      raise ValueError(f"epsilon-delta identity is checked for {MIN_N} <= n <= {MAX_N}, got {n}")
    self.n = n
    self.budget = budget

  def _scaled_sides(self, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(n! * eps eps, unnormalized antisymmetrized delta product), both integral."""
    BudgetExceeded.check(f"epsilon-delta identity at n={n}", n ** (2 * n), self.budget)
    epsilon = levi_civita(n)
    lhs = np.multiply.outer(epsilon, epsilon) * factorial(n)
    bracket = antisymmetrized_sum(delta_product(n), list(range(n)))
    return lhs, bracket

  def _constant(self, n: int) -> tuple[int, np.ndarray]:
    lhs, bracket = self._scaled_sides(n)
    # at a = b = (0, 1, .., n-1) only the identity ordering survives, so the bracket is 1
    anchor = tuple(range(n)) * 2
    constant = int(lhs[anchor])
    return constant, lhs - constant * bracket

  def run(self, algebra=None) -> IdentityResult:
    n = self.n
    LOGGER.info(f"[PROCESS] epsilon-delta identity at n={n}")
    constant, defect = self._constant(n)
    pinned, _ = self._constant(MIN_N) if n != MIN_N else (constant, None)
    convention = exact(Fraction(constant, factorial(n)))
    pinned_convention = exact(Fraction(pinned, factorial(MIN_N)))
    failure = None
    if convention != pinned_convention:
      failure = f"convention constant {convention} differs from {pinned_convention} fixed at n={MIN_N}"
    return IdentityResult.from_defect(
      self.name,
      f"generic {n}",
      as_fraction_defect(defect, factorial(n)),
      normalization=constant,
      details={"bracket_weight": f"1/{factorial(n)}", "convention_constant": str(convention)},
      extra_failure=failure,
    )


def as_fraction_defect(defect: np.ndarray, scale: int) -> np.ndarray:
  """Undo the n! scaling on the nonzero entries only."""
  nonzero = np.argwhere(defect != 0)
  if len(nonzero) == 0:
    return np.zeros(1, dtype=object)
  result = np.zeros(defect.shape, dtype=object)
  for index in map(tuple, nonzero):
    result[index] = exact(Fraction(int(defect[index]), scale))
  return result


def check_epsilon_delta(n: int, budget: int = BUDGET_ENTRIES) -> IdentityResult:
  check = EpsilonDeltaCheck(n, budget)
  return check.run()
