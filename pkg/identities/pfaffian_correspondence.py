from fractions import Fraction

import numpy as np
import sympy

from base_model.identity_check  import IdentityCheck, IdentityResult
from classical_lie.algebra      import ClassicalAlgebra, to_sympy
from classical_lie.algebra_spec import Family
from config.setup               import DEFAULT_BUDGETS, LOGGER, Budgets
from generators.epsilon_chain   import epsilon_chain_tensor, pfaffian, polarized_pfaffian
from tensor_core.adjoint_tensor import as_exact_array, exact, format_rational, symmetrize

DEFAULT_SEED = 20240607


def random_antisymmetric(size: int, rng: np.random.Generator) -> np.ndarray:
  """Antisymmetric matrix with small random rational entries above the diagonal."""
  matrix = np.zeros((size, size), dtype=object)
  for i in range(size):
    for j in range(i + 1, size):
      value = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6)))
      matrix[i, j] = exact(value)
      matrix[j, i] = exact(-value)
  return matrix


def pfaffian_self_test(seed: int = DEFAULT_SEED, sizes=(2, 4, 6), samples: int = 3) -> dict[str, str]:
  """
  Pf of a block diagonal matrix is the product of its blocks, and Pf^2 = det
  on seeded random antisymmetric matrices. Returns {"block": .., "squared": ..} as "passed/total".
  """
  rng = np.random.default_rng(seed)
  block_passed = block_total = square_passed = square_total = 0
  for size in sizes:
    values = [exact(Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 4)))) for _ in range(size // 2)]
    block = np.zeros((size, size), dtype=object)
    for i, value in enumerate(values):
      block[2 * i, 2 * i + 1] = value
      block[2 * i + 1, 2 * i] = -value
    expected = 1
    for value in values:
      expected *= value
    block_total += 1
    block_passed += pfaffian(block) == exact(Fraction(expected))

    for _ in range(samples):
      matrix = random_antisymmetric(size, rng)
      determinant = to_sympy(matrix).det(method="bareiss")
      square_total += 1
      square = Fraction(pfaffian(matrix)) ** 2
      square_passed += sympy.Rational(square.numerator, square.denominator) == determinant
  return {"block": f"{block_passed}/{block_total}", "squared": f"{square_passed}/{square_total}"}


class PfaffianCorrespondenceCheck(IdentityCheck):
  """sym(E(1, .., 1)) equals mu times the polarized Pfaffian of g^-1 pi(x), with mu != 0."""
  name = "pfaffian_correspondence"
  families = (Family.D,)

  def __init__(self, seed: int = DEFAULT_SEED, budgets: Budgets = DEFAULT_BUDGETS):
    self.seed = seed
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    LOGGER.info(f"[PROCESS] Pfaffian correspondence on {algebra.label}")
    chain = symmetrize(epsilon_chain_tensor(algebra, (1,) * algebra.rank, self.budgets))
    polarized = polarized_pfaffian(algebra, self.budgets)
    details = pfaffian_self_test(self.seed)
    self_test_failed = any(value.split("/")[0] != value.split("/")[1] for value in details.values())

    anchor = polarized.first_nonzero()
    if anchor is None or chain.is_zero():
      return IdentityResult.from_defect(self.name, algebra.label, chain.entries, details=details,
                                        extra_failure="symmetrized chain or polarized Pfaffian vanishes")
    ratio = exact(Fraction(chain.entries[anchor]) / Fraction(polarized.entries[anchor]))
    defect = as_exact_array(chain.entries - polarized.entries * ratio)
    details["mu"] = format_rational(ratio)
    return IdentityResult.from_defect(self.name, algebra.label, defect, normalization=ratio, details=details,
                                      extra_failure="Pfaffian self-test failed" if self_test_failed else None)


def check_pfaffian_correspondence(algebra: ClassicalAlgebra, seed: int = DEFAULT_SEED,
                                  budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return PfaffianCorrespondenceCheck(seed, budgets).run(algebra)
