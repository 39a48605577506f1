import numpy as np

from base_model.identity_check    import IdentityCheck, IdentityResult
from classical_lie.algebra        import ClassicalAlgebra
from classical_lie.algebra_spec   import Family
from config.setup                 import DEFAULT_BUDGETS, Budgets
from invariant_space.automorphism import outer_automorphism_check

EXPECTED_ACTION = "trace generators fixed; epsilon chains negated by det R = -1; spans preserved"


class OuterAutomorphismCheck(IdentityCheck):
  """
  Under the outer reflection R of D_r trace generators are fixed pointwise, while
  epsilon chains are negated rather than fixed (det R = -1). Their spans are preserved.
  """
  name = "outer_automorphism"
  families = (Family.D,)

  def __init__(self, max_degree: int = 3, budgets: Budgets = DEFAULT_BUDGETS):
    self.max_degree = max_degree
    self.budgets = budgets

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    check = outer_automorphism_check(algebra, self.max_degree, self.budgets)
    flipped = sum(1 for sign in check.signs.values() if sign == -1)
    details = {
      "determinant": str(check.determinant),
      "generators": str(len(check.signs)),
      "sign_flipped": str(flipped),
      "expected": EXPECTED_ACTION,
    }
    if check.mismatches:
      details["mismatches"] = ",".join(check.mismatches)
    return IdentityResult.from_defect(self.name, algebra.label, np.zeros(1, dtype=object), details=details,
                                      extra_failure="generator transformed with the wrong sign" if check.mismatches else None)


def check_outer_automorphism(algebra: ClassicalAlgebra, max_degree: int = 3, budgets: Budgets = DEFAULT_BUDGETS) -> IdentityResult:
  return OuterAutomorphismCheck(max_degree, budgets).run(algebra)
