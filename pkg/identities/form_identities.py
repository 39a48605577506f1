import numpy as np

from base_model.errors          import WrongFamily
from base_model.identity_check  import IdentityCheck, IdentityResult
from classical_lie.algebra      import ClassicalAlgebra
from classical_lie.algebra_spec import Family
from tensor_core.adjoint_tensor import as_exact_array


def _require_form(algebra: ClassicalAlgebra, what: str):
  if algebra.form is None:
    raise WrongFamily(f"{what} needs an invariant bilinear form; {algebra.label} has none")


class FormSwapCheck(IdentityCheck):
  """
  pi(X)^a_b F_bc + F_ab pi(X)^c_b = 0 for every basis element. With F = g this is the
  orthogonal identity (B, D); with F = f the symplectic one (C).
  """
  name = "form_swap"
  families = (Family.B, Family.C, Family.D)

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    _require_form(algebra, self.name)
    form = algebra.form
    defect = as_exact_array(np.matmul(algebra.basis, form) + np.matmul(form, np.transpose(algebra.basis, (0, 2, 1))))
    form_name = "f" if algebra.family is Family.C else "g"
    return IdentityResult.from_defect(self.name, algebra.label, defect, details={"form": form_name})


class FormContractionCheck(IdentityCheck):
  name = "form_contraction"
  families = (Family.B, Family.C, Family.D)

  def run(self, algebra: ClassicalAlgebra) -> IdentityResult:
    _require_form(algebra, self.name)
    identity = np.identity(algebra.dim_v, dtype=object)
    left = as_exact_array(algebra.form.dot(algebra.form_inverse)) - identity
    right = as_exact_array(algebra.form_inverse.dot(algebra.form)) - identity
    return IdentityResult.from_defect(self.name, algebra.label, [left, right])


def check_form_swap(algebra: ClassicalAlgebra) -> IdentityResult:
  return FormSwapCheck().run(algebra)


def check_form_contraction(algebra: ClassicalAlgebra) -> IdentityResult:
  return FormContractionCheck().run(algebra)
