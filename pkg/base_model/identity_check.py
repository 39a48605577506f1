from pydantic import BaseModel, Field
from fractions import Fraction

import numpy as np

from classical_lie.algebra_spec import AlgebraSpec, Family
from tensor_core.adjoint_tensor import format_rational


class IdentityResult(BaseModel):
  name: str = Field(description="Identity that was checked")
  algebra: str = Field(description="Algebra label, or 'generic n' for dimension-only identities")
  passed: bool = Field(description="True iff max_abs_defect is zero")
  max_abs_defect: str = Field(description="Largest absolute entry of the defect, as an exact rational")
  normalization_scalar: str | None = Field(default=None, description="Scalar fixing identities that hold up to scale")
  offending_index: list[int] | None = Field(default=None, description="First index with a nonzero defect")
  details: dict[str, str] = Field(default_factory=dict, description="Check specific findings")

  @classmethod
  def from_defect(cls, name: str, algebra: str, defect, normalization=None, details: dict | None = None,
                  extra_failure: str | None = None) -> "IdentityResult":
    """
    Build a result from a defect array (or several). Zero defect means pass;
    `extra_failure` marks a failure that has no entrywise defect.
    """
    arrays = defect if isinstance(defect, (list, tuple)) else [defect]
    worst, offending = Fraction(0), None
    for array in arrays:
      array = np.asarray(array, dtype=object)
      for index in np.argwhere(array != 0):
        value = abs(Fraction(array[tuple(index)]))
        if value > worst:
          worst = value
          offending = [int(i) for i in index]
    details = dict(details or {})
    if extra_failure:
      details["failure"] = extra_failure
    return cls(
      name=name,
      algebra=algebra,
      passed=worst == 0 and extra_failure is None,
      max_abs_defect=format_rational(worst),
      normalization_scalar=None if normalization is None else format_rational(normalization),
      offending_index=offending,
      details=details,
    )


class IdentityCheck:
  """
  One standalone identity. Subclasses set `name` and `families` and override `run`.
  `families = None` marks a check that needs no algebra at all.
  """
  name: str = "identity"
  families: tuple[Family, ...] | None = (Family.A, Family.B, Family.C, Family.D)

  def applies_to(self, spec: AlgebraSpec | None) -> bool:
    if self.families is None:
      return spec is None
    return spec is not None and spec.family in self.families

  # Will be overridden by subclass
  def run(self, algebra) -> IdentityResult:
    raise NotImplementedError

