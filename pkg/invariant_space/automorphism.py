"""
Outer automorphism of D_r.

The reflection swapping the two middle coordinates of V exchanges a pair of
partner vectors of the split form, so it preserves g and has determinant -1.
Conjugation by it is an automorphism of so(g) that is not inner. Trace tensors are
unchanged by any conjugation; epsilon chains pick up det = -1, so the invariant
spaces and generator spans are preserved.
"""
from dataclasses import dataclass, field

import numpy as np

from base_model.errors          import ConstructionError, WrongFamily
from classical_lie.algebra      import ClassicalAlgebra, transport_basis
from classical_lie.algebra_spec import AlgebraSpec, Family
from config.setup               import DEFAULT_BUDGETS, LOGGER, Budgets
from generators.descriptor      import GeneratorKind
from generators.enumeration     import enumerate_generators, realize
from tensor_core.adjoint_tensor import is_zero_array


def outer_reflection(spec: AlgebraSpec) -> np.ndarray:
    if spec.family is not Family.D:
        raise WrongFamily(f"outer reflection is defined here for family D, not {spec.family.value}")
    n, r = spec.dim_v, spec.rank
    reflection = np.identity(n, dtype=object)
    reflection[[r - 1, r]] = reflection[[r, r - 1]]
    return reflection


@dataclass
class AutomorphismCheck:
    label: str
    determinant: int
    signs: dict[str, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches


def outer_automorphism_check(algebra: ClassicalAlgebra, max_degree: int = 3, budgets: Budgets = DEFAULT_BUDGETS) -> AutomorphismCheck:
    """
    Recompute every generator up to `max_degree` in the transported basis
    X'_a = R X_a R^-1 and compare with the original tensors on g.
    Trace products must be equal; epsilon chains must equal det(R) times the original.
    """
    reflection = outer_reflection(algebra.spec)
    determinant = -1
    transported = transport_basis(algebra, reflection)
    if not is_zero_array(transported.structure - algebra.structure):
        raise ConstructionError(f"{algebra.label}: conjugation by the reflection is not an automorphism of the basis")

    check = AutomorphismCheck(algebra.label, determinant)
    for k in range(1, max_degree + 1):
        for descriptor in enumerate_generators(algebra, k, budgets=budgets):
            original = realize(algebra, descriptor, budgets)
            moved = realize(transported, descriptor, budgets)
            expected = determinant if descriptor.kind is GeneratorKind.EPSILON_CHAIN else 1
            if moved == original:
                sign = 1
            elif moved == -original:
                sign = -1
            else:
                sign = 0
            # a vanishing tensor satisfies either sign
            if original.is_zero() and moved.is_zero():
                sign = expected
            check.signs[f"{k}:{descriptor.id}"] = sign
            if sign != expected:
                check.mismatches.append(f"{k}:{descriptor.id}")
    LOGGER.info(f"[FINISHED] outer automorphism check on {algebra.label}: {len(check.signs)} generators, {len(check.mismatches)} mismatches")
    return check
