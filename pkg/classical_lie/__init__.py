# classical_lie package
from .algebra_spec import AlgebraSpec, Family, MIN_RANK
from .algebra      import ClassicalAlgebra, adjoint_rep, build_algebra, killing_ratio, transport_basis
from .exponents    import tabulated_exponents

__all__ = [
    "AlgebraSpec",
    "ClassicalAlgebra",
    "Family",
    "MIN_RANK",
    "adjoint_rep",
    "build_algebra",
    "killing_ratio",
    "tabulated_exponents",
    "transport_basis",
]
