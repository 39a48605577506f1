# tensor_core package
from .permutation    import Permutation, all_permutations
from .adjoint_tensor import (
    AdjointTensor,
    antisymmetrize,
    contract,
    evaluate,
    exact,
    format_rational,
    permute,
    symmetrize,
    symmetrize_slots,
    tensor_product,
)
from .prime_field    import PrimeVector, check_prime, to_prime_vector

__all__ = [
    "AdjointTensor",
    "Permutation",
    "PrimeVector",
    "all_permutations",
    "antisymmetrize",
    "check_prime",
    "contract",
    "evaluate",
    "exact",
    "format_rational",
    "permute",
    "symmetrize",
    "symmetrize_slots",
    "tensor_product",
    "to_prime_vector",
]
