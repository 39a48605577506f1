# invariant_space package
from .action               import ActionOperator, action_operator, exact_membership, generating_root_vectors
from .elimination          import SparseSystem, dense_rank_mod_p, sparse_rank_mod_p
from .verification         import VerificationReport, kernel_dimension, span_rank, verify_theorem
from .symmetric_invariants import primitive_degrees, symmetric_invariant_dimension
from .automorphism         import AutomorphismCheck, outer_automorphism_check, outer_reflection

__all__ = [
    "ActionOperator",
    "AutomorphismCheck",
    "SparseSystem",
    "VerificationReport",
    "action_operator",
    "dense_rank_mod_p",
    "exact_membership",
    "generating_root_vectors",
    "kernel_dimension",
    "outer_automorphism_check",
    "outer_reflection",
    "primitive_degrees",
    "span_rank",
    "sparse_rank_mod_p",
    "symmetric_invariant_dimension",
    "verify_theorem",
]
