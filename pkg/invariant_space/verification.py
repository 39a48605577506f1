from pydantic import BaseModel, Field, model_validator

import time

import numpy as np

from base_model.errors           import BudgetExceeded
from classical_lie.algebra       import ClassicalAlgebra
from config.setup                import DEFAULT_BUDGETS, LOGGER, PRIMES, Budgets, make_executor
from generators.descriptor       import Representation
from generators.enumeration      import enumerate_generators, realize
from invariant_space.action      import ActionOperator, action_operator, exact_membership
from invariant_space.elimination import agreed_rank, dense_rank_mod_p, sparse_rank_mod_p
from tensor_core.adjoint_tensor  import AdjointTensor
from tensor_core.prime_field     import to_prime_vector


class VerificationReport(BaseModel):
    family: str = Field(description="Algebra family, one of A, B, C, D")
    rank: int = Field(description="Rank of the algebra")
    degree: int = Field(description="Tensor degree k")
    kernel_dim: int = Field(description="dim of the invariant subspace of g^(x)k, from the modular kernel")
    generator_count: int = Field(description="Number of generator descriptors enumerated")
    span_rank: int = Field(description="Modular rank of the realized generator tensors")
    membership_failures: list[str] = Field(default_factory=list, description="Descriptor ids of generators that are not invariant")
    primes: list[int] = Field(description="Primes the ranks agreed on")
    agreement: bool = Field(description="span_rank == kernel_dim and no membership failures")
    certified_kernel_dim: int | None = Field(default=None, description="kernel_dim when certified exact by agreement")
    include_epsilon_chains: bool = Field(default=True, description="Whether D_r epsilon chains were enumerated")
    representation: str = Field(default=Representation.DEFINING.value, description="Representation used for trace generators")
    timings: dict[str, float] | None = Field(default=None, description="Seconds per stage, only when requested")

    @model_validator(mode="after")
    def _span_bounded_by_kernel(self):
        if not self.membership_failures and self.span_rank > self.kernel_dim:
            raise ValueError(f"span rank {self.span_rank} exceeds kernel dimension {self.kernel_dim}")
        return self

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"


def _kernel_dimension(operator: ActionOperator, primes, escalate: bool) -> tuple[int, tuple[int, ...]]:
    system = operator.reduced_system()
    rank, used = agreed_rank(
        lambda prime: sparse_rank_mod_p(system, prime), primes,
        f"{operator.algebra.label} kernel at degree {operator.degree}", escalate=escalate,
    )
    return system.ncols - rank, used


def kernel_dimension(operator: ActionOperator, primes=PRIMES, escalate: bool = False) -> int:
    """n - rank of the action operator modulo every prime; an upper bound on the rational kernel."""
    return _kernel_dimension(operator, primes, escalate)[0]


def _span_rank(tensors: list[AdjointTensor], primes, escalate: bool) -> tuple[int, tuple[int, ...]]:
    if not tensors:
        return 0, tuple(primes)
    degrees = {tensor.degree for tensor in tensors}
    if len(degrees) != 1:
        raise ValueError(f"tensors of mixed degrees {sorted(degrees)}")

    def rank_for(prime):
        matrix = np.stack([to_prime_vector(tensor, prime).coords for tensor in tensors])
        return dense_rank_mod_p(matrix, prime)

    return agreed_rank(rank_for, primes, f"span of {len(tensors)} tensors", escalate=escalate)


def span_rank(tensors: list[AdjointTensor], primes=PRIMES, escalate: bool = False) -> int:
    """Rank of the stacked vectorized tensors modulo every prime; a lower bound on the rational rank."""
    return _span_rank(tensors, primes, escalate)[0]


def verify_theorem(algebra: ClassicalAlgebra, k: int, primes=PRIMES, include_epsilon: bool = True,
                   rep: Representation = Representation.DEFINING, budgets: Budgets = DEFAULT_BUDGETS,
                   with_timings: bool = False) -> VerificationReport:
    """
    Compare the span of the realized generators with the invariant kernel at degree k.

    Exact members spanning the full modular kernel certify the kernel dimension:
    span rank mod p <= rational span <= rational kernel <= kernel mod p.
    """
    BudgetExceeded.check(f"{algebra.label} degree {k} membership", algebra.dim_g ** k, budgets.membership)
    BudgetExceeded.check(f"{algebra.label} degree {k} modular kernel", algebra.dim_g ** k, budgets.modular)
    rep = Representation(rep)
    timings = {}
    LOGGER.info(f"[PROCESS] verifying {algebra.label} at degree {k}")

    started = time.perf_counter()
    descriptors = enumerate_generators(algebra, k, include_epsilon=include_epsilon, rep=rep, budgets=budgets)
    BudgetExceeded.check(f"{algebra.label} degree {k} generator tensors", len(descriptors) * algebra.dim_g ** k, budgets.entries)
    operator = action_operator(algebra, k, budgets)
    with make_executor() as executor:
        tensors = list(executor.map(lambda descriptor: realize(algebra, descriptor, budgets), descriptors))
        memberships = list(executor.map(lambda tensor: exact_membership(operator, tensor), tensors))
    timings["generators"] = time.perf_counter() - started

    started = time.perf_counter()
    kernel_dim, kernel_primes = _kernel_dimension(operator, primes, escalate=True)
    timings["kernel"] = time.perf_counter() - started

    started = time.perf_counter()
    rank, span_primes = _span_rank(tensors, kernel_primes, escalate=True)
    timings["span"] = time.perf_counter() - started

    failures = [descriptor.id for descriptor, member in zip(descriptors, memberships) if not member]
    agreement = not failures and rank == kernel_dim
    used = sorted(set(kernel_primes) & set(span_primes)) or sorted(set(kernel_primes) | set(span_primes))

    tag = "[SUCCESS]" if agreement else "[FAILED]"
    LOGGER.info(f"{tag} {algebra.label} degree {k}: kernel_dim={kernel_dim} span_rank={rank} generators={len(descriptors)} failures={len(failures)}")
    return VerificationReport(
        family=algebra.family.value,
        rank=algebra.rank,
        degree=k,
        kernel_dim=kernel_dim,
        generator_count=len(descriptors),
        span_rank=rank,
        membership_failures=failures,
        primes=used,
        agreement=agreement,
        certified_kernel_dim=kernel_dim if agreement else None,
        include_epsilon_chains=include_epsilon,
        representation=rep.value,
        timings={name: round(seconds, 3) for name, seconds in timings.items()} if with_timings else None,
    )
