from dataclasses import dataclass
from enum        import Enum

from base_model.errors          import InvalidDescriptor, WrongFamily
from classical_lie.algebra_spec import Family
from tensor_core.permutation    import Permutation


class Representation(str, Enum):
    DEFINING = "defining"
    ADJOINT = "adjoint"


class GeneratorKind(str, Enum):
    TRACE_PRODUCT = "TraceProduct"
    EPSILON_CHAIN = "EpsilonChain"


@dataclass(frozen=True)
class GeneratorDescriptor:
    """
    Symbolic recipe for one generator tensor.

    TraceProduct: `cycles` partitions {1..k}; each cycle is one trace factor and the
    order inside a cycle is the order of matrix multiplication.
    EpsilonChain: `chain_lengths` (k_1..k_r) for family D. The chain tensor has its
    slots in chain order; `perm` is then applied to the assembled tensor.
    """
    kind: GeneratorKind
    degree: int
    cycles: tuple[tuple[int, ...], ...] = ()
    chain_lengths: tuple[int, ...] = ()
    perm: Permutation | None = None
    rep: Representation = Representation.DEFINING

    def __post_init__(self):
        if self.degree < 1:
            raise InvalidDescriptor(f"degree must be positive, got {self.degree}")
        if self.perm is None:
            object.__setattr__(self, "perm", Permutation.identity(self.degree))
        if self.perm.degree != self.degree:
            raise InvalidDescriptor(f"perm of degree {self.perm.degree} on a degree {self.degree} generator")
        if self.kind is GeneratorKind.TRACE_PRODUCT:
            slots = sorted(slot for cycle in self.cycles for slot in cycle)
            if slots != list(range(1, self.degree + 1)) or any(len(cycle) == 0 for cycle in self.cycles):
                raise InvalidDescriptor(f"cycles {self.cycles} do not partition 1..{self.degree}")
        else:
            if not self.chain_lengths or any(length < 1 for length in self.chain_lengths):
                raise InvalidDescriptor(f"chain lengths {self.chain_lengths} must be positive")
            if sum(self.chain_lengths) != self.degree:
                raise InvalidDescriptor(f"chain lengths {self.chain_lengths} do not add up to {self.degree}")

    @classmethod
    def trace_product(cls, cycles, perm: Permutation | None = None, rep: Representation = Representation.DEFINING) -> "GeneratorDescriptor":
        cycles = tuple(tuple(cycle) for cycle in cycles)
        return cls(GeneratorKind.TRACE_PRODUCT, sum(len(c) for c in cycles), cycles=cycles, perm=perm, rep=rep)

    @classmethod
    def epsilon_chain(cls, chain_lengths, perm: Permutation | None = None) -> "GeneratorDescriptor":
        chain_lengths = tuple(chain_lengths)
        return cls(GeneratorKind.EPSILON_CHAIN, sum(chain_lengths), chain_lengths=chain_lengths, perm=perm)

    @property
    def id(self) -> str:
        if self.kind is GeneratorKind.TRACE_PRODUCT:
            prefix = "tr" if self.rep is Representation.DEFINING else "tr_ad"
            body = prefix + "".join("(" + " ".join(str(s) for s in cycle) + ")" for cycle in self.cycles)
        else:
            body = "eps[" + ",".join(str(length) for length in self.chain_lengths) + "]"
        if not self.perm.is_identity():
            body += "*" + str(self.perm)
        return body

    def check_applicable(self, family: Family, rank: int):
        if self.kind is GeneratorKind.EPSILON_CHAIN:
            if family is not Family.D:
                raise WrongFamily(f"epsilon chains exist only for family D, not {family.value}")
            if len(self.chain_lengths) != rank:
                raise InvalidDescriptor(f"D{rank} needs {rank} chain lengths, got {len(self.chain_lengths)}")

    def __str__(self) -> str:
        return self.id
