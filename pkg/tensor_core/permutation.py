from dataclasses import dataclass, field
from itertools   import permutations as _itertools_permutations

from sympy.combinatorics import Permutation as SymPermutation

from base_model.errors import DegreeMismatch


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of the slots {1..k}, stored as its images (1-based) over a
    sympy permutation of {0..k-1}.

    Products compose left to right: (sigma * tau)(i) = tau(sigma(i)), which is
    sympy's own convention. With it `permute(sigma * tau, T) == permute(sigma, permute(tau, T))`,
    i.e. the slot action S(X_1..X_k) = T(X_{sigma^-1(1)}..X_{sigma^-1(k)}) is a
    left action.
    """
    images: tuple[int, ...]
    sym:    SymPermutation = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a bijection of 1..{len(images)}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "sym", SymPermutation([i - 1 for i in images], size=len(images)))

    @classmethod
    def from_sympy(cls, perm: SymPermutation) -> "Permutation":
        return cls(tuple(i + 1 for i in perm.array_form))

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, k: int, cycles) -> "Permutation":
        return cls.from_sympy(SymPermutation([[slot - 1 for slot in cycle] for cycle in cycles], size=k))

    @classmethod
    def from_sequence(cls, sequence) -> "Permutation":
        """The permutation sending i to sequence[i-1]."""
        return cls(tuple(sequence))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"cannot compose permutations of degree {self.degree} and {other.degree}")
        return Permutation.from_sympy(self.sym * other.sym)

    def inverse(self) -> "Permutation":
        return Permutation.from_sympy(~self.sym)

    def is_identity(self) -> bool:
        return self.sym.is_Identity

    def zero_based(self) -> tuple[int, ...]:
        return tuple(self.sym.array_form)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest slot, ordered by that slot. Fixed points included."""
        return [tuple(slot + 1 for slot in cycle) for cycle in self.sym.full_cyclic_form]

    def sign(self) -> int:
        return self.sym.signature()

    def __str__(self) -> str:
        moved = self.sym.cyclic_form
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(slot + 1) for slot in cycle) + ")" for cycle in moved)


def all_permutations(k: int):
    """All permutations of {1..k} in lexicographic order of their images."""
    for images in _itertools_permutations(range(1, k + 1)):
        yield Permutation(images)
