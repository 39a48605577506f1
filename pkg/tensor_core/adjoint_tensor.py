"""
Exact dense tensors over adjoint indices.

Entries live in a numpy object array of Python ints and Fractions, shape
(dim,) * degree, row-major. Integral Fractions are collapsed back to int so
integer tensors stay on the fast path.
"""
from dataclasses import dataclass
from fractions   import Fraction
from itertools   import permutations
from math        import factorial

import numpy as np

from base_model.errors      import DegreeMismatch, DimMismatch
from tensor_core.permutation import Permutation


def exact(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, np.integer):
        return int(value)
    return value


_EXACT = np.frompyfunc(exact, 1, 1)


def as_exact_array(values) -> np.ndarray:
    array = np.asarray(values)
    if array.dtype != object:
        array = array.astype(object)
    return np.asarray(_EXACT(array), dtype=object)


def divide_exact(array: np.ndarray, divisor: int) -> np.ndarray:
    if divisor == 1:
        return array
    divide = np.frompyfunc(lambda value: exact(Fraction(value) / divisor), 1, 1)
    return np.asarray(divide(array), dtype=object)


def is_zero_array(array: np.ndarray) -> bool:
    return not any(array.flat)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, eq=False)
class AdjointTensor:
    dim: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.asarray(self.entries)
        if entries.dtype != object:
            entries = as_exact_array(entries)
        if any(size != self.dim for size in entries.shape):
            raise DimMismatch(f"entries of shape {entries.shape} do not fit dim {self.dim}")
        entries = entries.copy()
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @classmethod
    def scalar(cls, value, dim: int) -> "AdjointTensor":
        return cls(dim, np.array(exact(value), dtype=object))

    @classmethod
    def zeros(cls, dim: int, degree: int) -> "AdjointTensor":
        return cls(dim, np.zeros((dim,) * degree, dtype=object))

    @property
    def degree(self) -> int:
        return self.entries.ndim

    @property
    def size(self) -> int:
        return self.entries.size

    def entry(self, index) -> int | Fraction:
        return self.entries[tuple(index)]

    def is_zero(self) -> bool:
        return is_zero_array(self.entries)

    def first_nonzero(self) -> tuple[int, ...] | None:
        for index, value in np.ndenumerate(self.entries):
            if value != 0:
                return index
        return None

    def max_abs(self) -> int | Fraction:
        return max((abs(value) for value in self.entries.flat), default=0)

    def _check_compatible(self, other: "AdjointTensor"):
        if self.dim != other.dim:
            raise DimMismatch(f"dim {self.dim} vs {other.dim}")
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")

    def __add__(self, other: "AdjointTensor") -> "AdjointTensor":
        self._check_compatible(other)
        return AdjointTensor(self.dim, as_exact_array(self.entries + other.entries))

    def __sub__(self, other: "AdjointTensor") -> "AdjointTensor":
        self._check_compatible(other)
        return AdjointTensor(self.dim, as_exact_array(self.entries - other.entries))

    def __neg__(self) -> "AdjointTensor":
        return AdjointTensor(self.dim, -self.entries)

    def __mul__(self, scalar) -> "AdjointTensor":
        return AdjointTensor(self.dim, as_exact_array(self.entries * exact(scalar)))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdjointTensor):
            return NotImplemented
        if self.dim != other.dim or self.degree != other.degree:
            return False
        return is_zero_array(self.entries - other.entries)

    __hash__ = None


def permute(sigma: Permutation, tensor: AdjointTensor) -> AdjointTensor:
    """S(X_1..X_k) = T(X_{sigma^-1(1)}..X_{sigma^-1(k)}), entrywise."""
    if sigma.degree != tensor.degree:
        raise DegreeMismatch(f"permutation of degree {sigma.degree} applied to tensor of degree {tensor.degree}")
    if sigma.is_identity():
        return tensor
    return AdjointTensor(tensor.dim, np.transpose(tensor.entries, sigma.zero_based()))


def _permutation_average(entries: np.ndarray, slots: tuple[int, ...], signed: bool) -> np.ndarray:
    total = np.zeros(entries.shape, dtype=object)
    for order in permutations(range(len(slots))):
        axes = list(range(entries.ndim))
        for position, target in enumerate(order):
            axes[slots[position]] = slots[target]
        term = np.transpose(entries, axes)
        if signed and Permutation(tuple(i + 1 for i in order)).sign() < 0:
            total = total - term
        else:
            total = total + term
    return divide_exact(total, factorial(len(slots)))


def symmetrize(tensor: AdjointTensor) -> AdjointTensor:
    if tensor.degree < 2:
        return tensor
    slots = tuple(range(tensor.degree))
    return AdjointTensor(tensor.dim, _permutation_average(tensor.entries, slots, signed=False))


def antisymmetrize(tensor: AdjointTensor) -> AdjointTensor:
    if tensor.degree < 2:
        return tensor
    slots = tuple(range(tensor.degree))
    return AdjointTensor(tensor.dim, _permutation_average(tensor.entries, slots, signed=True))


def symmetrize_slots(tensor: AdjointTensor, slots) -> AdjointTensor:
    """Average over permutations of the given 0-based slots only."""
    slots = tuple(slots)
    if any(slot < 0 or slot >= tensor.degree for slot in slots):
        raise DegreeMismatch(f"slots {slots} out of range for degree {tensor.degree}")
    return AdjointTensor(tensor.dim, _permutation_average(tensor.entries, slots, signed=False))


def tensor_product(left: AdjointTensor, right: AdjointTensor) -> AdjointTensor:
    if left.dim != right.dim:
        raise DimMismatch(f"cannot multiply tensors of dim {left.dim} and {right.dim}")
    return AdjointTensor(left.dim, np.multiply.outer(left.entries, right.entries))


def contract(tensor: AdjointTensor, matrix: np.ndarray, slot: int) -> AdjointTensor:
    """Result[.., a, ..] = sum_b matrix[a, b] * T[.., b, ..] with a, b at `slot`."""
    if not 0 <= slot < tensor.degree:
        raise DegreeMismatch(f"slot {slot} out of range for degree {tensor.degree}")
    moved = np.tensordot(np.asarray(matrix, dtype=object), tensor.entries, axes=([1], [slot]))
    return AdjointTensor(tensor.dim, np.moveaxis(moved, 0, slot))


def evaluate(tensor: AdjointTensor, vector) -> int | Fraction:
    """Full contraction with vector (x) ... (x) vector."""
    vector = as_exact_array(vector)
    if vector.shape != (tensor.dim,):
        raise DimMismatch(f"vector of shape {vector.shape} for dim {tensor.dim}")
    value = tensor.entries
    for _ in range(tensor.degree):
        value = np.tensordot(value, vector, axes=([-1], [0]))
    return exact(value.item() if isinstance(value, np.ndarray) else value)
