from dataclasses import dataclass, field
from fractions   import Fraction
from functools   import lru_cache

import numpy as np
from sympy import isprime

from base_model.errors          import BadPrime, ConfigError, DimMismatch
from tensor_core.adjoint_tensor import AdjointTensor

# residues stay below 2^31 so products of two fit in int64
MAX_PRIME = 2 ** 31


@lru_cache(maxsize=None)
def check_prime(prime: int) -> int:
    if not isprime(prime):
        raise ConfigError(f"{prime} is not prime")
    if prime >= MAX_PRIME:
        raise ConfigError(f"prime {prime} must be below 2^31")
    return prime


def residue(value, prime: int, inverted: set | None = None) -> int:
    if isinstance(value, Fraction):
        denominator = value.denominator
        if denominator % prime == 0:
            raise BadPrime(prime, denominator)
        if denominator != 1 and inverted is not None:
            inverted.add(denominator)
        return value.numerator % prime * pow(denominator, -1, prime) % prime
    return int(value) % prime


@dataclass(frozen=True, eq=False)
class PrimeVector:
    prime: int
    coords: np.ndarray
    inverted_denominators: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        check_prime(self.prime)
        coords = np.asarray(self.coords, dtype=np.int64) % self.prime
        object.__setattr__(self, "coords", coords)

    def _check(self, other: "PrimeVector"):
        if self.prime != other.prime or self.coords.shape != other.coords.shape:
            raise DimMismatch("prime vectors live in different spaces")

    def __add__(self, other: "PrimeVector") -> "PrimeVector":
        self._check(other)
        return PrimeVector(self.prime, (self.coords + other.coords) % self.prime)

    def scale(self, scalar) -> "PrimeVector":
        factor = residue(scalar, self.prime)
        return PrimeVector(self.prime, self.coords * factor % self.prime)

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeVector):
            return NotImplemented
        return self.prime == other.prime and np.array_equal(self.coords, other.coords)

    __hash__ = None


def to_prime_vector(tensor: AdjointTensor, prime: int) -> PrimeVector:
    """Entrywise reduction modulo `prime` in row-major order; raises BadPrime on a vanishing denominator."""
    check_prime(prime)
    inverted: set[int] = set()
    coords = np.fromiter(
        (residue(value, prime, inverted) for value in tensor.entries.flat),
        dtype=np.int64,
        count=tensor.size,
    )
    return PrimeVector(prime, coords, frozenset(inverted))
