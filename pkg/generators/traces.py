"""
Trace tensors and matrix chains.

Index convention: [pi^k]_b^a = (pi(X_1) .. pi(X_k))[b, a], so tracing the chain gives
tr_V(pi(X_1) .. pi(X_k)).
"""
from dataclasses import dataclass
from functools   import lru_cache

import numpy as np
from sympy             import QQ
from sympy.polys.rings import ring

from base_model.errors          import BudgetExceeded
from classical_lie.algebra      import ClassicalAlgebra
from config.setup               import DEFAULT_BUDGETS, Budgets
from generators.descriptor      import Representation
from tensor_core.adjoint_tensor import AdjointTensor, as_exact_array, exact, symmetrize


def representation_matrices(algebra: ClassicalAlgebra, rep: Representation) -> np.ndarray:
    if Representation(rep) is Representation.ADJOINT:
        return algebra.adjoint
    return algebra.basis


@dataclass(frozen=True, eq=False)
class MatrixChain:
    """slots[alpha_1, .., alpha_k, b, a] = [pi^k]_b^a at (X_alpha_1, .., X_alpha_k)."""
    degree: int
    dim: int
    slots: np.ndarray

    def entry(self, b: int, a: int) -> AdjointTensor:
        return AdjointTensor(self.dim, self.slots[..., b, a])

    def trace(self) -> AdjointTensor:
        return AdjointTensor(self.dim, np.diagonal(self.slots, axis1=-2, axis2=-1).sum(axis=-1))

    def left_multiply(self, matrix) -> np.ndarray:
        """matrix[c, b] [pi^k]_b^a, as a raw (.., c, a) array."""
        return np.matmul(np.asarray(matrix, dtype=object), self.slots)


def _chain_slots(matrices: np.ndarray, k: int) -> np.ndarray:
    chain = matrices
    for _ in range(k - 1):
        chain = np.moveaxis(np.tensordot(chain, matrices, axes=([-1], [1])), -2, -3)
    return as_exact_array(chain)


def _chain_entries(algebra: ClassicalAlgebra, k: int, rep: Representation) -> int:
    matrices = representation_matrices(algebra, rep)
    return algebra.dim_g ** k * matrices.shape[1] ** 2


def pi_chain(algebra: ClassicalAlgebra, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> MatrixChain:
    if k < 1:
        raise ValueError("chain degree must be positive")
    BudgetExceeded.check(f"pi chain of degree {k} for {algebra.label}", _chain_entries(algebra, k, Representation.DEFINING), budgets.entries)
    return MatrixChain(k, algebra.dim_g, _chain_slots(algebra.basis, k))


@lru_cache(maxsize=64)
def _trace_tensor(algebra: ClassicalAlgebra, k: int, rep: Representation) -> AdjointTensor:
    chain = MatrixChain(k, algebra.dim_g, _chain_slots(representation_matrices(algebra, rep), k))
    return chain.trace()


def trace_tensor(algebra: ClassicalAlgebra, k: int, rep: Representation = Representation.DEFINING,
                 budgets: Budgets = DEFAULT_BUDGETS) -> AdjointTensor:
    """T_k(X_1..X_k) = tr(rep(X_1) .. rep(X_k)); cyclic in its slots."""
    if k < 1:
        raise ValueError("trace degree must be positive")
    rep = Representation(rep)
    BudgetExceeded.check(f"trace tensor of degree {k} for {algebra.label}", _chain_entries(algebra, k, rep), budgets.entries)
    return _trace_tensor(algebra, k, rep)


def symmetrized_trace(algebra: ClassicalAlgebra, k: int, rep: Representation = Representation.DEFINING,
                      budgets: Budgets = DEFAULT_BUDGETS) -> AdjointTensor:
    return symmetrize(trace_tensor(algebra, k, rep, budgets))


def chevalley_polynomial(algebra: ClassicalAlgebra, k: int, point) -> int:
    """
    tr_V(M_V^k) at a point x of g, where M_V = pi(X_a) (x) K^{ab} X_b and X_b acts on x
    through the Killing form, X_b(x) = K(X_b, x).
    """
    point = as_exact_array(point)
    pairing = algebra.killing.dot(point)
    coefficients = algebra.killing_inverse.dot(pairing)
    matrix = as_exact_array(np.tensordot(coefficients, algebra.basis, axes=([0], [0])))
    power = np.identity(algebra.dim_v, dtype=object)
    for _ in range(k):
        power = as_exact_array(power.dot(matrix))
    return exact(np.trace(power))


def polynomial_ring(algebra: ClassicalAlgebra):
    """QQ[x_0 .. x_{dimG-1}], the coordinate ring of g."""
    return ring(",".join(f"x{alpha}" for alpha in range(algebra.dim_g)), QQ)


def generic_element(algebra: ClassicalAlgebra, matrices: np.ndarray):
    """rep(x) = sum_alpha x_alpha rep(X_alpha) as a nested list of polynomials."""
    poly_ring, *variables = polynomial_ring(algebra)
    n = matrices.shape[1]
    matrix = [[poly_ring.zero for _ in range(n)] for _ in range(n)]
    for alpha, variable in enumerate(variables):
        for i, j in zip(*np.nonzero(matrices[alpha] != 0)):
            value = matrices[alpha][i, j]
            matrix[i][j] += variable * QQ(value.numerator, value.denominator)
    return poly_ring, matrix


def _multiply(poly_ring, left, right):
    n = len(left)
    product = [[poly_ring.zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if not left[i][k]:
                continue
            for j in range(n):
                if right[k][j]:
                    product[i][j] += left[i][k] * right[k][j]
    return product


def trace_power_polynomial(algebra: ClassicalAlgebra, k: int, rep: Representation = Representation.DEFINING):
    """
    x -> tr(rep(x)^k) as an exact polynomial. It is the diagonal of symmetrized_trace,
    so it vanishes identically iff that tensor does.
    """
    if k < 1:
        raise ValueError("trace degree must be positive")
    poly_ring, matrix = generic_element(algebra, representation_matrices(algebra, Representation(rep)))
    power = matrix
    for _ in range(k - 2):
        power = _multiply(poly_ring, power, matrix)
    n = len(matrix)
    if k == 1:
        return sum((matrix[i][i] for i in range(n)), poly_ring.zero)
    return sum((power[i][j] * matrix[j][i] for i in range(n) for j in range(n) if power[i][j] and matrix[j][i]),
               poly_ring.zero)
