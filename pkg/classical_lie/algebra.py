"""
Classical simple Lie algebras in their defining representation, over exact rationals.

Basis order (part of the report format, see BASIS_CONVENTION):
  A_r: E_ij for i != j in lexicographic order, then E_ii - E_{i+1,i+1}.
  B_r, C_r, D_r: for (i, j) in lexicographic order the projection
      E_ij - F^-1 E_ij^T F
  onto the algebra preserving F, scaled to a primitive integer matrix whose first
  nonzero entry is positive; zero and repeated (up to sign) results are skipped.
  F is the split symmetric form (ones on the antidiagonal) for B and D and
  [[0, I], [-I, 0]] for C.
"""
from dataclasses import dataclass, field
from fractions   import Fraction
from functools   import cached_property, reduce
from itertools   import product
from math        import gcd

import numpy as np
import sympy

from base_model.errors          import ConstructionError, NotProportional
from classical_lie.algebra_spec import AlgebraSpec, Family
from config.setup               import LOGGER
from tensor_core.adjoint_tensor import AdjointTensor, as_exact_array, exact, is_zero_array


def _unit(n: int, i: int, j: int) -> np.ndarray:
    matrix = np.zeros((n, n), dtype=object)
    matrix[i, j] = 1
    return matrix


def to_sympy(array: np.ndarray) -> sympy.Matrix:
    return sympy.Matrix(array.shape[0], array.shape[1], [sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in array.flat])


def from_sympy(matrix: sympy.Matrix) -> np.ndarray:
    values = [exact(Fraction(int(v.p), int(v.q))) for v in matrix]
    return np.array(values, dtype=object).reshape(matrix.shape)


def exact_inverse(array: np.ndarray) -> np.ndarray:
    return from_sympy(to_sympy(array).inv())


def invariant_form(spec: AlgebraSpec) -> np.ndarray | None:
    n = spec.dim_v
    if spec.family is Family.A:
        return None
    form = np.zeros((n, n), dtype=object)
    if spec.family is Family.C:
        r = spec.rank
        for i in range(r):
            form[i, r + i] = 1
            form[r + i, i] = -1
    else:
        for i in range(n):
            form[i, n - 1 - i] = 1
    return form


def _primitive(matrix: np.ndarray) -> np.ndarray:
    values = [int(v) for v in matrix.flat]
    divisor = reduce(gcd, (abs(v) for v in values if v), 0)
    lead = next(v for v in values if v)
    sign = 1 if lead > 0 else -1
    return np.array([sign * v // divisor for v in values], dtype=object).reshape(matrix.shape)


def _defining_basis(spec: AlgebraSpec, form: np.ndarray | None) -> list[np.ndarray]:
    n = spec.dim_v
    if spec.family is Family.A:
        basis = [_unit(n, i, j) for i, j in product(range(n), repeat=2) if i != j]
        basis += [_unit(n, i, i) - _unit(n, i + 1, i + 1) for i in range(n - 1)]
        return basis

    form_inverse = exact_inverse(form)
    basis, seen = [], set()
    for i, j in product(range(n), repeat=2):
        unit = _unit(n, i, j)
        candidate = as_exact_array(unit - form_inverse.dot(unit.T).dot(form))
        if is_zero_array(candidate):
            continue
        candidate = _primitive(candidate)
        key = tuple(candidate.flat)
        if key in seen:
            continue
        seen.add(key)
        basis.append(candidate)
    return basis


@dataclass(frozen=True, eq=False)
class ClassicalAlgebra:
    """
    Immutable after construction and safe to share across threads.

    @param basis: (dimG, N, N) object array of the matrices pi(X_alpha)
    @param structure: (dimG, dimG, dimG) object array, structure[a, b, c] = c_{ab}^c
    @param killing: K_{ab} = tr(ad X_a ad X_b)
    @param form: g (B, D) or f (C) in V; None for A
    """
    spec: AlgebraSpec
    basis: np.ndarray
    structure: np.ndarray
    killing: np.ndarray
    killing_inverse: np.ndarray
    form: np.ndarray | None
    form_inverse: np.ndarray | None
    _pivots: tuple = field(repr=False)
    _pivot_inverse: np.ndarray = field(repr=False)

    @property
    def dim_v(self) -> int:
        return self.spec.dim_v

    @property
    def dim_g(self) -> int:
        return self.spec.dim_g

    @property
    def label(self) -> str:
        return self.spec.label

    @property
    def family(self) -> Family:
        return self.spec.family

    @property
    def rank(self) -> int:
        return self.spec.rank

    def coordinates(self, matrix) -> np.ndarray:
        """Exact coordinates of `matrix` in the basis; ConstructionError if it is not in the algebra."""
        matrix = as_exact_array(matrix)
        flat = matrix.reshape(-1)
        coords = as_exact_array(flat[list(self._pivots)].dot(self._pivot_inverse))
        if not is_zero_array(coords.dot(self.basis.reshape(self.dim_g, -1)) - flat):
            raise ConstructionError(f"matrix is not an element of {self.label}")
        return coords

    @cached_property
    def adjoint(self) -> np.ndarray:
        """(dimG, dimG, dimG) array with adjoint[a][c, b] = c_{ab}^c."""
        return np.ascontiguousarray(np.transpose(self.structure, (0, 2, 1)))

    @cached_property
    def trace_form(self) -> np.ndarray:
        return as_exact_array(np.tensordot(self.basis, self.basis, axes=([1, 2], [2, 1])))

    @cached_property
    def cartan_indices(self) -> tuple[int, ...]:
        diagonal = [a for a in range(self.dim_g) if is_zero_array(self.basis[a] - np.diag(np.diagonal(self.basis[a])))]
        return tuple(diagonal)

    @cached_property
    def root_indices(self) -> tuple[int, ...]:
        cartan = set(self.cartan_indices)
        return tuple(a for a in range(self.dim_g) if a not in cartan)

    @cached_property
    def weights(self) -> tuple[tuple[int, ...], ...]:
        """Weight of each basis element with respect to the diagonal basis elements."""
        cartan = [self.basis[h] for h in self.cartan_indices]
        weights = []
        for a in range(self.dim_g):
            i, j = next(index for index, value in np.ndenumerate(self.basis[a]) if value != 0)
            weights.append(tuple(int(h[i, i] - h[j, j]) for h in cartan))
        return tuple(weights)

    @cached_property
    def exponents(self) -> list[int]:
        """Degrees minus one of the primitive symmetric invariants, found by the symmetric-power kernel oracle."""
        from invariant_space.symmetric_invariants import primitive_degrees
        return sorted(degree - 1 for degree in primitive_degrees(self))

    def killing_tensor(self) -> AdjointTensor:
        return AdjointTensor(self.dim_g, self.killing)

    def lowered_structure_tensor(self) -> AdjointTensor:
        """c_{abd} = c_{ab}^c K_{cd}, totally antisymmetric."""
        return AdjointTensor(self.dim_g, np.tensordot(self.structure, self.killing, axes=([2], [0])))

    def jacobi_defect(self) -> np.ndarray:
        """Cyclic sum of c_{ab}^d c_{dc}^e; zero exactly for a Lie algebra."""
        double = np.tensordot(self.structure, self.structure, axes=([2], [0]))  # (a, b, c, e)
        return double + np.transpose(double, (1, 2, 0, 3)) + np.transpose(double, (2, 0, 1, 3))


def _assemble(spec: AlgebraSpec, basis: np.ndarray, form: np.ndarray | None) -> ClassicalAlgebra:
    dim_g, n = spec.dim_g, spec.dim_v
    if basis.shape != (dim_g, n, n):
        raise ConstructionError(f"{spec.label}: expected {dim_g} basis matrices of size {n}, got shape {basis.shape}")

    flat = basis.reshape(dim_g, n * n)
    _, pivots = to_sympy(flat).rref()
    if len(pivots) != dim_g:
        raise ConstructionError(f"{spec.label}: basis matrices are linearly dependent")
    pivot_inverse = exact_inverse(flat[:, list(pivots)])

    products = np.transpose(np.tensordot(basis, basis, axes=([2], [1])), (0, 2, 1, 3))
    brackets = (products - np.transpose(products, (1, 0, 2, 3))).reshape(dim_g * dim_g, n * n)
    structure = as_exact_array(brackets[:, list(pivots)].dot(pivot_inverse))
    if not is_zero_array(structure.dot(flat) - brackets):
        raise ConstructionError(f"{spec.label}: bracket does not close on the basis")
    structure = structure.reshape(dim_g, dim_g, dim_g)

    adjoint = np.transpose(structure, (0, 2, 1))
    killing = as_exact_array(np.tensordot(adjoint, adjoint, axes=([1, 2], [2, 1])))
    killing_matrix = to_sympy(killing)
    if killing_matrix.det() == 0:
        raise ConstructionError(f"{spec.label}: Killing form is degenerate")
    killing_inverse = from_sympy(killing_matrix.inv())

    form_inverse = None
    if form is not None:
        form_inverse = exact_inverse(form)
        for a in range(dim_g):
            if not is_zero_array(basis[a].T.dot(form) + form.dot(basis[a])):
                raise ConstructionError(f"{spec.label}: basis matrix {a} does not preserve the invariant form")
    if any(np.trace(basis[a]) != 0 for a in range(dim_g)):
        raise ConstructionError(f"{spec.label}: basis matrices must be traceless")

    basis = basis.copy()
    basis.flags.writeable = False
    return ClassicalAlgebra(
        spec=spec,
        basis=basis,
        structure=structure,
        killing=killing,
        killing_inverse=killing_inverse,
        form=form,
        form_inverse=form_inverse,
        _pivots=tuple(int(p) for p in pivots),
        _pivot_inverse=pivot_inverse,
    )


def build_algebra(spec: AlgebraSpec) -> ClassicalAlgebra:
    form = invariant_form(spec)
    basis = np.array(_defining_basis(spec, form), dtype=object)
    algebra = _assemble(spec, basis, form)
    LOGGER.debug(f"[SUCCESS] built {spec.label}: dimV={spec.dim_v} dimG={spec.dim_g}")
    return algebra


def transport_basis(algebra: ClassicalAlgebra, reflection) -> ClassicalAlgebra:
    """
    Conjugate every basis matrix by `reflection` (which must preserve the invariant form)
    and rebuild all derived data in the transported basis.
    """
    reflection = as_exact_array(reflection)
    inverse = exact_inverse(reflection)
    if algebra.form is not None and not is_zero_array(reflection.T.dot(algebra.form).dot(reflection) - algebra.form):
        raise ConstructionError("transport map does not preserve the invariant form")
    basis = np.array([as_exact_array(reflection.dot(x).dot(inverse)) for x in algebra.basis], dtype=object)
    return _assemble(algebra.spec, basis, algebra.form)


def adjoint_rep(algebra: ClassicalAlgebra) -> list[np.ndarray]:
    """ad(X_a) with (ad X_a)[c, b] = c_{ab}^c."""
    return [algebra.adjoint[a] for a in range(algebra.dim_g)]


def killing_ratio(algebra: ClassicalAlgebra) -> Fraction | int:
    """The unique lambda with K = lambda * tr_V(pi pi), checked on every pair."""
    trace_form = algebra.trace_form
    anchor = next((index for index, value in np.ndenumerate(trace_form) if value != 0), None)
    if anchor is None:
        raise NotProportional(f"{algebra.label}: trace form vanishes identically")
    ratio = exact(Fraction(algebra.killing[anchor]) / trace_form[anchor])
    if not is_zero_array(algebra.killing - trace_form * ratio):
        raise NotProportional(f"{algebra.label}: Killing form is not a multiple of the trace form")
    return ratio
