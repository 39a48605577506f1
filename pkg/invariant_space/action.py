"""
Infinitesimal adjoint action on degree-k tensors.

(beta . T)(X_1..X_k) = sum_i T(X_1, .., [X_beta, X_i], .., X_k); T is invariant iff this
vanishes for every beta. The kernel is computed on an equivalent reduced system:
Cartan invariance forces T to live on weight-zero multi-indices, and the annihilator
of T is a Lie subalgebra, so it suffices to impose invariance under a set of root
vectors generating g.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from functools   import cached_property
from itertools   import product

import numpy as np

from base_model.errors          import BudgetExceeded, ConstructionError, DegreeMismatch
from classical_lie.algebra      import ClassicalAlgebra
from config.setup               import DEFAULT_BUDGETS, LOGGER, Budgets
from invariant_space.elimination import SparseSystem
from tensor_core.adjoint_tensor import AdjointTensor, is_zero_array, tensor_product
from tensor_core.row_echelon    import RationalEchelon


def _unit_vector(length: int, index: int) -> list[int]:
    vector = [0] * length
    vector[index] = 1
    return vector


def _generated_subalgebra(algebra: ClassicalAlgebra, generators) -> RationalEchelon:
    span = RationalEchelon(algebra.dim_g)
    frontier = []
    for generator in generators:
        vector = _unit_vector(algebra.dim_g, generator)
        if span.add(vector):
            frontier.append(np.array(vector, dtype=object))
    while frontier:
        vector = frontier.pop()
        for generator in generators:
            image = algebra.adjoint[generator].dot(vector)
            if span.add(list(image)):
                frontier.append(image)
    return span


def generating_root_vectors(algebra: ClassicalAlgebra) -> tuple[int, ...]:
    """Greedy set of root-vector basis elements that generates g as a Lie algebra."""
    chosen: list[int] = []
    span = RationalEchelon(algebra.dim_g)
    for candidate in algebra.root_indices:
        if span.rank == algebra.dim_g:
            break
        if span.contains(_unit_vector(algebra.dim_g, candidate)):
            continue
        chosen.append(candidate)
        span = _generated_subalgebra(algebra, chosen)
    if span.rank != algebra.dim_g:
        raise ConstructionError(f"{algebra.label}: root vectors do not generate the algebra")
    return tuple(chosen)


def weight_buckets(algebra: ClassicalAlgebra) -> dict[tuple[int, ...], list[int]]:
    buckets = defaultdict(list)
    for index, weight in enumerate(algebra.weights):
        buckets[weight].append(index)
    return buckets


def _add(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(left, right))


def weight_zero_indices(algebra: ClassicalAlgebra, k: int) -> list[tuple[int, ...]]:
    """All multi-indices of length k whose weights sum to zero, in lexicographic order."""
    if k == 0:
        return [()]
    buckets = weight_buckets(algebra)
    zero = tuple(0 for _ in algebra.cartan_indices)
    indices = []
    for prefix in product(range(algebra.dim_g), repeat=k - 1):
        total = zero
        for index in prefix:
            total = _add(total, algebra.weights[index])
        for last in buckets.get(tuple(-w for w in total), ()):
            indices.append(prefix + (last,))
    return indices


def incoming_structure(algebra: ClassicalAlgebra, beta: int) -> dict[int, list[tuple[int, object]]]:
    """gamma -> [(a, c_{beta a}^gamma)] over the nonzero structure constants."""
    incoming = defaultdict(list)
    for (a, gamma), value in np.ndenumerate(algebra.structure[beta]):
        if value != 0:
            incoming[gamma].append((a, value))
    return incoming


@dataclass(eq=False)
class ActionOperator:
    """
    The stacked maps T -> beta . T for every basis element beta.

    Rows are indexed by (beta, alpha_1..alpha_k), so there are dimG * n of them.
    """
    algebra: ClassicalAlgebra
    degree: int
    budgets: Budgets = field(default=DEFAULT_BUDGETS)

    @property
    def dim(self) -> int:
        return self.algebra.dim_g ** self.degree

    @property
    def row_count(self) -> int:
        return self.algebra.dim_g * self.dim

    @cached_property
    def nonzero_structure(self) -> list[tuple[int, int, int, object]]:
        return [(beta, a, gamma, value) for (beta, a, gamma), value in np.ndenumerate(self.algebra.structure) if value != 0]

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return generating_root_vectors(self.algebra)

    @cached_property
    def columns(self) -> list[tuple[int, ...]]:
        return weight_zero_indices(self.algebra, self.degree)

    def apply(self, tensor: AdjointTensor) -> np.ndarray:
        """Exact (dimG,) + (dimG,)*k array of (beta . T)."""
        if tensor.degree != self.degree:
            raise DegreeMismatch(f"operator of degree {self.degree} applied to tensor of degree {tensor.degree}")
        BudgetExceeded.check(f"exact membership at degree {self.degree}", self.dim, self.budgets.membership)
        entries = tensor.entries
        result = np.zeros((self.algebra.dim_g,) + entries.shape, dtype=object)
        for slot in range(self.degree):
            lead = (slice(None),) * slot
            for beta, a, gamma, value in self.nonzero_structure:
                result[(beta,) + lead + (a,)] += value * entries[lead + (gamma,)]
        return result

    def reduced_system(self) -> SparseSystem:
        """Invariance under the generating root vectors, restricted to weight-zero columns."""
        BudgetExceeded.check(f"modular kernel at degree {self.degree}", self.dim, self.budgets.modular)
        columns = self.columns
        rows: dict[tuple, dict[int, object]] = {}
        for beta in self.generators:
            incoming = incoming_structure(self.algebra, beta)
            for column, multi_index in enumerate(columns):
                for slot, gamma in enumerate(multi_index):
                    for a, value in incoming.get(gamma, ()):
                        key = (beta,) + multi_index[:slot] + (a,) + multi_index[slot + 1:]
                        row = rows.setdefault(key, {})
                        row[column] = row.get(column, 0) + value
        system = SparseSystem(len(columns), [row for row in rows.values() if any(row.values())])
        LOGGER.debug(f"[PROCESS] {self.algebra.label} degree {self.degree}: {system.ncols} weight-zero columns, {len(system.rows)} rows")
        return system


def _sample_invariant(algebra: ClassicalAlgebra, k: int) -> AdjointTensor | None:
    if k < 2:
        return None
    tensor = algebra.killing_tensor() if k % 2 == 0 else algebra.lowered_structure_tensor()
    while tensor.degree < k:
        tensor = tensor_product(tensor, algebra.killing_tensor())
    return tensor


def action_operator(algebra: ClassicalAlgebra, k: int, budgets: Budgets = DEFAULT_BUDGETS) -> ActionOperator:
    if k < 1:
        raise ValueError("degree must be positive")
    BudgetExceeded.check(f"action operator at degree {k}", algebra.dim_g ** k, max(budgets.membership, budgets.modular))
    operator = ActionOperator(algebra, k, budgets)
    sample = _sample_invariant(algebra, k)
    if sample is not None and algebra.dim_g ** k <= budgets.membership:
        if not is_zero_array(operator.apply(sample)):
            raise ConstructionError(f"{algebra.label}: Killing-built tensor of degree {k} is not annihilated")
    return operator


def exact_membership(operator: ActionOperator, tensor: AdjointTensor) -> bool:
    """True iff every beta annihilates T, in exact arithmetic."""
    return is_zero_array(operator.apply(tensor))
