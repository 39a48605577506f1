"""
Symmetric-power kernel oracle.

A symmetric degree-d tensor is determined by its values on sorted multi-indices
(monomials). The invariance equations restricted to symmetric tensors give a
linear system in those values; its kernel has dimension dim S^d(g)^G. Primitive
invariants are counted against the products of lower-degree primitives, using
that the invariant algebra is polynomial.
"""
from bisect      import insort
from collections import Counter

from base_model.errors           import BudgetExceeded, ConstructionError
from classical_lie.algebra       import ClassicalAlgebra
from config.setup                import DEFAULT_BUDGETS, LOGGER, PRIMES, Budgets
from invariant_space.action      import generating_root_vectors, incoming_structure, weight_buckets
from invariant_space.elimination import SparseSystem, agreed_rank, sparse_rank_mod_p


def weight_zero_monomials(algebra: ClassicalAlgebra, d: int) -> list[tuple[int, ...]]:
    """Nondecreasing multi-indices of length d with zero total weight."""
    if d == 0:
        return [()]
    buckets = weight_buckets(algebra)
    weights = algebra.weights
    monomials = []

    def extend(prefix: list[int], start: int, total: tuple[int, ...]):
        if len(prefix) == d - 1:
            for last in buckets.get(tuple(-w for w in total), ()):
                if last >= start:
                    monomials.append(tuple(prefix) + (last,))
            return
        for index in range(start, algebra.dim_g):
            prefix.append(index)
            extend(prefix, index, tuple(a + b for a, b in zip(total, weights[index])))
            prefix.pop()

    extend([], 0, tuple(0 for _ in algebra.cartan_indices))
    return monomials


def symmetric_system(algebra: ClassicalAlgebra, d: int) -> SparseSystem:
    columns = weight_zero_monomials(algebra, d)
    rows: dict[tuple, dict[int, object]] = {}
    for beta in generating_root_vectors(algebra):
        incoming = incoming_structure(algebra, beta)
        for column, monomial in enumerate(columns):
            for gamma in set(monomial):
                for a, value in incoming.get(gamma, ()):
                    target = list(monomial)
                    target.remove(gamma)
                    insort(target, a)
                    key = (beta,) + tuple(target)
                    # each slot of the target holding `a` contributes once
                    weight = Counter(target)[a] * value
                    row = rows.setdefault(key, {})
                    row[column] = row.get(column, 0) + weight
    return SparseSystem(len(columns), [row for row in rows.values() if any(row.values())])


def symmetric_invariant_dimension(algebra: ClassicalAlgebra, d: int, primes=PRIMES) -> int:
    if d == 0:
        return 1
    system = symmetric_system(algebra, d)
    if system.ncols == 0:
        return 0
    rank, _ = agreed_rank(lambda prime: sparse_rank_mod_p(system, prime), primes,
                          f"{algebra.label} symmetric invariants of degree {d}", escalate=True)
    return system.ncols - rank


def products_of_primitives(degrees: list[int], d: int) -> int:
    """Coefficient of t^d in prod 1/(1 - t^e) over the given primitive degrees."""
    coefficients = [1] + [0] * d
    for degree in degrees:
        for t in range(degree, d + 1):
            coefficients[t] += coefficients[t - degree]
    return coefficients[d]


def primitive_degrees(algebra: ClassicalAlgebra, primes=PRIMES, budgets: Budgets = DEFAULT_BUDGETS) -> list[int]:
    found: list[int] = []
    d = 0
    while len(found) < algebra.rank:
        d += 1
        BudgetExceeded.check(f"{algebra.label} exponent oracle degree", d, budgets.symmetric_degree)
        dimension = symmetric_invariant_dimension(algebra, d, primes)
        new = dimension - products_of_primitives(found, d)
        if new < 0:
            raise ConstructionError(f"{algebra.label}: fewer degree-{d} invariants than products of primitives")
        found += [d] * new
        LOGGER.debug(f"[PROCESS] {algebra.label} degree {d}: {dimension} symmetric invariants, {new} new primitive")
    return found
