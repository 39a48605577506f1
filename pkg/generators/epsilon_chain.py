"""
Levi-Civita chain tensors for D_r and the Pfaffian they reduce to.

epsilon_chain_tensor(k_1..k_r) contracts eps_{a_1..a_2r} (eps_{1..2r} = +1 in the
basis of V) with prod_i g^{a_i b_i} [pi^{k_i}]_{b_i}^{a_{r+i}}. Chains are consumed in
order; a dynamic programme over the set of already used V indices keeps the cost
at (number of subsets) instead of (2r)!.
"""
from functools import reduce
from math      import prod

import numpy as np

from base_model.errors          import BudgetExceeded, InvalidDescriptor, WrongFamily
from classical_lie.algebra      import ClassicalAlgebra
from classical_lie.algebra_spec import Family
from config.setup               import DEFAULT_BUDGETS, Budgets
from generators.traces          import generic_element, pi_chain
from tensor_core.adjoint_tensor import AdjointTensor, exact, symmetrize


def _require_d(algebra: ClassicalAlgebra):
    if algebra.family is not Family.D:
        raise WrongFamily(f"epsilon chains need family D, got {algebra.label}")


def epsilon_chain_tensor(algebra: ClassicalAlgebra, chain_lengths, budgets: Budgets = DEFAULT_BUDGETS) -> AdjointTensor:
    _require_d(algebra)
    chain_lengths = tuple(int(length) for length in chain_lengths)
    if len(chain_lengths) != algebra.rank:
        raise InvalidDescriptor(f"{algebra.label} needs {algebra.rank} chain lengths, got {chain_lengths}")
    if any(length < 1 for length in chain_lengths):
        raise InvalidDescriptor(f"chain lengths must be positive, got {chain_lengths}")
    degree = sum(chain_lengths)
    BudgetExceeded.check(f"epsilon chain {chain_lengths} for {algebra.label}", algebra.dim_g ** degree, budgets.entries)

    n, r = algebra.dim_v, algebra.rank
    lowered = [pi_chain(algebra, length, budgets).left_multiply(algebra.form_inverse) for length in chain_lengths]

    states = {0: np.array(1, dtype=object)}
    for chain in lowered:
        pairs = [(a, b) for a in range(n) for b in range(n) if a != b and any(chain[..., a, b].flat)]
        following = {}
        for used, partial in states.items():
            used_indices = [u for u in range(n) if used >> u & 1]
            for a, b in pairs:
                if used >> a & 1 or used >> b & 1:
                    continue
                # inversions added by appending a, b after the already used indices
                inversions = sum(u > a for u in used_indices) + sum(u > b for u in used_indices) + (a > b)
                term = np.multiply.outer(partial, chain[..., a, b])
                if inversions % 2:
                    term = -term
                key = used | 1 << a | 1 << b
                following[key] = following[key] + term if key in following else term
        states = following

    full = (1 << n) - 1
    if full not in states:
        return AdjointTensor.zeros(algebra.dim_g, degree)
    # reorder (a_1..a_r, b_1..b_r) into paired order (a_1, b_1, .., a_r, b_r)
    sign = -1 if (r * (r - 1) // 2) % 2 else 1
    return AdjointTensor(algebra.dim_g, states[full] * sign)


def perfect_matchings(items):
    """Yields every perfect matching of `items` as a list of ordered pairs."""
    items = list(items)
    if len(items) == 0:
        yield []
        return

    first_item = items.pop(0)
    for i, item in enumerate(items):
        first_pair = (first_item, item)
        for matching in perfect_matchings(items[:i] + items[i + 1:]):
            yield [first_pair] + matching


def matching_sign(matching) -> int:
    sequence = [item for pair in matching for item in pair]
    inversions = sum(1 for i in range(len(sequence)) for j in range(i + 1, len(sequence)) if sequence[i] > sequence[j])
    return -1 if inversions % 2 else 1


def pfaffian(matrix):
    """Pfaffian of an antisymmetric matrix by expansion over perfect matchings."""
    matrix = np.asarray(matrix, dtype=object)
    n = matrix.shape[0]
    if n % 2:
        return 0
    total = 0
    for matching in perfect_matchings(range(n)):
        total += matching_sign(matching) * prod((matrix[i, j] for i, j in matching), start=1)
    return exact(total)


def pfaffian_matrices(algebra: ClassicalAlgebra) -> np.ndarray:
    """A_alpha = g^{-1} pi(X_alpha); antisymmetric for the split form."""
    _require_d(algebra)
    return np.matmul(algebra.form_inverse, algebra.basis)


def polarized_pfaffian(algebra: ClassicalAlgebra, budgets: Budgets = DEFAULT_BUDGETS) -> AdjointTensor:
    """The symmetric degree-r tensor whose diagonal is x -> Pf(g^{-1} pi(x))."""
    _require_d(algebra)
    r = algebra.rank
    BudgetExceeded.check(f"polarized Pfaffian of {algebra.label}", algebra.dim_g ** r, budgets.entries)
    matrices = pfaffian_matrices(algebra)
    total = np.zeros((algebra.dim_g,) * r, dtype=object)
    for matching in perfect_matchings(range(algebra.dim_v)):
        factors = [matrices[:, i, j] for i, j in matching]
        term = reduce(np.multiply.outer, factors)
        total = total + term if matching_sign(matching) > 0 else total - term
    return symmetrize(AdjointTensor(algebra.dim_g, total))


def pfaffian_polynomial(algebra: ClassicalAlgebra):
    """x -> Pf(g^{-1} pi(x)) as an exact polynomial of degree r."""
    _require_d(algebra)
    poly_ring, matrix = generic_element(algebra, pfaffian_matrices(algebra))
    total = poly_ring.zero
    for matching in perfect_matchings(range(algebra.dim_v)):
        term = prod((matrix[i][j] for i, j in matching), start=poly_ring.one)
        total = total + term if matching_sign(matching) > 0 else total - term
    return total
