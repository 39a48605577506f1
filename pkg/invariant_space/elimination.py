"""
Rank computations modulo word-sized primes.

Sparse systems (the action operator) are eliminated row by row with a static
Markowitz-style ordering: columns by ascending fill, rows by ascending length.
Dense systems (generator spans) go through vectorized numpy Gauss elimination in
int64; primes are below 2^31 so every product fits.
"""
from collections        import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses        import dataclass, field
from typing             import Callable

import numpy as np

from base_model.errors      import BadPrime, PrimeDisagreement
from config.setup           import ESCALATION_PRIME, LOGGER, make_executor
from tensor_core.prime_field import check_prime, residue


@dataclass
class SparseSystem:
    """Rows as {column: exact coefficient} maps over `ncols` unknowns."""
    ncols: int
    rows: list[dict[int, object]] = field(default_factory=list)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.rows)


def sparse_rank_mod_p(system: SparseSystem, prime: int) -> int:
    counts = Counter(column for row in system.rows for column in row)
    order = sorted(range(system.ncols), key=lambda column: (counts[column], column))
    relabel = {column: position for position, column in enumerate(order)}

    pivots: dict[int, dict[int, int]] = {}
    for row in sorted(system.rows, key=len):
        work = {}
        for column, value in row.items():
            reduced = residue(value, prime)
            if reduced:
                work[relabel[column]] = reduced
        while work:
            lead = min(work)
            pivot_row = pivots.get(lead)
            if pivot_row is None:
                inverse = pow(work[lead], -1, prime)
                pivots[lead] = {column: value * inverse % prime for column, value in work.items()}
                break
            factor = work[lead]
            for column, value in pivot_row.items():
                updated = (work.get(column, 0) - factor * value) % prime
                if updated:
                    work[column] = updated
                else:
                    work.pop(column, None)
        if len(pivots) == system.ncols:
            break
    return len(pivots)


def dense_rank_mod_p(matrix: np.ndarray, prime: int) -> int:
    a = np.asarray(matrix, dtype=np.int64) % prime
    if a.size == 0:
        return 0
    # rank(A) = rank(A^T); loop over the shorter side, vectorize over the longer one
    if a.shape[0] < a.shape[1]:
        a = np.ascontiguousarray(a.T)
    n_rows, n_cols = a.shape
    rank = 0
    for column in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.nonzero(a[rank:, column])[0]
        if candidates.size == 0:
            continue
        pivot = rank + candidates[0]
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        a[rank] = a[rank] * pow(int(a[rank, column]), -1, prime) % prime
        below = rank + 1 + np.nonzero(a[rank + 1:, column])[0]
        if below.size:
            a[below] = (a[below] - np.outer(a[below, column], a[rank]) % prime) % prime
        rank += 1
    return rank


def agreed_rank(rank_for: Callable[[int], int], primes, what: str,
                escalate: bool = False, executor: ThreadPoolExecutor | None = None) -> tuple[int, tuple[int, ...]]:
    """
    Rank modulo every prime; all must agree.

    With `escalate`, a disagreement (or a prime dividing a denominator) pulls in the
    escalation prime and the largest rank is accepted once two primes share it;
    a modular rank never exceeds the rational one.
    """
    primes = tuple(check_prime(int(p)) for p in primes)
    if not primes:
        raise ValueError("at least one prime is required")

    def safe(prime):
        try:
            return rank_for(prime)
        except BadPrime as error:
            if not escalate:
                raise
            LOGGER.warning(f"[SKIPPED] {what}: {error}")
            return None

    owned = executor is None
    pool = executor or make_executor(len(primes))
    try:
        ranks = dict(zip(primes, pool.map(safe, primes)))
    finally:
        if owned:
            pool.shutdown()

    values = {p: v for p, v in ranks.items() if v is not None}
    if values and len(values) == len(primes) and len(set(values.values())) == 1:
        return next(iter(values.values())), primes
    if not escalate:
        raise PrimeDisagreement(what, values)

    LOGGER.warning(f"[PROCESS] {what}: primes disagree ({values}), escalating to {ESCALATION_PRIME}")
    if ESCALATION_PRIME not in values:
        escalated = safe(ESCALATION_PRIME)
        if escalated is not None:
            values[ESCALATION_PRIME] = escalated
    if values:
        best = max(values.values())
        agreeing = tuple(p for p in values if values[p] == best)
        if len(agreeing) >= 2:
            return best, agreeing
    raise PrimeDisagreement(what, values)
