"""Exact row echelon reduction over the rationals (Python Fractions)."""
from fractions import Fraction


def form_rational(m, t=None):
  """
  Reduce the list-of-rows matrix `m` in place to row echelon form.
  The optional right-hand side `t` follows the row operations.
  Returns the list of free (non-pivot) columns.
  """
  free_vars = []
  n_rows = len(m)
  assert n_rows != 0
  n_cols = len(m[0])
  assert t is None or len(t) == n_rows
  piv_r = 0
  for piv_c in range(n_cols):
    for i_row in range(piv_r, n_rows):
      if m[i_row][piv_c] != 0:
        break
    else:
      free_vars.append(piv_c)
      continue
    if i_row != piv_r:
      m[piv_r], m[i_row] = m[i_row], m[piv_r]
      if t is not None:
        t[piv_r], t[i_row] = t[i_row], t[piv_r]
    fp = m[piv_r][piv_c]
    for r in range(piv_r + 1, n_rows):
      fr = m[r][piv_c]
      if fr == 0:
        continue
      frp = Fraction(fr) / fp
      for c in range(piv_c, n_cols):
        m[r][c] -= m[piv_r][c] * frp
      if t is not None:
        t[r] -= t[piv_r] * frp
    piv_r += 1
  return free_vars


def back_substitution_rational(m, t, free_vars, sol):
  """Fill `sol` with one solution of m x = t (free variables as given in `sol`); None if inconsistent."""
  n_rows = len(m)
  n_cols = len(m[0])
  assert t is None or len(t) == n_rows
  assert len(sol) == n_cols
  if t is not None:
    rank = n_cols - len(free_vars)
    for r in range(rank, n_rows):
      if t[r] != 0:
        return None
  free_flags = [False] * n_cols
  for c in free_vars:
    free_flags[c] = True
  piv_cols = [c for c, f in enumerate(free_flags) if not f]
  for r in range(len(piv_cols) - 1, -1, -1):
    piv_c = piv_cols[r]
    s = 0 if t is None else -t[r]
    for c in range(piv_c + 1, n_cols):
      s += m[r][c] * sol[c]
    sol[piv_c] = -Fraction(s) / m[r][piv_c]
  return sol


def solve_rational(rows, rhs):
  """One exact solution of rows . x = rhs with free variables set to zero, or None."""
  m = [[Fraction(value) for value in row] for row in rows]
  t = [Fraction(value) for value in rhs]
  free_vars = form_rational(m, t)
  return back_substitution_rational(m, t, free_vars, [Fraction(0)] * len(m[0]))


class RationalEchelon:
  """Incrementally grown echelon basis; `add` reports whether a vector was independent."""

  def __init__(self, length: int):
    self.length = length
    self.rows: dict[int, list[Fraction]] = {}

  @property
  def rank(self) -> int:
    return len(self.rows)

  def reduce(self, vector) -> list[Fraction]:
    work = [Fraction(value) for value in vector]
    for pivot in sorted(self.rows):
      coefficient = work[pivot]
      if coefficient:
        row = self.rows[pivot]
        for c in range(pivot, self.length):
          if row[c]:
            work[c] -= coefficient * row[c]
    return work

  def add(self, vector) -> bool:
    work = self.reduce(vector)
    pivot = next((c for c, value in enumerate(work) if value), None)
    if pivot is None:
      return False
    lead = work[pivot]
    normalized = [value / lead for value in work]
    # keep stored rows fully reduced against the new pivot
    for other_pivot, row in self.rows.items():
      coefficient = row[pivot]
      if coefficient:
        self.rows[other_pivot] = [a - coefficient * b for a, b in zip(row, normalized)]
    self.rows[pivot] = normalized
    return True

  def contains(self, vector) -> bool:
    return not any(self.reduce(vector))
