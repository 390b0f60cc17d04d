"""Exact sparse Gaussian elimination over Q.

Rows are ``{column: mpq}`` dicts. Columns are eliminated in index order with
the first remaining row (in the given row order) that has a nonzero entry as
pivot. For the coefficient-matching systems built in ``formulas.derive`` this
order keeps every pivot row a singleton, so there is essentially no fill-in.
"""

from dataclasses import dataclass, field

from gmpy2 import mpq


class LinearSystemError(ValueError):
    pass


class InconsistentSystem(LinearSystemError):
    def __init__(self, row_index, residual):
        super().__init__(f"inconsistent system: row {row_index} reduces to 0 = {residual}")
        self.row_index = row_index
        self.residual = residual


class UnderdeterminedSystem(LinearSystemError):
    def __init__(self, free, solution):
        super().__init__(f"underdetermined system: nullity {len(free)}")
        self.free = free
        self.nullity = len(free)
        self.solution = solution


@dataclass
class Solution:
    values: list
    rank: int
    free: list = field(default_factory=list)
    rows_used: int = 0

    @property
    def unique(self):
        return not self.free

    @property
    def nullity(self):
        return len(self.free)


class RatMatrix:
    """Sparse exact matrix; rows are dicts column -> mpq."""

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        self.data = [dict() for _ in range(rows)]
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    @classmethod
    def from_dense(cls, dense):
        m = cls(len(dense), len(dense[0]) if dense else 0)
        for i, row in enumerate(dense):
            for j, v in enumerate(row):
                if v:
                    m.data[i][j] = mpq(v)
        return m

    @classmethod
    def from_rows(cls, rows, cols):
        m = cls(len(rows), cols)
        m.data = [{j: mpq(v) for j, v in r.items() if v} for r in rows]
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i].get(j, mpq(0))

    def __setitem__(self, ij, v):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        if v:
            self.data[i][j] = mpq(v)
        else:
            self.data[i].pop(j, None)

    def matvec(self, x):
        return [sum((v * x[j] for j, v in r.items()), mpq(0)) for r in self.data]

    def permuted_rows(self, perm):
        m = RatMatrix(self.rows, self.cols)
        m.data = [dict(self.data[p]) for p in perm]
        return m

    def nnz(self):
        return sum(len(r) for r in self.data)


def _eliminate(A, b):
    """Row-reduce copies of A, b. Returns (pivots {col: row}, rows, rhs)."""
    rows = [dict(r) for r in A.data]
    rhs = [mpq(v) for v in b]
    # column -> set of rows with a nonzero entry there
    colrows = {}
    for i, r in enumerate(rows):
        for j in r:
            colrows.setdefault(j, set()).add(i)
    used = [False] * len(rows)
    pivots = {}
    for j in range(A.cols):
        cand = [i for i in colrows.get(j, ()) if not used[i]]
        if not cand:
            continue
        p = min(cand)
        used[p] = True
        prow = rows[p]
        inv = 1 / prow[j]
        if inv != 1:
            for k in prow:
                prow[k] *= inv
            rhs[p] *= inv
        pivots[j] = p
        for i in list(colrows[j]):
            if i == p:
                continue
            r = rows[i]
            f = r.get(j)
            if not f:
                continue
            for k, v in prow.items():
                nv = r.get(k, 0) - f * v
                if nv:
                    if k not in r:
                        colrows.setdefault(k, set()).add(i)
                    r[k] = nv
                else:
                    if k in r:
                        del r[k]
                        colrows[k].discard(i)
            rhs[i] -= f * rhs[p]
        colrows[j] = {p}
    return pivots, rows, rhs


def solve_unique(A, b, allow_free=False):
    """Solve A x = b exactly.

    Returns a :class:`Solution` whose ``rank`` equals the number of unknowns
    when the solution is unique. Raises :class:`InconsistentSystem` with a
    witness row, or :class:`UnderdeterminedSystem` listing the free unknowns
    (unless ``allow_free``, in which case free unknowns are set to 0).
    """
    if len(b) != A.rows:
        raise LinearSystemError("right-hand side length does not match rows")
    pivots, rows, rhs = _eliminate(A, b)
    pivot_rows = set(pivots.values())
    for i, r in enumerate(rows):
        if i not in pivot_rows and not r and rhs[i]:
            raise InconsistentSystem(i, rhs[i])
    free = [j for j in range(A.cols) if j not in pivots]
    x = [mpq(0)] * A.cols
    # back substitution: pivot rows may still hold later pivot columns
    order = sorted(pivots, reverse=True)
    for j in order:
        r = rows[pivots[j]]
        s = rhs[pivots[j]]
        for k, v in r.items():
            if k != j:
                s -= v * x[k]
        x[j] = s
    sol = Solution(values=x, rank=len(pivots), free=free, rows_used=A.rows)
    if free and not allow_free:
        raise UnderdeterminedSystem(free, sol)
    return sol


def rank(A):
    pivots, _, _ = _eliminate(A, [0] * A.rows)
    return len(pivots)
