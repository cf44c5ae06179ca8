"""Exact Gaussian elimination over QQ or GF(p).

Matrices are lists of rows; entries are field elements.  All routines are
pure: inputs are never modified.
"""

from .field import QQ


def rref(rows, field=QQ):
    """Reduced row echelon form with leftmost-nonzero pivoting.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                row_r = m[r]
                m[i] = [a - factor * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field=QQ):
    return len(rref(rows, field)[1])


def nullspace(rows, ncols, field=QQ):
    """Basis of ``{v : M v = 0}``, one vector per free column (ascending)."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def transpose(rows, nrows_if_empty=0):
    if not rows:
        return [[] for _ in range(nrows_if_empty)]
    return [list(col) for col in zip(*rows)]


def matmul(a, b, field=QQ):
    """Product of an ``m x k`` and a ``k x n`` matrix."""
    if not a:
        return []
    k = len(a[0])
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        new = [field.zero] * n
        for t in range(k):
            x = row[t]
            if x != 0:
                brow = b[t]
                for j in range(n):
                    if brow[j] != 0:
                        new[j] = new[j] + x * brow[j]
        out.append(new)
    return out


def matvec(a, v, field=QQ):
    out = []
    for row in a:
        s = field.zero
        for x, y in zip(row, v):
            if x != 0 and y != 0:
                s = s + x * y
        out.append(s)
    return out


def solve(rows, rhs, field=QQ):
    """One solution ``x`` of ``M x = rhs`` (free variables set to zero), or ``None``."""
    if not rows:
        return None if any(b != 0 for b in rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def identity(n, field=QQ):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


class SparseEchelon:
    """Incrementally maintained echelon basis of sparse row vectors.

    Rows are dicts ``column -> value``.  The pivot of a row is its smallest
    column under ``key``.  Used for rank computations on large, sparse
    Macaulay-type matrices where dense elimination would be wasteful.
    """

    def __init__(self, key=None):
        self._key = key if key is not None else (lambda c: c)
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, row):
        row = {c: v for c, v in row.items() if v != 0}
        while row:
            pc = min(row, key=self._key)
            basis_row = self._rows.get(pc)
            if basis_row is None:
                return row
            factor = row[pc]
            for c, v in basis_row.items():
                nv = row.get(c, 0) - factor * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
        return row

    def add(self, row):
        """Insert ``row``; returns True when it enlarged the span."""
        row = self.reduce(row)
        if not row:
            return False
        pc = min(row, key=self._key)
        inv = 1 / row[pc]
        self._rows[pc] = {c: v * inv for c, v in row.items()}
        return True

    def contains(self, row):
        return not self.reduce(row)
