"""
Exact elimination over the integers.

Three engines share this module:

* `smith_normal_form` is a dense Smith diagonalization that tracks both
  unimodular transforms (and the inverse of the column transform).
* `LinearSystem` is a sparse column echelon with a unimodular transform; it
  answers kernel, image-basis and integer-solve queries for one matrix.
* `invariant_factors` only needs the diagonal, so it first strips unit
  pivots from the sparse matrix and diagonalizes the small remainder.
  `torsion_factors_mod` does the same with every entry reduced modulo a
  multiple of the largest torsion invariant.
"""

import logging
from collections import defaultdict, namedtuple
from itertools import combinations
from math import gcd

from .matrices import IntMatrix

logger = logging.getLogger(__name__)

SmithForm = namedtuple('SmithForm', ['U', 'D', 'V'])


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class _Diagonalizer:
    """
    In-place Smith diagonalization of a dense list-of-lists matrix.

    With `track=True`, maintains U, V and V^-1 so that U·m·V equals the
    working matrix at every step.
    """

    def __init__(self, rows, nrows, ncols, track=True, modulus=None):
        self.modulus = modulus
        if modulus:
            rows = [[x % modulus for x in r] for r in rows]
        self.a = [list(r) for r in rows]
        self.nrows = nrows
        self.ncols = ncols
        self.track = track
        if track:
            self.U = _identity(nrows)
            self.V = _identity(ncols)
            self.V_inv = _identity(ncols)

    def swap_rows(self, i, j):
        if i == j:
            return
        a = self.a
        a[i], a[j] = a[j], a[i]
        if self.track:
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for r in self.a:
            r[i], r[j] = r[j], r[i]
        if self.track:
            for r in self.V:
                r[i], r[j] = r[j], r[i]
            self.V_inv[i], self.V_inv[j] = self.V_inv[j], self.V_inv[i]

    def row_op(self, i, t, q):
        """row_i -= q·row_t"""
        ri, rt = self.a[i], self.a[t]
        for k in range(self.ncols):
            if rt[k]:
                ri[k] -= q * rt[k]
        if self.modulus:
            self.a[i] = [x % self.modulus for x in ri]
        if self.track:
            ui, ut = self.U[i], self.U[t]
            for k in range(self.nrows):
                if ut[k]:
                    ui[k] -= q * ut[k]

    def col_op(self, j, t, q):
        """col_j -= q·col_t"""
        m = self.modulus
        for r in self.a:
            if r[t]:
                r[j] -= q * r[t]
                if m:
                    r[j] %= m
        if self.track:
            for r in self.V:
                if r[t]:
                    r[j] -= q * r[t]
            vi_t, vi_j = self.V_inv[t], self.V_inv[j]
            for k in range(self.ncols):
                if vi_j[k]:
                    vi_t[k] += q * vi_j[k]

    def negate_row(self, t):
        self.a[t] = [-x % self.modulus if self.modulus else -x for x in self.a[t]]
        if self.track:
            self.U[t] = [-x for x in self.U[t]]

    def _smallest(self, t, full=True):
        best = None
        a = self.a
        if full:
            cells = ((i, j) for i in range(t, self.nrows) for j in range(t, self.ncols))
        else:
            cells = [(i, t) for i in range(t, self.nrows)] + [(t, j) for j in range(t + 1, self.ncols)]
        for i, j in cells:
            v = a[i][j]
            if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
                if abs(v) == 1:
                    break
        return best

    def run(self):
        a = self.a
        for t in range(min(self.nrows, self.ncols)):
            pivot = self._smallest(t)
            if pivot is None:
                break
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            while True:
                clean = True
                for i in range(t + 1, self.nrows):
                    if a[i][t]:
                        self.row_op(i, t, a[i][t] // a[t][t])
                        if a[i][t]:
                            clean = False
                for j in range(t + 1, self.ncols):
                    if a[t][j]:
                        self.col_op(j, t, a[t][j] // a[t][t])
                        if a[t][j]:
                            clean = False
                if not clean:
                    i, j = self._smallest(t, full=False)
                    self.swap_rows(t, i)
                    self.swap_cols(t, j)
                    continue
                p = a[t][t]
                offender = next(
                    (i for i in range(t + 1, self.nrows)
                     if any(a[i][j] % p for j in range(t + 1, self.ncols))),
                    None,
                )
                if offender is None:
                    break
                # row_t += row_offender brings a non-multiple of p into row t
                self.row_op(t, offender, -1)
            if a[t][t] < 0:
                self.negate_row(t)
        return self

    def diagonal(self):
        return [self.a[i][i] for i in range(min(self.nrows, self.ncols))]


def smith_normal_form(m):
    """
    Return (U, D, V) with D = U·m·V, U and V unimodular and D diagonal with
    d1 | d2 | ... >= 0.
    """
    diag = _Diagonalizer(m.to_lists(), m.rows, m.cols).run()
    return SmithForm(
        IntMatrix.from_rows(diag.U, m.rows),
        IntMatrix.from_rows(diag.a, m.cols),
        IntMatrix.from_rows(diag.V, m.cols),
    )


def smith_with_inverse(m):
    """Like `smith_normal_form` but also returns V^-1."""
    diag = _Diagonalizer(m.to_lists(), m.rows, m.cols).run()
    return (
        IntMatrix.from_rows(diag.U, m.rows),
        diag.diagonal(),
        IntMatrix.from_rows(diag.V, m.cols),
        IntMatrix.from_rows(diag.V_inv, m.cols),
    )


def _strip_units(m, modulus=None):
    """
    Eliminate unit pivots on the sparse rows of m. Each removes one row and
    one column and contributes an invariant factor 1.

    Over Z the units are ±1; with a modulus N they are the residues prime
    to N and all entries are kept reduced mod N.
    """
    def reduce(v):
        return v % modulus if modulus else v

    def is_unit(v):
        return gcd(v, modulus) == 1 if modulus else v in (1, -1)

    rows = {}
    col_support = defaultdict(set)
    for idx, row in enumerate(m.sparse_rows()):
        entries = {j: reduce(v) for j, v in row if reduce(v)}
        if entries:
            rows[idx] = entries
            for j in entries:
                col_support[j].add(idx)

    units = 0
    progress = True
    while progress:
        progress = False
        for idx in sorted(rows, key=lambda r: len(rows[r])):
            row = rows.get(idx)
            if not row:
                continue
            candidates = [j for j, v in row.items() if is_unit(v)]
            if not candidates:
                continue
            j = min(candidates, key=lambda c: len(col_support[c]))
            # p·p_inverse = 1 in the working ring
            p_inverse = pow(row[j], -1, modulus) if modulus else row[j]
            for other in list(col_support[j]):
                if other == idx:
                    continue
                target = rows[other]
                c = reduce(target[j] * p_inverse)
                for k, v in row.items():
                    nv = reduce(target.get(k, 0) - c * v)
                    if nv:
                        if k not in target:
                            col_support[k].add(other)
                        target[k] = nv
                    elif k in target:
                        del target[k]
                        col_support[k].discard(other)
                if not target:
                    del rows[other]
            for k in row:
                col_support[k].discard(idx)
            del rows[idx]
            units += 1
            progress = True
    return units, rows


def _remainder_diagonal(rows, modulus=None):
    remaining_cols = sorted({j for row in rows.values() for j in row})
    if not rows or not remaining_cols:
        return []
    index = {j: n for n, j in enumerate(remaining_cols)}
    dense = []
    for row in rows.values():
        line = [0] * len(remaining_cols)
        for j, v in row.items():
            line[index[j]] = v
        dense.append(line)
    logger.debug('dense remainder %dx%d (modulus %s)', len(dense), len(remaining_cols), modulus)
    diag = _Diagonalizer(dense, len(dense), len(remaining_cols), track=False, modulus=modulus).run()
    return diag.diagonal()


def invariant_factors(m):
    """Nonzero diagonal of the Smith form of m (including 1s), without transforms."""
    units, rows = _strip_units(m)
    logger.debug('invariant_factors: %d unit pivots', units)
    return sorted([1] * units + [abs(d) for d in _remainder_diagonal(rows) if d])


def torsion_factors_mod(m, modulus):
    """
    Invariant factors d > 1 of m, eliminating modulo `modulus`.

    Exact when every nonzero invariant factor of m properly divides the
    modulus; factors congruent to 0 are read as zero. Entries never grow
    past the modulus.
    """
    if modulus < 2:
        raise ValueError('modulus must be at least 2')
    units, rows = _strip_units(m, modulus)
    logger.debug('torsion_factors_mod: %dx%d, %d unit pivots mod %d', m.rows, m.cols, units, modulus)
    factors = (gcd(d, modulus) for d in _remainder_diagonal(rows, modulus))
    return sorted(f for f in factors if 1 < f < modulus)


class LinearSystem:
    """
    Column echelon form of an integer matrix, with a unimodular transform T.

    After elimination m·T has one pivot column per pivot row (lower echelon)
    and zero columns elsewhere; the matching columns of T span ker(m).
    """

    def __init__(self, m, track=True):
        self.nrows = m.rows
        self.ncols = m.cols
        cols = [dict() for _ in range(m.cols)]
        support = defaultdict(set)
        for i, row in enumerate(m.sparse_rows()):
            for j, v in row:
                cols[j][i] = v
                support[i].add(j)
        transform = [{j: 1} for j in range(m.cols)] if track else None
        pivoted = [False] * m.cols
        pivots = []

        def subtract(j, j0, q):
            cj = cols[j]
            for r, v in cols[j0].items():
                nv = cj.get(r, 0) - q * v
                if nv:
                    if r not in cj:
                        support[r].add(j)
                    cj[r] = nv
                elif r in cj:
                    del cj[r]
                    support[r].discard(j)
            if transform is not None:
                tj = transform[j]
                for r, v in transform[j0].items():
                    nv = tj.get(r, 0) - q * v
                    if nv:
                        tj[r] = nv
                    else:
                        tj.pop(r, None)

        for i in sorted(support):
            active = [j for j in support[i] if not pivoted[j]]
            while len(active) > 1:
                j0 = min(active, key=lambda j: (abs(cols[j][i]), len(cols[j]), j))
                p = cols[j0][i]
                survivors = [j0]
                for j in active:
                    if j != j0:
                        subtract(j, j0, cols[j][i] // p)
                        if cols[j].get(i):
                            survivors.append(j)
                active = survivors
            if active:
                j0 = active[0]
                pivoted[j0] = True
                pivots.append((i, j0))
                for r in cols[j0]:
                    support[r].discard(j0)

        self._cols = cols
        self._transform = transform
        self._pivots = pivots
        self._pivoted = pivoted
        logger.debug('LinearSystem: %dx%d, rank %d', m.rows, m.cols, len(pivots))

    @property
    def rank(self):
        return len(self._pivots)

    def _dense(self, sparse, length):
        out = [0] * length
        for k, v in sparse.items():
            out[k] = v
        return tuple(out)

    def kernel_basis(self):
        """Z-basis of {x : m·x = 0}."""
        if self._transform is None:
            raise ValueError('kernel needs a tracked transform')
        return [self._dense(self._transform[j], self.ncols)
                for j in range(self.ncols) if not self._pivoted[j]]

    def image_basis(self):
        """Z-basis of the column span of m."""
        return [self._dense(self._cols[j], self.nrows) for _, j in self._pivots]

    def solve(self, rhs):
        """An integer x with m·x = rhs, or None when none exists."""
        residual = {i: v for i, v in enumerate(rhs) if v}
        coefficients = {}
        for i, j0 in self._pivots:
            value = residual.get(i, 0)
            if not value:
                continue
            p = self._cols[j0][i]
            if value % p:
                return None
            c = value // p
            coefficients[j0] = c
            for r, v in self._cols[j0].items():
                nv = residual.get(r, 0) - c * v
                if nv:
                    residual[r] = nv
                else:
                    residual.pop(r, None)
        if residual:
            return None
        if self._transform is None:
            raise ValueError('solve needs a tracked transform')
        x = [0] * self.ncols
        for j0, c in coefficients.items():
            for r, v in self._transform[j0].items():
                x[r] += c * v
        return tuple(x)

    def contains(self, rhs):
        """True when rhs lies in the column span of m."""
        residual = {i: v for i, v in enumerate(rhs) if v}
        for i, j0 in self._pivots:
            value = residual.get(i, 0)
            if not value:
                continue
            p = self._cols[j0][i]
            if value % p:
                return False
            c = value // p
            for r, v in self._cols[j0].items():
                nv = residual.get(r, 0) - c * v
                if nv:
                    residual[r] = nv
                else:
                    residual.pop(r, None)
        return not residual


def lattice_basis(vectors, dimension):
    """Z-basis of the span of `vectors` inside Z^dimension."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return []
    return LinearSystem(IntMatrix.from_columns(vectors, dimension), track=False).image_basis()


def solve(m, rhs):
    return LinearSystem(m).solve(rhs)


def determinant(m):
    """Fraction-free (Bareiss) determinant of a square matrix."""
    if not m.is_square():
        raise ValueError('determinant needs a square matrix')
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def determinantal_divisor(m, k):
    """gcd of all k x k minors of m (0 when every minor vanishes)."""
    g = 0
    dense = m.to_lists()
    for rows in combinations(range(m.rows), k):
        for cols in combinations(range(m.cols), k):
            minor = IntMatrix.from_rows([[dense[i][j] for j in cols] for i in rows], k)
            g = gcd(g, determinant(minor))
            if g == 1:
                return 1
    return g
