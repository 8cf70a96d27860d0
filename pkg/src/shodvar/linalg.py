"""Exact linear algebra over the rationals.

Every matrix entry is a fractions.Fraction, so ranks, kernels and
solutions below are exact and deterministic. Shapes with zero rows or
zero columns are first-class citizens; representations of quivers
routinely have zero-dimensional vertex spaces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QMat:
    """Immutable rational matrix with an explicit shape."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Iterable[Iterable]):
        rs = tuple(tuple(_frac(x) for x in row) for row in rows)
        if len(rs) != nrows or any(len(r) != ncols for r in rs):
            raise ValueError("shape mismatch: declared %dx%d" % (nrows, ncols))
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("QMat is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMat":
        return cls(nrows, ncols, ((ZERO,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls(n, n, ((ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "QMat":
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("from_rows([]) needs an explicit ncols")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def column(cls, entries: Sequence) -> "QMat":
        return cls(len(entries), 1, ((x,) for x in entries))

    # -- basics --------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMat)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return "QMat(%dx%d: %s)" % (self.nrows, self.ncols, body)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.rows for x in row)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "QMat") -> "QMat":
        if self.shape != other.shape:
            raise ValueError("add: shapes %s vs %s" % (self.shape, other.shape))
        return QMat(
            self.nrows,
            self.ncols,
            (tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: "QMat") -> "QMat":
        return self + (-other)

    def __neg__(self) -> "QMat":
        return QMat(self.nrows, self.ncols, (tuple(-x for x in r) for r in self.rows))

    def scale(self, c) -> "QMat":
        c = _frac(c)
        return QMat(self.nrows, self.ncols, (tuple(c * x for x in r) for r in self.rows))

    def __matmul__(self, other: "QMat") -> "QMat":
        if self.ncols != other.nrows:
            raise ValueError("matmul: %s @ %s" % (self.shape, other.shape))
        if other.nrows == 0 or other.ncols == 0 or self.nrows == 0:
            return QMat.zeros(self.nrows, other.ncols)
        ocols = list(zip(*other.rows))
        out = (
            tuple(sum(a * b for a, b in zip(row, c)) for c in ocols)
            for row in self.rows
        )
        return QMat(self.nrows, other.ncols, out)

    def transpose(self) -> "QMat":
        return QMat(self.ncols, self.nrows, zip(*self.rows)) if self.rows else QMat.zeros(self.ncols, 0)

    # -- elimination ---------------------------------------------------

    def rref(self) -> tuple["QMat", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            sel = next((i for i in range(r, self.nrows) if rows[i][c] != 0), None)
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = ONE / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return QMat(self.nrows, self.ncols, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> "QMat":
        """Matrix whose columns are a basis of {x : self @ x = 0}."""
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        cols = []
        for j in free:
            v = [ZERO] * self.ncols
            v[j] = ONE
            for i, pc in enumerate(pivots):
                v[pc] = -red.rows[i][j]
            cols.append(v)
        if not cols:
            return QMat.zeros(self.ncols, 0)
        return QMat(self.ncols, len(cols), zip(*cols))

    def solve(self, rhs: "QMat") -> "QMat | None":
        """A particular X with self @ X = rhs, or None if inconsistent."""
        if rhs.nrows != self.nrows:
            raise ValueError("solve: %s vs rhs %s" % (self.shape, rhs.shape))
        aug = hstack([self, rhs])
        red, pivots = aug.rref()
        for p in pivots:
            if p >= self.ncols:
                return None
        sol = [[ZERO] * rhs.ncols for _ in range(self.ncols)]
        for i, pc in enumerate(pivots):
            for k in range(rhs.ncols):
                sol[pc][k] = red.rows[i][self.ncols + k]
        return QMat(self.ncols, rhs.ncols, sol)

    def inverse(self) -> "QMat | None":
        if self.nrows != self.ncols:
            return None
        x = self.solve(QMat.identity(self.nrows))
        if x is None:
            return None
        return x if (x @ self) == QMat.identity(self.nrows) else None

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def column_space(self) -> "QMat":
        """Submatrix of pivot columns, a basis of the column space."""
        _, pivots = self.rref()
        return self.take_columns(pivots)

    def take_columns(self, idx: Sequence[int]) -> "QMat":
        return QMat(self.nrows, len(idx), (tuple(row[j] for j in idx) for row in self.rows))


def hstack(mats: Sequence[QMat]) -> QMat:
    mats = list(mats)
    if not mats:
        raise ValueError("hstack of nothing")
    n = mats[0].nrows
    if any(m.nrows != n for m in mats):
        raise ValueError("hstack: row counts differ")
    rows = [sum((m.rows[i] for m in mats), ()) for i in range(n)]
    return QMat(n, sum(m.ncols for m in mats), rows)


def vstack(mats: Sequence[QMat]) -> QMat:
    mats = list(mats)
    if not mats:
        raise ValueError("vstack of nothing")
    c = mats[0].ncols
    if any(m.ncols != c for m in mats):
        raise ValueError("vstack: column counts differ")
    rows = [row for m in mats for row in m.rows]
    return QMat(sum(m.nrows for m in mats), c, rows)


def block_diag(mats: Sequence[QMat]) -> QMat:
    mats = list(mats)
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    out = [[ZERO] * nc for _ in range(nr)]
    r0 = c0 = 0
    for m in mats:
        for i, row in enumerate(m.rows):
            for j, x in enumerate(row):
                out[r0 + i][c0 + j] = x
        r0 += m.nrows
        c0 += m.ncols
    return QMat(nr, nc, out)


def from_columns(cols: Sequence[Sequence], nrows: int | None = None) -> QMat:
    cols = [tuple(c) for c in cols]
    if not cols:
        if nrows is None:
            raise ValueError("from_columns([]) needs an explicit nrows")
        return QMat.zeros(nrows, 0)
    return QMat(len(cols[0]), len(cols), zip(*cols))


# -- polynomials over Q, coefficient lists low degree first ------------


def poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p = list(p)
    q = poly_trim(list(q))
    if not q:
        raise ZeroDivisionError("poly division by zero")
    quo = [ZERO] * max(0, len(p) - len(q) + 1)
    while len(poly_trim(p)) >= len(q):
        p = poly_trim(p)
        shift = len(p) - len(q)
        c = p[-1] / q[-1]
        quo[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
    return poly_trim(quo), poly_trim(p)


def poly_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    a, b = poly_trim(list(p)), poly_trim(list(q))
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def poly_eval_mat(p: Sequence[Fraction], a: QMat) -> QMat:
    """p(a) by Horner; a square."""
    n = a.nrows
    out = QMat.zeros(n, n)
    for c in reversed(list(p)):
        out = out @ a
        if c != 0:
            out = out + QMat.identity(n).scale(c)
    return out


def minimal_polynomial(a: QMat) -> list[Fraction]:
    """Monic minimal polynomial of a square matrix, low degree first."""
    if a.nrows != a.ncols:
        raise ValueError("minimal_polynomial of a non-square matrix")
    n = a.nrows
    if n == 0:
        return [ONE]
    result = [ONE]
    for start in range(n):
        v = QMat.column([ONE if i == start else ZERO for i in range(n)])
        if poly_apply_vec(result, a, v).is_zero():
            continue
        local = _local_min_poly(a, v)
        g = poly_gcd(result, local)
        result = poly_divmod(poly_mul(result, local), g)[0]
        lead = result[-1]
        result = [x / lead for x in result]
    return result


def poly_apply_vec(p: Sequence[Fraction], a: QMat, v: QMat) -> QMat:
    out = QMat.zeros(v.nrows, 1)
    for c in reversed(list(p)):
        out = a @ out
        if c != 0:
            out = out + v.scale(c)
    return out


def _local_min_poly(a: QMat, v: QMat) -> list[Fraction]:
    """Least monic p with p(a) v = 0 via a Krylov chain."""
    basis: list[QMat] = []
    cur = v
    while True:
        if basis:
            coeffs = hstack(basis).solve(cur)
        else:
            coeffs = QMat.zeros(0, 1) if cur.is_zero() else None
        if coeffs is not None:
            p = [-coeffs.rows[i][0] for i in range(len(basis))] + [ONE]
            return poly_trim(p) or [ONE]
        basis.append(cur)
        cur = a @ cur
