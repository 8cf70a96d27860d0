"""Finite-dimensional representations of a bound quiver over Q.

A representation assigns a rational vector space to every vertex and a
matrix to every arrow, satisfying the relations exactly. Everything
here is exact; decompositions and isomorphism tests either certify
their answer or raise.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import (
    QMat,
    block_diag,
    from_columns,
    minimal_polynomial,
    poly_divmod,
    poly_eval_mat,
    poly_gcd,
    poly_mul,
)
from .quiver import BoundQuiver, Path, parse_quiver_file

ZERO = Fraction(0)
ONE = Fraction(1)


class RepError(Exception):
    """Structural problem with a representation or morphism."""


class SplitnessError(RepError):
    """Decomposition got stuck on an endomorphism ring it cannot split.

    Either End(M)/rad is a division algebra of dimension > 1 over Q
    (the module is indecomposable but not absolutely so), or no
    splitting element was found within the candidate budget. The
    message carries the dimensions involved.
    """


@dataclass(frozen=True)
class Representation:
    quiver: BoundQuiver
    dims: tuple[int, ...]
    mats: tuple[QMat, ...]

    def __post_init__(self):
        q = self.quiver
        if len(self.dims) != len(q.vertices):
            raise RepError("dims has %d entries for %d vertices" % (len(self.dims), len(q.vertices)))
        if any(d < 0 for d in self.dims):
            raise RepError("negative dimension")
        if len(self.mats) != len(q.arrows):
            raise RepError("mats has %d entries for %d arrows" % (len(self.mats), len(q.arrows)))
        for a, m in zip(q.arrows, self.mats):
            want = (self.dims[q.vertex_index(a.target)], self.dims[q.vertex_index(a.source)])
            if m.shape != want:
                raise RepError("matrix for arrow %s has shape %s, wanted %s" % (a.name, m.shape, want))
        for rel in q.relations:
            acc = None
            for coeff, p in rel.terms:
                term = self.path_matrix(p).scale(coeff)
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                raise RepError("relation %s is not satisfied" % rel.display())

    def dim(self, v: str) -> int:
        return self.dims[self.quiver.vertex_index(v)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def mat(self, arrow_name: str) -> QMat:
        return self.mats[self.quiver.arrow_index(arrow_name)]

    def path_matrix(self, p: Path) -> QMat:
        res = QMat.identity(self.dim(p.source))
        for name in reversed(p.arrows):
            res = self.mat(name) @ res
        return res


def rep_from_dict(q: BoundQuiver, dims: dict[str, int], mats: dict[str, QMat]) -> Representation:
    dtuple = tuple(dims.get(v, 0) for v in q.vertices)
    mlist = []
    for a in q.arrows:
        m = mats.get(a.name)
        if m is None:
            m = QMat.zeros(dtuple[q.vertex_index(a.target)], dtuple[q.vertex_index(a.source)])
        mlist.append(m)
    return Representation(q, dtuple, tuple(mlist))


def zero_rep(q: BoundQuiver) -> Representation:
    return rep_from_dict(q, {}, {})


@dataclass(frozen=True)
class Morphism:
    source: Representation
    target: Representation
    blocks: tuple[QMat, ...]

    def __post_init__(self):
        if self.source.quiver != self.target.quiver:
            raise RepError("morphism between representations of different quivers")
        q = self.source.quiver
        if len(self.blocks) != len(q.vertices):
            raise RepError("wrong number of blocks")
        for i, b in enumerate(self.blocks):
            if b.shape != (self.target.dims[i], self.source.dims[i]):
                raise RepError("block %s has shape %s" % (q.vertices[i], b.shape))
        for a in q.arrows:
            s = q.vertex_index(a.source)
            t = q.vertex_index(a.target)
            lhs = self.target.mat(a.name) @ self.blocks[s]
            rhs = self.blocks[t] @ self.source.mat(a.name)
            if lhs != rhs:
                raise RepError("blocks do not commute with arrow %s" % a.name)

    def block(self, v: str) -> QMat:
        return self.blocks[self.source.quiver.vertex_index(v)]

    def __matmul__(self, other: "Morphism") -> "Morphism":
        if other.target != self.source:
            raise RepError("composition mismatch")
        return Morphism(
            other.source, self.target,
            tuple(b1 @ b2 for b1, b2 in zip(self.blocks, other.blocks)),
        )

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + other.scale(-1)

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, tuple(b.scale(c) for b in self.blocks))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def is_injective(self) -> bool:
        return all(b.rank() == b.ncols for b in self.blocks)

    def is_surjective(self) -> bool:
        return all(b.rank() == b.nrows for b in self.blocks)

    def is_isomorphism(self) -> bool:
        return all(b.is_invertible() for b in self.blocks)

    def inverse(self) -> "Morphism":
        inv = []
        for b in self.blocks:
            bi = b.inverse()
            if bi is None:
                raise RepError("inverse of a non-isomorphism")
            inv.append(bi)
        return Morphism(self.target, self.source, tuple(inv))

    def total_matrix(self) -> QMat:
        return block_diag(list(self.blocks))


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, tuple(QMat.identity(d) for d in m.dims))


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(m, n, tuple(QMat.zeros(dn, dm) for dm, dn in zip(m.dims, n.dims)))


# -- hom spaces ---------------------------------------------------------


@lru_cache(maxsize=None)
def hom_basis(m: Representation, n: Representation) -> tuple[Morphism, ...]:
    """Echelonized basis of Hom(m, n), deterministic order."""
    q = m.quiver
    if q != n.quiver:
        raise RepError("Hom between representations of different quivers")
    offs = []
    total = 0
    for i in range(len(q.vertices)):
        offs.append(total)
        total += n.dims[i] * m.dims[i]
    rows = []
    for a in q.arrows:
        s = q.vertex_index(a.source)
        t = q.vertex_index(a.target)
        na, ma = n.mat(a.name), m.mat(a.name)
        # equation block: n_a @ f_s - f_t @ m_a = 0, one row per entry
        for p in range(n.dims[t]):
            for qq in range(m.dims[s]):
                row = [ZERO] * total
                for r in range(n.dims[s]):
                    row[offs[s] + r * m.dims[s] + qq] += na.rows[p][r]
                for r in range(m.dims[t]):
                    row[offs[t] + p * m.dims[t] + r] -= ma.rows[r][qq]
                rows.append(row)
    if total == 0:
        return ()
    if rows:
        ker = QMat.from_rows(rows, ncols=total).nullspace()
    else:
        ker = QMat.identity(total)
    out = []
    for j in range(ker.ncols):
        col = ker.col(j)
        blocks = []
        for i in range(len(q.vertices)):
            chunk = col[offs[i] : offs[i] + n.dims[i] * m.dims[i]]
            blocks.append(
                QMat(n.dims[i], m.dims[i], (chunk[r * m.dims[i] : (r + 1) * m.dims[i]] for r in range(n.dims[i])))
            )
        out.append(Morphism(m, n, tuple(blocks)))
    return tuple(out)


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


def end_dim(m: Representation) -> int:
    return len(hom_basis(m, m))


# -- subs, quotients, kernels -------------------------------------------


def sub_rep(m: Representation, spans: Sequence[QMat]) -> tuple[Representation, Morphism]:
    """Subrepresentation spanned per vertex by the given column spans.

    The spans must be arrow-stable; otherwise RepError. Returns the
    subrepresentation with its inclusion.
    """
    q = m.quiver
    bases = []
    for i, sp in enumerate(spans):
        if sp.nrows != m.dims[i]:
            raise RepError("span at %s has %d rows, vertex has dim %d" % (q.vertices[i], sp.nrows, m.dims[i]))
        bases.append(sp.column_space())
    mats = []
    for a in q.arrows:
        s = q.vertex_index(a.source)
        t = q.vertex_index(a.target)
        img = m.mat(a.name) @ bases[s]
        y = bases[t].solve(img)
        if y is None:
            raise RepError("spans are not stable under arrow %s" % a.name)
        mats.append(y)
    sub = Representation(q, tuple(b.ncols for b in bases), tuple(mats))
    incl = Morphism(sub, m, tuple(bases))
    return sub, incl


def quotient_rep(m: Representation, spans: Sequence[QMat]) -> tuple[Representation, Morphism]:
    """Quotient of m by the arrow-stable subspace spanned per vertex."""
    q = m.quiver
    _, incl = sub_rep(m, spans)
    projs = []
    sections = []
    for i in range(len(q.vertices)):
        b = incl.blocks[i]
        # complete the subspace basis by standard vectors at free coords
        _, pivots = b.transpose().rref()
        pivset = set(pivots)
        comp = [j for j in range(m.dims[i]) if j not in pivset]
        cols = [b.col(k) for k in range(b.ncols)] + [
            tuple(ONE if r == j else ZERO for r in range(m.dims[i])) for j in comp
        ]
        full = from_columns(cols, nrows=m.dims[i])
        inv = full.inverse()
        if inv is None:
            raise RepError("failed to complete basis")
        proj = QMat(len(comp), m.dims[i], (inv.rows[b.ncols + r] for r in range(len(comp))))
        section = from_columns([full.col(b.ncols + r) for r in range(len(comp))], nrows=m.dims[i])
        projs.append(proj)
        sections.append(section)
    mats = []
    for a in q.arrows:
        s = q.vertex_index(a.source)
        t = q.vertex_index(a.target)
        mats.append(projs[t] @ m.mat(a.name) @ sections[s])
    quo = Representation(q, tuple(p.nrows for p in projs), tuple(mats))
    proj = Morphism(m, quo, tuple(projs))
    return quo, proj


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    spans = [b.nullspace() for b in f.blocks]
    return sub_rep(f.source, spans)


def image(f: Morphism) -> tuple[Representation, Morphism]:
    spans = [b.column_space() for b in f.blocks]
    return sub_rep(f.target, spans)


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    spans = [b.column_space() for b in f.blocks]
    return quotient_rep(f.target, spans)


def factor_morphism(
    f: Morphism,
    through_incl: Morphism | None = None,
    through_proj: Morphism | None = None,
) -> Morphism:
    """Factor f through an inclusion into its target or a quotient of its source.

    With through_incl i: S -> target(f), returns g with i @ g = f.
    With through_proj p: source(f) -> Q, returns g with g @ p = f.
    Raises RepError when no factorization exists.
    """
    if (through_incl is None) == (through_proj is None):
        raise RepError("give exactly one of through_incl / through_proj")
    if through_incl is not None:
        if through_incl.target != f.target:
            raise RepError("inclusion target mismatch")
        blocks = []
        for bi, bf in zip(through_incl.blocks, f.blocks):
            g = bi.solve(bf)
            if g is None:
                raise RepError("morphism does not factor through the inclusion")
            blocks.append(g)
        return Morphism(f.source, through_incl.source, tuple(blocks))
    assert through_proj is not None
    if through_proj.source != f.source:
        raise RepError("projection source mismatch")
    blocks = []
    for bp, bf in zip(through_proj.blocks, f.blocks):
        gt = bp.transpose().solve(bf.transpose())
        if gt is None:
            raise RepError("morphism does not factor through the quotient")
        blocks.append(gt.transpose())
    return Morphism(through_proj.target, f.target, tuple(blocks))


# -- direct sums, pushouts, pullbacks -----------------------------------


def direct_sum(parts: Sequence[Representation]) -> tuple[Representation, tuple[Morphism, ...], tuple[Morphism, ...]]:
    """(sum, inclusions, projections); the empty sum is the zero representation."""
    parts = list(parts)
    if not parts:
        raise RepError("direct_sum of nothing needs a quiver; use zero_rep")
    q = parts[0].quiver
    if any(p.quiver != q for p in parts):
        raise RepError("direct_sum across different quivers")
    nv = len(q.vertices)
    dims = tuple(sum(p.dims[i] for p in parts) for i in range(nv))
    mats = tuple(
        block_diag([p.mats[k] for p in parts]) for k in range(len(q.arrows))
    )
    total = Representation(q, dims, mats)
    incls = []
    projs = []
    for idx, p in enumerate(parts):
        iblocks = []
        pblocks = []
        for i in range(nv):
            before = sum(pp.dims[i] for pp in parts[:idx])
            rows = []
            for r in range(dims[i]):
                rows.append(tuple(ONE if r - before == c else ZERO for c in range(p.dims[i])))
            inc = QMat(dims[i], p.dims[i], rows)
            iblocks.append(inc)
            pblocks.append(inc.transpose())
        incls.append(Morphism(p, total, tuple(iblocks)))
        projs.append(Morphism(total, p, tuple(pblocks)))
    return total, tuple(incls), tuple(projs)


def pushout(f: Morphism, g: Morphism) -> tuple[Representation, Morphism, Morphism]:
    """Pushout of B <-f- A -g-> C; returns (P, B -> P, C -> P)."""
    if f.source != g.source:
        raise RepError("pushout needs a common source")
    total, incls, _ = direct_sum([f.target, g.target])
    w = (incls[0] @ f) - (incls[1] @ g)
    p, proj = cokernel(w)
    return p, proj @ incls[0], proj @ incls[1]


def pullback(f: Morphism, g: Morphism) -> tuple[Representation, Morphism, Morphism]:
    """Pullback of B -f-> D <-g- C; returns (P, P -> B, P -> C)."""
    if f.target != g.target:
        raise RepError("pullback needs a common target")
    total, _, projs = direct_sum([f.source, g.source])
    w = (f @ projs[0]) - (g @ projs[1])
    p, incl = kernel(w)
    return p, projs[0] @ incl, projs[1] @ incl


@dataclass(frozen=True)
class ShortExactSeq:
    """0 -> sub -incl-> middle -proj-> quo -> 0, validated on construction."""

    incl: Morphism
    proj: Morphism

    def __post_init__(self):
        if self.incl.target != self.proj.source:
            raise RepError("inclusion target and projection source differ")
        if not self.incl.is_injective():
            raise RepError("left map is not injective")
        if not self.proj.is_surjective():
            raise RepError("right map is not surjective")
        if not (self.proj @ self.incl).is_zero():
            raise RepError("composition is nonzero")
        for bi, bp in zip(self.incl.blocks, self.proj.blocks):
            if bi.rank() != bp.nullspace().ncols:
                raise RepError("not exact in the middle")

    @property
    def sub(self) -> Representation:
        return self.incl.source

    @property
    def middle(self) -> Representation:
        return self.incl.target

    @property
    def quo(self) -> Representation:
        return self.proj.target


# -- isomorphism and decomposition --------------------------------------


def find_isomorphism(m: Representation, n: Representation, seed: int = 0, tries: int = 200) -> Morphism | None:
    """An explicit isomorphism m -> n found by searching Hom(m, n), else None.

    For indecomposables this is complete: some basis element of a
    nonzero Hom between isomorphic indecomposables is invertible, since
    the non-isomorphisms form a proper subspace.
    """
    if m.dims != n.dims:
        return None
    if m.total_dim == 0:
        return zero_morphism(m, n)
    basis = hom_basis(m, n)
    if not basis:
        return None
    for f in basis:
        if f.is_isomorphism():
            return f
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in basis]
        f = basis[0].scale(coeffs[0])
        for c, g in zip(coeffs[1:], basis[1:]):
            f = f + g.scale(c)
        if f.is_isomorphism():
            return f
    return None


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> bool:
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    if hom_dim(m, n) != hom_dim(n, m) or end_dim(m) != end_dim(n):
        return False
    if find_isomorphism(m, n, seed=seed) is not None:
        return True
    # exact fallback: compare indecomposable summand multisets
    ms = list(decompose(m, seed=seed))
    ns = list(decompose(n, seed=seed))
    if len(ms) != len(ns):
        return False
    for x in ms:
        hit = None
        for j, y in enumerate(ns):
            if x.dims == y.dims and find_isomorphism(x, y, seed=seed) is not None:
                hit = j
                break
        if hit is None:
            return False
        ns.pop(hit)
    return True


def _min_poly_endo(f: Morphism) -> list[Fraction]:
    poly = [ONE]
    for b in f.blocks:
        if b.nrows == 0:
            continue
        local = minimal_polynomial(b)
        g = poly_gcd(poly, local)
        poly = poly_divmod(poly_mul(poly, local), g)[0]
        lead = poly[-1]
        poly = [c / lead for c in poly]
    return poly


def _factor_poly(poly: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Irreducible monic factors with multiplicities, via sympy."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(poly))
    _, factors = sympy.Poly(expr, x, domain="QQ").factor_list()
    out = []
    for fac, mult in factors:
        cs = fac.all_coeffs()  # high degree first
        cs = [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in cs]
        cs.reverse()
        lead = cs[-1]
        cs = [c / lead for c in cs]
        out.append((cs, int(mult)))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def _poly_of_endo(poly: Sequence[Fraction], f: Morphism) -> Morphism:
    src = f.source
    blocks = tuple(poly_eval_mat(list(poly), b) for b in f.blocks)
    return Morphism(src, src, blocks)


def _endo_power(f: Morphism, e: int) -> Morphism:
    out = identity_morphism(f.source)
    for _ in range(e):
        out = out @ f
    return out


def _candidate_endos(ends: Sequence[Morphism], seed: int, extra: int = 120):
    seen = set()

    def emit(f: Morphism):
        key = tuple(b.flat() for b in f.blocks)
        if key not in seen:
            seen.add(key)
            yield f

    for f in ends:
        yield from emit(f)
    for i, f in enumerate(ends):
        for j, g in enumerate(ends):
            if i != j:
                yield from emit(f @ g)
    for i, f in enumerate(ends):
        for g in ends[i + 1 :]:
            yield from emit(f + g)
            yield from emit(f - g)
    rng = random.Random(seed)
    for _ in range(extra):
        f = ends[0].scale(rng.randint(-9, 9))
        for g in ends[1:]:
            f = f + g.scale(rng.randint(-9, 9))
        yield from emit(f)


def _primary_split(m: Representation, f: Morphism, factors) -> list[Representation] | None:
    parts = []
    for poly, mult in factors:
        u = _endo_power(_poly_of_endo(poly, f), mult)
        part, _ = kernel(u)
        if part.total_dim == 0 or part.total_dim == m.total_dim:
            return None
        parts.append(part)
    if sum(p.total_dim for p in parts) != m.total_dim:
        return None
    return parts


def _trace_radical_coords(ends: Sequence[Morphism]) -> QMat:
    """Coordinates (in the given basis) of rad End, via the trace form.

    Over Q the radical is exactly the kernel of (x, y) -> tr(xy) taken
    on the faithful action on the module: the kernel is a two-sided
    ideal all of whose elements have vanishing power traces, hence nil.
    """
    k = len(ends)
    mats = [f.total_matrix() for f in ends]
    gram = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = mats[i] @ mats[j]
            row.append(sum(prod.rows[r][r] for r in range(prod.nrows)))
        gram.append(row)
    return QMat.from_rows(gram, ncols=k).nullspace()


class _SemisimpleQuotient:
    """End(M) / rad End(M) with explicit structure constants."""

    def __init__(self, ends: Sequence[Morphism], rad: QMat):
        self.ends = list(ends)
        k = len(ends)
        piv = set(rad.transpose().rref()[1])
        self.s_idx = [i for i in range(k) if i not in piv]
        self.dim = len(self.s_idx)
        tm = ends[0].total_matrix()
        self._flat = from_columns([f.total_matrix().flat() for f in ends], nrows=tm.nrows * tm.ncols)
        # change of basis: columns are s-basis coords then rad coords
        cols = []
        for i in self.s_idx:
            cols.append(tuple(ONE if j == i else ZERO for j in range(k)))
        for c in range(rad.ncols):
            cols.append(rad.col(c))
        self._tosr = from_columns(cols, nrows=k).inverse()
        if self._tosr is None:
            raise RepError("radical complement is not a complement")

    def coords_of(self, f: Morphism) -> QMat:
        v = QMat.column(list(f.total_matrix().flat()))
        sol = self._flat.solve(v)
        if sol is None:
            raise RepError("endomorphism outside End basis")
        return sol

    def project(self, f: Morphism) -> tuple[Fraction, ...]:
        """Coordinates of the coset of f in the s-basis."""
        full = self._tosr @ self.coords_of(f)
        return tuple(full.rows[i][0] for i in range(self.dim))

    def rep_of(self, coords: Sequence[Fraction]) -> Morphism:
        out = None
        for c, i in zip(coords, self.s_idx):
            term = self.ends[i].scale(c)
            out = term if out is None else out + term
        assert out is not None
        return out

    def mult(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return self.project(self.rep_of(a) @ self.rep_of(b))

    def identity_coords(self) -> tuple[Fraction, ...]:
        src = self.ends[0].source
        return self.project(identity_morphism(src))

    def left_mult_matrix(self, a: Sequence[Fraction]) -> QMat:
        cols = []
        for i in range(self.dim):
            basis = [ZERO] * self.dim
            basis[i] = ONE
            cols.append(self.mult(a, tuple(basis)))
        return from_columns(cols, nrows=self.dim)


def _semisimple_idempotent(ss: _SemisimpleQuotient, seed: int) -> tuple[Fraction, ...] | None:
    """A nontrivial idempotent of the semisimple quotient, or None.

    Looks for an element with reducible minimal polynomial; a proper
    factor evaluated at it is a zero divisor u, and any solution e of
    the linear system e in S*u, u*e = u is idempotent.
    """
    one = ss.identity_coords()
    cand: list[tuple[Fraction, ...]] = []
    for i in range(ss.dim):
        v = [ZERO] * ss.dim
        v[i] = ONE
        cand.append(tuple(v))
    base = list(cand)
    for a in base:
        for b in base:
            cand.append(ss.mult(a, b))
    rng = random.Random(seed)
    for _ in range(80):
        cand.append(tuple(Fraction(rng.randint(-9, 9)) for _ in range(ss.dim)))
    for a in cand:
        la = ss.left_mult_matrix(a)
        if la.nrows == 0:
            continue
        mu = minimal_polynomial(la)
        factors = _factor_poly(mu)
        if len(factors) == 1 and factors[0][1] == 1:
            continue  # irreducible: Q[a] is a field, no zero divisor here
        f = factors[0][0]
        u = _apply_poly_coords(ss, f, a)
        if all(c == 0 for c in u):
            continue
        e = _solve_idempotent(ss, u)
        if e is None:
            continue
        if all(c == 0 for c in e):
            continue
        if all(x == y for x, y in zip(e, one)):
            continue
        return e
    return None


def _apply_poly_coords(ss: _SemisimpleQuotient, poly: Sequence[Fraction], a: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = tuple(ZERO for _ in range(ss.dim))
    one = ss.identity_coords()
    for c in reversed(list(poly)):
        out = ss.mult(a, out)
        if c != 0:
            out = tuple(x + c * y for x, y in zip(out, one))
    return out


def _solve_idempotent(ss: _SemisimpleQuotient, u: tuple[Fraction, ...]) -> tuple[Fraction, ...] | None:
    # e = x*u with u*e = u is linear in x, and any solution is idempotent:
    # e*e = x*(u*e) = x*u = e
    lu = ss.left_mult_matrix(u)
    cols = []
    for i in range(ss.dim):
        basis = [ZERO] * ss.dim
        basis[i] = ONE
        cols.append(ss.mult(tuple(basis), u))
    ru = from_columns(cols, nrows=ss.dim)  # x -> x*u
    # condition: u * (x*u) = u
    system = lu @ ru
    rhs = QMat.column(list(u))
    x = system.solve(rhs)
    if x is None:
        return None
    e = ru @ x
    ec = tuple(e.rows[i][0] for i in range(ss.dim))
    if ss.mult(ec, ec) != ec:
        return None
    return ec


def _lift_idempotent(ss: _SemisimpleQuotient, ecoords: tuple[Fraction, ...]) -> Morphism:
    # x -> 3x^2 - 2x^3 squares the rad-depth of x^2 - x; rad is nilpotent
    x = ss.rep_of(ecoords)
    for _ in range(60):
        if (x @ x).blocks == x.blocks:
            return x
        xx = x @ x
        x = (xx.scale(3)) - (xx @ x).scale(2)
    raise SplitnessError("idempotent lift did not converge")


def decompose(m: Representation, seed: int = 0) -> tuple[Representation, ...]:
    """Indecomposable summands of m, with repetition, in a deterministic order.

    Splitting is certified at every step: either a polynomial in an
    endomorphism splits m, or the quotient End(m)/rad is computed and
    shown one-dimensional (m indecomposable), or an idempotent of the
    quotient is lifted. SplitnessError reports the remaining case of a
    higher-dimensional division algebra (or an exhausted search).
    """
    if m.total_dim == 0:
        return ()
    ends = hom_basis(m, m)
    if len(ends) == 1:
        return (m,)
    for f in _candidate_endos(ends, seed):
        mu = _min_poly_endo(f)
        factors = _factor_poly(mu)
        if len(factors) >= 2:
            parts = _primary_split(m, f, factors)
            if parts:
                out = []
                for p in parts:
                    out.extend(decompose(p, seed=seed))
                return _sorted_summands(out)
    rad = _trace_radical_coords(ends)
    s_dim = len(ends) - rad.ncols
    if s_dim == 1:
        return (m,)
    ss = _SemisimpleQuotient(ends, rad)
    ecoords = _semisimple_idempotent(ss, seed)
    if ecoords is None:
        raise SplitnessError(
            "End/rad has dimension %d over Q and no splitting element was found; "
            "the endomorphism ring does not split over Q (or the search budget "
            "was exhausted)" % s_dim
        )
    e = _lift_idempotent(ss, ecoords)
    keri, _ = kernel(e)
    ime, _ = image(e)
    if keri.total_dim == 0 or ime.total_dim == 0:
        raise SplitnessError("lifted idempotent is trivial")
    if keri.total_dim + ime.total_dim != m.total_dim:
        raise SplitnessError("idempotent split lost dimensions")
    out = []
    out.extend(decompose(keri, seed=seed))
    out.extend(decompose(ime, seed=seed))
    return _sorted_summands(out)


def _sorted_summands(parts: Sequence[Representation]) -> tuple[Representation, ...]:
    return tuple(sorted(parts, key=lambda p: (p.total_dim, p.dims, tuple(tuple(r) for mm in p.mats for r in mm.rows))))


def decompose_multiset(m: Representation, seed: int = 0) -> list[tuple[Representation, int]]:
    """Indecomposable summands grouped up to isomorphism."""
    parts = decompose(m, seed=seed)
    groups: list[tuple[Representation, int]] = []
    for p in parts:
        for i, (g, c) in enumerate(groups):
            if is_isomorphic(p, g, seed=seed):
                groups[i] = (g, c + 1)
                break
        else:
            groups.append((p, 1))
    return groups


# -- module file io ------------------------------------------------------

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_module_text(text: str, q: BoundQuiver) -> Representation:
    dims: tuple[int, ...] | None = None
    mats: dict[str, QMat] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise RepError("line %d: expected 'keyword: ...'" % line_no)
        key, body = line.split(":", 1)
        key = key.strip()
        body = body.strip()
        if key == "quiver":
            continue  # consumed by parse_module_file
        if key == "dims":
            vals = body.split()
            if len(vals) != len(q.vertices):
                raise RepError("line %d: %d dims for %d vertices" % (line_no, len(vals), len(q.vertices)))
            dims = tuple(int(v) for v in vals)
        elif key.startswith("arrow"):
            parts = key.split()
            if len(parts) != 2:
                raise RepError("line %d: expected 'arrow NAME: ...'" % line_no)
            aname = parts[1]
            if dims is None:
                raise RepError("line %d: arrow before dims" % line_no)
            a = q.arrow(aname)
            nr = dims[q.vertex_index(a.target)]
            nc = dims[q.vertex_index(a.source)]
            rows = [r.strip() for r in body.split(";")]
            entries = [[e for e in r.split()] for r in rows if r]
            if len(entries) != nr or any(len(r) != nc for r in entries):
                raise RepError(
                    "line %d: matrix for arrow %s must be %d x %d" % (line_no, aname, nr, nc)
                )
            for r in entries:
                for e in r:
                    if not _RAT_RE.match(e):
                        raise RepError("line %d: bad entry %r" % (line_no, e))
            mats[aname] = QMat(nr, nc, ((Fraction(e) for e in r) for r in entries))
        else:
            raise RepError("line %d: unknown directive %r" % (line_no, key))
    if dims is None:
        raise RepError("module file has no dims line")
    return rep_from_dict(q, dict(zip(q.vertices, dims)), mats)


def parse_module_file(path) -> Representation:
    import os

    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    qref = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("quiver:"):
            qref = line.split(":", 1)[1].strip()
            break
    if qref is None:
        raise RepError("module file does not name its quiver file")
    qpath = os.path.join(os.path.dirname(os.path.abspath(str(path))), qref)
    q = parse_quiver_file(qpath)
    return parse_module_text(text, q)


def serialize_module(m: Representation, quiver_ref: str) -> str:
    lines = ["quiver: %s" % quiver_ref, "dims: " + " ".join(str(d) for d in m.dims)]
    for a, mat in zip(m.quiver.arrows, m.mats):
        if mat.nrows == 0 or mat.ncols == 0 or mat.is_zero():
            continue
        body = " ; ".join(" ".join(str(x) for x in row) for row in mat.rows)
        lines.append("arrow %s: %s" % (a.name, body))
    return "\n".join(lines) + "\n"
