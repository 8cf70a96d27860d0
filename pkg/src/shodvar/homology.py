"""Projective covers, minimal resolutions, Ext groups, Euler forms.

Projectives are built from the residue-class path basis: P(x) has at
vertex y the span of basis paths from x to y, and an arrow acts by
left composition followed by normal-form reduction. Injectives are
duals of the opposite-algebra projectives. All resolutions below are
minimal, so lengths are projective dimensions on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import QMat, from_columns
from .quiver import BoundQuiver, Path, opposite_quiver, path_algebra
from .rep import (
    Morphism,
    RepError,
    Representation,
    ShortExactSeq,
    direct_sum,
    factor_morphism,
    hom_basis,
    hom_dim,
    kernel,
    pushout,
    rep_from_dict,
    zero_morphism,
    zero_rep,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class HomologyError(Exception):
    pass


def simple_rep(q: BoundQuiver, v: str) -> Representation:
    return rep_from_dict(q, {v: 1}, {})


@lru_cache(maxsize=None)
def projective_data(q: BoundQuiver, x: str) -> tuple[Representation, tuple[tuple[Path, ...], ...]]:
    """P(x) together with its basis paths grouped by target vertex."""
    pa = path_algebra(q)
    per_vertex = tuple(
        tuple(p for p in pa.basis if p.source == x and p.target == y) for y in q.vertices
    )
    dims = tuple(len(ps) for ps in per_vertex)
    index = {}
    for vi, ps in enumerate(per_vertex):
        for k, p in enumerate(ps):
            index[p] = (vi, k)
    mats = []
    for a in q.arrows:
        s = q.vertex_index(a.source)
        t = q.vertex_index(a.target)
        cols = []
        for p in per_vertex[s]:
            col = [ZERO] * dims[t]
            for term, coeff in pa.reduce_left_multiple(a, p).items():
                vi, k = index[term]
                if vi != t:
                    raise HomologyError("reduced path lands at a wrong vertex")
                col[k] = coeff
            cols.append(col)
        mats.append(from_columns(cols, nrows=dims[t]))
    return Representation(q, dims, tuple(mats)), per_vertex


def projective_rep(q: BoundQuiver, x: str) -> Representation:
    return projective_data(q, x)[0]


def dual_rep(m: Representation) -> Representation:
    """The dual module over the opposite algebra: transposed arrow maps."""
    op = opposite_quiver(m.quiver)
    return Representation(op, m.dims, tuple(mat.transpose() for mat in m.mats))


def injective_rep(q: BoundQuiver, x: str) -> Representation:
    return dual_rep(projective_rep(opposite_quiver(q), x))


def hom_from_projective(q: BoundQuiver, x: str, m: Representation, v: QMat) -> Morphism:
    """The morphism P(x) -> m sending the lazy path e(x) to the column v."""
    proj, per_vertex = projective_data(q, x)
    blocks = []
    for vi, ps in enumerate(per_vertex):
        cols = [ (m.path_matrix(p) @ v).col(0) for p in ps ]
        blocks.append(from_columns(cols, nrows=m.dims[vi]))
    return Morphism(proj, m, tuple(blocks))


def radical_spans(m: Representation) -> list[QMat]:
    """Per-vertex spanning columns of rad m = sum of arrow images."""
    q = m.quiver
    spans = []
    for vi, v in enumerate(q.vertices):
        cols = []
        for a in q.in_arrows(v):
            mat = m.mat(a.name)
            cols.extend(mat.col(j) for j in range(mat.ncols))
        spans.append(from_columns(cols, nrows=m.dims[vi]))
    return spans


def top_dims(m: Representation) -> tuple[int, ...]:
    return tuple(
        m.dims[i] - sp.rank() for i, sp in enumerate(radical_spans(m))
    )


def proj_cover(m: Representation) -> tuple[Representation, Morphism]:
    """Minimal projective cover (P, epi)."""
    q = m.quiver
    if m.total_dim == 0:
        z = zero_rep(q)
        return z, zero_morphism(z, m)
    spans = radical_spans(m)
    summands = []
    lifts = []
    for vi, v in enumerate(q.vertices):
        rad = spans[vi]
        _, pivots = rad.transpose().rref()
        pivset = set(pivots)
        for j in range(m.dims[vi]):
            if j not in pivset:
                summands.append(v)
                lifts.append(QMat.column([ONE if r == j else ZERO for r in range(m.dims[vi])]))
    parts = [projective_rep(q, v) for v in summands]
    total, _, projs = direct_sum(parts)
    covers = [hom_from_projective(q, v, m, lift) for v, lift in zip(summands, lifts)]
    epi = None
    for f, pr in zip(covers, projs):
        term = f @ pr
        epi = term if epi is None else epi + term
    assert epi is not None
    if not epi.is_surjective():
        raise HomologyError("projective cover failed to be surjective")
    return total, epi


@dataclass(frozen=True)
class Resolution:
    """Minimal projective resolution ... -> P1 -> P0 -> module -> 0."""

    module: Representation
    projectives: tuple[Representation, ...]
    maps: tuple[Morphism, ...]  # maps[i]: projectives[i+1] -> projectives[i]
    augment: Morphism | None

    def __post_init__(self):
        if not self.projectives:
            if self.module.total_dim != 0:
                raise HomologyError("empty resolution of a nonzero module")
            return
        assert self.augment is not None
        if not self.augment.is_surjective():
            raise HomologyError("augmentation not surjective")
        prev = self.augment
        for d in self.maps:
            comp = prev @ d
            if not comp.is_zero():
                raise HomologyError("resolution differentials do not compose to zero")
            for bd, bp in zip(d.blocks, prev.blocks):
                if bd.rank() != bp.nullspace().ncols:
                    raise HomologyError("resolution not exact")
            prev = d
        last = self.maps[-1] if self.maps else self.augment
        if not last.is_injective():
            raise HomologyError("resolution does not terminate")

    @property
    def length(self) -> int:
        """Projective dimension of the module; -1 for the zero module."""
        return len(self.projectives) - 1


@lru_cache(maxsize=None)
def min_proj_resolution(m: Representation) -> Resolution:
    q = m.quiver
    if m.total_dim == 0:
        return Resolution(m, (), (), None)
    guard = len(q.vertices) + 2
    p0, eps = proj_cover(m)
    projectives = [p0]
    maps: list[Morphism] = []
    current_eps = eps
    for _ in range(guard):
        ker, incl = kernel(current_eps)
        if ker.total_dim == 0:
            return Resolution(m, tuple(projectives), tuple(maps), eps)
        p, cover = proj_cover(ker)
        maps.append(incl @ cover)
        projectives.append(p)
        current_eps = cover
    raise HomologyError("resolution exceeded the vertex-count bound")


def proj_dim(m: Representation) -> int:
    return min_proj_resolution(m).length


def inj_dim(m: Representation) -> int:
    return proj_dim(dual_rep(m))


@lru_cache(maxsize=None)
def global_dim(q: BoundQuiver) -> int:
    return max(proj_dim(simple_rep(q, v)) for v in q.vertices)


# -- ext groups ----------------------------------------------------------


def _flat_of_morphism(f: Morphism) -> tuple[Fraction, ...]:
    return tuple(x for b in f.blocks for x in b.flat())


def _rank_of_composites(basis, d: Morphism) -> int:
    cols = [_flat_of_morphism(f @ d) for f in basis]
    if not cols:
        return 0
    return from_columns(cols, nrows=len(cols[0])).rank()


def ext_dim(m: Representation, n: Representation, degree: int) -> int:
    """dim Ext^degree(m, n), from the minimal projective resolution of m."""
    if degree < 0:
        raise ValueError("negative Ext degree")
    if degree == 0:
        return hom_dim(m, n)
    res = min_proj_resolution(m)
    if degree > res.length:
        return 0
    basis_here = hom_basis(res.projectives[degree], n)
    out_rank = 0
    if degree < res.length:
        out_rank = _rank_of_composites(basis_here, res.maps[degree])
    basis_prev = hom_basis(res.projectives[degree - 1], n)
    in_rank = _rank_of_composites(basis_prev, res.maps[degree - 1])
    return len(basis_here) - out_rank - in_rank


def ext_vanishes_from(m: Representation, n: Representation, start: int) -> bool:
    """Whether Ext^k(m, n) = 0 for every k >= start (finite check: k <= pd m)."""
    res = min_proj_resolution(m)
    return all(ext_dim(m, n, k) == 0 for k in range(start, res.length + 1))


# -- euler form ----------------------------------------------------------


@lru_cache(maxsize=None)
def euler_matrix(q: BoundQuiver) -> tuple[tuple[int, ...], ...]:
    """C[x][y] = sum over k of (-1)^k dim Ext^k(S(x), S(y))."""
    rows = []
    for x in q.vertices:
        sx = simple_rep(q, x)
        bound = min_proj_resolution(sx).length
        row = []
        for y in q.vertices:
            sy = simple_rep(q, y)
            val = sum((-1) ** k * ext_dim(sx, sy, k) for k in range(bound + 1))
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


def euler_pair(q: BoundQuiver, d1, d2) -> int:
    c = euler_matrix(q)
    n = len(q.vertices)
    if len(d1) != n or len(d2) != n:
        raise ValueError("dimension vector length mismatch")
    return sum(d1[i] * c[i][j] * d2[j] for i in range(n) for j in range(n))


def chi(q: BoundQuiver, d) -> int:
    return euler_pair(q, d, d)


# -- extensions realized as short exact sequences -------------------------


def ext1_cocycle_data(v: Representation, u: Representation):
    """(syzygy inclusion, cover, cocycle representatives) for Ext^1(v, u).

    The representatives are morphisms syzygy -> u whose classes modulo
    restrictions of Hom(P0, u) form a basis of Ext^1(v, u).
    """
    if v.total_dim == 0:
        z = zero_rep(v.quiver)
        return zero_morphism(z, z), zero_morphism(z, v), ()
    p0, eps = proj_cover(v)
    omega, incl = kernel(eps)
    cocycles = hom_basis(omega, u)
    if not cocycles:
        return incl, eps, ()
    restricted = [_flat_of_morphism(f @ incl) for f in hom_basis(p0, u)]
    width = len(_flat_of_morphism(cocycles[0]))
    rmat = from_columns(restricted, nrows=width) if restricted else QMat.zeros(width, 0)
    cols = [rmat.col(j) for j in range(rmat.ncols)]
    cols.extend(_flat_of_morphism(f) for f in cocycles)
    joint = from_columns(cols, nrows=width)
    _, pivots = joint.rref()
    reps = []
    for p in pivots:
        if p >= rmat.ncols:
            reps.append(cocycles[p - rmat.ncols])
    return incl, eps, tuple(reps)


def realize_extension(
    incl: Morphism, eps: Morphism, cocycle: Morphism
) -> ShortExactSeq:
    """Middle term of the extension class of a cocycle syzygy -> u.

    Pushes 0 -> syzygy -> P0 -> v -> 0 out along the cocycle. The map
    [0, eps] on u + P0 kills the pushout kernel, so it descends.
    """
    _, from_u, from_p0 = pushout(cocycle, incl)
    _, _, projs = direct_sum([cocycle.target, incl.target])
    to_middle = (from_u @ projs[0]) + (from_p0 @ projs[1])
    to_v = factor_morphism(eps @ projs[1], through_proj=to_middle)
    return ShortExactSeq(from_u, to_v)


def ext1_classes(v: Representation, u: Representation) -> tuple[ShortExactSeq, ...]:
    """Basis of Ext^1(v, u) realized as short exact sequences 0->u->E->v->0."""
    incl, eps, reps = ext1_cocycle_data(v, u)
    return tuple(realize_extension(incl, eps, f) for f in reps)
