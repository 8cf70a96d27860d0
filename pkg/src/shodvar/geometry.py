"""Module-variety geometry over a bound quiver algebra.

Tangent spaces of the relation scheme, orbit dimensions, the
degeneration order with witnessed edges, and the regularity
certificates for boundary orbits of tilting-summand orbit closures.

Two standing surrogates, disclosed in every report: tangent dimensions
are those of the scheme cut out by the relation entries, an upper
bound for the reduced variety, and they only ever feed the left side
of "<=" obligations; tangents of orbit closures are never computed
directly, so regularity verdicts rest on certified inequality chains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import QMat
from .quiver import BoundQuiver
from .rep import (
    Representation,
    ShortExactSeq,
    decompose,
    direct_sum,
    end_dim,
    hom_dim,
    is_isomorphic,
)
from .homology import (
    euler_pair,
    chi,
    ext1_cocycle_data,
    ext_dim,
    global_dim,
    realize_extension,
)
from .shod import (
    ModuleCatalog,
    TiltingModule,
    bdim_of_sum,
    ext_of_sums,
    hom_of_sums,
    sum_rep,
)


class GeometryError(Exception):
    pass


class BudgetExhausted(GeometryError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    """Caps for the combinatorial searches; exceeding the multiset cap
    raises BudgetExhausted, the others truncate and are reported."""

    max_multisets: int
    max_bipartitions: int
    max_combos: int
    coeff_bound: int = 2

    def __post_init__(self):
        if min(self.max_multisets, self.max_bipartitions, self.max_combos) <= 0:
            raise ValueError("budget caps must be positive")


BUDGETS = {
    "low": SearchBudget(30, 12, 20),
    "default": SearchBudget(4000, 400, 400),
    "high": SearchBudget(40000, 4000, 4000),
}

SURROGATE_NOTES = (
    "tangent dimensions are of the relation scheme, an upper bound for "
    "the reduced variety, used only on the left of <= obligations",
    "orbit-closure tangents are never computed directly; verdicts rest "
    "on the certified inequality chain",
)


# -- tangent spaces ----------------------------------------------------------


def tangent_dim(m: Representation) -> int:
    """Dimension of the linearized solution space at m.

    Unknowns are one matrix per arrow; each relation contributes the
    product-rule linearization of its path sum. The count is the
    tangent dimension of the scheme of relation-satisfying points.
    """
    q = m.quiver
    offsets = {}
    nvars = 0
    for a in q.arrows:
        offsets[a.name] = nvars
        nvars += m.dim(a.target) * m.dim(a.source)
    rows: list[list[Fraction]] = []
    for rel in q.relations:
        rows.extend(_linearized_rows(m, rel, offsets, nvars))
    if not rows:
        return nvars
    mat = QMat(len(rows), nvars, rows)
    return nvars - mat.rank()


def _linearized_rows(m, rel, offsets, nvars) -> list[list[Fraction]]:
    q = m.quiver
    drow = m.dim(rel.target)
    dcol = m.dim(rel.source)
    rows = [[Fraction(0)] * nvars for _ in range(drow * dcol)]
    for coeff, path in rel.terms:
        names = path.arrows
        for j, aname in enumerate(names):
            arr = q.arrow(aname)
            # matrices to the left of slot j act after the unknown,
            # those to the right act before it
            prefix = QMat.identity(drow)
            for nm in names[:j]:
                prefix = prefix @ m.mat(nm)
            suffix = QMat.identity(dcol)
            for nm in reversed(names[j + 1 :]):
                suffix = m.mat(nm) @ suffix
            base = offsets[aname]
            cols_x = m.dim(arr.source)
            for r in range(drow):
                pref_row = prefix.rows[r]
                for c in range(dcol):
                    row = rows[r * dcol + c]
                    for p in range(m.dim(arr.target)):
                        pref = pref_row[p]
                        if pref == 0:
                            continue
                        for qq in range(cols_x):
                            val = pref * suffix.rows[qq][c]
                            if val != 0:
                                row[base + p * cols_x + qq] += coeff * val
    return rows


# -- orbits ------------------------------------------------------------------


def dim_gl(dims: Sequence[int]) -> int:
    return sum(d * d for d in dims)


def a_lambda(q: BoundQuiver, dims: Sequence[int]) -> int:
    return dim_gl(dims) - chi(q, dims)


@dataclass(frozen=True)
class OrbitInfo:
    module: Representation
    dim_gl: int
    dim_end: int
    orbit_dim: int
    tangent: int
    a_lambda: int
    ext1_selfdim: int
    ext1_vanishes: bool
    ext_ge2_vanishes: bool


def orbit_info(m: Representation) -> OrbitInfo:
    """Orbit dimension and tangent data at m, consistency-checked."""
    q = m.quiver
    gl = dim_gl(m.dims)
    e = end_dim(m)
    orbit = gl - e
    tangent = tangent_dim(m)
    ext1 = ext_dim(m, m, 1)
    gd = global_dim(q)
    ge2 = all(ext_dim(m, m, k) == 0 for k in range(2, gd + 1))
    # the scheme tangent embeds into GL-displacements plus Ext^1
    if tangent > orbit + ext1:
        raise GeometryError(
            f"tangent dimension {tangent} exceeds orbit dim + ext1 "
            f"= {orbit} + {ext1}"
        )
    return OrbitInfo(
        module=m,
        dim_gl=gl,
        dim_end=e,
        orbit_dim=orbit,
        tangent=tangent,
        a_lambda=a_lambda(q, m.dims),
        ext1_selfdim=ext1,
        ext1_vanishes=ext1 == 0,
        ext_ge2_vanishes=ge2,
    )


@dataclass(frozen=True)
class TangentCheck:
    applies: bool
    bound_holds: bool
    tangent: int
    a_lambda: int


def lemma_tangent_check(n: Representation) -> TangentCheck:
    """Tangent bound by a_lambda under vanishing of Ext^{>=2}(N, N).

    applies is the hypothesis test; when it applies the bound is a
    theorem, so a violation raises instead of reporting.
    """
    q = n.quiver
    gd = global_dim(q)
    applies = all(ext_dim(n, n, k) == 0 for k in range(2, gd + 1))
    t = tangent_dim(n)
    a = a_lambda(q, n.dims)
    holds = t <= a
    if applies and not holds:
        raise GeometryError(
            f"tangent bound violated with hypotheses satisfied: {t} > {a}"
        )
    return TangentCheck(applies=applies, bound_holds=holds, tangent=t, a_lambda=a)


# -- degeneration order -------------------------------------------------------


def _end_strictly_increases(c: ModuleCatalog, m_names, n_names) -> bool:
    return hom_of_sums(c, m_names, m_names) < hom_of_sums(c, n_names, n_names)


def _hom_order_tables(c: ModuleCatalog, m_names, n_names) -> bool:
    for x in c.names:
        if hom_of_sums(c, m_names, (x,)) > hom_of_sums(c, n_names, (x,)):
            return False
        if hom_of_sums(c, (x,), m_names) > hom_of_sums(c, (x,), n_names):
            return False
    return True


def hom_order_leq(m: Representation, n: Representation, c: ModuleCatalog) -> bool:
    """Necessary condition for m to degenerate to n.

    Hom dimensions against every catalog entry must weakly increase on
    both sides, and End must strictly increase unless m and n are
    isomorphic. Needs an exhaustive catalog to be a genuine test.
    """
    if m.dims != n.dims:
        raise GeometryError("dimension vectors differ")
    if is_isomorphic(m, n):
        return True
    for e in c.entries:
        if hom_dim(m, e.rep) > hom_dim(n, e.rep):
            return False
        if hom_dim(e.rep, m) > hom_dim(e.rep, n):
            return False
    return end_dim(m) < end_dim(n)


def _combo_stream(k: int, bound: int, cap: int):
    """Extension-class representatives in increasing support size.

    Scaling a class by a nonzero constant does not change the middle
    term up to isomorphism, so the first nonzero coefficient is pinned
    to 1 and the rest range over the nonzero integers within bound.
    """
    count = 0
    tail = []
    for mag in range(1, bound + 1):
        tail.extend((mag, -mag))
    for size in range(1, k + 1):
        for support in itertools.combinations(range(k), size):
            for rest in itertools.product(tail, repeat=size - 1):
                vec = [0] * k
                vec[support[0]] = 1
                for pos, coeff in zip(support[1:], rest):
                    vec[pos] = coeff
                yield tuple(vec)
                count += 1
                if count >= cap:
                    return


def _extension_with_middle(
    u: Representation,
    v: Representation,
    m: Representation,
    budget: SearchBudget,
    cap: Optional[int] = None,
) -> tuple[Optional[ShortExactSeq], int]:
    """(sequence 0 -> u -> E -> v -> 0 with E iso m or None, probes used)."""
    if u.total_dim == 0 or v.total_dim == 0:
        return None, 0
    incl, eps, reps = ext1_cocycle_data(v, u)
    if not reps:
        return None, 0
    used = 0
    for vec in _combo_stream(
        len(reps), budget.coeff_bound, budget.max_combos if cap is None else cap
    ):
        used += 1
        cocycle = None
        for coeff, f in zip(vec, reps):
            if coeff == 0:
                continue
            part = f.scale(Fraction(coeff))
            cocycle = part if cocycle is None else cocycle + part
        ses = realize_extension(incl, eps, cocycle)
        if is_isomorphic(ses.middle, m):
            return ses, used
    return None, used


def _name_bipartitions(names: Sequence[str]):
    """Ordered splits of a name multiset into nonempty (u, v) pairs."""
    counts: dict[str, int] = {}
    for nm in names:
        counts[nm] = counts.get(nm, 0) + 1
    keys = sorted(counts)
    for pick in itertools.product(*[range(counts[k] + 1) for k in keys]):
        if all(p == 0 for p in pick) or all(
            p == counts[k] for p, k in zip(pick, keys)
        ):
            continue
        u = tuple(k for k, p in zip(keys, pick) for _ in range(p))
        v = tuple(
            k for k, p in zip(keys, pick) for _ in range(counts[k] - p)
        )
        yield u, v


def _witness_search_names(
    c: ModuleCatalog,
    m: Representation,
    n_names: Sequence[str],
    budget: SearchBudget,
) -> tuple[Optional[ShortExactSeq], bool]:
    """(witness, truncated) with the target given as a catalog multiset.

    Splits with Ext^1(V, U) = 0 cannot produce a nonsplit middle and
    are skipped via the catalog tables. The remaining splits share one
    probe budget; cheaper extension spaces go first.
    """
    if len(n_names) < 2:
        return None, False
    splits = []
    for u_names, v_names in _name_bipartitions(n_names):
        e1 = ext_of_sums(c, 1, v_names, u_names)
        if e1 > 0:
            splits.append((e1, len(u_names), u_names, v_names))
    splits.sort()
    truncated = False
    if len(splits) > budget.max_bipartitions:
        splits = splits[: budget.max_bipartitions]
        truncated = True
    combos_left = budget.max_combos
    for _, _, u_names, v_names in splits:
        if combos_left <= 0:
            truncated = True
            break
        u = sum_rep(c, u_names)
        v = sum_rep(c, v_names)
        ses, used = _extension_with_middle(u, v, m, budget, cap=combos_left)
        combos_left -= used
        if ses is not None:
            return ses, False
    return None, truncated


def _witness_search(
    m: Representation, n: Representation, budget: SearchBudget
) -> tuple[Optional[ShortExactSeq], bool]:
    """(witness, truncated): bipartitions of n's summands, then classes."""
    parts = decompose(n)
    if len(parts) < 2:
        return None, False
    truncated = False
    seen = 0
    combos_left = budget.max_combos
    indices = range(len(parts))
    for size in range(1, len(parts)):
        for subset in itertools.combinations(indices, size):
            if seen >= budget.max_bipartitions or combos_left <= 0:
                return None, True
            seen += 1
            chosen = set(subset)
            u_parts = [parts[i] for i in indices if i in chosen]
            v_parts = [parts[i] for i in indices if i not in chosen]
            u = u_parts[0] if len(u_parts) == 1 else direct_sum(u_parts)[0]
            v = v_parts[0] if len(v_parts) == 1 else direct_sum(v_parts)[0]
            if ext_dim(v, u, 1) == 0:
                continue
            ses, used = _extension_with_middle(u, v, m, budget, cap=combos_left)
            combos_left -= used
            if ses is not None:
                return ses, truncated
    return None, truncated


def degeneration_witness(
    m: Representation,
    n: Representation,
    budget: SearchBudget = BUDGETS["default"],
) -> Optional[ShortExactSeq]:
    """Short exact sequence showing m degenerates properly to n.

    Searches decompositions n = U + V and extension classes of V by U
    (basis classes and small integer combinations) whose middle term is
    isomorphic to m. None means not found within budget, never a proof
    of non-degeneration. Isomorphic inputs return None: proper only.
    """
    if m.dims != n.dims:
        raise GeometryError("dimension vectors differ")
    if is_isomorphic(m, n):
        return None
    ses, _ = _witness_search(m, n, budget)
    return ses


EVIDENCE_WITNESS = "extension-witness"
EVIDENCE_HOM_ORDER = "hom-order-only"


@dataclass(frozen=True)
class DegenerationEdge:
    source_names: tuple[str, ...]
    target_names: tuple[str, ...]
    evidence: str
    witness: Optional[ShortExactSeq]
    minimal: bool
    search_truncated: bool

    @property
    def witnessed(self) -> bool:
        return self.evidence == EVIDENCE_WITNESS


def _multisets_with_bdim(c: ModuleCatalog, target, cap: int) -> list[tuple[str, ...]]:
    """All entry multisets with the exact total dimension vector."""
    names = c.names
    dims = [c.rep(nm).dims for nm in names]
    out: list[tuple[str, ...]] = []
    target = tuple(target)

    def walk(i: int, remaining: tuple[int, ...], picked: list[str]):
        if all(r == 0 for r in remaining):
            out.append(tuple(picked))
            if len(out) > cap:
                raise BudgetExhausted(
                    f"more than {cap} candidate multisets at bdim {target}"
                )
            return
        if i == len(names):
            return
        d = dims[i]
        top = min(
            (remaining[k] // d[k] for k in range(len(d)) if d[k] > 0),
            default=0,
        )
        for count in range(top, -1, -1):
            nxt = tuple(remaining[k] - count * d[k] for k in range(len(d)))
            if any(x < 0 for x in nxt):
                continue
            walk(i + 1, nxt, picked + [names[i]] * count)

    walk(0, target, [])
    return sorted(out)


def module_names(c: ModuleCatalog, m: Representation) -> tuple[str, ...]:
    """Sorted catalog names of m's indecomposable summands."""
    names = []
    for part in decompose(m):
        nm = c.identify(part)
        if nm is None:
            raise GeometryError(
                f"summand of dimension vector {part.dims} is not in the catalog"
            )
        names.append(nm)
    return tuple(sorted(names))


def minimal_degenerations(
    m: Representation,
    c: ModuleCatalog,
    budget: SearchBudget = BUDGETS["default"],
) -> tuple[DegenerationEdge, ...]:
    """Proper degeneration candidates of m with evidence and minimality.

    Enumerates all catalog multisets with m's dimension vector, keeps
    those passing the Hom-order test, and searches each for an
    extension witness. A witnessed edge is minimal when no witnessed
    edge factors through another witnessed target. Edges without a
    witness stay in the list as hom-order-only evidence: undecided,
    never minimal. Needs an exhaustive catalog.
    """
    if not c.is_exhaustive:
        raise GeometryError("minimal_degenerations needs an exhaustive catalog")
    m_names = module_names(c, m)
    candidates = _multisets_with_bdim(c, m.dims, budget.max_multisets)
    edges = []
    for ms in candidates:
        if ms == m_names:
            continue
        if not _hom_order_tables(c, m_names, ms):
            continue
        if not _end_strictly_increases(c, m_names, ms):
            continue
        ses, truncated = _witness_search_names(c, m, ms, budget)
        edges.append((ms, ses, truncated))
    # minimality among witnessed edges: drop those with a witnessed midpoint
    witnessed = [ms for ms, ses, _ in edges if ses is not None]
    cache: dict[tuple[tuple[str, ...], tuple[str, ...]], bool] = {}
    non_minimal = set()
    for ms_a in witnessed:
        rep_a = None
        for ms_b in witnessed:
            if ms_a == ms_b or ms_b in non_minimal:
                continue
            if not _hom_order_tables(c, ms_a, ms_b):
                continue
            if not _end_strictly_increases(c, ms_a, ms_b):
                continue
            key = (ms_a, ms_b)
            if key not in cache:
                if rep_a is None:
                    rep_a = sum_rep(c, ms_a)
                mid, _ = _witness_search_names(c, rep_a, ms_b, budget)
                cache[key] = mid is not None
            if cache[key]:
                non_minimal.add(ms_b)
    out = []
    for ms, ses, truncated in edges:
        out.append(
            DegenerationEdge(
                source_names=m_names,
                target_names=ms,
                evidence=EVIDENCE_WITNESS if ses is not None else EVIDENCE_HOM_ORDER,
                witness=ses,
                minimal=ses is not None and ms not in non_minimal,
                search_truncated=truncated,
            )
        )
    out.sort(key=lambda e: e.target_names)
    return tuple(out)


# -- the L/P splitting --------------------------------------------------------


@dataclass(frozen=True)
class SplitLP:
    u_names: tuple[str, ...]
    v_names: tuple[str, ...]

    @property
    def is_zero(self) -> bool:
        return not self.u_names and not self.v_names


def split_LP(c: ModuleCatalog, names: Sequence[str]) -> Optional[SplitLP]:
    """Split a multiset into the part in L and the part in P.

    Summands in both L and R count toward the L side. None when some
    summand lies in neither L nor P, which cannot happen over a shod
    catalog where every entry is in L or in R.
    """
    u, v = [], []
    for nm in names:
        tags = c.tags(nm)
        if "in_L" in tags:
            u.append(nm)
        elif "in_P" in tags:
            v.append(nm)
        else:
            return None
    return SplitLP(u_names=tuple(sorted(u)), v_names=tuple(sorted(v)))


# -- regularity certificates --------------------------------------------------

CASE_SAME_DIM = "same-dim-as-L"
CASE_DIFFERENT_DIM = "different-dim"

VERDICT_CERTIFIED = "certified"
VERDICT_FAILED = "hypotheses-failed"
VERDICT_NOT_APPLICABLE = "not-applicable"


# obligation predicates, kept small and module-level so a soundness
# mutation suite can target each one by name


def _hom_vanishes(c, a_names, b_names) -> bool:
    return hom_of_sums(c, a_names, b_names) == 0


def _ext_vanishes(c, a_names, b_names, start: int) -> bool:
    return all(
        ext_of_sums(c, k, a_names, b_names) == 0
        for k in range(start, c.gldim + 1)
    )


def _hom_matches_euler(c, a_names, b_names) -> bool:
    pairing = euler_pair(
        c.quiver, bdim_of_sum(c, a_names), bdim_of_sum(c, b_names)
    )
    return hom_of_sums(c, a_names, b_names) == pairing


def _pd_at_most(c, names, bound: int) -> bool:
    return all(c.entry(nm).pd <= bound for nm in names)


def _tangent_bounded(t: int, bound: int) -> bool:
    return t <= bound


def _ext2_concentrated(c, n_names, v_names, u_names) -> bool:
    return ext_of_sums(c, 2, n_names, n_names) == ext_of_sums(
        c, 2, v_names, u_names
    )


@dataclass(frozen=True)
class RegularityCertificate:
    m_names: tuple[str, ...]
    n_names: tuple[str, ...]
    case: str
    u_names: tuple[str, ...]
    v_names: tuple[str, ...]
    checked: tuple[tuple[str, bool], ...]
    d0: Optional[int]
    d1: Optional[int]
    d: Optional[int]
    verdict: str
    budget_hit: bool
    notes: tuple[str, ...]

    @property
    def certified(self) -> bool:
        return self.verdict == VERDICT_CERTIFIED


def _tilting_names(c: ModuleCatalog, t: TiltingModule) -> frozenset[str]:
    return frozenset(t.summands)


def _require_add_t(c: ModuleCatalog, t: TiltingModule, m_names) -> None:
    extra = [nm for nm in m_names if nm not in _tilting_names(c, t)]
    if extra:
        raise GeometryError(f"M not in add T: summands {extra} are not in T")


def regularity_certificate(
    m: Representation,
    n_names: Sequence[str],
    c: ModuleCatalog,
    t: Optional[TiltingModule] = None,
    budget: SearchBudget = BUDGETS["default"],
    edges: Optional[tuple[DegenerationEdge, ...]] = None,
) -> RegularityCertificate:
    """Certificate that the boundary orbit of N is regular in the
    closure of the orbit of M.

    M splits as L + R with L the summands in the left part; N splits
    as U + V with U in add L and V in add P. When bdim U equals bdim L
    the obligations are the two-sided Hom identities plus the
    regular-point criterion for V in the closure of the orbit of R;
    otherwise they are the existence of a sequence 0 -> U -> M -> V -> 0
    together with the Ext vanishing hypotheses and the product tangent
    inequality. The proof scalars d0, d1, d are computed over the
    enumerated stratum of witnessed minimal edges sharing N's
    splitting dimensions and are recorded, not gated.

    When a tilting module is supplied, M must lie in add T. N must be
    a proper degeneration candidate of M: same dimension vector, Hom
    order weakly above M, End dimension strictly above. Witnessed
    minimality is the caller's concern; in the different-dim case the
    first obligation itself produces the witness sequence.
    """
    m_names = module_names(c, m)
    if t is not None:
        _require_add_t(c, t, m_names)
    n_names = tuple(sorted(n_names))
    for nm in n_names:
        if nm not in c.names:
            raise GeometryError(f"unknown catalog entry {nm!r}")
    if bdim_of_sum(c, n_names) != tuple(m.dims):
        raise GeometryError("N does not have the dimension vector of M")
    if n_names == m_names:
        raise GeometryError("N is isomorphic to M; proper degenerations only")
    if not _hom_order_tables(c, m_names, n_names) or not _end_strictly_increases(
        c, m_names, n_names
    ):
        raise GeometryError("N is not a degeneration candidate of M")
    notes = list(SURROGATE_NOTES)
    budget_hit = False

    split_m = split_LP(c, m_names)
    split_n = split_LP(c, n_names)
    if split_m is None or split_n is None:
        return RegularityCertificate(
            m_names=m_names,
            n_names=n_names,
            case=CASE_SAME_DIM,
            u_names=(),
            v_names=(),
            checked=(("summands all carry L or P tags", False),),
            d0=None,
            d1=None,
            d=None,
            verdict=VERDICT_NOT_APPLICABLE,
            budget_hit=False,
            notes=tuple(notes),
        )
    l_names, r_names = split_m.u_names, split_m.v_names
    u_names, v_names = split_n.u_names, split_n.v_names
    d_u = bdim_of_sum(c, u_names)
    d_v = bdim_of_sum(c, v_names)
    d_l = bdim_of_sum(c, l_names)
    checked: list[tuple[str, bool]] = []
    d0 = d1 = d_scalar = None

    if d_u == d_l:
        case = CASE_SAME_DIM
        pairing_ok_r = _hom_matches_euler(c, l_names, r_names)
        pairing_ok_v = _hom_matches_euler(c, l_names, v_names)
        checked.append(("U iso L or V iso R", u_names == l_names or v_names == r_names))
        checked.append(("dim Hom(L,R) equals the Euler pairing", pairing_ok_r))
        checked.append(("dim Hom(L,V) equals the Euler pairing", pairing_ok_v))
        checked.append(("Hom(R,L) = 0", _hom_vanishes(c, r_names, l_names)))
        checked.append(("Hom(V,L) = 0", _hom_vanishes(c, v_names, l_names)))
        checked.append(
            ("Ext^{>=1}(R,R) = 0", _ext_vanishes(c, r_names, r_names, 1))
        )
        checked.append(
            ("Ext^{>=2}(V,V) = 0", _ext_vanishes(c, v_names, v_names, 2))
        )
        v_rep = sum_rep(c, v_names)
        orbit_r = dim_gl(d_v) - hom_of_sums(c, r_names, r_names)
        checked.append(
            (
                "tangent_dim(V) <= orbit dim of R",
                _tangent_bounded(tangent_dim(v_rep), orbit_r),
            )
        )
        notes.append(
            "V lies in the closure of the orbit of R because the open "
            "stratum of its dimension vector is irreducible"
        )
    else:
        case = CASE_DIFFERENT_DIM
        u_rep = sum_rep(c, u_names)
        v_rep = sum_rep(c, v_names)
        ses, _ = _extension_with_middle(u_rep, v_rep, m, budget)
        if ses is None:
            budget_hit = True  # cannot distinguish absence from truncation
        checked.append(("exact sequence 0 -> U -> M -> V -> 0", ses is not None))
        checked.append(("pd V <= 2", _pd_at_most(c, v_names, 2)))
        checked.append(
            ("Ext^{>=2}(U,U) = 0", _ext_vanishes(c, u_names, u_names, 2))
        )
        checked.append(
            ("Ext^{>=2}(V,V) = 0", _ext_vanishes(c, v_names, v_names, 2))
        )
        checked.append(("Hom(V,U) = 0", _hom_vanishes(c, v_names, u_names)))
        ext2_vm = ext_of_sums(c, 2, v_names, m_names)
        ext2_mu = ext_of_sums(c, 2, m_names, u_names)
        checked.append(
            ("Ext^2(V,M) = 0 or Ext^2(M,U) = 0", ext2_vm == 0 or ext2_mu == 0)
        )
        checked.append(
            (
                "Ext^2(N,N) concentrated in Ext^2(V,U)",
                _ext2_concentrated(c, n_names, v_names, u_names),
            )
        )
        ext2_vu = ext_of_sums(c, 2, v_names, u_names)
        bound = a_lambda(c.quiver, d_u) + a_lambda(c.quiver, d_v)
        product_tangent = tangent_dim(u_rep) + tangent_dim(v_rep)
        checked.append(
            (
                "tangent(U) + tangent(V) - dim Ext^2(V,U) <= a(d') + a(d'')",
                _tangent_bounded(product_tangent - ext2_vu, bound),
            )
        )
        if edges is None:
            edges = minimal_degenerations(m, c, budget)
        stratum = []
        for edge in edges:
            if not (edge.witnessed and edge.minimal):
                continue
            sp = split_LP(c, edge.target_names)
            if sp is None:
                continue
            if bdim_of_sum(c, sp.u_names) == d_u and bdim_of_sum(c, sp.v_names) == d_v:
                stratum.append(edge.target_names)
        if n_names not in stratum:
            stratum.append(n_names)
        d0 = min(hom_of_sums(c, ms, ms) for ms in stratum)
        d1 = min(ext_of_sums(c, 1, ms, ms) for ms in stratum)
        d_scalar = (
            d1
            - d0
            + chi(c.quiver, d_u)
            + chi(c.quiver, d_v)
            + euler_pair(c.quiver, d_u, d_v)
        )
        notes.append(
            "d0 and d1 range over the enumerated stratum of witnessed "
            "minimal degenerations sharing the splitting dimensions, a "
            "computable surrogate for the boundary component"
        )

    verdict = VERDICT_CERTIFIED if all(ok for _, ok in checked) else VERDICT_FAILED
    return RegularityCertificate(
        m_names=m_names,
        n_names=n_names,
        case=case,
        u_names=u_names,
        v_names=v_names,
        checked=tuple(checked),
        d0=d0,
        d1=d1,
        d=d_scalar,
        verdict=verdict,
        budget_hit=budget_hit,
        notes=tuple(notes),
    )


# -- the codimension-one report ------------------------------------------------


@dataclass(frozen=True)
class BoundaryOrbit:
    names: tuple[str, ...]
    codim: int
    evidence: str
    minimal: bool
    search_truncated: bool
    certificate: Optional[RegularityCertificate]

    @property
    def verdict(self) -> str:
        if self.certificate is None:
            return "not-needed"
        return self.certificate.verdict


@dataclass(frozen=True)
class Codim1Report:
    m_names: tuple[str, ...]
    orbit_dim: int
    boundary: tuple[BoundaryOrbit, ...]
    verified: bool
    budget_hit: bool
    notes: tuple[str, ...]

    @property
    def codim1_count(self) -> int:
        return sum(1 for b in self.boundary if b.codim == 1)

    @property
    def codim1_budget_hit(self) -> bool:
        """Truncation that could have affected the verified verdict.

        budget_hit reports truncation anywhere in the evidence; this
        property restricts to codimension-one candidates, whose
        certificates are the verdict's only inputs.
        """
        return any(
            b.search_truncated
            or (b.certificate is not None and b.certificate.budget_hit)
            for b in self.boundary
            if b.codim <= 1
        )


def codim1_regularity_report(
    m: Representation,
    c: ModuleCatalog,
    t: Optional[TiltingModule] = None,
    budget: SearchBudget = BUDGETS["default"],
) -> Codim1Report:
    """Certify every codimension-one boundary orbit of the orbit closure.

    Boundary candidates are the Hom-order degenerations; each with
    codimension one receives a regularity certificate. The overall
    verdict is verified only when every such candidate is certified.
    Candidates with only hom-order evidence are treated as boundary
    members, which is the conservative direction.
    """
    m_names = module_names(c, m)
    if t is not None:
        _require_add_t(c, t, m_names)
    end_m = hom_of_sums(c, m_names, m_names)
    orbit_m = dim_gl(m.dims) - end_m
    edges = minimal_degenerations(m, c, budget)
    records = []
    budget_hit = any(e.search_truncated for e in edges)
    for edge in edges:
        end_n = hom_of_sums(c, edge.target_names, edge.target_names)
        codim = end_n - end_m
        cert = None
        if codim <= 1:
            cert = regularity_certificate(
                m, edge.target_names, c, t, budget=budget, edges=edges
            )
            budget_hit = budget_hit or cert.budget_hit
        records.append(
            BoundaryOrbit(
                names=edge.target_names,
                codim=codim,
                evidence=edge.evidence,
                minimal=edge.minimal,
                search_truncated=edge.search_truncated,
                certificate=cert,
            )
        )
    verified = all(
        b.certificate is not None and b.certificate.certified
        for b in records
        if b.codim <= 1
    )
    return Codim1Report(
        m_names=m_names,
        orbit_dim=orbit_m,
        boundary=tuple(records),
        verified=verified,
        budget_hit=budget_hit,
        notes=SURROGATE_NOTES,
    )
