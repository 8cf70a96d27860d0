"""Bound quivers: parsing, admissibility, path bases, convex subquivers.

A bound quiver is a finite quiver together with a set of relations,
each a rational linear combination of paths of length at least two
sharing a common source and a common target. Path composition is
right to left throughout: in a path written a1*a2*...*an the arrow an
acts first, so s(ai) = t(ai+1), and a representation sends the path to
the matrix product M(a1) @ M(a2) @ ... @ M(an).

The text format for quiver files:

    # comment lines start with '#'
    compose: right-to-left
    vertices: 1 2 3 4
    arrow a: 1 -> 2
    arrow b: 2 -> 3
    relation: b*a
    relation: 1 b*a + -1/2 c*d

The compose header is mandatory and the only accepted value is
right-to-left; the flag exists so a file written under a different
convention fails loudly instead of silently transposing algebras.
Relation coefficients are optional (default 1) and exact, 'p/q' or 'p'.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .linalg import QMat

COMPOSE_HEADER = "right-to-left"


class QuiverError(Exception):
    """Base class for quiver construction and parsing problems."""


class QuiverSyntaxError(QuiverError):
    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = "line %d: %s" % (line_no, message)
        super().__init__(message)


class QuiverInvariantError(QuiverError):
    """A structurally invalid quiver, arrow, or relation."""


class NotAdmissibleError(QuiverError):
    """Raised when an operation needs an admissibility witness it cannot get."""


class ConvexityError(QuiverError):
    def __init__(self, message: str, witness: "Path | None" = None):
        self.witness = witness
        super().__init__(message)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Path:
    """A path in a quiver; arrows listed in right-to-left application order.

    The trivial path at a vertex has an empty arrow tuple and
    source == target. Length is the number of arrows.
    """

    arrows: tuple[str, ...]
    source: str
    target: str

    @property
    def length(self) -> int:
        return len(self.arrows)

    def display(self) -> str:
        return "*".join(self.arrows) if self.arrows else "e(%s)" % self.source


@dataclass(frozen=True)
class Relation:
    """Rational combination of parallel paths of length >= 2."""

    terms: tuple[tuple[Fraction, Path], ...]

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def display(self) -> str:
        if len(self.terms) == 1 and self.terms[0][0] == 1:
            return self.terms[0][1].display()
        return " + ".join("%s %s" % (c, p.display()) for c, p in self.terms)


@dataclass(frozen=True)
class BoundQuiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Relation, ...] = ()
    # a label only; two quivers with the same data are the same quiver
    name: str = field(default="", compare=False)

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            if v in seen:
                raise QuiverInvariantError("duplicate vertex id %r" % v)
            seen.add(v)
        vset = set(self.vertices)
        anames = set()
        for a in self.arrows:
            if a.name in anames:
                raise QuiverInvariantError("duplicate arrow id %r" % a.name)
            anames.add(a.name)
            if a.source not in vset or a.target not in vset:
                raise QuiverInvariantError(
                    "arrow %r references undeclared vertex %r"
                    % (a.name, a.source if a.source not in vset else a.target)
                )
        for rel in self.relations:
            self._check_relation(rel)

    def _check_relation(self, rel: Relation) -> None:
        if not rel.terms:
            raise QuiverInvariantError("empty relation")
        src, tgt = rel.terms[0][1].source, rel.terms[0][1].target
        seen_paths = set()
        for coeff, p in rel.terms:
            if coeff == 0:
                raise QuiverInvariantError("zero coefficient in relation %s" % rel.display())
            if p.arrows in seen_paths:
                raise QuiverInvariantError("repeated path in relation %s" % rel.display())
            seen_paths.add(p.arrows)
            if p.length < 2:
                raise QuiverInvariantError(
                    "relation path %s has length %d < 2" % (p.display(), p.length)
                )
            if (p.source, p.target) != (src, tgt):
                raise QuiverInvariantError(
                    "relation %s mixes endpoints (%s->%s vs %s->%s)"
                    % (rel.display(), p.source, p.target, src, tgt)
                )
            self.check_path(p)

    # -- lookups -------------------------------------------------------

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError("no arrow %r" % name)

    def vertex_index(self, v: str) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise KeyError("no vertex %r" % v) from None

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError("no arrow %r" % name)

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.source == v)

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        return tuple(a for a in self.arrows if a.target == v)

    def check_path(self, p: Path) -> None:
        """Validate that a Path is composable and matches its endpoints."""
        if not p.arrows:
            if p.source != p.target or p.source not in self.vertices:
                raise QuiverInvariantError("bad trivial path at %r" % p.source)
            return
        arrs = [self.arrow(n) for n in p.arrows]
        for left, right in zip(arrs, arrs[1:]):
            if left.source != right.target:
                raise QuiverInvariantError(
                    "path %s breaks between %s and %s" % (p.display(), left.name, right.name)
                )
        if arrs[-1].source != p.source or arrs[0].target != p.target:
            raise QuiverInvariantError("path %s has wrong endpoints" % p.display())

    def make_path(self, arrow_names: Sequence[str]) -> Path:
        arrs = [self.arrow(n) for n in arrow_names]
        if not arrs:
            raise QuiverInvariantError("make_path of an empty sequence needs a vertex")
        p = Path(tuple(arrow_names), arrs[-1].source, arrs[0].target)
        self.check_path(p)
        return p

    def trivial_path(self, v: str) -> Path:
        if v not in self.vertices:
            raise KeyError("no vertex %r" % v)
        return Path((), v, v)

    def is_acyclic(self) -> bool:
        color: dict[str, int] = {}

        def visit(v: str) -> bool:
            color[v] = 1
            for a in self.out_arrows(v):
                c = color.get(a.target, 0)
                if c == 1 or (c == 0 and not visit(a.target)):
                    return False
            color[v] = 2
            return True

        return all(color.get(v, 0) == 2 or visit(v) for v in self.vertices)


# -- parsing -----------------------------------------------------------

_RAT = re.compile(r"^-?\d+(/\d+)?$")


def _parse_relation_body(q_arrows: dict[str, Arrow], body: str, line_no: int) -> Relation:
    terms = []
    for chunk in body.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise QuiverSyntaxError("empty relation term", line_no)
        parts = chunk.split()
        coeff = Fraction(1)
        if len(parts) == 2:
            if not _RAT.match(parts[0]):
                raise QuiverSyntaxError("bad coefficient %r" % parts[0], line_no)
            coeff = Fraction(parts[0])
            pathtok = parts[1]
        elif len(parts) == 1:
            pathtok = parts[0]
        else:
            raise QuiverSyntaxError("cannot parse relation term %r" % chunk, line_no)
        names = pathtok.split("*")
        for n in names:
            if n not in q_arrows:
                raise QuiverSyntaxError("unknown arrow %r in relation" % n, line_no)
        arrs = [q_arrows[n] for n in names]
        for left, right in zip(arrs, arrs[1:]):
            if left.source != right.target:
                raise QuiverSyntaxError(
                    "path %s is not composable between %s and %s"
                    % (pathtok, left.name, right.name),
                    line_no,
                )
        terms.append((coeff, Path(tuple(names), arrs[-1].source, arrs[0].target)))
    return Relation(tuple(terms))


def parse_bound_quiver(text: str, name: str = "") -> BoundQuiver:
    vertices: list[str] = []
    arrows: list[Arrow] = []
    arrow_map: dict[str, Arrow] = {}
    relations: list[tuple[Relation, int]] = []
    saw_compose = False
    saw_vertices = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise QuiverSyntaxError("expected 'keyword: ...'", line_no)
        key, body = line.split(":", 1)
        key = key.strip()
        body = body.strip()
        if not saw_compose:
            if key != "compose":
                raise QuiverSyntaxError("first directive must be 'compose: %s'" % COMPOSE_HEADER, line_no)
            if body != COMPOSE_HEADER:
                raise QuiverSyntaxError(
                    "unsupported composition convention %r (only %r)" % (body, COMPOSE_HEADER),
                    line_no,
                )
            saw_compose = True
            continue
        if key == "vertices":
            if saw_vertices:
                raise QuiverSyntaxError("duplicate vertices line", line_no)
            vertices = body.split()
            if not vertices:
                raise QuiverSyntaxError("empty vertex list", line_no)
            saw_vertices = True
        elif key.startswith("arrow"):
            parts = key.split()
            if len(parts) != 2:
                raise QuiverSyntaxError("expected 'arrow NAME: SRC -> TGT'", line_no)
            aname = parts[1]
            m = re.match(r"^(\S+)\s*->\s*(\S+)$", body)
            if not m:
                raise QuiverSyntaxError("expected 'SRC -> TGT'", line_no)
            if not saw_vertices:
                raise QuiverSyntaxError("arrow before vertices line", line_no)
            src, tgt = m.group(1), m.group(2)
            if src not in vertices or tgt not in vertices:
                raise QuiverSyntaxError(
                    "arrow %s references undeclared vertex %r" % (aname, src if src not in vertices else tgt),
                    line_no,
                )
            if aname in arrow_map:
                raise QuiverSyntaxError("duplicate arrow id %r" % aname, line_no)
            arr = Arrow(aname, src, tgt)
            arrows.append(arr)
            arrow_map[aname] = arr
        elif key == "relation":
            rel = _parse_relation_body(arrow_map, body, line_no)
            for _, p in rel.terms:
                if p.length < 2:
                    raise QuiverSyntaxError("relation path %s shorter than 2" % p.display(), line_no)
            relations.append((rel, line_no))
        else:
            raise QuiverSyntaxError("unknown directive %r" % key, line_no)

    if not saw_compose:
        raise QuiverSyntaxError("missing 'compose: %s' header" % COMPOSE_HEADER)
    if not saw_vertices:
        raise QuiverSyntaxError("missing vertices line")
    try:
        return BoundQuiver(tuple(vertices), tuple(arrows), tuple(r for r, _ in relations), name=name)
    except QuiverInvariantError as exc:
        raise QuiverSyntaxError(str(exc)) from exc


def parse_quiver_file(path) -> BoundQuiver:
    import os

    with open(path, "r", encoding="utf-8") as fh:
        return parse_bound_quiver(fh.read(), name=os.path.basename(str(path)))


def serialize_quiver(q: BoundQuiver) -> str:
    lines = ["compose: %s" % COMPOSE_HEADER, "vertices: " + " ".join(q.vertices)]
    for a in q.arrows:
        lines.append("arrow %s: %s -> %s" % (a.name, a.source, a.target))
    for rel in q.relations:
        lines.append("relation: " + rel.display())
    return "\n".join(lines) + "\n"


# -- path enumeration and the quotient algebra -------------------------


@lru_cache(maxsize=None)
def all_paths(q: BoundQuiver) -> tuple[Path, ...]:
    """Every path of the quiver, shortest first; requires an acyclic quiver."""
    if not q.is_acyclic():
        raise NotAdmissibleError("path enumeration needs an acyclic quiver")
    paths = [q.trivial_path(v) for v in q.vertices]
    frontier = list(paths)
    while frontier:
        nxt = []
        for p in frontier:
            for a in q.out_arrows(p.target):
                np = Path((a.name,) + p.arrows, p.source, a.target)
                nxt.append(np)
        paths.extend(nxt)
        frontier = nxt
    order = {a.name: i for i, a in enumerate(q.arrows)}
    vorder = {v: i for i, v in enumerate(q.vertices)}
    paths.sort(key=lambda p: (p.length, tuple(order[n] for n in p.arrows), vorder[p.source]))
    return tuple(paths)


def compose_paths(q: BoundQuiver, left: Path, right: Path) -> Path | None:
    """left after right, or None when the endpoints do not match."""
    if right.target != left.source:
        return None
    return Path(left.arrows + right.arrows, right.source, left.target)


class PathAlgebra:
    """The quotient of an acyclic path algebra by its relation ideal.

    Residue classes are represented in the basis of paths that avoid the
    row-reduced leading terms of the ideal; the choice is deterministic
    in the declared arrow order. Since the quiver is acyclic the ideal
    is computed exactly, with no truncation.
    """

    def __init__(self, q: BoundQuiver):
        self.quiver = q
        self.paths = all_paths(q)
        self.path_index = {p: i for i, p in enumerate(self.paths)}
        n = len(self.paths)
        # Columns sorted so the largest path (longest, then latest in
        # arrow order) is eliminated first and survives only in pivots.
        self.col_of_path = {}
        desc = sorted(range(n), key=lambda i: self._path_key(self.paths[i]), reverse=True)
        self.col_to_path = desc
        for col, i in enumerate(desc):
            self.col_of_path[i] = col
        gens = self._ideal_generators()
        if gens:
            mat = QMat.from_rows(gens, ncols=n)
            red, pivots = mat.rref()
            self._red_rows = [red.rows[k] for k in range(len(pivots))]
            self._pivots = pivots
        else:
            self._red_rows = []
            self._pivots = ()
        pivset = set(self._pivots)
        basis_cols = [c for c in range(n) if c not in pivset]
        basis_idx = [self.col_to_path[c] for c in basis_cols]
        self.basis = tuple(
            sorted((self.paths[i] for i in basis_idx), key=self._path_key)
        )
        self.basis_pos = {p: i for i, p in enumerate(self.basis)}

    def _path_key(self, p: Path):
        order = {a.name: i for i, a in enumerate(self.quiver.arrows)}
        vorder = {v: i for i, v in enumerate(self.quiver.vertices)}
        return (p.length, tuple(order[n] for n in p.arrows), vorder[p.source])

    def _ideal_generators(self) -> list[list[Fraction]]:
        n = len(self.paths)
        gens: list[list[Fraction]] = []
        for rel in self.quiver.relations:
            for p in self.paths:
                if p.target != rel.source:
                    continue
                for s in self.paths:
                    if s.source != rel.target:
                        continue
                    row = [Fraction(0)] * n
                    ok = True
                    for coeff, mid in rel.terms:
                        whole = Path(s.arrows + mid.arrows + p.arrows, p.source, s.target)
                        idx = self.path_index.get(whole)
                        if idx is None:
                            ok = False
                            break
                        row[self.col_of_path[idx]] += coeff
                    if ok and any(x != 0 for x in row):
                        gens.append(row)
        return gens

    @property
    def dim(self) -> int:
        return len(self.basis)

    def in_ideal(self, vec: dict[Path, Fraction]) -> bool:
        return all(c == 0 for c in self.normal_form(vec).values())

    def normal_form(self, vec: dict[Path, Fraction]) -> dict[Path, Fraction]:
        """Reduce a path combination modulo the relation ideal."""
        n = len(self.paths)
        row = [Fraction(0)] * n
        for p, c in vec.items():
            idx = self.path_index.get(p)
            if idx is None:
                raise KeyError("unknown path %s" % p.display())
            row[self.col_of_path[idx]] += c
        for rrow, piv in zip(self._red_rows, self._pivots):
            if row[piv] != 0:
                f = row[piv]
                row = [x - f * y for x, y in zip(row, rrow)]
        out: dict[Path, Fraction] = {}
        for col, val in enumerate(row):
            if val != 0:
                out[self.paths[self.col_to_path[col]]] = val
        return out

    def reduce_left_multiple(self, arrow: Arrow, p: Path) -> dict[Path, Fraction]:
        """Normal form of (arrow after p); p must end where arrow starts."""
        if p.target != arrow.source:
            raise ValueError("cannot compose %s after %s" % (arrow.name, p.display()))
        whole = Path((arrow.name,) + p.arrows, p.source, arrow.target)
        return self.normal_form({whole: Fraction(1)})


@lru_cache(maxsize=None)
def path_algebra(q: BoundQuiver) -> PathAlgebra:
    return PathAlgebra(q)


def basis_paths(q: BoundQuiver) -> tuple[Path, ...]:
    """Residue-class basis of the bound quiver algebra, deterministic order."""
    return path_algebra(q).basis


def algebra_dim(q: BoundQuiver) -> int:
    return path_algebra(q).dim


# -- admissibility ------------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    witness_n: int | None
    checked_to: int
    exact: bool
    longest_path: int | None
    minimal: bool
    redundant_relations: tuple[str, ...]


def validate_admissible(q: BoundQuiver, max_len: int = 12) -> AdmissibilityReport:
    """Constructive admissibility check.

    For an acyclic quiver the relation ideal is exact, so the least n
    with every path of length >= n inside the ideal is exact as well
    (vacuously, paths longer than the longest path are absent). For a
    cyclic quiver only a bounded witness up to max_len is attempted and
    `exact` is False. Relation-set minimality is advisory output.
    """
    if q.is_acyclic():
        pa = path_algebra(q)
        longest = max((p.length for p in pa.paths), default=0)
        witness = None
        for n in range(1, longest + 2):
            long_paths = [p for p in pa.paths if p.length >= n]
            if all(pa.in_ideal({p: Fraction(1)}) for p in long_paths):
                witness = n
                break
        minimal, redundant = _relation_minimality(q)
        return AdmissibilityReport(
            admissible=True,
            witness_n=witness,
            checked_to=max(max_len, longest + 1),
            exact=True,
            longest_path=longest,
            minimal=minimal,
            redundant_relations=redundant,
        )
    # Cyclic case: enumerate paths up to a hard bound and test a witness.
    spread = 0
    for rel in q.relations:
        lens = [p.length for _, p in rel.terms]
        spread = max(spread, max(lens) - min(lens))
    bound = max_len + spread
    paths = _paths_up_to(q, bound)
    gens = _truncated_ideal(q, paths, bound)
    witness = None
    for n in range(1, max_len + 1):
        level = [p for p in paths if n <= p.length <= max_len]
        if level and all(gens.contains(p) for p in level):
            witness = n
            break
    return AdmissibilityReport(
        admissible=witness is not None,
        witness_n=witness,
        checked_to=max_len,
        exact=False,
        longest_path=None,
        minimal=True,
        redundant_relations=(),
    )


def _relation_minimality(q: BoundQuiver) -> tuple[bool, tuple[str, ...]]:
    redundant = []
    for i, rel in enumerate(q.relations):
        rest = q.relations[:i] + q.relations[i + 1 :]
        sub = BoundQuiver(q.vertices, q.arrows, rest, name=q.name)
        pa = PathAlgebra(sub)
        vec = {}
        for coeff, p in rel.terms:
            vec[p] = vec.get(p, Fraction(0)) + coeff
        if pa.in_ideal(vec):
            redundant.append(rel.display())
    return (not redundant), tuple(redundant)


class _TruncatedIdeal:
    def __init__(self, rows, col_of_path, paths):
        self.col_of_path = col_of_path
        self.paths = paths
        if rows:
            self.red, self.pivots = QMat.from_rows(rows, ncols=len(paths)).rref()
        else:
            self.red, self.pivots = QMat.zeros(0, len(paths)), ()

    def contains(self, p: Path) -> bool:
        row = [Fraction(0)] * len(self.paths)
        row[self.col_of_path[p]] = Fraction(1)
        for rrow, piv in zip(self.red.rows, self.pivots):
            if row[piv] != 0:
                f = row[piv]
                row = [x - f * y for x, y in zip(row, rrow)]
        return all(x == 0 for x in row)


def _paths_up_to(q: BoundQuiver, bound: int) -> list[Path]:
    paths = [q.trivial_path(v) for v in q.vertices]
    frontier = list(paths)
    for _ in range(bound):
        nxt = []
        for p in frontier:
            for a in q.out_arrows(p.target):
                nxt.append(Path((a.name,) + p.arrows, p.source, a.target))
        paths.extend(nxt)
        frontier = nxt
    return paths


def _truncated_ideal(q: BoundQuiver, paths: list[Path], bound: int) -> _TruncatedIdeal:
    pidx = {p: i for i, p in enumerate(paths)}
    col_of_path = {p: i for i, p in enumerate(paths)}
    rows = []
    for rel in q.relations:
        maxrel = max(p.length for _, p in rel.terms)
        for p in paths:
            if p.target != rel.source:
                continue
            for s in paths:
                if s.source != rel.target or p.length + s.length + maxrel > bound:
                    continue
                row = [Fraction(0)] * len(paths)
                for coeff, mid in rel.terms:
                    whole = Path(s.arrows + mid.arrows + p.arrows, p.source, s.target)
                    if whole in pidx:
                        row[col_of_path[whole]] += coeff
                if any(x != 0 for x in row):
                    rows.append(row)
    return _TruncatedIdeal(rows, col_of_path, paths)


# -- convex subquivers and opposites ------------------------------------


def convex_subquiver(q: BoundQuiver, verts: Iterable[str]) -> BoundQuiver:
    """Full subquiver on `verts` with the induced relations.

    Raises ConvexityError, carrying a witness path, when some path of
    the ambient quiver between two kept vertices leaves the vertex set.
    """
    keep = [v for v in q.vertices if v in set(verts)]
    missing = set(verts) - set(q.vertices)
    if missing:
        raise KeyError("unknown vertices %s" % sorted(missing))
    kset = set(keep)
    for p in all_paths(q):
        if p.source in kset and p.target in kset and p.length >= 1:
            inner = _intermediate_vertices(q, p)
            if any(v not in kset for v in inner):
                raise ConvexityError(
                    "vertex set is not convex, witness path %s" % p.display(), witness=p
                )
    arrows = tuple(a for a in q.arrows if a.source in kset and a.target in kset)
    relations = tuple(
        rel for rel in q.relations if rel.source in kset and rel.target in kset
    )
    return BoundQuiver(tuple(keep), arrows, relations, name=q.name)


def _intermediate_vertices(q: BoundQuiver, p: Path) -> list[str]:
    inner = []
    arrs = [q.arrow(n) for n in p.arrows]
    for a in arrs[1:]:
        inner.append(a.target)
    return inner


@lru_cache(maxsize=None)
def opposite_quiver(q: BoundQuiver) -> BoundQuiver:
    """Reverse all arrows (same names); relations get their paths reversed."""
    arrows = tuple(Arrow(a.name, a.target, a.source) for a in q.arrows)
    rels = []
    for rel in q.relations:
        terms = tuple(
            (coeff, Path(tuple(reversed(p.arrows)), p.target, p.source))
            for coeff, p in rel.terms
        )
        rels.append(Relation(terms))
    return BoundQuiver(q.vertices, arrows, tuple(rels), name=q.name + ".op" if q.name else "")
