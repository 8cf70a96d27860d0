"""Command-line interface.

Every subcommand renders a deterministic report: same input, same
seed, same bytes. Exit codes: 0 success, 1 parse error or failed
check/obligation, 2 search budget exhausted, 3 algebra not strict
shod where strictness is required.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Optional, Sequence

from .quiver import (
    QuiverError,
    algebra_dim,
    basis_paths,
    parse_quiver_file,
    validate_admissible,
)
from .rep import RepError, hom_dim, parse_module_file
from .homology import (
    HomologyError,
    euler_matrix,
    chi,
    ext_dim,
    min_proj_resolution,
)
from .shod import (
    NotStrictShodError,
    ShodError,
    build_catalog,
    canonical_tilting,
    classify_LRP,
    export_catalog,
    ext_injectives_in_L,
    ext_projectives_in_R,
    lambda_left,
    lambda_right,
    shod_report,
    structure_checks,
    sum_rep,
)
from .geometry import (
    BUDGETS,
    SURROGATE_NOTES,
    BudgetExhausted,
    GeometryError,
    a_lambda,
    codim1_regularity_report,
    lemma_tangent_check,
    minimal_degenerations,
    module_names,
    orbit_info,
    tangent_dim,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 2
EXIT_NOT_STRICT = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_bound(text: str, nverts: int) -> tuple[int, ...]:
    parts = [p for p in text.replace(",", " ").split() if p]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad bound {text!r}")
    if len(vals) == 1:
        vals = vals * nverts
    if len(vals) != nverts:
        raise UsageError(f"bound needs 1 or {nverts} entries, got {len(vals)}")
    if any(v < 0 for v in vals):
        raise UsageError("bound entries must be nonnegative")
    return tuple(vals)


def _parse_dims(text: str, nverts: int) -> tuple[int, ...]:
    return _parse_bound(text, nverts)


def _catalog(args, q):
    return build_catalog(q, _parse_bound(args.bound, len(q.vertices)))


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_sum(names: Sequence[str]) -> str:
    return " + ".join(names) if names else "0"


# -- quiver-level commands ---------------------------------------------------


def _cmd_validate(args):
    q = parse_quiver_file(args.quiver)
    rep = validate_admissible(q)
    lines = [
        f"quiver: {q.name}",
        f"vertices: {len(q.vertices)}",
        f"arrows: {len(q.arrows)}",
        f"relations: {len(q.relations)}",
        f"acyclic: {q.is_acyclic()}",
        f"admissible: {rep.admissible}",
        f"algebra dimension: {algebra_dim(q)}",
    ]
    if rep.redundant_relations:
        lines.append("redundant relations: " + ", ".join(rep.redundant_relations))
    data = {
        "quiver": q.name,
        "vertices": len(q.vertices),
        "arrows": len(q.arrows),
        "relations": len(q.relations),
        "acyclic": q.is_acyclic(),
        "admissible": rep.admissible,
        "algebra_dim": algebra_dim(q),
        "redundant_relations": list(rep.redundant_relations),
    }
    code = EXIT_OK if rep.admissible else EXIT_FAILED
    return lines, data, code


def _cmd_basis(args):
    q = parse_quiver_file(args.quiver)
    paths = basis_paths(q)
    lines = [f"quiver: {q.name}", f"basis size: {len(paths)}"]
    for p in paths:
        lines.append(f"  {p.display()}")
    data = {
        "quiver": q.name,
        "basis_size": len(paths),
        "paths": [p.display() for p in paths],
    }
    return lines, data, EXIT_OK


def _cmd_euler(args):
    q = parse_quiver_file(args.quiver)
    em = euler_matrix(q)
    lines = [f"quiver: {q.name}", "euler matrix:"]
    for row in em:
        lines.append("  " + " ".join(f"{x:>3d}" for x in row))
    data = {
        "quiver": q.name,
        "euler_matrix": [list(row) for row in em],
    }
    if args.dims is not None:
        d = _parse_dims(args.dims, len(q.vertices))
        lines.append(f"dims: {_fmt_vec(d)}")
        lines.append(f"chi: {chi(q, d)}")
        lines.append(f"a_lambda: {a_lambda(q, d)}")
        data["dims"] = list(d)
        data["chi"] = chi(q, d)
        data["a_lambda"] = a_lambda(q, d)
    return lines, data, EXIT_OK


def _cmd_catalog(args):
    q = parse_quiver_file(args.quiver)
    c = _catalog(args, q)
    text = export_catalog(c)
    data = {
        "quiver": q.name,
        "bound": list(c.dim_bound),
        "gldim": c.gldim,
        "status": c.status,
        "entries": [
            {
                "name": e.name,
                "dims": list(e.rep.dims),
                "pd": e.pd,
                "id": e.idim,
                "tags": sorted(e.tags),
            }
            for e in c.entries
        ],
    }
    return text.splitlines(), data, EXIT_OK


def _cmd_invariants(args):
    q = parse_quiver_file(args.quiver)
    c = _catalog(args, q)
    rep = shod_report(c)
    big_l, big_r, big_p = classify_LRP(c)
    jj = ext_injectives_in_L(c)
    qq = ext_projectives_in_R(c)
    lines = [
        f"quiver: {q.name}",
        f"gldim: {c.gldim}",
        f"catalog: {len(c.entries)} entries, status {c.status}",
        f"shod: {rep.is_shod}",
        f"strict shod: {rep.is_strict}",
    ]
    if rep.violators:
        lines.append("shod violators: " + ", ".join(rep.violators))
    em = euler_matrix(q)
    lines.append("euler matrix:")
    for row in em:
        lines.append("  " + " ".join(f"{x:>3d}" for x in row))
    lines.append("L: " + _fmt_sum(big_l))
    lines.append("R: " + _fmt_sum(big_r))
    lines.append("P: " + _fmt_sum(big_p))
    lines.append("ext-injectives in L: " + _fmt_sum(jj))
    lines.append("ext-projectives in R: " + _fmt_sum(qq))
    data = {
        "quiver": q.name,
        "gldim": c.gldim,
        "catalog_size": len(c.entries),
        "catalog_status": c.status,
        "shod": rep.is_shod,
        "strict_shod": rep.is_strict,
        "violators": list(rep.violators),
        "euler_matrix": [list(row) for row in em],
        "L": list(big_l),
        "R": list(big_r),
        "P": list(big_p),
        "ext_injectives_in_L": list(jj),
        "ext_projectives_in_R": list(qq),
    }
    if rep.is_strict:
        t = canonical_tilting(c)
        lines.append("canonical tilting: " + _fmt_sum(t.summands))
        lines.append(f"tilting bdim: {_fmt_vec(t.bdim)}")
        data["tilting"] = list(t.summands)
        data["tilting_bdim"] = list(t.bdim)
    else:
        lines.append("canonical tilting: not applicable (not strict shod)")
        data["tilting"] = None
    for side, sup in (("left", lambda_left(c)), ("right", lambda_right(c))):
        lines.append(
            f"support algebra ({side}): vertices {_fmt_sum(sup.vertices)},"
            f" gldim {sup.gldim}"
        )
        data[f"lambda_{side}"] = {
            "vertices": list(sup.vertices),
            "gldim": sup.gldim,
        }
    checks = structure_checks(c, seed=args.seed)
    lines.append("structure checks:")
    for ch in checks.checks:
        verdict = "pass" if ch.holds else "FAIL"
        lines.append(f"  {ch.name}: {verdict} ({ch.instances} instances)")
        for ce in ch.counterexamples:
            lines.append(f"    counterexample: {ce}")
    data["structure_checks"] = [
        {
            "name": ch.name,
            "holds": ch.holds,
            "instances": ch.instances,
            "counterexamples": list(ch.counterexamples),
        }
        for ch in checks.checks
    ]
    code = EXIT_OK if checks.all_hold else EXIT_FAILED
    return lines, data, code


def _cmd_tilting(args):
    q = parse_quiver_file(args.quiver)
    c = _catalog(args, q)
    t = canonical_tilting(c)
    lines = [
        f"quiver: {q.name}",
        "summands: " + _fmt_sum(t.summands),
        f"bdim: {_fmt_vec(t.bdim)}",
    ]
    lines.extend("  " + f for f in t.facts)
    data = {
        "quiver": q.name,
        "summands": list(t.summands),
        "bdim": list(t.bdim),
        "facts": list(t.facts),
    }
    return lines, data, EXIT_OK


# -- module-level commands ----------------------------------------------------


def _cmd_hom(args):
    m = parse_module_file(args.module)
    n = parse_module_file(args.other)
    if m.quiver != n.quiver:
        raise UsageError("modules live over different quivers")
    d = hom_dim(m, n)
    lines = [f"dim Hom: {d}"]
    data = {"hom_dim": d, "dims": [list(m.dims), list(n.dims)]}
    return lines, data, EXIT_OK


def _cmd_ext(args):
    m = parse_module_file(args.module)
    n = parse_module_file(args.other)
    if m.quiver != n.quiver:
        raise UsageError("modules live over different quivers")
    degree = args.n
    d = ext_dim(m, n, degree)
    lines = [f"dim Ext^{degree}: {d}"]
    data = {"degree": degree, "ext_dim": d, "dims": [list(m.dims), list(n.dims)]}
    return lines, data, EXIT_OK


def _cmd_resolve(args):
    m = parse_module_file(args.module)
    res = min_proj_resolution(m)
    lines = [f"module dims: {_fmt_vec(m.dims)}", f"pd: {res.length}"]
    for i, p in enumerate(res.projectives):
        lines.append(f"  P{i}: dims {_fmt_vec(p.dims)}")
    data = {
        "dims": list(m.dims),
        "pd": res.length,
        "projectives": [list(p.dims) for p in res.projectives],
    }
    return lines, data, EXIT_OK


def _cmd_tangent(args):
    m = parse_module_file(args.module)
    t = tangent_dim(m)
    check = lemma_tangent_check(m)
    lines = [
        f"dims: {_fmt_vec(m.dims)}",
        f"tangent dim: {t}",
        f"a_lambda: {check.a_lambda}",
        f"lemma applies: {check.applies}",
        f"bound holds: {check.bound_holds}",
    ]
    lines.extend("note: " + nt for nt in SURROGATE_NOTES)
    data = {
        "dims": list(m.dims),
        "tangent_dim": t,
        "a_lambda": check.a_lambda,
        "lemma_applies": check.applies,
        "bound_holds": check.bound_holds,
        "notes": list(SURROGATE_NOTES),
    }
    return lines, data, EXIT_OK


def _cmd_orbit(args):
    m = parse_module_file(args.module)
    info = orbit_info(m)
    lines = [
        f"dims: {_fmt_vec(m.dims)}",
        f"dim GL: {info.dim_gl}",
        f"dim End: {info.dim_end}",
        f"orbit dim: {info.orbit_dim}",
        f"tangent dim: {info.tangent}",
        f"a_lambda: {info.a_lambda}",
        f"ext1 vanishes: {info.ext1_vanishes}",
        f"ext>=2 vanishes: {info.ext_ge2_vanishes}",
    ]
    lines.extend("note: " + nt for nt in SURROGATE_NOTES)
    data = {
        "dims": list(m.dims),
        "dim_gl": info.dim_gl,
        "dim_end": info.dim_end,
        "orbit_dim": info.orbit_dim,
        "tangent_dim": info.tangent,
        "a_lambda": info.a_lambda,
        "ext1_vanishes": info.ext1_vanishes,
        "ext_ge2_vanishes": info.ext_ge2_vanishes,
        "notes": list(SURROGATE_NOTES),
    }
    return lines, data, EXIT_OK


def _cmd_degenerations(args):
    m = parse_module_file(args.module)
    c = build_catalog(m.quiver, _parse_bound(args.bound, len(m.quiver.vertices)))
    budget = BUDGETS[args.budget]
    src = module_names(c, m)
    edges = minimal_degenerations(m, c, budget)
    lines = ["module: " + _fmt_sum(src)]
    lines.append(f"proper degeneration candidates: {len(edges)}")
    for e in edges:
        flags = []
        if e.minimal:
            flags.append("minimal")
        if e.search_truncated:
            flags.append("search truncated")
        suffix = (" [" + ", ".join(flags) + "]") if flags else ""
        lines.append(f"  -> {_fmt_sum(e.target_names)}  ({e.evidence}){suffix}")
    data = {
        "source": list(src),
        "edges": [
            {
                "target": list(e.target_names),
                "evidence": e.evidence,
                "minimal": e.minimal,
                "search_truncated": e.search_truncated,
            }
            for e in edges
        ],
    }
    truncated = any(e.search_truncated for e in edges)
    data["search_truncated_anywhere"] = truncated
    return lines, data, EXIT_OK


# -- the certification pipeline ------------------------------------------------


def _instance_vectors(nsummands: int, n: int):
    for mult in itertools.product(range(n + 1), repeat=nsummands):
        if any(mult):
            yield mult


def _cmd_certify(args):
    q = parse_quiver_file(args.quiver)
    c = _catalog(args, q)
    t = canonical_tilting(c)
    budget = BUDGETS[args.budget]
    lines = [
        f"quiver: {q.name}",
        "tilting summands: " + _fmt_sum(t.summands),
        f"multiplicity bound: {args.n}",
        f"budget: {args.budget}",
    ]
    lines.extend("note: " + nt for nt in SURROGATE_NOTES)
    instances = []
    counts = {"verified": 0, "failed": 0, "budget": 0}
    for mult in _instance_vectors(len(t.summands), args.n):
        names = tuple(
            nm for k, nm in zip(mult, t.summands) for _ in range(k)
        )
        label = _fmt_sum(names)
        entry = {"summands": list(names)}
        try:
            report = codim1_regularity_report(
                sum_rep(c, names), c, t, budget=budget
            )
        except BudgetExhausted as exc:
            counts["budget"] += 1
            entry["status"] = "budget-exhausted"
            entry["detail"] = str(exc)
            lines.append(f"instance {label}: budget exhausted ({exc})")
            instances.append(entry)
            continue
        if report.verified:
            status = "verified"
            counts["verified"] += 1
        elif report.codim1_budget_hit:
            status = "budget-limited"
            counts["budget"] += 1
        else:
            status = "failed"
            counts["failed"] += 1
        entry["status"] = status
        entry["orbit_dim"] = report.orbit_dim
        entry["codim1_count"] = report.codim1_count
        entry["boundary"] = []
        lines.append(
            f"instance {label}: {status}"
            f" (boundary orbits: {len(report.boundary)},"
            f" codim-1: {report.codim1_count})"
        )
        for b in report.boundary:
            brec = {
                "names": list(b.names),
                "codim": b.codim,
                "evidence": b.evidence,
                "minimal": b.minimal,
                "verdict": b.verdict,
            }
            lines.append(
                f"  orbit {_fmt_sum(b.names)}: codim {b.codim},"
                f" {b.evidence}, verdict {b.verdict}"
            )
            if b.certificate is not None:
                cert = b.certificate
                brec["case"] = cert.case
                brec["obligations"] = [
                    {"name": nm, "holds": ok} for nm, ok in cert.checked
                ]
                if cert.d0 is not None:
                    brec["d0"] = cert.d0
                    brec["d1"] = cert.d1
                    brec["d"] = cert.d
                    lines.append(
                        f"    scalars: d0 {cert.d0}, d1 {cert.d1}, d {cert.d}"
                    )
                for nm, ok in cert.checked:
                    lines.append(f"    [{'ok' if ok else 'FAIL'}] {nm}")
                extra = [nt for nt in cert.notes if nt not in SURROGATE_NOTES]
                brec["notes"] = extra
                lines.extend("    note: " + nt for nt in extra)
            entry["boundary"].append(brec)
        instances.append(entry)
    if counts["failed"]:
        overall, code = "failed", EXIT_FAILED
    elif counts["budget"]:
        overall, code = "budget-limited", EXIT_BUDGET
    else:
        overall, code = "verified", EXIT_OK
    lines.append(
        f"instances: {len(instances)}  verified: {counts['verified']}"
        f"  failed: {counts['failed']}  budget: {counts['budget']}"
    )
    lines.append(f"overall: {overall}")
    data = {
        "quiver": q.name,
        "tilting": list(t.summands),
        "n": args.n,
        "budget": args.budget,
        "notes": list(SURROGATE_NOTES),
        "instances": instances,
        "counts": counts,
        "overall": overall,
    }
    return lines, data, code


# -- plumbing ------------------------------------------------------------------


def _build_parser() -> _Parser:
    top = _Parser(prog="shodvar", description=__doc__)
    sub = top.add_subparsers(dest="cmd", required=True)

    def add(name, help_text, quiver=False, module=False, other=False):
        p = sub.add_parser(name, help=help_text)
        if quiver:
            p.add_argument("quiver", help="quiver file")
        if module:
            p.add_argument("module", help="module file")
        if other:
            p.add_argument("other", help="second module file")
        p.add_argument("--bound", default="2", help="catalog dimension bound")
        p.add_argument("--n", type=int, default=1, help="degree or multiplicity")
        p.add_argument(
            "--budget",
            choices=sorted(BUDGETS),
            default="default",
            help="search budget preset",
        )
        p.add_argument("--seed", type=int, default=0, help="random seed")
        p.add_argument("--out", default=None, help="also write the report here")
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format",
        )
        return p

    add("validate", "parse a quiver file and check admissibility", quiver=True)
    add("basis", "print the path basis of the algebra", quiver=True)
    p = add("euler", "print the Euler matrix", quiver=True)
    p.add_argument("dims", nargs="?", default=None, help="dimension vector")
    add("catalog", "build and print the module catalog", quiver=True)
    add("invariants", "full invariant report with structure checks", quiver=True)
    add("tilting", "canonical tilting module", quiver=True)
    add("hom", "dim Hom between two module files", module=True, other=True)
    add("ext", "dim Ext^n between two module files", module=True, other=True)
    add("resolve", "minimal projective resolution", module=True)
    add("tangent", "tangent dimension and the tangent bound", module=True)
    add("orbit", "orbit and tangent data", module=True)
    add("degenerations", "proper degenerations with evidence", module=True)
    add("certify", "verify regularity in codimension one over add T^n", quiver=True)
    return top


_COMMANDS = {
    "validate": _cmd_validate,
    "basis": _cmd_basis,
    "euler": _cmd_euler,
    "catalog": _cmd_catalog,
    "invariants": _cmd_invariants,
    "tilting": _cmd_tilting,
    "hom": _cmd_hom,
    "ext": _cmd_ext,
    "resolve": _cmd_resolve,
    "tangent": _cmd_tangent,
    "orbit": _cmd_orbit,
    "degenerations": _cmd_degenerations,
    "certify": _cmd_certify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        lines, data, code = _COMMANDS[args.cmd](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except NotStrictShodError as exc:
        print(f"not strict shod: {exc}")
        return EXIT_NOT_STRICT
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}")
        return EXIT_BUDGET
    except (QuiverError, RepError, HomologyError, ShodError, GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    data["exit"] = code
    if args.format == "json":
        payload = json.dumps(data, indent=2, sort_keys=True) + "\n"
    else:
        payload = "\n".join(lines) + "\n"
    sys.stdout.write(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
