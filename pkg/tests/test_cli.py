"""End-to-end runs of the command line interface.

Every test calls main() in process and captures the streams, so exit
codes, stdout/stderr routing, and byte-for-byte determinism are all
checked against the same entry point the console script uses.
"""

import contextlib
import io
import json

import pytest

import shodvar.cli as cli
from shodvar.geometry import SearchBudget

from conftest import FIXTURES

N4Q = str(FIXTURES / "n4.quiver")
A2Q = str(FIXTURES / "a2.quiver")
A3RQ = str(FIXTURES / "a3r.quiver")
T_MOD = str(FIXTURES / "n4_T.mod")
S2_MOD = str(FIXTURES / "n4_S2.mod")
S3_MOD = str(FIXTURES / "n4_S3.mod")
P1_A2_MOD = str(FIXTURES / "a2_P1.mod")
M_A3R_MOD = str(FIXTURES / "a3r_M.mod")


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def golden(name):
    return (FIXTURES / "golden" / name).read_text(encoding="utf-8")


@pytest.fixture(scope="module")
def certify_n4():
    # the full multiplicity-one sweep; reused by several tests below
    return run_cli("certify", N4Q)


# -- quiver commands ----------------------------------------------------------


def test_validate_n4():
    code, out, err = run_cli("validate", N4Q)
    assert code == 0
    assert err == ""
    assert "admissible: True" in out
    assert "algebra dimension: 7" in out


def test_validate_missing_file():
    code, out, err = run_cli("validate", str(FIXTURES / "missing.quiver"))
    assert code == 1
    assert out == ""
    assert "error:" in err


def test_basis_a2():
    code, out, _ = run_cli("basis", A2Q)
    assert code == 0
    assert "basis size: 3" in out


def test_euler_with_dims():
    code, out, _ = run_cli("euler", N4Q, "1 2 3 1")
    assert code == 0
    assert "chi: 8" in out
    assert "a_lambda: 7" in out


def test_euler_without_dims():
    code, out, _ = run_cli("euler", N4Q)
    assert code == 0
    assert "chi:" not in out


def test_euler_bad_dims_count():
    code, out, err = run_cli("euler", N4Q, "1 2")
    assert code == 1
    assert "usage error" in err


def test_euler_json_matrix():
    code, out, _ = run_cli("euler", N4Q, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["euler_matrix"] == [
        [1, -1, 1, -1],
        [0, 1, -1, 1],
        [0, 0, 1, -1],
        [0, 0, 0, 1],
    ]
    assert data["exit"] == 0


def test_catalog_a2():
    code, out, _ = run_cli("catalog", A2Q)
    assert code == 0
    assert "3 entries" in out
    assert "exhaustive" in out


def test_catalog_partial_bound():
    code, out, _ = run_cli("catalog", N4Q, "--bound", "2,2,2,0")
    assert code == 0
    assert "bounded-heuristic" in out


def test_invariants_n4_matches_golden():
    code, out, err = run_cli("invariants", N4Q)
    assert code == 0
    assert err == ""
    assert out == golden("invariants_n4.txt")


def test_invariants_a2_not_strict():
    code, out, _ = run_cli("invariants", A2Q)
    assert code == 0
    assert "strict shod: False" in out
    assert "not applicable" in out


def test_invariants_a3r():
    code, out, _ = run_cli("invariants", A3RQ)
    assert code == 0
    assert "gldim: 2" in out


def test_tilting_n4():
    code, out, _ = run_cli("tilting", N4Q)
    assert code == 0
    assert "summands: S(3) + P(2) + P(3) + P(1)" in out
    assert "bdim: (1, 2, 3, 1)" in out


def test_tilting_a2_exit3():
    code, out, err = run_cli("tilting", A2Q)
    assert code == 3
    assert "not strict shod" in out
    assert err == ""


# -- module commands ----------------------------------------------------------


def test_hom():
    code, out, _ = run_cli("hom", T_MOD, S3_MOD)
    assert code == 0
    assert "dim Hom: 2" in out


def test_hom_mismatched_quivers():
    code, out, err = run_cli("hom", T_MOD, P1_A2_MOD)
    assert code == 1
    assert "different quivers" in err


def test_ext_degrees():
    code, out, _ = run_cli("ext", S2_MOD, S3_MOD)
    assert code == 0
    assert "dim Ext^1: 1" in out
    code, out, _ = run_cli("ext", S2_MOD, S3_MOD, "--n", "2")
    assert code == 0
    assert "dim Ext^2: 0" in out


def test_resolve_s2():
    code, out, _ = run_cli("resolve", S2_MOD)
    assert code == 0
    assert "pd: 2" in out
    assert out.count("P0:") == 1 and out.count("P2:") == 1


def test_tangent_t():
    code, out, _ = run_cli("tangent", T_MOD)
    assert code == 0
    assert "tangent dim: 7" in out
    assert "lemma applies: True" in out
    assert "bound holds: True" in out
    assert "note:" in out


def test_tangent_a3r_point():
    code, out, _ = run_cli("tangent", M_A3R_MOD)
    assert code == 0
    assert "tangent dim: 1" in out


def test_orbit_t():
    code, out, _ = run_cli("orbit", T_MOD)
    assert code == 0
    assert "orbit dim: 7" in out
    assert "dim End: 8" in out


def test_degenerations_matches_golden():
    code, out, err = run_cli("degenerations", T_MOD)
    assert code == 0
    assert err == ""
    assert out == golden("degenerations_n4_T.txt")


def test_degenerations_a2():
    code, out, _ = run_cli("degenerations", P1_A2_MOD)
    assert code == 0
    assert "-> S(1) + S(2)  (extension-witness) [minimal]" in out


def test_degenerations_a3r():
    code, out, _ = run_cli("degenerations", M_A3R_MOD)
    assert code == 0
    assert "-> S(1) + S(2) + S(3)  (extension-witness) [minimal]" in out


# -- certify ------------------------------------------------------------------


def test_certify_n4_exit0(certify_n4):
    code, out, err = certify_n4
    assert code == 0
    assert err == ""
    assert "overall: verified" in out
    assert "instances: 15  verified: 15  failed: 0  budget: 0" in out


def test_certify_n4_matches_golden(certify_n4):
    _, out, _ = certify_n4
    assert out == golden("certify_n4_n1.txt")


def test_certify_n4_pinned_codim1_counts(certify_n4):
    _, out, _ = certify_n4
    got = {}
    for line in out.splitlines():
        if line.startswith("instance "):
            label = line[len("instance "):].split(":")[0]
            got[label] = int(line.rsplit("codim-1: ", 1)[1].rstrip(")"))
    assert got == {
        "P(1)": 1,
        "P(3)": 1,
        "P(3) + P(1)": 2,
        "P(2)": 1,
        "P(2) + P(1)": 2,
        "P(2) + P(3)": 2,
        "P(2) + P(3) + P(1)": 3,
        "S(3)": 0,
        "S(3) + P(1)": 1,
        "S(3) + P(3)": 0,
        "S(3) + P(3) + P(1)": 1,
        "S(3) + P(2)": 0,
        "S(3) + P(2) + P(1)": 1,
        "S(3) + P(2) + P(3)": 0,
        "S(3) + P(2) + P(3) + P(1)": 1,
    }


def test_certify_both_certificate_cases_appear(certify_n4):
    _, out, _ = certify_n4
    assert "U iso L or V iso R" in out
    assert "scalars: d0 2, d1 1, d 1" in out
    assert "exact sequence 0 -> U -> M -> V -> 0" in out


def test_certify_a2_exit3():
    code, out, err = run_cli("certify", A2Q)
    assert code == 3
    assert "not strict shod" in out
    assert err == ""


def test_certify_a3r_exit3():
    code, out, _ = run_cli("certify", A3RQ)
    assert code == 3


def test_certify_budget_exhausted_exit2(monkeypatch):
    monkeypatch.setitem(cli.BUDGETS, "low", SearchBudget(1, 1, 1))
    code, out, err = run_cli("certify", N4Q, "--budget", "low")
    assert code == 2
    assert "overall: budget-limited" in out
    assert "budget exhausted" in out


# -- output plumbing ----------------------------------------------------------


def test_json_is_sorted_and_stable():
    runs = [run_cli("orbit", T_MOD, "--format", "json") for _ in range(2)]
    assert runs[0] == runs[1]
    data = json.loads(runs[0][1])
    assert list(data) == sorted(data)
    assert data["tangent_dim"] == 7


def test_text_runs_are_byte_identical():
    a = run_cli("degenerations", P1_A2_MOD)
    b = run_cli("degenerations", P1_A2_MOD)
    assert a == b


def test_out_writes_same_bytes(tmp_path):
    target = tmp_path / "report.txt"
    code, out, _ = run_cli("invariants", A2Q, "--out", str(target))
    assert code == 0
    assert target.read_text(encoding="utf-8") == out


def test_unknown_subcommand():
    code, out, err = run_cli("frobnicate")
    assert code == 1
    assert "usage error" in err


def test_help_exits_zero():
    code, out, _ = run_cli("--help")
    assert code == 0
    assert "certify" in out
