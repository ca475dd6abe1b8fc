from __future__ import annotations

import json
import subprocess
import sys

import pytest

from cpq import suites
from cpq.cli import main
from cpq.report import FAIL, VerificationReport
from cpq.suites import Claim, RunConfig, build_registry


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_top(capsys):
    code, out, _ = run(capsys, "compute", "top", "--n", "1", "--kind", "phi")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "-1/2*q^1"
    assert lines[1].startswith("note:") and "-q^1" in lines[1]


def test_compute_qtrace_and_haar(capsys):
    assert run(capsys, "compute", "qtrace", "--n", "2", "--kind", "psi")[1] == "q^2\n"
    code, out, _ = run(capsys, "compute", "haar", "--element", "c c*", "--q", "1/2")
    assert code == 0
    assert out.splitlines()[0] == "1/(1 + q^2)"
    assert "at q=1/2: 4/5" in out


def test_compute_energy_projector_holo(capsys):
    assert run(capsys, "compute", "energy", "--n", "2")[1] == "1/2 + 1/2*q^2\n"
    code, out, _ = run(capsys, "compute", "projector", "--n", "1", "--kind", "psi", "--show")
    assert code == 0 and "E[1,1] = (q^2) c c*" in out and "idempotent: True" in out
    code, out, _ = run(capsys, "compute", "holo", "--n", "-2", "--truncation", "4")
    assert out.splitlines()[:2] == ["dimension: 3", "stable at truncation 6: True"]


def test_compute_oracle_dump(capsys):
    code, out, _ = run(capsys, "compute", "haar", "--oracle", "2")
    rows = json.loads(out)
    assert code == 0
    assert {"monomial": "c c*", "value": "1/(1 + q^2)"} in rows


@pytest.mark.parametrize("argv", [
    ("compute", "haar", "--element", "c c* +"),
    ("compute", "haar", "--element", "x"),
    ("compute", "haar"),
    ("compute", "top"),
    ("compute", "haar", "--oracle", "9"),
    ("verify", "nothing"),
    ("verify", "haar", "--q", "3/2"),
    ("compute", "holo", "--n", "-3", "--truncation", "1"),
])
def test_bad_input_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_soliton_lists_self_duality(capsys):
    code, out, _ = run(capsys, "verify", "soliton", "--max-n", "3", "--claims", "soliton.lemproj")
    assert code == 0
    assert "lemproj.phi.n=3: residual_zero=true" in out


def test_verify_haar_has_oracle_claim(capsys):
    code, out, _ = run(capsys, "verify", "haar", "--samples", "20")
    assert code == 0
    assert "[pass] haar.oracle.degree<=6" in out


def test_json_is_sorted_and_deterministic(capsys):
    argv = ("verify", "cocycles", "--seed", "7", "--samples", "10", "--json")
    code, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert code == 0 and first == second
    records = json.loads(first)
    ids = [r["claim"] for r in records]
    assert ids == sorted(ids)
    assert all(set(r) == {"claim", "n", "kind", "exact", "residual_zero", "value", "paper_expected", "status"}
               for r in records)


def test_noted_items_do_not_fail(capsys):
    code, out, _ = run(capsys, "verify", "soliton", "--max-n", "1", "--claims", "soliton.top")
    assert code == 0
    assert "[discrepancy-noted] soliton.top.phi.n=1" in out


def test_list_claims_has_anchors(capsys):
    code, out, _ = run(capsys, "verify", "all", "--list-claims")
    assert code == 0
    lines = out.splitlines()
    assert all("\t" in line and line.split("\t")[1] for line in lines)
    ids = [line.split("\t")[0] for line in lines]
    assert len(ids) == len(set(ids))
    assert "soliton.lemproj.phi.n=4" in ids and "algebra.confluence.words=500" in ids


def test_claim_ids_are_structured():
    for c in build_registry(RunConfig()):
        assert c.id.split(".")[0] == c.suite
        assert c.id.count(".") >= 1


def _inject(monkeypatch, run_fn):
    def builder(cfg):
        return [Claim("algebra.injected", "algebra", "injected", run_fn)]

    monkeypatch.setitem(suites._BUILDERS, "algebra", builder)


def test_failure_exits_1(capsys, monkeypatch):
    _inject(monkeypatch, lambda: VerificationReport("algebra.injected", FAIL, residual_zero=False))
    assert run(capsys, "verify", "algebra")[0] == 1


def test_internal_error_exits_2(capsys, monkeypatch):
    def boom():
        raise RuntimeError("boom")

    _inject(monkeypatch, boom)
    code, _, err = run(capsys, "verify", "algebra")
    assert code == 2 and "boom" in err


def test_parallel_output_matches_serial(capsys, monkeypatch):
    argv = ("verify", "bundles", "--max-n", "2", "--json")
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("CPQ_THREADS", "2")
    _, parallel, _ = run(capsys, *argv)
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cpq", "compute", "qtrace", "--n", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "q^-3\n"
