import io
import json
import subprocess
import sys

import pytest

from xxcomb.cli import run
from xxcomb.genfun import QGammaPoly


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = run(list(argv), out, err)
    return rc, out.getvalue(), err.getvalue()


def test_circulant_power_plain():
    assert call("circulant-power", "--M", "6", "--K", "14", "--offset", "0") == (0, "5462\n", "")


def test_circulant_row_json():
    rc, out, _ = call("circulant-power", "--M", "6", "--K", "15", "--format", "json")
    assert rc == 0
    assert json.loads(out) == {"entries": ["0", "10923", "0", "10922", "0", "10923"]}


def test_macmahon_json():
    rc, out, _ = call("macmahon", "--N", "2", "--box", "2", "--format", "json")
    assert (rc, json.loads(out)) == (0, {"value": "20"})


def test_schur_routes():
    assert call("schur", "--lam", "2,1", "--x", "1,2")[1] == "6\n"
    assert call("schur", "--lam", "2,1", "--x", "1/2,3", "--route", "paths")[1] == "21/4\n"
    assert call("schur", "--lam", "2,1,0", "--route", "ones")[1] == "8\n"


def test_degenerate_points_are_bad_input():
    rc, _, err = call("schur", "--lam", "1,0", "--x", "1,1")
    assert rc == 2 and "schur_paths" in err


def test_walks():
    assert call("walks-count", "--K", "2", "--muL", "2,1", "--muR", "2,1")[1] == "2\n"
    assert call("walks-oracle", "--K", "14", "--muL", "1", "--muR", "1", "--M", "6")[0] == 1
    assert call("walks-oracle", "--K", "14", "--muL", "1", "--muR", "1", "--M", "6", "--unsafe-limits")[1] == "5462\n"
    rc, out, _ = call("walks-count", "--K", "4", "--muL", "3,1", "--muR", "3,1", "--M", "6", "--stays",
                      "--w", "1", "--format", "json")
    assert json.loads(out) == {"coefficients": ["30", "0", "24", "0", "1"], "value": "55"}


def test_norm_trace_json_schema():
    rc, out, _ = call("norm-trace", "--N", "2", "--box", "1", "--format", "json")
    doc = json.loads(out)["polynomial"]
    assert QGammaPoly.from_json(json.dumps(doc))(1, 1) == 6
    assert doc[0] == {"monomial": [0, 0], "coefficient": "1"}
    rc, out, _ = call("norm-trace", "--N", "2", "--box", "2", "--q", "1/2", "--gamma", "1/3", "--format", "json")
    assert rc == 0 and set(json.loads(out)["value"]) == {"num", "den"}
    assert call("norm-trace", "--N", "2", "--box", "1", "--q", "1/2")[0] == 2


def test_guard_exit_code():
    rc, _, err = call("norm-trace", "--N", "5", "--box", "1")
    assert rc == 1 and "guard" in err


def test_bad_arguments_exit_code():
    assert call("schur", "--lam", "a,b")[0] == 2
    assert call("bogus")[0] == 2
    assert call("walks-count", "--K", "1", "--muL", "1", "--muR", "2,1")[0] == 2
    assert call("circulant-power", "--M", "5", "--K", "1")[0] == 2


def test_amplitude_csv():
    rc, out, _ = call("amplitude", "--M", "6", "--beta", "0.5", "--muL", "3,1", "--muR", "4,1", "--format", "csv")
    header, row = out.strip().split("\n")
    assert header == "spectral,determinant"
    a, b = map(float, row.split(","))
    assert abs(a - b) < 1e-12


def test_ramus_and_gen_ramus_report_tolerance():
    rc, out, _ = call("ramus-check", "--R", "3", "--n", "14", "--t", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["exact"] == "5462" and doc["pass"] is True and doc["tol"] == 1e-9
    rc, out, _ = call("gen-ramus-check", "--M", "8", "--K", "4", "--muL", "2,1", "--muR", "2,1", "--det")
    assert "lhs: 12" in out and "pass: True" in out


def test_bethe_and_trace():
    rc, out, _ = call("bethe-check", "--M", "6", "--I", "4,2", "--format", "json")
    assert rc == 0 and json.loads(out)["pass"] is True
    rc, out, _ = call("total-trace", "--M", "4", "--beta", "1", "--h", "0.2", "--dense", "--format", "json")
    assert json.loads(out)["pass"] is True


def test_correlator_and_moment():
    rc, out, _ = call("correlator", "--beta", "0", "--sites", "2,1")
    assert abs(float(out) - 0.25) < 1e-12
    rc, out, _ = call("correlator", "--beta", "1", "--sites", "3,1", "--M", "4", "--check", "--format", "json")
    assert json.loads(out)["pass"] is True
    rc, out, _ = call("moment-mean", "--N", "1", "--M", "3", "--beta", "0")
    assert abs(float(out) - 2) < 1e-12


def test_counts():
    assert call("pinned-count", "--N", "2", "--box", "1", "--k", "1")[1] == "5\n"
    assert call("diag-constrained", "--N", "2", "--box", "1", "--m", "4")[1] == "4\n"


def test_deterministic_output():
    a = call("norm-trace", "--N", "3", "--box", "2", "--format", "json")
    b = call("norm-trace", "--N", "3", "--box", "2", "--format", "json")
    assert a == b


def test_identity_suite_quick():
    rc, out, _ = call("identity-suite", "--format", "json")
    doc = json.loads(out)
    assert rc == 0 and doc["failed"] == "0" and int(doc["passed"]) >= 10
    assert all("tol" in r for r in doc["rows"])


@pytest.mark.parametrize("threads", ["1", "3"])
def test_entry_point_subprocess(threads):
    proc = subprocess.run([sys.executable, "-m", "xxcomb.cli", "identity-suite"], capture_output=True, text=True,
                          env={"VW_THREADS": threads, "PATH": ""}, timeout=120)
    assert proc.returncode == 0
    assert "passed:" in proc.stdout
