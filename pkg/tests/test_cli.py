import json
import subprocess
import sys

import numpy as np
import pytest

from cfckit.io import FormatError, matrix_from_json, matrix_to_json

MATRIX = {"n": 2, "entries": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [4.0, 0.0]]}
NONNORMAL = {"n": 2, "entries": [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "cfckit", *args],
        capture_output=True, text=True,
    )
    return proc


@pytest.fixture
def matrix_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(MATRIX))
    return str(path)


@pytest.fixture
def nonnormal_file(tmp_path):
    path = tmp_path / "nn.json"
    path.write_text(json.dumps(NONNORMAL))
    return str(path)


def test_apply_sqrt_golden(matrix_file):
    proc = run_cli("apply", "--matrix", matrix_file,
                   "--fn", '{"builtin":"sqrt"}', "--ring", "nnreal")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["junk"] is False and out["reason"] is None
    assert out["matrix"]["n"] == 2
    assert out["matrix"]["entries"] == [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [2.0, 0.0]]


def test_apply_junk_exits_zero(nonnormal_file):
    proc = run_cli("apply", "--matrix", nonnormal_file,
                   "--fn", '{"builtin":"exp"}', "--ring", "complex")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["junk"] is True and out["reason"] == "predicate_failed"
    assert all(pair == [0.0, 0.0] for pair in out["matrix"]["entries"])


def test_apply_n_zero_condition(matrix_file):
    proc = run_cli("apply-n", "--matrix", matrix_file,
                   "--fn", '{"poly": [[1.0, 0.0], [1.0, 0.0]]}', "--ring", "real")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["junk"] is True and out["reason"] == "zero_condition_failed"


def test_spectrum_golden(matrix_file):
    proc = run_cli("spectrum", "--matrix", matrix_file, "--ring", "real")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out == {
        "ring": "real",
        "points": [[1.0, 0.0], [4.0, 0.0]],
        "multiplicities": [1, 1],
        "source": "eigen",
    }


def test_quasispectrum_golden(matrix_file):
    proc = run_cli("quasispectrum", "--matrix", matrix_file)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["points"] == [[0.0, 0.0], [1.0, 0.0], [4.0, 0.0]]
    assert out["source"] == "unitization_quasi"


def test_quasispectrum_with_basis(tmp_path, matrix_file):
    basis = tmp_path / "basis.json"
    e11 = {"n": 2, "entries": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]}
    basis.write_text(json.dumps([e11]))
    m = tmp_path / "e11.json"
    m.write_text(json.dumps(e11))
    proc = run_cli("quasispectrum", "--matrix", str(m), "--basis", str(basis))
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["points"] == [[0.0, 0.0], [1.0, 0.0]]
    assert out["source"] == "intrinsic_quasi"


def test_unitize_info(matrix_file):
    proc = run_cli("unitize-info", "--matrix", matrix_file)
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["represented_dim"] == 4
    assert out["norm"] == pytest.approx(4.0)
    assert out["norm_via_map"] == pytest.approx(out["norm"], abs=1e-9)


def test_check_laws_passing(matrix_file):
    proc = run_cli("check-laws", "--matrix", matrix_file, "--ring", "real",
                   "--trials", "3", "--seed", "0")
    assert proc.returncode == 0
    out = json.loads(proc.stdout)
    assert out["failures"] == 0 and out["trials"] == 3
    assert "law" in proc.stderr  # human-readable table


def test_check_laws_deterministic(matrix_file):
    a = run_cli("check-laws", "--matrix", matrix_file, "--trials", "2", "--seed", "7")
    b = run_cli("check-laws", "--matrix", matrix_file, "--trials", "2", "--seed", "7")
    assert a.stdout == b.stdout


def test_check_laws_failure_exits_two(tmp_path):
    # non-diagonal input with an absurdly tight tolerance: the predicate
    # (exactly symmetric) passes but floating-point law residuals cannot
    m = tmp_path / "sym.json"
    m.write_text(json.dumps(
        {"n": 2, "entries": [[2.0, 0.0], [1.0, 0.0], [1.0, 0.0], [2.0, 0.0]]}))
    proc = run_cli("check-laws", "--matrix", str(m), "--ring", "real",
                   "--trials", "1", "--seed", "0", "--tol", "1e-300")
    assert proc.returncode == 2


def test_malformed_matrix_exits_one(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "entries": [[1.0, 0.0]]}))
    proc = run_cli("spectrum", "--matrix", str(bad))
    assert proc.returncode == 1
    assert "entries" in proc.stderr


def test_predicate_failure_exits_one(nonnormal_file):
    proc = run_cli("spectrum", "--matrix", nonnormal_file)
    assert proc.returncode == 1


def test_out_flag_writes_file(tmp_path, matrix_file):
    dest = tmp_path / "result.json"
    proc = run_cli("spectrum", "--matrix", matrix_file, "--out", str(dest))
    assert proc.returncode == 0
    assert json.loads(dest.read_text())["points"] == [[1.0, 0.0], [4.0, 0.0]]


def test_matrix_json_round_trip_bit_exact(rng):
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    obj = matrix_to_json(a)
    # through an actual JSON string, as the CLI would
    b = matrix_from_json(json.loads(json.dumps(obj)))
    assert np.array_equal(a, b)
    assert matrix_to_json(b) == obj


def test_matrix_from_json_field_errors():
    with pytest.raises(FormatError, match="'n'"):
        matrix_from_json({"entries": []})
    with pytest.raises(FormatError, match="entries"):
        matrix_from_json({"n": 1, "entries": [[1.0]]})


def test_env_var_overrides_tol(tmp_path, matrix_file):
    import os
    import subprocess as sp

    env = dict(os.environ, CFCKIT_TOL="1e-3")
    proc = sp.run([sys.executable, "-m", "cfckit", "spectrum",
                   "--matrix", matrix_file], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
