import glob
import io
import json
import os
from contextlib import redirect_stdout

import numpy as np
import pytest

from vnlift import gell_mann_basis
from vnlift.cli import main, matrix_to_pairs, pairs_to_matrix

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXDIR = os.path.join(ROOT, "fixtures")


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = main(list(argv))
    return status, buf.getvalue()


def test_pairs_round_trip():
    a = np.array([[1 + 2j, 0], [3, -4j]], dtype=complex)
    assert np.array_equal(pairs_to_matrix(matrix_to_pairs(a), 2, 2), a)


def test_basis_subcommand_matches_generator():
    status, out = run_cli("basis", "2")
    assert status == 0
    doc = json.loads(out)
    b = gell_mann_basis(2)
    assert [e["label"] for e in doc["elements"]] == list(b.labels)
    for entry, el in zip(doc["elements"], b.elements):
        assert np.allclose(pairs_to_matrix(entry["matrix"], 2, 2), el)


def test_lift_subcommand_hadamard():
    status, out = run_cli("lift", os.path.join(FIXDIR, "hadamard2.json"))
    assert status == 0
    doc = json.loads(out)
    assert doc["rank"] == 1
    assert doc["idempotency_defect"] <= 1e-12


def test_classify_text_output():
    status, out = run_cli("classify", os.path.join(FIXDIR, "rho0_x_2.json"))
    assert status == 0
    assert "classical-quantum" in out and "RULED-OUT" in out
    assert "dakic baseline" in out and "INCONCLUSIVE" in out


def test_classify_json_deterministic():
    path = os.path.join(FIXDIR, "rho0_x_sqrt2.json")
    _, first = run_cli("classify", path, "--json")
    _, second = run_cli("classify", path, "--json")
    assert first == second


def test_classify_with_oracle():
    status, out = run_cli(
        "classify", os.path.join(FIXDIR, "bell_t_0.5_0.3_0.json"),
        "--oracle", "50", "--json",
    )
    assert status == 0
    doc = json.loads(out)
    assert doc["oracle"]["left"]["best_residual"] > 0.01
    assert doc["oracle"]["left"]["trials"] == 50


def test_golden_reports_round_trip():
    goldens = sorted(glob.glob(os.path.join(FIXDIR, "golden", "*.report.json")))
    assert goldens
    for golden in goldens:
        state = os.path.join(FIXDIR, os.path.basename(golden).replace(".report", ""))
        _, out = run_cli("classify", state, "--json")
        with open(golden) as fh:
            assert out == fh.read()


def test_bell_subcommand():
    status, out = run_cli("bell", "0.5", "0.3", "0")
    assert status == 0
    assert "quantum-quantum      : True" in out
    assert "separable            : True" in out


def test_bell_subcommand_invalid_state_exits_2():
    status, _ = run_cli("bell", "1", "1", "1")
    assert status == 2


def test_classify_missing_file_exits_2():
    status, _ = run_cli("classify", "does_not_exist.json")
    assert status == 2


def test_classify_invalid_density_exits_2(tmp_path):
    rho = np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"m": 2, "n": 2, "rho": matrix_to_pairs(rho)}))
    status, _ = run_cli("classify", str(path))
    assert status == 2
    # The escape hatch admits deliberately invalid inputs.
    status, _ = run_cli("classify", str(path), "--no-validate")
    assert status == 0


def test_lift_non_unitary_exits_2(tmp_path):
    path = tmp_path / "nonunitary.json"
    path.write_text(json.dumps({"m": 2, "u": matrix_to_pairs(np.ones((2, 2)))}))
    status, _ = run_cli("lift", str(path))
    assert status == 2


def test_tolerance_flags_are_echoed():
    _, out = run_cli(
        "classify", os.path.join(FIXDIR, "rho0_x_2.json"),
        "--tol-rank", "1e-6", "--json",
    )
    assert json.loads(out)["tolerances"]["rank_rel"] == 1e-6


@pytest.mark.slow
def test_selftest_passes():
    status, out = run_cli("selftest", "--seed", "1")
    assert status == 0
    assert "FAIL" not in out
