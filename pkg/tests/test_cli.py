"""Command line golden tests: parse/print identity, JSON schema, exit codes."""

import json
import subprocess
import sys

import pytest

from qhk.cache import cache_path
from qhk.cli import main
from qhk.spaces import RealProj


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize_golden(capsys):
    code, out, _ = run(capsys, "normalize", "Q^6 Q^2 a1")
    assert code == 0
    assert out == "Q^5 Q^3 a1\n"


def test_normalize_is_idempotent(capsys):
    code, first, _ = run(capsys, "normalize", "Q^2 a1^3 + Q^4 Q^2 a1")
    assert code == 0
    code, second, _ = run(capsys, "normalize", first.strip())
    assert code == 0
    assert first == second


def test_act_golden(capsys):
    code, out, _ = run(capsys, "act", "--sq", "2", "Q^9 Q^5 g1")
    assert (code, out) == (0, "Q^7 Q^5 g1\n")
    code, out, _ = run(capsys, "act", "--sq", "4", "Q^9 Q^5 g1")
    assert (code, out) == (0, "0\n")


def test_basis_listing(capsys):
    code, out, _ = run(capsys, "basis", "--space", "S1", "--degree", "3", "--max-length", "3")
    assert code == 0
    assert out.splitlines() == ["Q^2 g1", "g1^3"]


def test_sieve_lists_the_degree_three_candidate(capsys):
    code, out, _ = run(capsys, "sieve", "--space", "P", "--degree", "3", "--max-length", "3")
    assert code == 0
    assert out.splitlines() == ["Q^2 a1 + a3 + a1^3 + a1*a2"]


def test_annihilated_and_primitives_dimensions(capsys):
    code, out, _ = run(capsys, "annihilated", "--space", "P", "--degree", "3", "--max-length", "3")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "primitives", "--space", "P", "--degree", "3", "--max-length", "3")
    assert code == 0 and len(out.splitlines()) == 2


def test_normalize_json_schema(capsys):
    code, out, _ = run(capsys, "normalize", "--format", "json", "Q^9 Q^5 g1")
    assert code == 0
    assert json.loads(out) == {
        "terms": [
            {"factors": [{"ops": [9, 5], "gen": {"space": "S1", "index": 1}, "exp": 1}]}
        ]
    }


def test_subspace_json_schema(capsys):
    code, out, _ = run(
        capsys, "sieve", "--space", "P", "--degree", "3", "--max-length", "3",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"space", "degree", "max_length", "dimension", "basis"}
    assert payload["space"] == "P" and payload["dimension"] == 1
    assert payload["basis"][0]["terms"]


def test_verify_pass_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "1", "--space", "P", "--max-degree", "8")
    assert code == 0
    assert out.startswith("theorem 1 over P: PASS")
    code, out, _ = run(
        capsys, "verify", "--theorem", "3", "--space", "P", "--max-degree", "4",
        "--max-length", "2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"theorem", "space", "bounds", "checked", "failures", "excluded", "millis"}
    assert payload["failures"] == []


def test_verify_requires_degree_for_numbered_theorems(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--theorem", "2", "--space", "P"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_bad_expression_is_a_usage_error(capsys):
    code, _, err = run(capsys, "act", "--sq", "1", "Q^2 (a1 + a3)")
    assert code == 2
    assert "error:" in err


def test_bad_space_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["basis", "--space", "X5", "--degree", "3"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_cache_flag_round_trip(tmp_path, capsys):
    argv = ["basis", "--space", "P", "--degree", "6", "--cache", str(tmp_path)]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    path = cache_path(tmp_path, RealProj(), 6, 2)
    assert path.exists()
    stamp = path.read_bytes()
    code, second, _ = run(capsys, *argv)
    assert code == 0
    assert first == second
    assert path.read_bytes() == stamp


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhk.cli", "normalize", "Q^1 a1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "a1^2\n"
