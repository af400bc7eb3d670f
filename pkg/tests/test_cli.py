import json

import pytest

from cli.commands import (
    EXIT_DEGENERATE_Q,
    EXIT_EVAL_AT_ZERO,
    EXIT_IDENTITY_FAILURE,
    EXIT_NOT_HOMOGENEOUS,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_USAGE,
    main,
)
from data.supercharacter_examples import load_examples
from gelfand_graev import identities
from gelfand_graev.rho_engine import GelfandGraev


@pytest.fixture
def rho_file(tmp_path):
    def write(record):
        path = tmp_path / "expression.json"
        path.write_text(json.dumps(record), encoding="utf-8")
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_rho(capsys):
    assert run(capsys, "rho", "2") == (EXIT_OK, "(q^2-1)*h[2] - (q-1)*h[1,1]\n")
    assert run(capsys, "rho", "2", "--q", "2") == (EXIT_OK, "3*h[2] - 1*h[1,1]\n")
    assert run(capsys, "rho", "0") == (EXIT_OK, "1\n")


def test_rho_in_other_basis(capsys):
    code, out = run(capsys, "rho", "1", "--basis", "p")
    assert code == EXIT_OK
    assert out == "(q-1)*p[1]\n"


def test_rho_structured_is_deterministic(capsys):
    first = run(capsys, "rho", "4", "--format", "structured")
    second = run(capsys, "rho", "4", "--format", "structured")
    assert first == second
    assert json.loads(first[1])["basis"] == "h"


def test_verify(capsys):
    code, out = run(capsys, "verify", "--max-n", "3")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "all identities passed (4 families, max_n=3)"


def test_verify_at_zero(capsys):
    code, out = run(capsys, "verify", "--max-n", "0")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "routes n=0: ok"


def test_verify_reports_failure(capsys, monkeypatch):
    monkeypatch.setitem(identities.SUITE, "convolution", (1, lambda n: n != 2))
    code, out = run(capsys, "verify", "--max-n", "2")
    assert code == EXIT_IDENTITY_FAILURE
    assert "convolution n=2: FAILED" in out


def test_product(capsys):
    code, out = run(capsys, "product", "1", "1", "--q", "2")
    assert code == EXIT_OK
    assert out == "1*h[1,1]\n"


def test_product_usage_errors(capsys):
    assert main(["product"]) == EXIT_USAGE
    assert main(["product", "0"]) == EXIT_USAGE


def test_to_rho(capsys, rho_file):
    path = rho_file({"rho_terms": [{"partition": [3], "coefficient": "1"}, {"partition": [2, 1], "coefficient": "1"}]})
    code, out = run(capsys, "to-rho", path, "--q", "2")
    assert code == EXIT_OK
    assert out.splitlines() == ["1*rho[3] + 1*rho[2,1]", "dim = 2", "natural = true"]


def test_to_rho_from_symfunc_file(capsys, rho_file):
    path = rho_file(GelfandGraev.rho(4).to_record())
    code, out = run(capsys, "to-rho", path, "--q", "2", "--format", "structured")
    assert code == EXIT_OK
    record = json.loads(out)
    assert record["rho_terms"] == [{"partition": [4], "coefficient": "1"}]
    assert record["dim"] == "1"


@pytest.mark.parametrize("index", range(4))
def test_to_rho_supercharacter_examples(capsys, rho_file, index):
    example = load_examples()[index]
    code, out = run(capsys, "to-rho", rho_file(example.expansion.to_record()), "--q", "2")
    assert code == EXIT_OK
    assert f"dim = {example.dimension}" in out.splitlines()


def test_to_rho_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["to-rho", str(path), "--q", "2"]) == EXIT_PARSE_ERROR
    assert main(["to-rho", str(tmp_path / "missing.json"), "--q", "2"]) == EXIT_PARSE_ERROR


def test_to_rho_degenerate_q(rho_file):
    path = rho_file(GelfandGraev.rho(2).to_record())
    assert main(["to-rho", path, "--q", "1"]) == EXIT_DEGENERATE_Q


def test_to_rho_not_homogeneous(rho_file):
    path = rho_file({"rho_terms": [{"partition": [2], "coefficient": "1"}, {"partition": [1], "coefficient": "1"}]})
    assert main(["to-rho", path, "--q", "2"]) == EXIT_NOT_HOMOGENEOUS


def test_hl(capsys):
    assert run(capsys, "hl", "2", "--t", "0") == (EXIT_OK, "1*h[2]\n")
    code, out = run(capsys, "hl", "2", "--twisted")
    assert code == EXIT_OK
    assert out == "(1+q^-1)*h[2] - q^-1*h[1,1]\n"


def test_hl_at_zero(capsys):
    assert main(["hl", "2", "--q", "0"]) == EXIT_EVAL_AT_ZERO


def test_count_irr(capsys):
    code, out = run(capsys, "count-irr", "3", "--q", "2")
    assert code == EXIT_OK
    assert out.splitlines() == ["1: L = 2, l = 1", "2: L = 1, l = 1", "3: L = 2, l = 2"]


def test_families(capsys):
    code, out = run(capsys, "families", "3")
    assert code == EXIT_OK
    assert len(out.splitlines()) == 5


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rho.txt"
    assert main(["rho", "1", "--out", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8") == "(q-1)*h[1]\n"


@pytest.mark.parametrize("argv", [["rho", "2", "--q", "1.5"], ["rho", "-1"], ["nope"], []])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


@pytest.mark.parametrize(
    "record",
    [
        {"basis": "h", "terms": [{"partition": [1], "coefficient": "1/0"}]},
        {"rho_terms": [{"partition": [1], "coefficient": "1/0"}]},
    ],
)
def test_to_rho_zero_denominator(rho_file, record):
    assert main(["to-rho", rho_file(record), "--q", "2"]) == EXIT_PARSE_ERROR


@pytest.mark.parametrize(
    "record",
    [
        {"basis": "h", "terms": [{"partition": [True], "coefficient": "1"}]},
        {"rho_terms": [{"partition": [True], "coefficient": "1"}]},
    ],
)
def test_to_rho_boolean_part(rho_file, record):
    assert main(["to-rho", rho_file(record), "--q", "2"]) == EXIT_PARSE_ERROR


def test_out_file_in_missing_directory(tmp_path, capsys):
    target = tmp_path / "missing" / "rho.txt"
    assert main(["rho", "2", "--out", str(target)]) == EXIT_USAGE
    assert not target.exists()
    assert "cannot write" in capsys.readouterr().err


def test_verify_up_to_six(capsys):
    code, out = run(capsys, "verify", "--max-n", "6")
    assert code == EXIT_OK
    assert out.strip().splitlines()[-1] == "all identities passed (4 families, max_n=6)"
