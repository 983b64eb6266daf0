"""CLI surface: formats, exit codes, determinism, golden JSON schemas."""

import json

import pytest

from rslocal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_lfactor_text(capsys):
    code, out = run_cli(capsys, "lfactor", "--l", "3", "--k", "1")
    assert code == 0
    assert out.strip() == "(1)/(1 - q^(-1)*X)"


def test_lfactor_latex(capsys):
    code, out = run_cli(capsys, "lfactor", "--l", "2", "--k", "1", "--format", "latex")
    assert code == 0
    assert out.strip() == "\\frac{1}{1 - q^{-1/2}X}"


def test_lfactor_json_golden(capsys):
    code, out = run_cli(capsys, "lfactor", "--l", "2", "--k", "1", "--format", "json")
    assert code == 0
    golden = (
        '{"command": "lfactor", "d": 1, "dual_pair": true, "k": 1, "l": 2, '
        '"right": "St", "s0": "0", "text": "(1)/(1 - q^(-1/2)*X)", '
        '"value": {"den": [{"den": [[0, "1/1"]], "num": [[0, "1/1"]]}, '
        '{"den": [[1, "1/1"]], "num": [[0, "-1/1"]]}], '
        '"num": [{"den": [[0, "1/1"]], "num": [[0, "1/1"]]}], "var": "X"}}'
    )
    assert out.strip() == golden


def test_lfactor_distinct_inertial(capsys):
    code, out = run_cli(
        capsys, "lfactor", "--l", "4", "--k", "2", "--distinct-inertial"
    )
    assert code == 0
    assert out.strip() == "1"


def test_lfactor_three_way_flag(capsys):
    outs = set()
    for right in ("St", "Sigma", "Sp"):
        _, out = run_cli(capsys, "lfactor", "--l", "4", "--k", "2", "--right", right)
        outs.add(out)
    assert len(outs) == 1


def test_pfd_text(capsys):
    code, out = run_cli(capsys, "pfd", "--l", "2", "--k", "2")
    assert code == 0
    assert "term 0: pole 1  lambda (q)/(q - 1)" in out
    assert "sum of lambdas: 1" in out
    assert "recombination: ok" in out


def test_pfd_json(capsys):
    code, out = run_cli(
        capsys, "pfd", "--l", "3", "--k", "2", "--d", "2", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["recombines"] is True
    assert data["lambda_sum"] == "1"
    assert data["power"] == 2
    assert len(data["terms"]) == 2


def test_pfd_trivial_pair(capsys):
    code, out = run_cli(capsys, "pfd", "--l", "3", "--k", "2", "--distinct-inertial")
    assert code == 0
    assert "no decomposition" in out


def test_whittaker_spherical(capsys):
    code, out = run_cli(
        capsys, "whittaker", "spherical", "--sigma", "2", "--lambda", "1,0"
    )
    assert code == 0
    assert out.strip() == "1 + q^(-1)"


def test_whittaker_spherical_json(capsys):
    code, out = run_cli(
        capsys,
        "whittaker",
        "spherical",
        "--sigma",
        "2",
        "--lambda",
        "2,1",
        "--format",
        "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["variant"] == "spherical" and data["lambda"] == [2, 1]


def test_whittaker_essential(capsys):
    code, out = run_cli(
        capsys, "whittaker", "essential", "--l", "4", "--lambda", "3,0,0"
    )
    assert code == 0
    assert out.strip() == "q^(-9)"


def test_whittaker_essential_bad_length(capsys):
    code = main(["whittaker", "essential", "--l", "4", "--lambda", "1,0"])
    assert code == 2


def test_segments_describe(capsys):
    code, out = run_cli(capsys, "segments", "St(3)@rho")
    assert code == 0
    assert "St(3)@rho" in out and "group size 3" in out


def test_segments_dual(capsys):
    code, out = run_cli(capsys, "segments", "St(3)@rho", "--dual", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "Sp" and data["expression"] == "Sp(3)@rho"


def test_segments_product_json(capsys):
    code, out = run_cli(
        capsys, "segments", "[0,0]@rho x [2,2]@rho", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["generic_product"] is True and data["standard"] is False


def test_segments_parse_error_exit_2(capsys):
    code = main(["segments", "St(3@rho"])
    assert code == 2


def test_segments_semantic_error_exit_2(capsys):
    code = main(["segments", "St(2)@rho(r=2,d=3)"])
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("rs-integral", "--case", "tate", "--depth", "10"),
        ("rs-integral", "--case", "steinberg-distinct", "--l", "3", "--k", "2", "--depth", "10"),
        ("rs-integral", "--case", "steinberg-equal", "--l", "3", "--depth", "10"),
        ("rs-integral", "--case", "spherical-cauchy", "--n", "2", "--depth", "8"),
    ],
)
def test_rs_integral_cases_pass(capsys, argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] is True
    assert data["first_mismatch"] is None
    assert set(data) >= {"series", "closed_form", "verdict", "first_mismatch"}


def test_rs_integral_depth_env(capsys, monkeypatch):
    monkeypatch.setenv("RS_DEPTH", "7")
    code, out = run_cli(capsys, "rs-integral", "--case", "tate")
    assert code == 0
    assert json.loads(out)["depth"] == 7


def test_verify_tate_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "tate")
    assert code == 0
    assert "[PASS] tate" in out


def test_verify_mutation_suite(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "mutation", "--depth", "10")
    assert code == 0
    assert "[PASS] mutation" in out


def test_verify_json_schema(capsys):
    code, out = run_cli(
        capsys, "verify", "--suite", "pole-sum", "--max-l", "3", "--depth", "10",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert all(
        set(c) == {"name", "description", "passed", "first_mismatch"}
        for c in data["checks"]
    )
    names = [c["name"] for c in data["checks"]]
    assert names == sorted(names)


def test_verify_deterministic(capsys):
    _, out1 = run_cli(
        capsys, "verify", "--suite", "props", "--seed", "5", "--format", "json"
    )
    _, out2 = run_cli(
        capsys, "verify", "--suite", "props", "--seed", "5", "--format", "json"
    )
    assert out1 == out2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "bogus"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["lfactor", "--l", "3"])  # missing --k
    assert err.value.code == 2


def test_lfactor_bad_precondition_exit_2(capsys):
    code = main(["lfactor", "--l", "2", "--k", "3"])
    assert code == 2


def test_half_integer_flag_parsing(capsys):
    code, out = run_cli(
        capsys, "lfactor", "--l", "2", "--k", "1", "--s0", "1/2"
    )
    assert code == 0
    assert out.strip() == "(1)/(1 - X)"
