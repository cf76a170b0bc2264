import argparse
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, strategies as st

from ruelle_bands.cli import main, parse_grid, parse_irrep, parse_lambda
from ruelle_bands.exactnum import ComplexQuad
from ruelle_bands.report import dumps, parse_dual
from ruelle_bands.reps import CompactGroupData
from ruelle_bands.rootdata import real_hyperbolic, restricted_root_data

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "schema.json").read_text())


def validate(obj, kind):
    jsonschema.validate(obj, {"$ref": f"#/$defs/{kind}", "$defs": SCHEMA["$defs"]})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["describe-group", "--n", "3"], "describe_group"),
        (["describe-group", "--family", "su", "--n", "2"], "describe_group"),
        (["branch", "--n", "4", "--sigma", "sh:2"], "branching"),
        (["correspond", "--n", "2", "--sigma", "sh:1", "--tau", "circ:-1", "--lambda=-rho+2i"], "correspondence"),
        (["correspond", "--n", "3", "--sigma", "sh:2", "--tau", "sh:1", "--lambda=1/3",
          "--normalization", "curvature_minus_one"], "correspondence"),
        (["correspond", "--n", "3", "--sigma", "sh:1", "--tau", "triv", "--lambda=-3/2", "--unit", "alpha0",
          "--grid-imag", "0:2:1/2"], "correspondence_grid"),
        (["selftest"], "selftest"),
    ],
)
def test_json_output_is_canonical_and_valid(capsys, argv, kind):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    obj = json.loads(out)
    assert dumps(obj) + "\n" == out  # byte-identical round trip
    validate(obj, kind)


def test_exact_values_parse_back(capsys):
    _, out, _ = run(capsys, "correspond", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=-1/2+3i")
    obj = json.loads(out)
    assert parse_dual(obj["mu"]) == ComplexQuad(Fraction(1, 4) + 9 + Fraction(1, 2))
    assert parse_dual(obj["weight_term"]) == Fraction(1, 2)


def test_unicode_minus(capsys):
    _, a, _ = run(capsys, "correspond", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=−1/2−3i")
    _, b, _ = run(capsys, "correspond", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=-1/2-3i")
    assert a == b


def test_jobs_preserve_order(capsys):
    argv = ["correspond", "--n", "4", "--sigma", "sh:2", "--tau", "sh:1", "--grid=-2:2:1/4", "--grid-imag", "0:1:1/2"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "4")
    assert serial == parallel
    assert len(json.loads(serial)["results"]) == 17 * 3


def test_float_output(capsys):
    _, out, _ = run(capsys, "correspond", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=0", "--float")
    obj = json.loads(out)
    assert obj["mu"] == {"re": 0.5, "im": 0.0}
    assert obj["weight_term"] == 0.5
    assert '"exact":{' not in out and '"exact":"' not in out


def test_table_output(capsys):
    code, out, _ = run(capsys, "bands", "--n", "2", "--k-max", "2", "--output", "table")
    assert code == 0
    assert out.splitlines()[0].split() == ["k", "real_part"]
    assert out.splitlines()[1].split() == ["0", "-0.5"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["describe-group", "--family", "sp", "--n", "2"], 2),
        (["describe-group", "--n", "0"], 2),
        (["correspond", "--n", "2", "--sigma", "sh:1", "--tau", "triv"], 2),
        (["correspond", "--n", "2", "--sigma", "bogus", "--tau", "triv", "--lambda=0"], 2),
        (["correspond", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=1+"], 2),
        (["correspond", "--n", "2", "--sigma", "sh:1", "--tau", "sh:3", "--lambda=0"], 3),
        (["correspond", "--family", "su", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=0"], 3),
        (["check-assumptions", "--n", "3", "--sigma", "hw:[1,2]", "--tau", "triv"], 3),
        (["correspond", "--n", "1", "--sigma", "circ:2", "--tau", "triv", "--lambda=0", "--paper-n1-convention"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_selftest_fault_injection_exits_4(capsys):
    code, out, _ = run(capsys, "selftest", "--inject-fault")
    assert code == 4
    failed = [c for c in json.loads(out)["checks"] if c["status"] == "fail"]
    assert failed and all(c["witness"] for c in failed)


def test_profile_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("RUELLE_BANDS_PROFILE", "fast")
    _, out, _ = run(capsys, "selftest")
    assert json.loads(out)["profile"] == "fast"


def test_jordan_and_assumptions(capsys):
    _, out, _ = run(capsys, "jordan", "--n", "2", "--sigma", "sh:1", "--tau", "triv", "--lambda=-rho")
    assert json.loads(out)["jordan"]["max_size"] == 2
    _, out, _ = run(capsys, "check-assumptions", "--n", "2", "--sigma", "sh:1", "--tau", "circ:1")
    obj = json.loads(out)
    assert (obj["assumption1"], obj["assumption2"], obj["weyl_image"]["hw"]) == (True, False, [-1])


def test_console_script_module_entry():
    res = subprocess.run([sys.executable, "-m", "ruelle_bands.cli", "bands", "--n", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["group"]["name"] == "SO(2,1)"


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_lambda_syntax_round_trip(a, b):
    g = real_hyperbolic(2)
    text = f"{a}{'+' if b >= 0 else '-'}{abs(b)}i"
    assert parse_lambda(text, g) == ComplexQuad(a, b)


def test_lambda_rho_and_units():
    g = real_hyperbolic(3)
    rd = restricted_root_data(g)
    assert parse_lambda("-rho", g) == ComplexQuad(-rd.norm_rho)
    assert parse_lambda("-3/2", g, unit="alpha0") == ComplexQuad(-rd.norm_rho)
    assert parse_lambda("2*rho+i", g) == ComplexQuad(2 * rd.norm_rho, 1)
    with pytest.raises(argparse.ArgumentTypeError):
        parse_lambda("", g)


def test_grid_and_irreps():
    assert parse_grid("0:1:1/3") == [0, Fraction(1, 3), Fraction(2, 3), 1]
    with pytest.raises(argparse.ArgumentTypeError):
        parse_grid("0:1:0")
    so4 = CompactGroupData(4, 1)
    assert parse_irrep("hw:[2,-1]", so4).highest_weight == (2, -1)
    assert parse_irrep("sh:3", so4).highest_weight == (3, 0)
    assert parse_irrep("triv", so4).is_trivial


def test_describe_group_examples(capsys):
    _, out, _ = run(capsys, "describe-group", "--family", "so", "--n", "2", "--bands", "3")
    lines = [parse_dual({"exact": x, "approx": 0}) for x in json.loads(out)["root_data"]["lines"]]
    assert lines == [Fraction(-1, 2), -1, Fraction(-3, 2), -2]
    _, out, _ = run(capsys, "describe-group", "--family", "su", "--n", "1")
    rd = json.loads(out)["root_data"]
    assert (rd["m_alpha"], rd["m_2alpha"]) == (2, 1)


def test_unsupported_family_message(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["describe-group", "--family", "sp", "--n", "2"])
    assert exc.value.code == 2
    assert "UnsupportedFamily" in capsys.readouterr().err


def test_h3_correspondence_examples(capsys):
    argv = ["correspond", "--family", "so", "--n", "2", "--sigma", "sh:1", "--tau", "circ:1", "--lambda", "0"]
    _, out, _ = run(capsys, *argv)
    assert parse_dual(json.loads(out)["mu"]) == ComplexQuad(Fraction(1, 4))
    _, out, _ = run(capsys, *argv, "--normalization", "curvature_minus_one")
    obj = json.loads(out)
    assert parse_dual(obj["mu"]) == ComplexQuad(1)
    assert parse_dual(obj["lambda"]) == ComplexQuad(0)
