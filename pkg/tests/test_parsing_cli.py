"""Literal grammar (golden corpus) and the command-line surface."""

import json
import pathlib

import pytest

from skewpoly import parse_descriptor
from skewpoly.cli import main
from skewpoly.errors import FieldLiteralError, ParseError
from skewpoly.parsing import parse_element, parse_polynomial
from skewpoly.poly import SkewPolynomial

GOLDEN = pathlib.Path(__file__).parent / "data" / "poly_golden.json"
F4_DESC = "gf:2^2:modulus=1,1,1:frob=1"
F9_DESC = "gf:3^2:modulus=1,0,1:frob=1"


def test_golden_corpus():
    cases = json.loads(GOLDEN.read_text())
    assert len(cases) >= 50
    for case in cases:
        field = parse_descriptor(case["field"])
        p = parse_polynomial(case["input"], field)
        assert str(p) == case["canonical"], case
        # canonical form is a fixed point of parse-then-serialize
        assert parse_polynomial(case["canonical"], field) == p
        assert str(parse_polynomial(case["canonical"], field)) == case["canonical"]


def test_parse_coefficient_tuples(F4):
    u = F4.generator
    assert parse_polynomial("T^2+1", F4).coeffs == (F4.one, F4.zero, F4.one)
    assert parse_polynomial("(u+1)*T - u", F4).coeffs == (u, u + 1)


def test_parse_errors_have_positions(F4):
    with pytest.raises(ParseError) as err:
        parse_polynomial("T^2 + $", F4)
    assert err.value.position == 6
    with pytest.raises(FieldLiteralError):
        parse_polynomial("T + z", F4)
    with pytest.raises(ParseError):
        parse_element("T + 1", F4)  # a polynomial is not an element
    with pytest.raises(ParseError):
        parse_polynomial("(T + 1", F4)


def test_cli_eval(capsys):
    assert main(["eval", "--field", "qx-inv", "--poly", "T^2 - 1", "--at", "x"]) == 0
    assert "value: 0" in capsys.readouterr().out


def test_cli_roots_lists_three(capsys):
    assert main(["roots", "--field", F4_DESC, "--poly", "T^2+1"]) == 0
    out = capsys.readouterr().out
    assert "roots: 1, u, u+1" in out
    assert "class_of_one_count: 3" in out


def test_cli_closure_count_examples(capsys):
    assert main(["closure-count", "--field", "gf:3", "--poly", "T^2 + 2*T + 1"]) == 0
    assert "count: 4" in capsys.readouterr().out
    assert main(["closure-count", "--field", "gf:2", "--poly", "T^2+T+1"]) == 0
    assert "count: 3" in capsys.readouterr().out


def test_cli_json_roundtrips(capsys):
    assert (
        main(
            [
                "pfd",
                "--field",
                F9_DESC,
                "--num",
                "1",
                "--den",
                "T^2 + 2",
                "--format",
                "json",
            ]
        )
        == 0
    )
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "pfd" and doc["recombines"] is True
    field = parse_descriptor(doc["field"])
    # every reported element parses back in the reported field
    for pair in doc["terms"]:
        parse_element(pair[0], field)
        parse_element(pair[1], field)
    parse_polynomial(doc["polynomial_part"], field)


def test_cli_minpoly_and_rank(capsys):
    assert main(["minpoly", "--field", F4_DESC, "--elements", "1,u", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["minimal_poly"] == "T^2 + 1" and doc["rank"] == 2


def test_cli_vandermonde_rank(capsys):
    assert main(["vandermonde-rank", "--field", F4_DESC, "--elements", "1,u,u^2"]) == 0
    out = capsys.readouterr().out
    assert "rank: 2" in out and "p_independent: False" in out


def test_cli_conjugacy(capsys):
    assert main(["conjugacy", "--field", F9_DESC, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 3
    assert sorted(len(c) for c in doc["classes"]) == [1, 4, 4]


def test_cli_bray_whaples(capsys):
    assert main(["bray-whaples", "--field", F9_DESC, "--elements", "1,u"]) == 0
    out = capsys.readouterr().out
    assert "roots: 1, u" in out


def test_cli_interp(capsys):
    assert main(
        ["interp", "--field", F9_DESC, "--elements", "1,u", "--values", "2,0"]
    ) == 0
    out = capsys.readouterr().out
    assert out.startswith("command: interp")


def test_cli_divmod_and_gcrd(capsys):
    assert main(
        ["divmod", "--field", F4_DESC, "--num", "T^2+1", "--den", "T + u", "--format", "json"]
    ) == 0
    doc = json.loads(capsys.readouterr().out)
    field = parse_descriptor(F4_DESC)
    q = parse_polynomial(doc["quotient"], field)
    r = parse_polynomial(doc["remainder"], field)
    assert q * parse_polynomial("T + u", field) + r == parse_polynomial("T^2+1", field)
    assert main(["gcrd", "--field", F4_DESC, "--p", "T^2+1", "--q", "T+1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert "gcrd" in doc and "lclm" in doc


def test_cli_extension_verify(capsys):
    assert main(["extension-verify", "--field", "q", "--poly", "T^2 - 1"]) == 0
    out = capsys.readouterr().out
    assert "ok: True" in out
    assert "y0: (1) / [(y0)]" in out  # the twist sends the root to its inverse


def test_cli_hadamard(capsys):
    assert main(
        [
            "hadamard", "alpha", "--field", F9_DESC,
            "--terms", "1:u", "--precision", "8", "--format", "json",
        ]
    ) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["series"]["valuation"] == 0
    assert len(doc["series"]["coeffs"]) == 8
    assert main(
        [
            "hadamard", "mul", "--field", F9_DESC,
            "--a-num", "1", "--a-den", "1 - u*T",
            "--b-num", "1", "--b-den", "1 - u*T",
            "--precision", "6",
        ]
    ) == 0
    capsys.readouterr()
    assert main(
        [
            "hadamard", "recover", "--field", F9_DESC,
            "--num", "1", "--den", "1 - u*T", "--format", "json",
        ]
    ) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["threshold"] == 0 and doc["terms"] == [["1", "u"]]


def test_cli_exit_codes(capsys):
    assert main(["nonsense"]) == 2
    assert main(["roots", "--field", "qi", "--poly", "T"]) == 1
    err = capsys.readouterr().err
    assert "error[infinite-field]" in err
    assert main(["eval", "--field", "q", "--poly", "T^2 + $", "--at", "0"]) == 1
    assert "error[syntax-error]" in capsys.readouterr().err


def test_cli_selftest(capsys):
    assert main(["selftest", "--seed", "7", "--cases", "25"]) == 0
    out = capsys.readouterr().out
    assert "product-formula: pass" in out
    assert "FAIL" not in out


def test_docs_cli_examples_run(capsys):
    """Every CLI invocation shown in the README must execute cleanly."""
    readme = pathlib.Path(__file__).parent.parent / "README.md"
    if not readme.exists():
        pytest.skip("README not written yet")
    ran = 0
    for line in readme.read_text().splitlines():
        line = line.strip()
        if line.startswith("skewpoly "):
            argv = _split_shell(line)[1:]
            assert main(argv) == 0, line
            capsys.readouterr()
            ran += 1
    assert ran >= 5


def _split_shell(line):
    import shlex

    return shlex.split(line)
