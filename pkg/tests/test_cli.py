import io
import json

import jsonschema
import pytest

from realburau.cli import run

SCALAR = {"type": ["string", "number"]}
VERDICT = {
    "type": "object",
    "required": ["t_input", "regime", "discrete", "faithful", "exactness", "evidence"],
    "additionalProperties": False,
    "properties": {
        "t_input": SCALAR,
        "regime": {"enum": ["NegativeHyperbolic", "PositiveOuter", "ParabolicBoundary",
                            "EllipticWindow", "ExcludedZero", "MinusOne", "One"]},
        "discrete": {"type": ["string", "null"],
                     "pattern": "^(Yes|No|NumericalNo|NumericalUndetermined|TriangleGroup\\(\\d+\\))$"},
        "faithful": {"enum": ["Yes", "No", "Undetermined", None]},
        "exactness": {"enum": ["Certified", "Numerical"]},
        "evidence": {"type": "array", "items": {"type": "array", "minItems": 3, "maxItems": 3,
                                                "items": {"type": "string"}}},
    },
}
MATRIX = {"type": "array", "items": {"type": "array", "items": SCALAR}}
ROOTS = {
    "type": "object", "required": ["word", "entry21", "squarefree", "roots"],
    "properties": {"roots": {"type": "array", "items": {
        "type": "object", "required": ["interval", "approx", "positive", "in_window"]}}},
}
B4PAIR = {"type": "object", "required": ["symbolic_unequal", "equal_at_t0"],
          "properties": {"symbolic_unequal": {"type": "boolean"},
                         "equal_at_t0": {"type": "boolean"}}}


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_golden():
    code, out, _ = cli("classify", "--t", "q(3/2,1/2,5)")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, VERDICT)
    assert (doc["discrete"], doc["faithful"], doc["exactness"]) == ("Yes", "Yes", "Certified")


@pytest.mark.parametrize("t", ["-2", "-1", "0", "1", "1/2", "0.5", "1.0", "q(1/2,1/2,5)"])
def test_classify_schema(t):
    code, out, _ = cli("classify", "--t", t)
    assert code == 0
    jsonschema.validate(json.loads(out), VERDICT)


def test_roots_example():
    code, out, _ = cli("roots", "--word", "s2^-2 s1 s2^-1")
    doc = json.loads(out)
    jsonschema.validate(doc, ROOTS)
    positive = [r for r in doc["roots"] if r["positive"]]
    assert len(positive) == 1 and positive[0]["in_window"] is True


def test_verify_b4_pair():
    code, out, _ = cli("verify", "b4-pair")
    doc = json.loads(out)
    jsonschema.validate(doc, B4PAIR)
    assert doc["symbolic_unequal"] and doc["equal_at_t0"]


@pytest.mark.parametrize("argv", [
    ("burau", "--n", "4", "--word", "@omega1"),
    ("specialize", "--n", "3", "--word", "s1 s2", "--t", "q(3/2,1/2,5)"),
])
def test_matrix_outputs(argv):
    code, out, _ = cli(*argv)
    assert code == 0
    jsonschema.validate(json.loads(out)["matrix"], MATRIX)


@pytest.mark.parametrize("argv", [
    ("isometry", "--t", "1", "--gen", "x"),
    ("isometry", "--t", "-2", "--gen", "yx-inv"),
    ("hunt", "--word", "s2^5 s1^2 s2^-4 s1 s2^3"),
    ("verify", "squier"),
    ("verify", "duality", "--n", "4", "--count", "5"),
    ("verify", "pingpong", "--t", "q(3/2,1/2,5)", "--case", "2"),
    ("verify", "galois", "--n", "3"),
    ("verify", "unipotent", "--word", "s2 s1^-1 s2 s1^-1 s2 s1^-1", "--t", "1"),
    ("orbit", "--t", "1/2", "--iters", "50"),
    ("classify", "--t", "3", "--format", "text"),
])
def test_other_subcommands_succeed_deterministically(argv):
    first = cli(*argv)
    assert first[0] == 0, first[2]
    assert cli(*argv) == first


def test_unipotent_precondition_exit():
    code, _, err = cli("verify", "unipotent", "--word", "s1", "--t", "1")
    assert code == 2 and "kernel" in err


def test_figure(tmp_path):
    path = tmp_path / "f.svg"
    code, out, _ = cli("figure", "--t", "-2", "--case", "1", "--out", str(path))
    assert code == 0 and path.read_text().startswith("<?xml")


@pytest.mark.parametrize("argv", [
    ("classify", "--t", "abc"),
    ("classify",),
    ("burau", "--n", "3", "--word", "s3"),
    ("burau", "--n", "5", "--word", "s1"),
    ("roots", "--word", "s1^3"),
    ("specialize", "--n", "3", "--word", "s1", "--t", "0"),
    ("verify", "galois", "--alpha", "q(1/2,1/2,5)"),
    ("verify", "pingpong", "--t", "1", "--case", "2"),
    ("figure", "--t", "1", "--case", "3", "--out", "/nonexistent/dir/f.svg"),
    ("orbit", "--t", "5"),
    ("nonsense",),
])
def test_bad_input_exits_2(argv, capsys):
    code, out, err = cli(*argv)
    assert code == 2
    assert out == ""


def test_global_flags_before_and_after():
    a = cli("--format", "text", "classify", "--t", "2")
    b = cli("classify", "--t", "2", "--format", "text")
    assert a == b and a[1].startswith("discrete:")
