import random

import pytest

from astgen import random_ast
from bfredholm.dsl import evaluate, parse, pretty
from bfredholm.errors import ParseError, SignatureMismatch


GOOD = [
    "T(z)",
    "T(z^2) (++) M[[0,1,0],[0,0,1],[0,0,0]]",
    "T((z - 1/2)^2 / (z - 3))",
    "T(z^-1)",
    "2 * T(z) - T(z - 1/2) * T(z)",
    "FR{fin[1, 1/2] | e0; geo(1/2; 1) | fin[0, 1]}",
    "(1/2+1/2i) * T(z) + I",
    "-T(z) * (T(z) + I)",
    "T(3i * z - 1/2)",
    "T((z^2)^2)",
    "T(-z^3 + 1/4)",
    "FR{geo(-1/4+1/3i) | e2}",
]


@pytest.mark.parametrize("text", GOOD)
def test_round_trip_fixed(text):
    ast = parse(text)
    assert parse(pretty(ast)) == ast
    evaluate(ast)


@pytest.mark.parametrize("seed", range(60))
def test_round_trip_random(seed):
    ast = random_ast(random.Random(seed))
    assert parse(pretty(ast)) == ast


def test_parse_error_positions():
    with pytest.raises(ParseError) as e:
        parse("T(z")
    assert (e.value.line, e.value.col) == (1, 4)
    with pytest.raises(ParseError) as e:
        parse("T(z)\n+ Q")
    assert e.value.line == 2


@pytest.mark.parametrize(
    "bad",
    ["", "T()", "T(z) ++ T(z)", "M[[1,2],[3]]", "M[[1,2]]", "FR{e0}", "geo(1/2)",
     "T(z) *", "FR{geo(2) | e0}", "T(z) extra"],
)
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        parse(bad)


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        parse("T(z) + M[[1]]")
    with pytest.raises(SignatureMismatch):
        parse("M[[1,0],[0,1]] * M[[1]]")


def test_signature_mismatch_direct_sum_arith():
    with pytest.raises(SignatureMismatch):
        parse("T(z) (++) M[[1]] + T(z)")


def test_evaluation_shapes():
    op = evaluate(parse("T(z^2) (++) M[[0,1],[0,0]]"))
    assert op.signature() == ("T", ("M", 2))
    op = evaluate(parse("FR{e0 | e0}"))
    assert op.blocks[0].symbol.is_zero()


def test_identity_times_anything_is_identity_action():
    from bfredholm.operators import op_equal

    a = evaluate(parse("T(z - 1/2) * I"))
    b = evaluate(parse("T(z - 1/2)"))
    assert op_equal(a, b)
