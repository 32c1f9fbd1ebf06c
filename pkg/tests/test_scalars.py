from fractions import Fraction

from hypothesis import given, strategies as st

from bfredholm.scalars import (
    GaussianRational,
    format_scalar,
    gaussian_sqrt,
    gr,
    parse_scalar,
)

fracs = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
scalars = st.builds(gr, fracs, fracs)


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + gr(0) == a
    assert a * gr(1) == a
    assert a + (-a) == gr(0)


@given(scalars)
def test_inverse_and_conj(a):
    if not a.is_zero():
        assert a * a.inv() == gr(1)
        assert a / a == gr(1)
    assert a * a.conj() == gr(a.abs2())
    assert a.conj().conj() == a


@given(scalars)
def test_format_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_format_examples():
    assert format_scalar(gr(Fraction(1, 2), Fraction(-1, 2))) == "1/2-1/2i"
    assert format_scalar(gr(0)) == "0"
    assert format_scalar(gr(0, 1)) == "i"
    assert format_scalar(gr(0, -1)) == "-i"
    assert format_scalar(gr(-3)) == "-3"
    assert format_scalar(gr(0, Fraction(2, 3))) == "2/3i"


def test_is_rational_integer():
    assert gr(-7).is_rational_integer()
    assert not gr(Fraction(1, 2)).is_rational_integer()
    assert not gr(1, 1).is_rational_integer()


@given(scalars)
def test_gaussian_sqrt_squares_back(a):
    s = gaussian_sqrt(a)
    if s is not None:
        assert s * s == a


def test_gaussian_sqrt_known():
    assert gaussian_sqrt(gr(0, 2)) in (gr(1, 1), gr(-1, -1))
    assert gaussian_sqrt(gr(Fraction(1, 4))) in (gr(Fraction(1, 2)), gr(Fraction(-1, 2)))
    assert gaussian_sqrt(gr(2)) is None


def test_to_complex():
    z = gr(Fraction(3, 4), Fraction(-1, 2)).to_complex()
    assert z == complex(0.75, -0.5)
