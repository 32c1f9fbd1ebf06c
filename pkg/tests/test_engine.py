from fractions import Fraction

import pytest

from bfredholm.engine import (
    FREDHOLM_CLASSES,
    SCAN_DIRECTIONS,
    analyze,
    classify,
    drazin_witness,
    index_trace,
    index_winding,
    nonstability_demo,
    punctured_scan,
    verify_fedosov,
    verify_ideal_perturbation,
    verify_log_law,
    verify_power_law,
    verify_well_defined,
)
from bfredholm.errors import NotBezout, NotBFredholm, NotCommuting
from bfredholm.matrices import jordan_nilpotent, matrix
from bfredholm.numeric import winding_oracle
from bfredholm.operators import (
    direct_sum,
    identity_like,
    matrix_operator,
    op_scale,
    scalar_shift,
    toeplitz_operator,
)
from bfredholm.poly import poly
from bfredholm.scalars import gr
from bfredholm.symbols import invert_symbol, make_factored, make_symbol, sym_arith

HALF = gr(Fraction(1, 2))
Z = make_symbol(poly([0, 1]), poly([1]))
F1 = make_factored(gr(1), 0, [(HALF, 1)], [])                      # z - 1/2
RATIO = make_factored(gr(1), 0, [(HALF, 2)], [(gr(3), 1)])         # (z-1/2)^2/(z-3)

TZ = toeplitz_operator(Z)
J3 = matrix_operator(jordan_nilpotent(3))


def test_classify():
    assert classify(TZ) == "Fredholm"
    assert classify(toeplitz_operator(make_factored(gr(1), 0, [(gr(3), 1)], []))) == "InvertibleModJ"
    assert classify(toeplitz_operator(make_symbol(poly([-1, 1]), poly([1])))) == "NotInClass"
    zero = toeplitz_operator(make_symbol(poly([]), poly([1])))
    assert classify(direct_sum(zero, J3)) == "BFredholm"
    assert classify(J3) == "BFredholm"


def test_analyze_shift():
    rep = analyze(TZ)
    assert rep.classification == "Fredholm"
    assert rep.index_trace == rep.index_winding == -1
    assert rep.defects_in_ideal


def test_analyze_ratio_with_jordan_block():
    a = direct_sum(toeplitz_operator(RATIO), J3)
    rep = analyze(a)
    assert rep.classification == "Fredholm"
    assert rep.index_trace == rep.index_winding == -2
    assert rep.quotient_index == 3


def test_analyze_not_in_class():
    rep = analyze(toeplitz_operator(make_symbol(poly([-1, 1]), poly([1]))))
    assert rep.classification == "NotInClass"
    assert rep.index_trace is None and rep.index_winding is None


def test_drazin_witness_modes_agree():
    a = direct_sum(toeplitz_operator(F1), J3)
    for mode in ("drazin", "zero"):
        w = drazin_witness(a, matrix_mode=mode)
        assert w.defects_in_ideal()
        assert index_trace(a, w) == index_winding(a) == -1
    assert drazin_witness(a).quotient_index == 3


@pytest.mark.parametrize(
    "f, idx",
    [(Z, -1), (invert_symbol(Z), 1), (F1, -1), (RATIO, -2)],
    ids=["z", "1/z", "z-1/2", "ratio"],
)
def test_fedosov_both_routes(f, idx):
    rep = verify_fedosov(toeplitz_operator(f))
    assert rep.index_trace == rep.index_winding == idx


def test_well_defined_under_perturbations():
    a = direct_sum(toeplitz_operator(RATIO), J3)
    r = verify_well_defined(a, trials=5, rng_seed=1)
    assert r["index"] == -2
    assert r["values"] == [-2] * 5


def test_punctured_scan_radii():
    assert len(SCAN_DIRECTIONS) == 8
    assert all(d.abs2() == 1 for d in SCAN_DIRECTIONS)
    radii = [Fraction(1, 8), Fraction(1, 16)]
    rep = punctured_scan(toeplitz_operator(F1), radii)
    assert rep.base_index == -1
    assert rep.stable_radius == Fraction(1, 8)
    assert all(r.classification in FREDHOLM_CLASSES for r in rep.rows)


def test_punctured_scan_boundary_coincidence():
    # the essential spectrum of T((z-1/2)^2/(z-3)) passes through -1/8
    # exactly (the symbol takes that value at z=1), so the scan stabilizes
    # only at 1/16
    a = toeplitz_operator(RATIO)
    shifted = scalar_shift(a, gr(Fraction(-1, 8)))
    assert classify(shifted) == "NotInClass"
    rep = punctured_scan(a, [Fraction(1, 8), Fraction(1, 16)])
    assert rep.stable_radius == Fraction(1, 16)


def test_punctured_scan_rejects_not_in_class():
    with pytest.raises(NotBFredholm):
        punctured_scan(
            toeplitz_operator(make_symbol(poly([-1, 1]), poly([1]))),
            [Fraction(1, 8)],
        )


def test_log_law():
    e = identity_like(TZ)
    a2 = toeplitz_operator(F1)
    # Bezout: 2*z - 2*(z - 1/2) = 1
    r = verify_log_law(TZ, a2, op_scale(e, gr(2)), op_scale(e, gr(-2)))
    assert (r["i_a1"], r["i_a2"], r["i_product"]) == (-1, -1, -2)
    assert "trace route" in r["routes"]


def test_log_law_rejections():
    e = identity_like(TZ)
    a2 = toeplitz_operator(F1)
    with pytest.raises(NotBezout):
        verify_log_law(TZ, a2, op_scale(e, gr(-2)), op_scale(e, gr(2)))
    # T(z) and T(1/z) do not commute
    with pytest.raises(NotCommuting):
        verify_log_law(TZ, toeplitz_operator(invert_symbol(Z)), e, e)


def test_ideal_perturbation():
    import random

    from bfredholm.engine import random_ideal_element

    a = direct_sum(toeplitz_operator(RATIO), J3)
    rng = random.Random(4)
    for _ in range(3):
        r = verify_ideal_perturbation(a, random_ideal_element(rng))
        assert r["index"] == -2


@pytest.mark.parametrize("p", [2, 3])
def test_power_law(p):
    r = verify_power_law(toeplitz_operator(RATIO), p)
    assert r["index"] == -2 and r["index_power"] == -2 * p


def test_nonstability_demo():
    rows = nonstability_demo()
    assert rows[0]["classification"] == "NotInClass"
    others = rows[1:]
    assert all(r["classification"] in FREDHOLM_CLASSES for r in others)
    # the index genuinely depends on the direction of the shift
    assert {r["index"] for r in others} == {0, -1}


@pytest.mark.parametrize(
    "f",
    [Z, invert_symbol(Z), F1, RATIO, sym_arith(RATIO, invert_symbol(Z), "mul")],
    ids=["z", "1/z", "z-1/2", "ratio", "ratio/z"],
)
def test_numeric_winding_oracle(f):
    from bfredholm.symbols import winding_number

    assert winding_oracle(f) == winding_number(f)
