from fractions import Fraction

import random

from bfredholm.finiterank import (
    fr_entry,
    fr_equal,
    fr_is_zero,
    make_finite_rank,
    outer,
    trace,
)
from bfredholm.scalars import gr
from bfredholm.sequences import pairing, seq_basis, seq_finite, seq_geo


def _rand_seq(rng):
    if rng.random() < 0.5:
        return seq_finite(
            [gr(Fraction(rng.randint(-3, 3), rng.randint(1, 3))) for _ in range(rng.randint(1, 4))]
        )
    return seq_geo(gr(Fraction(rng.choice([-1, 1]), rng.randint(2, 4))), rng.randint(0, 1))


def _rand_fr(rng, terms=2):
    return make_finite_rank(
        [(_rand_seq(rng), _rand_seq(rng)) for _ in range(rng.randint(1, terms))]
    )


def test_outer_action():
    u = seq_finite([1, 2])
    v = seq_geo(gr(Fraction(1, 2)))
    F = outer(u, v)
    x = seq_finite([1, 1, 1])
    # (u (x) v) x = <v, x> u
    assert F.apply(x) == u.scale(pairing(v, x))
    assert F.apply_transpose(x) == v.scale(pairing(u, x))


def test_trace_of_outer_is_pairing():
    u = seq_geo(gr(Fraction(-1, 3)), 1)
    v = seq_finite([2, gr(0, 1), -1])
    assert trace(outer(u, v)) == pairing(v, u)


def test_trace_linear_and_cyclic():
    rng = random.Random(11)
    for _ in range(25):
        F = _rand_fr(rng)
        G = _rand_fr(rng)
        c = gr(Fraction(rng.randint(-2, 2), rng.randint(1, 3)), 1)
        assert trace(F + G) == trace(F) + trace(G)
        assert trace(F.scale(c)) == c * trace(F)
        assert trace(F.compose(G)) == trace(G.compose(F))


def test_compose_matches_defining_action():
    rng = random.Random(3)
    for _ in range(10):
        F = _rand_fr(rng)
        G = _rand_fr(rng)
        H = F.compose(G)
        for i in range(5):
            for j in range(5):
                want = pairing(seq_basis(i), F.apply(G.apply(seq_basis(j))))
                assert fr_entry(H, i, j) == want, (i, j)


def test_entry_and_transpose():
    F = outer(seq_finite([0, 1]), seq_finite([3, 0, -2]))
    assert fr_entry(F, 1, 0) == gr(3)
    assert fr_entry(F, 1, 2) == gr(-2)
    assert fr_entry(F, 0, 0).is_zero()
    T = F.transpose()
    for i in range(4):
        for j in range(4):
            assert fr_entry(T, i, j) == fr_entry(F, j, i)


def test_zero_and_equal():
    u = seq_finite([1, -1])
    F = outer(u, u)
    assert not fr_is_zero(F)
    assert fr_is_zero(F - F)
    assert fr_equal(F + F, F.scale(gr(2)))
    # cancelling representations: u(x)u + (-u)(x)u == 0
    G = make_finite_rank([(u, u), (u.scale(gr(-1)), u)])
    assert fr_is_zero(G)
