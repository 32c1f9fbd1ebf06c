"""Finite-rank operators on l2(N) as sums of outer products u (x) v.

The action is F(x) = sum_k pairing(v_k, x) u_k with the bilinear pairing
(no conjugation), so everything stays inside Q(i).  The term count is an
upper bound on the rank; exact rank is not computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import GaussianRational, ZERO, gr
from .sequences import RationalSequence, SEQ_ZERO, pairing


@dataclass(frozen=True, slots=True)
class FiniteRankOperator:
    """F = sum_k u_k (x) v_k with F(x) = sum_k pairing(v_k, x) u_k."""

    terms: tuple[tuple[RationalSequence, RationalSequence], ...]

    def rank_bound(self) -> int:
        return len(self.terms)

    def apply(self, x: RationalSequence) -> RationalSequence:
        out = SEQ_ZERO
        for u, v in self.terms:
            c = pairing(v, x)
            if not c.is_zero():
                out = out + u.scale(c)
        return out

    def apply_transpose(self, x: RationalSequence) -> RationalSequence:
        """x composed on the left: row action, entries F^T(x)_j = sum_i x_i F_ij."""
        out = SEQ_ZERO
        for u, v in self.terms:
            c = pairing(u, x)
            if not c.is_zero():
                out = out + v.scale(c)
        return out

    def transpose(self) -> "FiniteRankOperator":
        return FiniteRankOperator(tuple((v, u) for u, v in self.terms))

    def scale(self, c: GaussianRational) -> "FiniteRankOperator":
        if c.is_zero():
            return FR_ZERO
        return FiniteRankOperator(tuple((u.scale(c), v) for u, v in self.terms))

    def __add__(self, other: "FiniteRankOperator") -> "FiniteRankOperator":
        return make_finite_rank(self.terms + other.terms)

    def __sub__(self, other: "FiniteRankOperator") -> "FiniteRankOperator":
        return self + other.scale(gr(-1))

    def __neg__(self) -> "FiniteRankOperator":
        return self.scale(gr(-1))

    def compose(self, other: "FiniteRankOperator") -> "FiniteRankOperator":
        """(u (x) v) o (u' (x) v') = pairing(v, u') u (x) v'."""
        terms = []
        for u, v in self.terms:
            for up, vp in other.terms:
                c = pairing(v, up)
                if not c.is_zero():
                    terms.append((u.scale(c), vp))
        return make_finite_rank(terms)


def make_finite_rank(terms) -> FiniteRankOperator:
    clean = tuple((u, v) for u, v in terms if not (u.is_zero() or v.is_zero()))
    return FiniteRankOperator(clean)


FR_ZERO = make_finite_rank([])


def outer(u: RationalSequence, v: RationalSequence) -> FiniteRankOperator:
    return make_finite_rank([(u, v)])


def fr_arith(F: FiniteRankOperator, G: FiniteRankOperator, op: str) -> FiniteRankOperator:
    if op == "add":
        return F + G
    if op == "sub":
        return F - G
    if op == "compose":
        return F.compose(G)
    raise ValueError(f"unknown op {op!r}")


def trace(F: FiniteRankOperator) -> GaussianRational:
    """tau(F) = sum_k pairing(v_k, u_k), exact."""
    total = ZERO
    for u, v in F.terms:
        total = total + pairing(v, u)
    return total


def fr_entry(F: FiniteRankOperator, i: int, j: int) -> GaussianRational:
    total = ZERO
    for u, v in F.terms:
        total = total + u.value(i) * v.value(j)
    return total


def _coords(x: RationalSequence) -> dict:
    """Coordinates of x over the independent atom basis.

    Atoms: ('h', i) for head entries and ('t', ratio, power) for tail
    monomial coefficients.  The canonical representation is unique and the
    atoms are linearly independent as sequences, so a sum of outer
    products vanishes iff its atom-coordinate matrix vanishes.
    """
    out = {}
    for i, h in enumerate(x.head):
        if not h.is_zero():
            out[("h", i)] = h
    for r, p in x.tails:
        for k, c in enumerate(p.coeffs):
            if not c.is_zero():
                out[("t", r.re, r.im, k)] = c
    return out


def fr_is_zero(F: FiniteRankOperator) -> bool:
    """True iff F is the zero operator, decided exactly."""
    matrix: dict = {}
    for u, v in F.terms:
        cu = _coords(u)
        cv = _coords(v)
        for ai, a in cu.items():
            for bj, b in cv.items():
                key = (ai, bj)
                matrix[key] = matrix.get(key, ZERO) + a * b
    return all(c.is_zero() for c in matrix.values())


def fr_equal(F: FiniteRankOperator, G: FiniteRankOperator) -> bool:
    return fr_is_zero(F - G)
