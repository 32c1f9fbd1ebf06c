"""Exact square-summable sequences: finite heads plus polynomial-times-
geometric tails.

A sequence is x_n = head[n] + sum_t poly_t(n) * ratio_t^n, where each
ratio satisfies |ratio|^2 < 1 exactly.  Tails are canonically anchored at
n = 0 (a nonzero public ``start`` is folded into head corrections), the
head is trimmed, tails with equal ratios are merged and zero tails are
dropped.  That makes the representation unique, so structural equality
is mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExactError
from .poly import Polynomial, binom_poly, poly
from .scalars import GaussianRational, ONE, ZERO, gr


def _tail_key(r: GaussianRational) -> tuple:
    return (r.re, r.im)


@dataclass(frozen=True, slots=True)
class RationalSequence:
    """Element of l2(N) with exact closed-form entries."""

    head: tuple[GaussianRational, ...]
    tails: tuple[tuple[GaussianRational, Polynomial], ...]

    def value(self, n: int) -> GaussianRational:
        v = self.head[n] if n < len(self.head) else ZERO
        x = gr(n)
        for r, p in self.tails:
            v = v + p.eval(x) * _pow(r, n)
        return v

    def is_zero(self) -> bool:
        return not self.head and not self.tails

    def __add__(self, other: "RationalSequence") -> "RationalSequence":
        n = max(len(self.head), len(other.head))
        head = [
            (self.head[k] if k < len(self.head) else ZERO)
            + (other.head[k] if k < len(other.head) else ZERO)
            for k in range(n)
        ]
        tails = {}
        for r, p in self.tails + other.tails:
            key = _tail_key(r)
            if key in tails:
                tails[key] = (r, tails[key][1] + p)
            else:
                tails[key] = (r, p)
        return make_sequence(head, list(tails.values()))

    def __sub__(self, other: "RationalSequence") -> "RationalSequence":
        return self + other.scale(gr(-1))

    def __neg__(self) -> "RationalSequence":
        return self.scale(gr(-1))

    def scale(self, c: GaussianRational) -> "RationalSequence":
        if c.is_zero():
            return SEQ_ZERO
        return RationalSequence(
            tuple(h * c for h in self.head),
            tuple((r, p.scale(c)) for r, p in self.tails),
        )

    def drop(self, s: int) -> "RationalSequence":
        """y(n) = x(n + s) for s >= 0."""
        head = list(self.head[s:])
        tails = []
        for r, p in self.tails:
            # poly(n+s) r^(n+s) = [r^s poly(n+s)] r^n
            tails.append((r, p.taylor_shift(gr(s)).scale(_pow(r, s))))
        return make_sequence(head, tails)

    def shift_up(self, s: int) -> "RationalSequence":
        """y(n) = x(n - s) for n >= s, 0 below (s >= 0)."""
        tails = []
        corrections = [ZERO] * s
        for r, p in self.tails:
            p_shift = p.taylor_shift(gr(-s)).scale(_pow(r, -s))
            tails.append((r, p_shift))
            for n in range(s):
                corrections[n] = corrections[n] - p_shift.eval(gr(n)) * _pow(r, n)
        head = corrections + list(self.head)
        return make_sequence(head, tails)

    def __str__(self) -> str:
        parts = [f"fin[{', '.join(str(h) for h in self.head)}]"] if self.head else []
        for r, p in self.tails:
            parts.append(f"({p})*({r})^n")
        return " + ".join(parts) if parts else "0"


def _pow(r: GaussianRational, n: int) -> GaussianRational:
    if n >= 0:
        out = ONE
        for _ in range(n):
            out = out * r
        return out
    return ONE / _pow(r, -n)


def make_sequence(head, tails) -> RationalSequence:
    """Canonicalizing constructor; merges/validates tails, trims head."""
    merged: dict[tuple, tuple[GaussianRational, Polynomial]] = {}
    for r, p in tails:
        if p.is_zero():
            continue
        if r.is_zero():
            raise ExactError("tail ratio must be nonzero (fold into head)")
        if r.abs2() >= 1:
            raise ExactError(f"tail ratio {r} is not inside the unit circle")
        key = _tail_key(r)
        if key in merged:
            merged[key] = (r, merged[key][1] + p)
        else:
            merged[key] = (r, p)
    clean = tuple(
        sorted(
            ((r, p) for r, p in merged.values() if not p.is_zero()),
            key=lambda t: _tail_key(t[0]),
        )
    )
    hs = list(head)
    while hs and hs[-1].is_zero():
        hs.pop()
    return RationalSequence(tuple(hs), clean)


SEQ_ZERO = make_sequence([], [])


def seq_finite(values) -> RationalSequence:
    """Finitely supported sequence from a list of scalars."""
    vals = [v if isinstance(v, GaussianRational) else gr(v) for v in values]
    return make_sequence(vals, [])


def seq_basis(i: int) -> RationalSequence:
    """Standard basis vector e_i."""
    return make_sequence([ZERO] * i + [ONE], [])


def seq_geo(ratio: GaussianRational, degree: int = 0, start: int = 0) -> RationalSequence:
    """x_n = n^degree * ratio^n for n >= start, zero before."""
    return seq_tail(ratio, poly([0] * degree + [1]) if degree else poly([1]), start)


def seq_tail(ratio: GaussianRational, p: Polynomial, start: int = 0) -> RationalSequence:
    """x_n = p(n) * ratio^n for n >= start, zero before (public form)."""
    if p.is_zero():
        return SEQ_ZERO
    head = [-(p.eval(gr(n)) * _pow(ratio, n)) for n in range(start)]
    return make_sequence(head, [(ratio, p)])


# ---------------------------------------------------------------------------
# Exact summation of polynomial-times-geometric series.
# ---------------------------------------------------------------------------


def power_series_sum(p: Polynomial, r: GaussianRational) -> GaussianRational:
    """sum_{k>=0} p(k) r^k, exact, for |r| < 1.

    Uses the binomial transform: p(k) = sum_j d_j C(k, j) with
    d_j = Delta^j p(0), and sum_k C(k, j) r^k = r^j / (1-r)^{j+1}.
    """
    if p.is_zero():
        return ZERO
    if r.abs2() >= 1:
        raise ExactError(f"series ratio {r} does not converge")
    d = p.degree
    values = [p.eval(gr(k)) for k in range(d + 1)]
    total = ZERO
    one_minus = ONE - r
    for j in range(d + 1):
        dj = values[0]
        # finite differences in place
        total = total + dj * _pow(r, j) / _pow(one_minus, j + 1)
        values = [values[k + 1] - values[k] for k in range(len(values) - 1)]
        if not values:
            break
    return total


def partial_geom_sum(p: Polynomial, c: GaussianRational) -> tuple[Polynomial, GaussianRational] | Polynomial:
    """Closed form of S(M) = sum_{m=0}^{M} p(m) c^m.

    For c != 1 returns (A, K) with S(M) = A(M) c^M + K.
    For c == 1 returns the polynomial B with S(M) = B(M).
    """
    if p.is_zero():
        return (Polynomial(()), ZERO) if c != ONE else Polynomial(())
    if c == ONE:
        return _faulhaber_sum(p)
    # Solve A(M) - (1/c) A(M-1) = p(M) degree by degree, highest first.
    d = p.degree
    cinv = ONE / c
    a = [ZERO] * (d + 1)
    p_coeffs = [p.coeff(k) for k in range(d + 1)]
    bin_cache = _binom_table(d + 1)
    for deg in range(d, -1, -1):
        # coefficient of M^deg in A(M) - (1/c)A(M-1):
        # a_deg (1 - 1/c) - (1/c) sum_{e>deg} a_e C(e,deg) (-1)^(e-deg)
        rhs = p_coeffs[deg]
        acc = ZERO
        for e in range(deg + 1, d + 1):
            sign = gr(-1) if (e - deg) % 2 else gr(1)
            acc = acc + a[e] * gr(bin_cache[e][deg]) * sign
        a[deg] = (rhs + cinv * acc) / (ONE - cinv)
    A = Polynomial(tuple(a))
    K = p.eval(gr(0)) - A.eval(gr(0))
    return A, K


def _faulhaber_sum(p: Polynomial) -> Polynomial:
    """B with B(M) = sum_{m=0}^M p(m), via the binomial basis."""
    d = p.degree
    values = [p.eval(gr(k)) for k in range(d + 1)]
    out = Polynomial(())
    for j in range(d + 1):
        dj = values[0]
        # sum_{m=0}^M C(m, j) = C(M+1, j+1)
        term = binom_poly(j + 1).taylor_shift(gr(1)).scale(dj)
        out = out + term
        values = [values[k + 1] - values[k] for k in range(len(values) - 1)]
        if not values:
            break
    return out


def _binom_table(n: int) -> list[list[int]]:
    table = [[1]]
    for i in range(1, n + 1):
        row = [1]
        for j in range(1, i):
            row.append(table[i - 1][j - 1] + table[i - 1][j])
        row.append(1)
        table.append(row)
    return table


def pairing(v: RationalSequence, x: RationalSequence) -> GaussianRational:
    """Bilinear pairing sum_n v_n x_n, exact (no conjugation)."""
    total = ZERO
    # head x head and head x tail
    for n, hv in enumerate(v.head):
        if not hv.is_zero():
            total = total + hv * x.value(n)
    # tail x head (head part of x only, avoiding double count of x tails)
    for n, hx in enumerate(x.head):
        if hx.is_zero():
            continue
        acc = ZERO
        for r, p in v.tails:
            acc = acc + p.eval(gr(n)) * _pow(r, n)
        total = total + acc * hx
    # tail x tail
    for rv, pv in v.tails:
        for rx, px in x.tails:
            total = total + _product_series(pv, rv, px, rx)
    return total


def _product_series(pv, rv, px, rx) -> GaussianRational:
    prod_ratio = rv * rx
    prod_poly = pv * px
    return power_series_sum(prod_poly, prod_ratio)
