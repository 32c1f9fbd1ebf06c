"""Rational Toeplitz symbols over Q(i).

A symbol is f(z) = z^shift * num(z) / den(z) in canonical form: den is
monic with den(0) != 0, num(0) != 0 (powers of z are folded into the
shift), gcd(num, den) is constant, and den never vanishes on the unit
circle.  Structural equality of the canonical fields is equality of
rational functions.

A symbol may carry a CircleSplit witness: a full linear factorization
with every zero and pole classified strictly inside or outside the unit
circle.  The split is what makes Fourier coefficients and inverse
symbols exactly computable; winding numbers never need it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    FactorOnCircle,
    MissingSplit,
    PoleOnCircle,
    ZeroDenominator,
    ZeroOnCircle,
    ZeroSymbol,
)
from .poly import (
    P_ONE,
    P_ZERO,
    Polynomial,
    binom_poly,
    from_roots,
    poly,
    poly_divmod,
    poly_gcd,
    rising_binom_poly,
)
from .rootloc import count_zeros_in_disk, has_zero_on_circle
from .scalars import GaussianRational, ONE, ZERO, gaussian_sqrt, gr
from .sequences import (
    RationalSequence,
    SEQ_ZERO,
    make_sequence,
    seq_finite,
)

Roots = tuple[tuple[GaussianRational, int], ...]


@dataclass(frozen=True, slots=True)
class CircleSplit:
    """Factorization witness with roots classified against the circle."""

    scale: GaussianRational
    inner_zeros: Roots
    outer_zeros: Roots
    inner_poles: Roots
    outer_poles: Roots

    @property
    def zeros(self) -> Roots:
        return self.inner_zeros + self.outer_zeros

    @property
    def poles(self) -> Roots:
        return self.inner_poles + self.outer_poles


@dataclass(frozen=True, slots=True)
class RationalSymbol:
    num: Polynomial
    den: Polynomial
    shift: int
    split: CircleSplit | None = field(default=None, compare=False)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def has_split(self) -> bool:
        return self.split is not None

    def supports_coefficients(self) -> bool:
        """True when exact Fourier coefficients are available."""
        return self.is_zero() or self.den.is_constant() or self.split is not None

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        core = f"({self.num})"
        if self.den != P_ONE:
            core += f"/({self.den})"
        if self.shift:
            core = f"z^{self.shift}*{core}"
        return core


def _sort_roots(roots) -> Roots:
    return tuple(sorted(roots, key=lambda rm: (rm[0].re, rm[0].im, rm[1])))


def _classify_roots(roots) -> tuple[Roots, Roots]:
    inner, outer = [], []
    for r, m in roots:
        q = r.abs2()
        if q == 1:
            raise FactorOnCircle(f"factor root {r} lies on the unit circle")
        (inner if q < 1 else outer).append((r, m))
    return _sort_roots(inner), _sort_roots(outer)


def _merge_roots(*groups) -> list[tuple[GaussianRational, int]]:
    acc: dict[tuple, tuple[GaussianRational, int]] = {}
    for roots in groups:
        for r, m in roots:
            key = (r.re, r.im)
            if key in acc:
                acc[key] = (r, acc[key][1] + m)
            else:
                acc[key] = (r, m)
    return [(r, m) for r, m in acc.values() if m != 0]


def _cancel_common(zeros, poles):
    zacc = {( r.re, r.im): [r, m] for r, m in _merge_roots(zeros)}
    out_poles = []
    for r, m in _merge_roots(poles):
        key = (r.re, r.im)
        if key in zacc:
            common = min(m, zacc[key][1])
            zacc[key][1] -= common
            m -= common
        if m:
            out_poles.append((r, m))
    out_zeros = [(r, m) for r, m in zacc.values() if m]
    return out_zeros, out_poles


ZERO_SYMBOL = RationalSymbol(P_ZERO, P_ONE, 0, None)


def make_symbol(num: Polynomial, den: Polynomial, shift: int = 0) -> RationalSymbol:
    """Canonicalizing constructor; attaches a split when one is cheap."""
    if den.is_zero():
        raise ZeroDenominator("symbol denominator is the zero polynomial")
    if num.is_zero():
        return ZERO_SYMBOL
    g = poly_gcd(num, den)
    if not g.is_constant():
        num, _ = poly_divmod(num, g)
        den, _ = poly_divmod(den, g)
    zn = num.order_at_zero()
    zd = den.order_at_zero()
    if zn:
        num = Polynomial(num.coeffs[zn:])
    if zd:
        den = Polynomial(den.coeffs[zd:])
    shift += zn - zd
    lead = den.leading()
    if lead != ONE:
        inv = lead.inv()
        num = num.scale(inv)
        den = den.scale(inv)
    if not den.is_constant() and has_zero_on_circle(den):
        raise PoleOnCircle(f"denominator {den} vanishes on the unit circle")
    split = _try_split(num, den)
    return RationalSymbol(num, den, shift, split)


def make_factored(scale: GaussianRational, shift: int, zeros, poles) -> RationalSymbol:
    """Build a symbol from a linear factorization, keeping the witness."""
    if scale.is_zero():
        return ZERO_SYMBOL
    zs, ps = _cancel_common(zeros, poles)
    clean_z, clean_p = [], []
    for r, m in zs:
        if r.is_zero():
            shift += m
        else:
            clean_z.append((r, m))
    for r, m in ps:
        if r.is_zero():
            shift -= m
        else:
            clean_p.append((r, m))
    iz, oz = _classify_roots(clean_z)
    ip, op = _classify_roots(clean_p)
    num = from_roots(scale, clean_z)
    den = from_roots(ONE, clean_p)
    split = CircleSplit(scale, iz, oz, ip, op)
    return RationalSymbol(num, den, shift, split)


def _factor_roots(p: Polynomial) -> tuple[GaussianRational, list] | None:
    """Full Gaussian-rational root factorization for degree <= 2, else None."""
    d = p.degree
    if d == 0:
        return p.coeffs[0], []
    if d == 1:
        c0, c1 = p.coeffs
        return c1, [(-(c0 / c1), 1)]
    if d == 2:
        c0, c1, c2 = p.coeffs
        b = c1 / c2
        c = c0 / c2
        disc = b * b - gr(4) * c
        root = gaussian_sqrt(disc)
        if root is None:
            return None
        two = gr(2)
        r1 = (-b + root) / two
        r2 = (-b - root) / two
        if r1 == r2:
            return c2, [(r1, 2)]
        return c2, [(r1, 1), (r2, 1)]
    return None


def _try_split(num: Polynomial, den: Polynomial) -> CircleSplit | None:
    fn = _factor_roots(num)
    fd = _factor_roots(den)
    if fn is None or fd is None:
        return None
    scale_n, zeros = fn
    _, poles = fd  # den is monic
    try:
        iz, oz = _classify_roots(zeros)
        ip, op = _classify_roots(poles)
    except FactorOnCircle:
        return None
    return CircleSplit(scale_n, iz, oz, ip, op)


def sym_arith(f: RationalSymbol, g: RationalSymbol, op: str) -> RationalSymbol:
    if op == "mul":
        if f.is_zero() or g.is_zero():
            return ZERO_SYMBOL
        if f.split is not None and g.split is not None:
            return make_factored(
                f.split.scale * g.split.scale,
                f.shift + g.shift,
                list(f.split.zeros) + list(g.split.zeros),
                list(f.split.poles) + list(g.split.poles),
            )
        return make_symbol(f.num * g.num, f.den * g.den, f.shift + g.shift)
    if op not in ("add", "sub"):
        raise ValueError(f"unknown op {op!r}")
    if g.is_zero():
        return f
    if f.is_zero():
        return g if op == "add" else sym_scale(g, gr(-1))
    m = min(f.shift, g.shift)
    left = (f.num * g.den).shift_degree(f.shift - m)
    right = (g.num * f.den).shift_degree(g.shift - m)
    combined = left + right if op == "add" else left - right
    return make_symbol(combined, f.den * g.den, m)


def sym_scale(f: RationalSymbol, c: GaussianRational) -> RationalSymbol:
    if c.is_zero() or f.is_zero():
        return ZERO_SYMBOL
    if f.split is not None:
        return make_factored(
            f.split.scale * c, f.shift, list(f.split.zeros), list(f.split.poles)
        )
    return make_symbol(f.num.scale(c), f.den, f.shift)


def invert_symbol(f: RationalSymbol) -> RationalSymbol:
    """1/f; zeros and poles swap in the split."""
    if f.is_zero():
        raise ZeroSymbol("the zero symbol has no inverse")
    if f.split is None:
        raise MissingSplit("inverse symbol needs a CircleSplit witness")
    return make_factored(
        f.split.scale.inv(), -f.shift, list(f.split.poles), list(f.split.zeros)
    )


def sym_div(f: RationalSymbol, g: RationalSymbol) -> RationalSymbol:
    """f/g; raises PoleOnCircle when g vanishes on the circle."""
    if g.is_zero():
        raise ZeroSymbol("division by the zero symbol")
    if f.is_zero():
        return ZERO_SYMBOL
    if g.split is not None:
        return sym_arith(f, invert_symbol(g), "mul")
    if not g.num.is_constant() and has_zero_on_circle(g.num):
        raise PoleOnCircle(f"divisor numerator {g.num} vanishes on the circle")
    return make_symbol(f.num * g.den, f.den * g.num, f.shift - g.shift)


def sym_pow(f: RationalSymbol, k: int) -> RationalSymbol:
    if k < 0:
        return sym_pow(invert_symbol(f), -k)
    out = make_factored(ONE, 0, [], [])
    for _ in range(k):
        out = sym_arith(out, f, "mul")
    return out


def sym_equal(f: RationalSymbol, g: RationalSymbol) -> bool:
    """Equality as rational functions (ignores split witnesses)."""
    return f.num == g.num and f.den == g.den and (f.is_zero() or f.shift == g.shift)


def winding_number(f: RationalSymbol) -> int:
    """Exact winding of f around 0 along the unit circle.

    Equals shift + (zeros of num inside) - (zeros of den inside); needs
    no split witness.
    """
    if f.is_zero():
        raise ZeroSymbol("winding of the zero symbol")
    if not f.num.is_constant() and has_zero_on_circle(f.num):
        raise ZeroOnCircle(f"symbol numerator {f.num} vanishes on the circle")
    inside_num = 0 if f.num.is_constant() else count_zeros_in_disk(f.num)
    inside_den = 0 if f.den.is_constant() else count_zeros_in_disk(f.den)
    return f.shift + inside_num - inside_den


# ---------------------------------------------------------------------------
# Exact Laurent expansion in the annulus containing the unit circle.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class LaurentExpansion:
    """Two one-sided sequences: pos(n) = fhat(n), neg(u) = fhat(-1-u)."""

    pos: RationalSequence
    neg: RationalSequence

    def value(self, n: int) -> GaussianRational:
        return self.pos.value(n) if n >= 0 else self.neg.value(-1 - n)


_EXPANSION_CACHE: dict = {}


def laurent_expansion(f: RationalSymbol) -> LaurentExpansion:
    """Exact coefficient stream of f; needs a split or constant den."""
    key = (f.num.coeffs, f.den.coeffs, f.shift, f.split is not None)
    hit = _EXPANSION_CACHE.get(key)
    if hit is not None:
        return hit
    out = _shift_expansion(_expansion_no_shift(f), f.shift)
    _EXPANSION_CACHE[key] = out
    return out


def _expansion_no_shift(f: RationalSymbol) -> LaurentExpansion:
    if f.is_zero():
        return LaurentExpansion(SEQ_ZERO, SEQ_ZERO)
    if f.den.is_constant():
        inv = f.den.coeffs[0].inv()
        return LaurentExpansion(seq_finite([c * inv for c in f.num.coeffs]), SEQ_ZERO)
    if f.split is None:
        raise MissingSplit(f"symbol {f} has no CircleSplit; coefficients unavailable")
    quot, rem = poly_divmod(f.num, f.den)
    head = list(quot.coeffs)
    pos_tails = []
    neg_tails = []
    for p, m in f.split.poles:
        residues = _residues_at(rem, f.split.poles, p, m)
        if p.abs2() > 1:
            # 1/(z-p)^k = sum_n (-1)^k C(n+k-1, k-1) p^(-k-n) z^n
            acc = P_ZERO
            for k, c in residues:
                sign = gr(-1) if k % 2 else gr(1)
                coef = c * sign * _ipow(p, -k)
                acc = acc + rising_binom_poly(k - 1).scale(coef)
            pos_tails.append((p.inv(), acc))
        else:
            # 1/(z-p)^k = sum_{u>=k-1} C(u, k-1) p^(u-k+1) z^(-1-u)
            acc = P_ZERO
            for k, c in residues:
                coef = c * _ipow(p, 1 - k)
                acc = acc + binom_poly(k - 1).scale(coef)
            neg_tails.append((p, acc))
    pos = make_sequence(head, pos_tails)
    neg = make_sequence([], neg_tails)
    return LaurentExpansion(pos, neg)


def _ipow(a: GaussianRational, k: int) -> GaussianRational:
    out = ONE
    for _ in range(abs(k)):
        out = out * a
    return out if k >= 0 else out.inv()


def _residues_at(rem: Polynomial, poles: Roots, p: GaussianRational, m: int):
    """Partial-fraction coefficients c_k of (z-p)^(-k), k = 1..m.

    Taylor-expands rem / prod_{q != p} (z-q)^mq around p; the series
    coefficients t_0..t_{m-1} give c_{m-j} = t_j.
    """
    other = from_roots(ONE, [(q, mq) for q, mq in poles if q != p])
    r_t = rem.taylor_shift(p)
    d_t = other.taylor_shift(p)
    # power series division r_t / d_t modulo u^m
    inv0 = d_t.coeff(0).inv()
    series = []
    for j in range(m):
        acc = r_t.coeff(j)
        for i in range(j):
            acc = acc - series[i] * d_t.coeff(j - i)
        series.append(acc * inv0)
    return [(m - j, series[j]) for j in range(m) if not series[j].is_zero()]


def _shift_expansion(e: LaurentExpansion, w: int) -> LaurentExpansion:
    if w == 0:
        return e
    if w > 0:
        head = [e.neg.value(w - 1 - n) for n in range(w)]
        pos = e.pos.shift_up(w) + seq_finite(head)
        neg = e.neg.drop(w)
        return LaurentExpansion(pos, neg)
    s = -w
    head = [e.pos.value(s - 1 - u) for u in range(s)]
    neg = e.neg.shift_up(s) + seq_finite(head)
    pos = e.pos.drop(s)
    return LaurentExpansion(pos, neg)


def swap_expansion(e: LaurentExpansion) -> LaurentExpansion:
    """Expansion of f(1/z): coefficients reversed around index 0."""
    pos = e.neg.shift_up(1) + seq_finite([e.pos.value(0)])
    neg = e.pos.drop(1)
    return LaurentExpansion(pos, neg)


def fourier_coeff(f: RationalSymbol, n: int) -> GaussianRational:
    """The n-th Laurent coefficient of f on the annulus of the circle."""
    return laurent_expansion(f).value(n)
