"""The concrete operator algebra: Toeplitz-with-finite-rank blocks on
l2(N) direct-summed with finite matrix blocks.

Products of Toeplitz blocks stay in class because the defect
T(f)T(g) - T(fg) is finite rank for rational symbols; it is materialized
eagerly as an explicit sum of outer products built from the symbols'
exact Laurent expansions, so traces downstream remain exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, MissingSplit, SignatureMismatch
from .finiterank import FR_ZERO, FiniteRankOperator, fr_is_zero, make_finite_rank
from .matrices import ExactMatrix, identity as mat_identity
from .poly import P_ZERO, Polynomial, poly
from .scalars import GaussianRational, ONE, ZERO, gr
from .sequences import (
    RationalSequence,
    SEQ_ZERO,
    make_sequence,
    partial_geom_sum,
    power_series_sum,
    seq_finite,
    seq_tail,
)
from .symbols import (
    LaurentExpansion,
    RationalSymbol,
    ZERO_SYMBOL,
    laurent_expansion,
    make_factored,
    swap_expansion,
    sym_arith,
    sym_equal,
    sym_scale,
)


# ---------------------------------------------------------------------------
# Applying a Toeplitz operator to an exact sequence.
# ---------------------------------------------------------------------------


def _split_shifted(p: Polynomial, sign: int) -> list[Polynomial]:
    """Polynomials g_e with p(i + sign*m) = sum_e g_e(i) m^e."""
    if p.is_zero():
        return []
    d = p.degree
    out = [P_ZERO] * (d + 1)
    binom = [[1]]
    for n in range(1, d + 1):
        row = [1]
        for k in range(1, n):
            row.append(binom[n - 1][k - 1] + binom[n - 1][k])
        row.append(1)
        binom.append(row)
    for deg, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        for e in range(deg + 1):
            s = sign ** e
            coef = c * gr(binom[deg][e] * s)
            out[e] = out[e] + poly([0] * (deg - e) + [1]).scale(coef)
    return out


def _monomial(e: int) -> Polynomial:
    return poly([0] * e + [1])


def apply_expansion(E: LaurentExpansion, x: RationalSequence) -> RationalSequence:
    """y(i) = sum_n fhat(i - n) x(n) for the coefficient stream E."""
    y = SEQ_ZERO
    for n, xn in enumerate(x.head):
        if not xn.is_zero():
            y = y + _column(E, n).scale(xn)
    for r, p in x.tails:
        y = y + _conv_tail(E, r, p)
    return y


def _column(E: LaurentExpansion, n: int) -> RationalSequence:
    """Column n of the Toeplitz matrix: i -> fhat(i - n)."""
    head = [E.neg.value(n - 1 - i) for i in range(n)]
    return E.pos.shift_up(n) + seq_finite(head)


def _conv_tail(E: LaurentExpansion, r: GaussianRational, P: Polynomial) -> RationalSequence:
    """sum_n fhat(i - n) P(n) r^n, split along E's head/tail structure."""
    out = SEQ_ZERO
    hp = E.pos.head
    hn = E.neg.head
    # finite part of the nonnegative coefficients
    if hp:
        closed = P_ZERO
        for m, c in enumerate(hp):
            if not c.is_zero():
                closed = closed + P.taylor_shift(gr(-m)).scale(c * _ipow(r, -m))
        tail = make_sequence([], [(r, closed)])
        corrections = []
        for i in range(len(hp) - 1):
            actual = ZERO
            for m in range(i + 1):
                if m < len(hp) and not hp[m].is_zero():
                    actual = actual + hp[m] * P.eval(gr(i - m)) * _ipow(r, i - m)
            corrections.append(actual - tail.value(i))
        out = out + tail + seq_finite(corrections)
    # geometric tails of the nonnegative coefficients
    for rho, phi in E.pos.tails:
        gammas = _split_shifted(P, -1)  # P(i - m) = sum_e gamma_e(i) m^e
        c = rho / r
        if c == ONE:
            acc = P_ZERO
            for e, gamma in enumerate(gammas):
                if gamma.is_zero():
                    continue
                part = partial_geom_sum(phi * _monomial(e), ONE)
                acc = acc + gamma * part
            out = out + make_sequence([], [(r, acc)])
        else:
            acc_rho = P_ZERO
            acc_r = P_ZERO
            for e, gamma in enumerate(gammas):
                if gamma.is_zero():
                    continue
                A, K = partial_geom_sum(phi * _monomial(e), c)
                acc_rho = acc_rho + gamma * A
                acc_r = acc_r + gamma.scale(K)
            out = out + make_sequence([], [(rho, acc_rho), (r, acc_r)])
    # finite part of the negative coefficients
    if hn:
        closed = P_ZERO
        for u, c in enumerate(hn):
            if not c.is_zero():
                closed = closed + P.taylor_shift(gr(1 + u)).scale(c * _ipow(r, 1 + u))
        out = out + make_sequence([], [(r, closed)])
    # geometric tails of the negative coefficients
    for sigma, psi in E.neg.tails:
        deltas = _split_shifted(P.taylor_shift(gr(1)), 1)  # P(i+1+u) in powers of u
        acc = P_ZERO
        for e, delta in enumerate(deltas):
            if delta.is_zero():
                continue
            w = power_series_sum(psi * _monomial(e), sigma * r)
            acc = acc + delta.scale(w)
        out = out + make_sequence([], [(r, acc.scale(r))])
    return out


def _ipow(a: GaussianRational, k: int) -> GaussianRational:
    out = ONE
    for _ in range(abs(k)):
        out = out * a
    return out if k >= 0 else out.inv()


def toeplitz_apply(f: RationalSymbol, x: RationalSequence) -> RationalSequence:
    if f.is_zero() or x.is_zero():
        return SEQ_ZERO
    return apply_expansion(laurent_expansion(f), x)


def toeplitz_apply_transpose(f: RationalSymbol, x: RationalSequence) -> RationalSequence:
    """Row action: y(j) = sum_n x(n) fhat(n - j)."""
    if f.is_zero() or x.is_zero():
        return SEQ_ZERO
    return apply_expansion(swap_expansion(laurent_expansion(f)), x)


# ---------------------------------------------------------------------------
# Hankel-product defect.
# ---------------------------------------------------------------------------


def hankel_cross(a: RationalSequence, b: RationalSequence) -> FiniteRankOperator:
    """Finite-rank operator with entries sum_{k>=0} a(i+k) b(j+k)."""
    terms = []
    ha, hb = a.head, b.head
    for k in range(min(len(ha), len(hb))):
        u = seq_finite(ha[k:])
        v = seq_finite(hb[k:])
        terms.append((u, v))
    for sigma, q in b.tails:
        for k in range(len(ha)):
            u = seq_finite(ha[k:])
            v = make_sequence([], [(sigma, q.taylor_shift(gr(k)).scale(_ipow(sigma, k)))])
            terms.append((u, v))
    for rho, p in a.tails:
        for k in range(len(hb)):
            u = make_sequence([], [(rho, p.taylor_shift(gr(k)).scale(_ipow(rho, k)))])
            v = seq_finite(hb[k:])
            terms.append((u, v))
    for rho, p in a.tails:
        alphas = _split_shifted(p, 1)
        for sigma, q in b.tails:
            betas = _split_shifted(q, 1)
            ratio = rho * sigma
            for e, alpha in enumerate(alphas):
                if alpha.is_zero():
                    continue
                for fdeg, beta in enumerate(betas):
                    if beta.is_zero():
                        continue
                    w = power_series_sum(_monomial(e + fdeg), ratio)
                    terms.append(
                        (
                            make_sequence([], [(rho, alpha)]),
                            make_sequence([], [(sigma, beta.scale(w))]),
                        )
                    )
    return make_finite_rank(terms)


def hankel_defect(f: RationalSymbol, g: RationalSymbol) -> FiniteRankOperator:
    """H with T(f) T(g) = T(f g) - H; exact finite-rank representation."""
    if f.is_zero() or g.is_zero():
        return FR_ZERO
    a = laurent_expansion(f).pos.drop(1)  # a(m) = fhat(m + 1)
    b = laurent_expansion(g).neg  # b(m) = ghat(-1 - m)
    return hankel_cross(a, b)


# ---------------------------------------------------------------------------
# Blocks and block operators.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ToeplitzBlock:
    """T(symbol) + correction on l2(N)."""

    symbol: RationalSymbol
    correction: FiniteRankOperator = FR_ZERO


@dataclass(frozen=True, slots=True)
class MatrixBlock:
    m: ExactMatrix

    def __post_init__(self):
        self.m._square()


Block = ToeplitzBlock | MatrixBlock


@dataclass(frozen=True, slots=True)
class BlockOperator:
    blocks: tuple[Block, ...]

    def signature(self) -> tuple:
        out = []
        for b in self.blocks:
            out.append("T" if isinstance(b, ToeplitzBlock) else ("M", b.m.rows))
        return tuple(out)


def toeplitz_operator(symbol: RationalSymbol, correction: FiniteRankOperator = FR_ZERO) -> BlockOperator:
    return BlockOperator((ToeplitzBlock(symbol, correction),))


def matrix_operator(m: ExactMatrix) -> BlockOperator:
    return BlockOperator((MatrixBlock(m),))


def direct_sum(a: BlockOperator, b: BlockOperator) -> BlockOperator:
    return BlockOperator(a.blocks + b.blocks)


def identity_like(a: BlockOperator) -> BlockOperator:
    blocks: list[Block] = []
    for b in a.blocks:
        if isinstance(b, ToeplitzBlock):
            blocks.append(ToeplitzBlock(make_factored(ONE, 0, [], []), FR_ZERO))
        else:
            blocks.append(MatrixBlock(mat_identity(b.m.rows)))
    return BlockOperator(tuple(blocks))


def _check_signature(a: BlockOperator, b: BlockOperator):
    if a.signature() != b.signature():
        raise SignatureMismatch(
            f"block signatures differ: {a.signature()} vs {b.signature()}"
        )


def _toeplitz_mul(x: ToeplitzBlock, y: ToeplitzBlock) -> ToeplitzBlock:
    f, F = x.symbol, x.correction
    g, G = y.symbol, y.correction
    needs = (
        (f, not g.is_zero() or bool(G.terms)),
        (g, not f.is_zero() or bool(F.terms)),
    )
    for s, consumed in needs:
        if consumed and not s.supports_coefficients():
            raise MissingSplit(
                f"product needs exact coefficients of {s}; no CircleSplit"
            )
    symbol = sym_arith(f, g, "mul")
    corr = -hankel_defect(f, g)
    if not f.is_zero() and G.terms:
        corr = corr + make_finite_rank(
            [(toeplitz_apply(f, u), v) for u, v in G.terms]
        )
    if not g.is_zero() and F.terms:
        corr = corr + make_finite_rank(
            [(u, toeplitz_apply_transpose(g, v)) for u, v in F.terms]
        )
    corr = corr + F.compose(G)
    return ToeplitzBlock(symbol, corr)


def op_arith(a: BlockOperator, b: BlockOperator, op: str) -> BlockOperator:
    _check_signature(a, b)
    blocks: list[Block] = []
    for x, y in zip(a.blocks, b.blocks):
        if isinstance(x, ToeplitzBlock):
            assert isinstance(y, ToeplitzBlock)
            if op == "add":
                blocks.append(
                    ToeplitzBlock(
                        sym_arith(x.symbol, y.symbol, "add"),
                        x.correction + y.correction,
                    )
                )
            elif op == "sub":
                blocks.append(
                    ToeplitzBlock(
                        sym_arith(x.symbol, y.symbol, "sub"),
                        x.correction - y.correction,
                    )
                )
            elif op == "mul":
                blocks.append(_toeplitz_mul(x, y))
            else:
                raise ValueError(f"unknown op {op!r}")
        else:
            assert isinstance(y, MatrixBlock)
            if op == "add":
                blocks.append(MatrixBlock(x.m + y.m))
            elif op == "sub":
                blocks.append(MatrixBlock(x.m - y.m))
            elif op == "mul":
                blocks.append(MatrixBlock(x.m * y.m))
            else:
                raise ValueError(f"unknown op {op!r}")
    return BlockOperator(tuple(blocks))


def op_scale(a: BlockOperator, c: GaussianRational) -> BlockOperator:
    blocks: list[Block] = []
    for b in a.blocks:
        if isinstance(b, ToeplitzBlock):
            blocks.append(ToeplitzBlock(sym_scale(b.symbol, c), b.correction.scale(c)))
        else:
            blocks.append(MatrixBlock(b.m.scale(c)))
    return BlockOperator(tuple(blocks))


def scalar_shift(a: BlockOperator, lam: GaussianRational) -> BlockOperator:
    """A - lambda * identity, blockwise."""
    const = make_factored(lam, 0, [], [])
    blocks: list[Block] = []
    for b in a.blocks:
        if isinstance(b, ToeplitzBlock):
            blocks.append(
                ToeplitzBlock(sym_arith(b.symbol, const, "sub"), b.correction)
            )
        else:
            blocks.append(MatrixBlock(b.m - mat_identity(b.m.rows).scale(lam)))
    return BlockOperator(tuple(blocks))


def op_power(a: BlockOperator, p: int) -> BlockOperator:
    out = identity_like(a)
    for _ in range(p):
        out = op_arith(out, a, "mul")
    return out


def op_entry(a: BlockOperator, block_index: int, i: int, j: int) -> GaussianRational:
    from .symbols import fourier_coeff
    from .finiterank import fr_entry

    block = a.blocks[block_index]
    if isinstance(block, ToeplitzBlock):
        sym = block.symbol
        base = ZERO if sym.is_zero() else fourier_coeff(sym, i - j)
        return base + fr_entry(block.correction, i, j)
    if not (0 <= i < block.m.rows and 0 <= j < block.m.cols):
        raise IndexOutOfRange(f"({i},{j}) outside {block.m.rows}x{block.m.cols} block")
    return block.m.at(i, j)


def op_equal(a: BlockOperator, b: BlockOperator) -> bool:
    _check_signature(a, b)
    for x, y in zip(a.blocks, b.blocks):
        if isinstance(x, ToeplitzBlock):
            if not sym_equal(x.symbol, y.symbol):
                return False
            if not fr_is_zero(x.correction - y.correction):
                return False
        else:
            if x.m != y.m:
                return False
    return True


def quotient_equal(a: BlockOperator, b: BlockOperator) -> bool:
    """True iff a - b lies in the blockwise finite-rank ideal."""
    _check_signature(a, b)
    for x, y in zip(a.blocks, b.blocks):
        if isinstance(x, ToeplitzBlock) and not sym_equal(x.symbol, y.symbol):
            return False
    return True


def embed_finite_rank(a: BlockOperator, F: FiniteRankOperator, block_index: int = 0) -> BlockOperator:
    """A zero operator of a's signature carrying F on one Toeplitz block."""
    blocks: list[Block] = []
    for idx, b in enumerate(a.blocks):
        if isinstance(b, ToeplitzBlock):
            blocks.append(
                ToeplitzBlock(ZERO_SYMBOL, F if idx == block_index else FR_ZERO)
            )
        else:
            blocks.append(MatrixBlock(b.m.scale(ZERO)))
    if not isinstance(a.blocks[block_index], ToeplitzBlock):
        raise SignatureMismatch("finite-rank placement must target a Toeplitz block")
    return BlockOperator(tuple(blocks))
