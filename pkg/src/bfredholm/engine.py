"""Index analysis on the block-operator algebra.

Classification mirrors invertibility of the quotient class: an operator
is Fredholm when every l2 block has a nonzero symbol with no zeros on
the unit circle, and B-Fredholm when zero symbols (whose quotient class
is Drazin invertible with inverse 0) are also allowed.  The index is
computed two independent ways — the trace of the commutator against a
Drazin witness, and minus the sum of symbol winding numbers — and the
two must agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    MissingSplit,
    NonIntegerTrace,
    NotBezout,
    NotBFredholm,
    NotCommuting,
    OracleMismatch,
)
from .finiterank import FR_ZERO, FiniteRankOperator, make_finite_rank, trace as fr_trace
from .matrices import drazin, is_nilpotent, zeros as mat_zeros
from .operators import (
    Block,
    BlockOperator,
    MatrixBlock,
    ToeplitzBlock,
    direct_sum,
    identity_like,
    op_arith,
    op_equal,
    op_power,
    op_scale,
    scalar_shift,
    toeplitz_operator,
)
from .poly import Polynomial
from .rootloc import has_zero_on_circle
from .scalars import GaussianRational, ONE, ZERO, gr
from .sequences import seq_finite
from .symbols import (
    ZERO_SYMBOL,
    invert_symbol,
    sym_equal,
    winding_number,
)

INVERTIBLE_MOD_J = "InvertibleModJ"
FREDHOLM = "Fredholm"
B_FREDHOLM = "BFredholm"
NOT_IN_CLASS = "NotInClass"

FREDHOLM_CLASSES = (INVERTIBLE_MOD_J, FREDHOLM)
B_FREDHOLM_CLASSES = (INVERTIBLE_MOD_J, FREDHOLM, B_FREDHOLM)


def classify(a: BlockOperator) -> str:
    """Total classification of the quotient class pi(a)."""
    sym_blocks = [b for b in a.blocks if isinstance(b, ToeplitzBlock)]
    has_zero_symbol = False
    windings = []
    for b in sym_blocks:
        f = b.symbol
        if f.is_zero():
            has_zero_symbol = True
            continue
        if not f.num.is_constant() and has_zero_on_circle(f.num):
            return NOT_IN_CLASS
        windings.append(winding_number(f))
    if has_zero_symbol or not sym_blocks:
        return B_FREDHOLM
    if all(w == 0 for w in windings):
        return INVERTIBLE_MOD_J
    return FREDHOLM


@dataclass(frozen=True, slots=True)
class DrazinWitness:
    """Candidate Drazin inverse of pi(a), with certifying defects.

    The three defects a*a0 - a0*a, a0*a*a0 - a0, a^(p+1)*a0 - a^p are
    full BlockOperators; the certificate is that each lies in the ideal
    (every Toeplitz symbol difference is the zero symbol).
    """

    inverse: BlockOperator
    quotient_index: int
    defects: tuple[BlockOperator, BlockOperator, BlockOperator]
    matrix_indices: tuple[int, ...] = ()

    def defects_in_ideal(self) -> bool:
        return all(_in_ideal(d) for d in self.defects)


def _in_ideal(a: BlockOperator) -> bool:
    return all(
        b.symbol.is_zero() for b in a.blocks if isinstance(b, ToeplitzBlock)
    )


def drazin_witness(a: BlockOperator, matrix_mode: str = "drazin") -> DrazinWitness:
    """Blockwise witness: T(f) -> T(1/f), zero symbol -> 0, matrix ->
    its Drazin inverse (or 0 with matrix_mode='zero'; both are valid
    modulo the ideal and must give the same index)."""
    if classify(a) == NOT_IN_CLASS:
        raise NotBFredholm("a symbol vanishes on the unit circle")
    if matrix_mode not in ("drazin", "zero"):
        raise ValueError(f"unknown matrix_mode {matrix_mode!r}")
    blocks: list[Block] = []
    p = 0
    matrix_indices = []
    for b in a.blocks:
        if isinstance(b, ToeplitzBlock):
            if b.symbol.is_zero():
                blocks.append(ToeplitzBlock(ZERO_SYMBOL, FR_ZERO))
                p = max(p, 1)
            else:
                blocks.append(ToeplitzBlock(invert_symbol(b.symbol), FR_ZERO))
        else:
            d, k = drazin(b.m)
            matrix_indices.append(k)
            if matrix_mode == "zero":
                nil = is_nilpotent(b.m)
                blocks.append(MatrixBlock(mat_zeros(b.m.rows, b.m.rows)))
                # the zero witness certifies Drazin invertibility mod J
                # regardless (the whole block is an ideal member); only
                # nilpotent blocks make it a witness in A itself
                p = max(p, nil if nil is not None else k)
            else:
                blocks.append(MatrixBlock(d))
                p = max(p, k)
    a0 = BlockOperator(tuple(blocks))
    d1 = op_arith(op_arith(a, a0, "mul"), op_arith(a0, a, "mul"), "sub")
    d2 = op_arith(
        op_arith(op_arith(a0, a, "mul"), a0, "mul"), a0, "sub"
    )
    ap = op_power(a, p)
    d3 = op_arith(op_arith(op_power(a, p + 1), a0, "mul"), ap, "sub")
    w = DrazinWitness(a0, p, (d1, d2, d3), tuple(matrix_indices))
    if not w.defects_in_ideal():
        raise OracleMismatch("a Drazin defect left the ideal; internal error")
    return w


def _commutator_trace(a: BlockOperator, a0: BlockOperator) -> GaussianRational:
    """tau(a*a0 - a0*a), summed blockwise; symbols must cancel."""
    comm = op_arith(op_arith(a, a0, "mul"), op_arith(a0, a, "mul"), "sub")
    total = ZERO
    for b in comm.blocks:
        if isinstance(b, ToeplitzBlock):
            if not b.symbol.is_zero():
                raise OracleMismatch(
                    f"commutator symbol {b.symbol} is not zero; internal error"
                )
            total = total + fr_trace(b.correction)
        else:
            total = total + b.m.trace()
    return total


def index_trace(a: BlockOperator, witness: DrazinWitness | None = None) -> int:
    """i(a) = tau(a a0 - a0 a) for a Drazin witness a0; exact integer."""
    if witness is None:
        witness = drazin_witness(a)
    t = _commutator_trace(a, witness.inverse)
    if not t.is_rational_integer():
        raise NonIntegerTrace(
            f"tau([a, a0]) = {t} is not an integer; commutator dump: "
            + "; ".join(str(b) for b in witness.defects[0].blocks)
        )
    return int(t.re)


def index_winding(a: BlockOperator) -> int:
    """Independent oracle: minus the sum of symbol winding numbers."""
    if classify(a) == NOT_IN_CLASS:
        raise NotBFredholm("a symbol vanishes on the unit circle")
    total = 0
    for b in a.blocks:
        if isinstance(b, ToeplitzBlock) and not b.symbol.is_zero():
            total -= winding_number(b.symbol)
    return total


@dataclass(frozen=True, slots=True)
class IndexReport:
    classification: str
    index_trace: int | None
    index_winding: int | None
    quotient_index: int | None
    pathway_notes: tuple[str, ...]
    defects_in_ideal: bool | None = None


def analyze(a: BlockOperator) -> IndexReport:
    """Classification plus both index routes where available."""
    c = classify(a)
    if c == NOT_IN_CLASS:
        return IndexReport(c, None, None, None, ("no index: not in class",))
    iw = index_winding(a)
    notes = ["winding route: -sum of symbol windings"]
    it = None
    qidx = None
    ideal_ok = None
    try:
        w = drazin_witness(a)
        it = index_trace(a, w)
        qidx = w.quotient_index
        ideal_ok = w.defects_in_ideal()
        notes.append("trace route: tau([a, a0]) against the Drazin witness")
        if it != iw:
            raise OracleMismatch(
                f"index_trace={it} disagrees with index_winding={iw}"
            )
    except MissingSplit:
        notes.append("trace route unavailable: symbol without CircleSplit")
    return IndexReport(c, it, iw, qidx, tuple(notes), ideal_ok)


# ---------------------------------------------------------------------------
# Theorem verifiers.
# ---------------------------------------------------------------------------


def verify_fedosov(a: BlockOperator) -> IndexReport:
    """Both routes must agree exactly (trace-formula identity)."""
    w = drazin_witness(a)
    it = index_trace(a, w)
    iw = index_winding(a)
    if it != iw:
        raise OracleMismatch(f"trace index {it} != winding index {iw}")
    return IndexReport(
        classify(a), it, iw, w.quotient_index,
        ("both routes computed and equal",), w.defects_in_ideal(),
    )


def random_ideal_element(
    rng: random.Random, rank: int = 2, support: int = 4
) -> FiniteRankOperator:
    """Seeded small finite-rank operator with finite-support factors."""

    def small() -> GaussianRational:
        return gr(
            Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
            Fraction(rng.randint(-3, 3), rng.randint(1, 4)),
        )

    terms = []
    for _ in range(rng.randint(1, rank)):
        u = seq_finite([small() for _ in range(rng.randint(1, support))])
        v = seq_finite([small() for _ in range(rng.randint(1, support))])
        terms.append((u, v))
    return make_finite_rank(terms)


def _perturb_witness(
    a0: BlockOperator, rng: random.Random
) -> BlockOperator:
    """a0 + j for a random ideal element j spread over all blocks."""
    blocks: list[Block] = []
    for b in a0.blocks:
        if isinstance(b, ToeplitzBlock):
            j = random_ideal_element(rng)
            blocks.append(ToeplitzBlock(b.symbol, b.correction + j))
        else:
            n = b.m.rows
            delta = [
                [
                    gr(Fraction(rng.randint(-2, 2), rng.randint(1, 3)))
                    for _ in range(n)
                ]
                for _ in range(n)
            ]
            from .matrices import matrix

            blocks.append(MatrixBlock(b.m + matrix(delta)))
    return BlockOperator(tuple(blocks))


def verify_well_defined(
    a: BlockOperator, trials: int = 20, rng_seed: int = 0
) -> dict:
    """tau([a, a0 + j]) is independent of the ideal perturbation j."""
    w = drazin_witness(a)
    base = index_trace(a, w)
    rng = random.Random(rng_seed)
    values = []
    for _ in range(trials):
        a0p = _perturb_witness(w.inverse, rng)
        t = _commutator_trace(a, a0p)
        if not t.is_rational_integer():
            raise NonIntegerTrace(f"perturbed commutator trace {t}")
        values.append(int(t.re))
    if any(v != base for v in values):
        raise OracleMismatch(
            f"perturbed traces {values} differ from the base index {base}"
        )
    return {"index": base, "trials": trials, "values": values}


SCAN_DIRECTIONS: tuple[GaussianRational, ...] = (
    gr(1),
    gr(-1),
    gr(0, 1),
    gr(0, -1),
    gr(Fraction(3, 5), Fraction(4, 5)),
    gr(Fraction(3, 5), Fraction(-4, 5)),
    gr(Fraction(-3, 5), Fraction(4, 5)),
    gr(Fraction(-3, 5), Fraction(-4, 5)),
)


@dataclass(frozen=True, slots=True)
class ScanRow:
    lam: GaussianRational
    radius: Fraction
    classification: str
    index: int | None


@dataclass(frozen=True, slots=True)
class ScanReport:
    base_classification: str
    base_index: int | None
    rows: tuple[ScanRow, ...]
    stable_radius: Fraction | None  # largest radius with all smaller samples Fredholm at the base index


def punctured_scan(
    a: BlockOperator, radii: list[Fraction], directions: int = 8
) -> ScanReport:
    """Classify a - lambda*e on a punctured grid around 0 (Thm 3.1 shape)."""
    base_c = classify(a)
    if base_c == NOT_IN_CLASS:
        raise NotBFredholm("base operator is not in class")
    base = index_winding(a)
    rows = []
    dirs = SCAN_DIRECTIONS[:directions]
    for r in sorted(set(Fraction(x) for x in radii)):
        for d in dirs:
            lam = d * gr(r)
            shifted = scalar_shift(a, lam)
            c = classify(shifted)
            idx = index_winding(shifted) if c != NOT_IN_CLASS else None
            rows.append(ScanRow(lam, r, c, idx))
    stable = None
    for r in sorted(set(row.radius for row in rows)):
        group = [row for row in rows if row.radius <= r]
        if all(row.classification in FREDHOLM_CLASSES and row.index == base for row in group):
            stable = r
        else:
            break
    return ScanReport(base_c, base, tuple(rows), stable)


def verify_log_law(
    a1: BlockOperator,
    a2: BlockOperator,
    u1: BlockOperator,
    u2: BlockOperator,
) -> dict:
    """Bezout log law: commuting a1, a2 with u1 a1 + u2 a2 = e gives
    i(a1 a2) = i(a1) + i(a2)."""
    ops = [a1, a2, u1, u2]
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            left = op_arith(ops[i], ops[j], "mul")
            right = op_arith(ops[j], ops[i], "mul")
            if not op_equal(left, right):
                raise NotCommuting(f"operands {i} and {j} do not commute")
    bezout = op_arith(
        op_arith(u1, a1, "mul"), op_arith(u2, a2, "mul"), "add"
    )
    if not op_equal(bezout, identity_like(a1)):
        raise NotBezout("u1 a1 + u2 a2 is not the identity")
    prod = op_arith(a1, a2, "mul")
    i1 = index_winding(a1)
    i2 = index_winding(a2)
    ip = index_winding(prod)
    if ip != i1 + i2:
        raise OracleMismatch(f"i(a1 a2)={ip} but i(a1)+i(a2)={i1 + i2}")
    notes = ["winding route"]
    try:
        t1 = index_trace(a1)
        t2 = index_trace(a2)
        tp = index_trace(prod)
        if (t1, t2, tp) != (i1, i2, ip):
            raise OracleMismatch("trace route disagrees on the log law")
        notes.append("trace route")
    except MissingSplit:
        pass
    return {"i_a1": i1, "i_a2": i2, "i_product": ip, "routes": notes}


def verify_ideal_perturbation(
    a: BlockOperator, j: FiniteRankOperator, block_index: int = 0
) -> dict:
    """i(a + j) = i(a) for ideal j (Proposition ii shape)."""
    from .operators import embed_finite_rank

    if classify(a) == NOT_IN_CLASS:
        raise NotBFredholm("base operator is not in class")
    perturbed = op_arith(a, embed_finite_rank(a, j, block_index), "add")
    c = classify(perturbed)
    if c == NOT_IN_CLASS:
        raise OracleMismatch("ideal perturbation left the class")
    base = index_winding(a)
    after = index_winding(perturbed)
    if base != after:
        raise OracleMismatch(f"index moved under ideal perturbation: {base} -> {after}")
    routes = ["winding route"]
    try:
        tb = index_trace(a)
        ta = index_trace(perturbed)
        if (tb, ta) != (base, after):
            raise OracleMismatch("trace route disagrees under ideal perturbation")
        routes.append("trace route")
    except MissingSplit:
        pass
    return {"index": base, "classification": c, "routes": routes}


def verify_power_law(a: BlockOperator, p: int) -> dict:
    """i(a^p) = p * i(a), both routes."""
    if p < 1:
        raise ValueError("power must be >= 1")
    ap = op_power(a, p)
    iw = index_winding(a)
    iwp = index_winding(ap)
    if iwp != p * iw:
        raise OracleMismatch(f"winding: i(a^{p})={iwp} != {p}*{iw}")
    it = index_trace(a)
    itp = index_trace(ap)
    if (it, itp) != (iw, iwp):
        raise OracleMismatch("trace route disagrees on the power law")
    return {"index": iw, "power": p, "index_power": iwp}


def nonstability_demo() -> list[dict]:
    """T(z-1) is not in class, yet arbitrarily small scalar shifts are
    Fredholm: the class of B-Fredholm operators is not open."""
    from .poly import poly
    from .symbols import make_symbol

    base = toeplitz_operator(make_symbol(poly([-1, 1]), poly([1])))
    rows = []
    lams = [
        gr(0),
        gr(Fraction(1, 8)),
        gr(Fraction(-1, 8)),
        gr(0, Fraction(1, 8)),
        gr(Fraction(1, 16)),
        gr(Fraction(-1, 16)),
        gr(0, Fraction(-1, 16)),
        gr(Fraction(3, 40), Fraction(1, 10)),
    ]
    for lam in lams:
        shifted = scalar_shift(base, lam)
        c = classify(shifted)
        idx = index_winding(shifted) if c != NOT_IN_CLASS else None
        rows.append({"lambda": lam, "classification": c, "index": idx})
    return rows
