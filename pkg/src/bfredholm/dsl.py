"""Operator-expression DSL: parser, pretty-printer, evaluator.

Grammar (EBNF):

    program := expr ('(++)' expr)*
    expr    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom | scalar '*' factor | '-' factor | '(' expr ')'
    atom    := 'T' '(' symexpr ')' | 'I'
             | 'FR' '{' pair (';' pair)* '}' | 'M' matrixlit
    pair    := seq '|' seq
    seq     := 'fin' '[' scalar (',' scalar)* ']'
             | 'geo' '(' scalar (';' int)? ')' | 'e' int
    symexpr := sterm (('+'|'-') sterm)* ; sterm := sfactor (('*'|'/') sfactor)*
    sfactor := satom ('^' signed-int)? | '-' sfactor
    satom   := 'z' | scalar | '(' symexpr ')'

Scalars are exact Gaussian rationals like 2, -1/4, 3i, 1/2+1/2i
(parenthesized when used as a leading coefficient).  Constant symbol
subexpressions are folded during parsing, so pretty-printing and
re-parsing reproduce the AST exactly.  geo(r; d) denotes the sequence
n^d * r^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, SignatureMismatch, ZeroSymbol
from .finiterank import FR_ZERO, make_finite_rank
from .matrices import matrix as make_matrix
from .operators import (
    BlockOperator,
    MatrixBlock,
    ToeplitzBlock,
    direct_sum,
    op_arith,
    op_scale,
    toeplitz_operator,
)
from .scalars import GaussianRational, ONE, ZERO, format_scalar, gr
from .sequences import RationalSequence, seq_basis, seq_finite, seq_geo
from .symbols import (
    RationalSymbol,
    ZERO_SYMBOL,
    make_factored,
    make_symbol,
    sym_arith,
    sym_div,
    sym_pow,
    sym_scale,
)
from .poly import poly


# ---------------------------------------------------------------------------
# Tokens.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # 'int', 'id', 'punct', 'dsum', 'eof'
    text: str
    line: int
    col: int


_PUNCT = set("+-*/^()[]{},;|")


def tokenize(text: str) -> list[Token]:
    out = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if text.startswith("(++)", i):
            out.append(Token("dsum", "(++)", line, col))
            i += 4
            col += 4
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            out.append(Token("id", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            out.append(Token("punct", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(Token("eof", "", line, col))
    return out


# ---------------------------------------------------------------------------
# AST node types (all frozen; structural equality is the round-trip test).
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SVar:
    pass


@dataclass(frozen=True, slots=True)
class SConst:
    value: GaussianRational


@dataclass(frozen=True, slots=True)
class SBin:
    op: str  # '+', '-', '*', '/'
    left: "SymNode"
    right: "SymNode"


@dataclass(frozen=True, slots=True)
class SPow:
    base: "SymNode"
    exp: int


@dataclass(frozen=True, slots=True)
class SNeg:
    arg: "SymNode"


SymNode = SVar | SConst | SBin | SPow | SNeg


@dataclass(frozen=True, slots=True)
class FinSeq:
    values: tuple[GaussianRational, ...]


@dataclass(frozen=True, slots=True)
class GeoSeq:
    ratio: GaussianRational
    degree: int = 0


@dataclass(frozen=True, slots=True)
class BasisSeq:
    index: int


SeqNode = FinSeq | GeoSeq | BasisSeq


@dataclass(frozen=True, slots=True)
class TAtom:
    sym: SymNode


@dataclass(frozen=True, slots=True)
class IdentityAtom:
    pass


@dataclass(frozen=True, slots=True)
class FRAtom:
    pairs: tuple[tuple[SeqNode, SeqNode], ...]


@dataclass(frozen=True, slots=True)
class MatrixAtom:
    rows: tuple[tuple[GaussianRational, ...], ...]


@dataclass(frozen=True, slots=True)
class OpBin:
    op: str  # '+', '-', '*'
    left: "OpNode"
    right: "OpNode"


@dataclass(frozen=True, slots=True)
class OpNeg:
    arg: "OpNode"


@dataclass(frozen=True, slots=True)
class OpScalarMul:
    scalar: GaussianRational
    arg: "OpNode"


@dataclass(frozen=True, slots=True)
class DirectSum:
    parts: tuple["OpNode", ...]


OpNode = TAtom | IdentityAtom | FRAtom | MatrixAtom | OpBin | OpNeg | OpScalarMul | DirectSum


# ---------------------------------------------------------------------------
# Parser.
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.peek()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.col)
        return self.next()

    def fail(self, msg: str):
        t = self.peek()
        raise ParseError(msg, t.line, t.col)

    # -- scalars ----------------------------------------------------------

    def at_scalar(self) -> bool:
        t = self.peek()
        return t.kind == "int" or (t.kind == "id" and t.text == "i")

    def parse_scalar(self) -> GaussianRational:
        """Full scalar literal: [-] part [('+'|'-') part], part = a[/b][i] | i."""
        first = self._scalar_part(allow_sign=True)
        t = self.peek()
        if t.text in ("+", "-") and self._part_ahead(1):
            self.next()
            second = self._scalar_part(allow_sign=False)
            if t.text == "-":
                second = -second
            return first + second
        return first

    def _part_ahead(self, k: int) -> bool:
        t = self.peek(k)
        return t.kind == "int" or (t.kind == "id" and t.text == "i")

    def _scalar_part(self, allow_sign: bool) -> GaussianRational:
        sign = 1
        if allow_sign and self.peek().text == "-":
            self.next()
            sign = -1
        t = self.peek()
        if t.kind == "id" and t.text == "i":
            self.next()
            return gr(0, sign)
        if t.kind != "int":
            self.fail("expected a number")
        self.next()
        numer = int(t.text)
        denom = 1
        if self.peek().text == "/" and self.peek(1).kind == "int":
            self.next()
            denom = int(self.next().text)
            if denom == 0:
                raise ParseError("zero denominator in scalar", t.line, t.col)
        q = Fraction(sign * numer, denom)
        if self.peek().kind == "id" and self.peek().text == "i":
            self.next()
            return gr(0, q)
        return gr(q)

    def parse_int(self) -> int:
        sign = 1
        if self.peek().text == "-":
            self.next()
            sign = -1
        t = self.peek()
        if t.kind != "int":
            self.fail("expected an integer")
        self.next()
        return sign * int(t.text)

    # -- symbol expressions ----------------------------------------------

    def parse_symexpr(self) -> SymNode:
        node = self.parse_sterm()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            right = self.parse_sterm()
            node = _fold(SBin(op, node, right))
        return node

    def parse_sterm(self) -> SymNode:
        node = self.parse_sfactor()
        while self.peek().text in ("*", "/"):
            op = self.next().text
            right = self.parse_sfactor()
            node = _fold(SBin(op, node, right))
        return node

    def parse_sfactor(self) -> SymNode:
        t = self.peek()
        if t.text == "-":
            if self._part_ahead(1):
                # Signed scalar literal, e.g. "-3/4-1/2i"; let parse_scalar
                # apply the sign to the first part only.
                node = SConst(self.parse_scalar())
            else:
                self.next()
                return _fold(SNeg(self.parse_sfactor()))
        else:
            node = self.parse_satom()
        if self.peek().text == "^":
            self.next()
            exp = self.parse_int()
            node = _fold(SPow(node, exp))
        return node

    def parse_satom(self) -> SymNode:
        t = self.peek()
        if t.kind == "id" and t.text == "z":
            self.next()
            return SVar()
        if self.at_scalar():
            return SConst(self.parse_scalar())
        if t.text == "(":
            self.next()
            node = self.parse_symexpr()
            self.expect(")")
            return node
        self.fail("expected 'z', a scalar, or '(' in symbol expression")

    # -- sequences and atoms ----------------------------------------------

    def parse_seq(self) -> SeqNode:
        t = self.peek()
        if t.kind == "id" and t.text == "fin":
            self.next()
            self.expect("[")
            values = [self.parse_scalar()]
            while self.peek().text == ",":
                self.next()
                values.append(self.parse_scalar())
            self.expect("]")
            return FinSeq(tuple(values))
        if t.kind == "id" and t.text == "geo":
            self.next()
            self.expect("(")
            ratio = self.parse_scalar()
            degree = 0
            if self.peek().text == ";":
                self.next()
                degree = self.parse_int()
                if degree < 0:
                    raise ParseError("geo degree must be >= 0", t.line, t.col)
            self.expect(")")
            if ratio.abs2() >= 1:
                raise ParseError(
                    f"geo ratio {format_scalar(ratio)} is not inside the unit circle",
                    t.line, t.col,
                )
            return GeoSeq(ratio, degree)
        if t.kind == "id" and t.text == "e":
            self.next()
            idx = self.peek()
            if idx.kind != "int":
                self.fail("expected a basis index after 'e'")
            self.next()
            return BasisSeq(int(idx.text))
        self.fail("expected a sequence ('fin', 'geo', or 'e')")

    def parse_matrix(self) -> MatrixAtom:
        self.expect("[")
        rows = [self._parse_matrix_row()]
        while self.peek().text == ",":
            self.next()
            rows.append(self._parse_matrix_row())
        self.expect("]")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            self.fail("ragged matrix literal")
        if len(rows) != width:
            self.fail("matrix blocks must be square")
        return MatrixAtom(tuple(rows))

    def _parse_matrix_row(self) -> tuple[GaussianRational, ...]:
        self.expect("[")
        out = [self.parse_scalar()]
        while self.peek().text == ",":
            self.next()
            out.append(self.parse_scalar())
        self.expect("]")
        return tuple(out)

    def parse_atom(self) -> OpNode:
        t = self.peek()
        if t.kind == "id" and t.text == "T":
            self.next()
            self.expect("(")
            sym = self.parse_symexpr()
            self.expect(")")
            return TAtom(sym)
        if t.kind == "id" and t.text == "I":
            self.next()
            return IdentityAtom()
        if t.kind == "id" and t.text == "FR":
            self.next()
            self.expect("{")
            pairs = [self._parse_pair()]
            while self.peek().text == ";":
                self.next()
                pairs.append(self._parse_pair())
            self.expect("}")
            return FRAtom(tuple(pairs))
        if t.kind == "id" and t.text == "M":
            self.next()
            return self.parse_matrix()
        self.fail("expected an operator atom (T, I, FR, or M)")

    def _parse_pair(self) -> tuple[SeqNode, SeqNode]:
        u = self.parse_seq()
        self.expect("|")
        v = self.parse_seq()
        return (u, v)

    # -- operator expressions ----------------------------------------------

    def parse_factor(self) -> OpNode:
        t = self.peek()
        if t.text == "-":
            self.next()
            return OpNeg(self.parse_factor())
        if self.at_scalar():
            c = self.parse_scalar()
            self.expect("*")
            return OpScalarMul(c, self.parse_factor())
        if t.text == "(":
            # a parenthesized scalar coefficient or a grouped expression
            save = self.pos
            self.next()
            if self.at_scalar() or self.peek().text == "-":
                try:
                    c = self.parse_scalar()
                    if self.peek().text == ")" and self.peek(1).text == "*":
                        self.next()
                        self.next()
                        return OpScalarMul(c, self.parse_factor())
                except ParseError:
                    pass
            self.pos = save
            self.next()
            node = self.parse_expr()
            self.expect(")")
            return node
        return self.parse_atom()

    def parse_term(self) -> OpNode:
        node = self.parse_factor()
        while self.peek().text == "*":
            self.next()
            node = OpBin("*", node, self.parse_factor())
        return node

    def parse_expr(self) -> OpNode:
        node = self.parse_term()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            node = OpBin(op, node, self.parse_term())
        return node

    def parse_program(self) -> OpNode:
        parts = [self.parse_expr()]
        while self.peek().kind == "dsum":
            self.next()
            parts.append(self.parse_expr())
        t = self.peek()
        if t.kind != "eof":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.line, t.col)
        return DirectSum(tuple(parts)) if len(parts) > 1 else parts[0]


def _fold(node: SymNode) -> SymNode:
    """Constant-fold symbol subexpressions so the AST is canonical."""
    if isinstance(node, SNeg) and isinstance(node.arg, SConst):
        return SConst(-node.arg.value)
    if isinstance(node, SBin) and isinstance(node.left, SConst) and isinstance(node.right, SConst):
        a, b = node.left.value, node.right.value
        if node.op == "+":
            return SConst(a + b)
        if node.op == "-":
            return SConst(a - b)
        if node.op == "*":
            return SConst(a * b)
        if node.op == "/" and not b.is_zero():
            return SConst(a / b)
    if isinstance(node, SPow) and isinstance(node.base, SConst):
        c = node.base.value
        if node.exp >= 0:
            out = ONE
            for _ in range(node.exp):
                out = out * c
            return SConst(out)
        if not c.is_zero():
            out = ONE
            for _ in range(-node.exp):
                out = out * c
            return SConst(out.inv())
    return node


def parse(text: str) -> OpNode:
    ast = _Parser(tokenize(text)).parse_program()
    check_signature(ast)
    return ast


# ---------------------------------------------------------------------------
# Pretty printer (parse(pretty(ast)) == ast).
# ---------------------------------------------------------------------------


def _pp_scalar(c: GaussianRational, delimited: bool) -> str:
    s = format_scalar(c)
    if delimited:
        return s
    if s.startswith("-") or "+" in s or "-" in s[1:]:
        return f"({s})"
    return s


def _pp_sym(node: SymNode, prec: int = 0) -> str:
    if isinstance(node, SVar):
        return "z"
    if isinstance(node, SConst):
        return _pp_scalar(node.value, delimited=False)
    if isinstance(node, SNeg):
        s = "-" + _pp_sym(node.arg, 3)
        return f"({s})" if prec > 2 else s
    if isinstance(node, SPow):
        base = _pp_sym(node.base, 4)
        if isinstance(node.base, SPow):
            base = f"({base})"
        return f"{base}^{node.exp}"
    lv = 1 if node.op in "+-" else 2
    ls = _pp_sym(node.left, lv)
    rs = _pp_sym(node.right, lv + 1)
    # parenthesize bare scalars so they cannot lex together with an
    # adjacent +/- term as one complex literal
    if isinstance(node.left, SConst):
        ls = f"({format_scalar(node.left.value)})"
    if isinstance(node.right, SConst):
        rs = f"({format_scalar(node.right.value)})"
    s = f"{ls} {node.op} {rs}"
    return f"({s})" if prec > lv else s


def _pp_seq(node: SeqNode) -> str:
    if isinstance(node, FinSeq):
        return "fin[" + ", ".join(format_scalar(v) for v in node.values) + "]"
    if isinstance(node, GeoSeq):
        if node.degree:
            return f"geo({format_scalar(node.ratio)}; {node.degree})"
        return f"geo({format_scalar(node.ratio)})"
    return f"e{node.index}"


def pretty(node: OpNode, prec: int = 0) -> str:
    if isinstance(node, DirectSum):
        s = " (++) ".join(pretty(p, 1) for p in node.parts)
        return f"({s})" if prec > 0 else s
    if isinstance(node, TAtom):
        return f"T({_pp_sym(node.sym)})"
    if isinstance(node, IdentityAtom):
        return "I"
    if isinstance(node, FRAtom):
        body = "; ".join(f"{_pp_seq(u)} | {_pp_seq(v)}" for u, v in node.pairs)
        return "FR{" + body + "}"
    if isinstance(node, MatrixAtom):
        rows = ", ".join(
            "[" + ", ".join(format_scalar(v) for v in row) + "]"
            for row in node.rows
        )
        return f"M[{rows}]"
    if isinstance(node, OpNeg):
        s = "-" + pretty(node.arg, 4)
        return f"({s})" if prec > 3 else s
    if isinstance(node, OpScalarMul):
        s = f"{_pp_scalar(node.scalar, delimited=False)} * {pretty(node.arg, 4)}"
        return f"({s})" if prec > 2 else s
    if isinstance(node, OpBin):
        lv = 1 if node.op in "+-" else 2
        s = f"{pretty(node.left, lv)} {node.op} {pretty(node.right, lv + 1)}"
        return f"({s})" if prec > lv else s
    raise TypeError(f"unknown node {node!r}")


# ---------------------------------------------------------------------------
# Signature check and evaluation.
# ---------------------------------------------------------------------------


def check_signature(node: OpNode) -> tuple:
    if isinstance(node, DirectSum):
        out: tuple = ()
        for p in node.parts:
            out = out + check_signature(p)
        return out
    if isinstance(node, (TAtom, IdentityAtom, FRAtom)):
        return ("T",)
    if isinstance(node, MatrixAtom):
        return (("M", len(node.rows)),)
    if isinstance(node, (OpNeg, OpScalarMul)):
        return check_signature(node.arg)
    if isinstance(node, OpBin):
        left = check_signature(node.left)
        right = check_signature(node.right)
        if left != right:
            raise SignatureMismatch(
                f"operands of {node.op!r} have signatures {left} and {right}"
            )
        return left
    raise TypeError(f"unknown node {node!r}")


def eval_sym(node: SymNode) -> RationalSymbol:
    if isinstance(node, SVar):
        return make_symbol(poly([0, 1]), poly([1]))
    if isinstance(node, SConst):
        if node.value.is_zero():
            return ZERO_SYMBOL
        return make_factored(node.value, 0, [], [])
    if isinstance(node, SNeg):
        return sym_scale(eval_sym(node.arg), gr(-1))
    if isinstance(node, SPow):
        return sym_pow(eval_sym(node.base), node.exp)
    left = eval_sym(node.left)
    right = eval_sym(node.right)
    if node.op == "+":
        return sym_arith(left, right, "add")
    if node.op == "-":
        return sym_arith(left, right, "sub")
    if node.op == "*":
        return sym_arith(left, right, "mul")
    return sym_div(left, right)


def eval_seq(node: SeqNode) -> RationalSequence:
    if isinstance(node, FinSeq):
        return seq_finite(node.values)
    if isinstance(node, GeoSeq):
        return seq_geo(node.ratio, node.degree)
    return seq_basis(node.index)


def evaluate(node: OpNode) -> BlockOperator:
    check_signature(node)
    return _eval(node)


def _eval(node: OpNode) -> BlockOperator:
    if isinstance(node, DirectSum):
        out = _eval(node.parts[0])
        for p in node.parts[1:]:
            out = direct_sum(out, _eval(p))
        return out
    if isinstance(node, TAtom):
        return toeplitz_operator(eval_sym(node.sym))
    if isinstance(node, IdentityAtom):
        return toeplitz_operator(make_factored(ONE, 0, [], []))
    if isinstance(node, FRAtom):
        terms = [(eval_seq(u), eval_seq(v)) for u, v in node.pairs]
        return BlockOperator((ToeplitzBlock(ZERO_SYMBOL, make_finite_rank(terms)),))
    if isinstance(node, MatrixAtom):
        return BlockOperator((MatrixBlock(make_matrix([list(r) for r in node.rows])),))
    if isinstance(node, OpNeg):
        return op_scale(_eval(node.arg), gr(-1))
    if isinstance(node, OpScalarMul):
        return op_scale(_eval(node.arg), node.scalar)
    if isinstance(node, OpBin):
        left = _eval(node.left)
        right = _eval(node.right)
        op = {"+": "add", "-": "sub", "*": "mul"}[node.op]
        return op_arith(left, right, op)
    raise TypeError(f"unknown node {node!r}")
