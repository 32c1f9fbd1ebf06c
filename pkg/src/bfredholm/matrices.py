"""Exact dense matrices over Q(i): rank, Drazin inverse, spectral trace.

Desk-scale (n <= 12) linear algebra with plain fraction arithmetic;
entries are canonical, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExactError, NotSquare
from .poly import Polynomial
from .scalars import GaussianRational, ONE, ZERO, gr


@dataclass(frozen=True, slots=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[GaussianRational, ...]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ExactError("entry count does not match the shape")

    def at(self, i: int, j: int) -> GaussianRational:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[GaussianRational]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "ExactMatrix":
        return self.scale(gr(-1))

    def scale(self, c: GaussianRational) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(a * c for a in self.entries))

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ExactError("inner dimensions do not match")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = self.at(i, k)
                    if not a.is_zero():
                        acc = acc + a * other.at(k, j)
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def trace(self) -> GaussianRational:
        self._square()
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.at(i, i)
        return acc

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.entries)

    def _same_shape(self, other: "ExactMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ExactError("shape mismatch")

    def _square(self):
        if self.rows != self.cols:
            raise NotSquare(f"{self.rows}x{self.cols} matrix is not square")

    def power(self, k: int) -> "ExactMatrix":
        self._square()
        out = identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self) -> str:
        rows = []
        for i in range(self.rows):
            rows.append("[" + ", ".join(str(x) for x in self.row(i)) + "]")
        return "[" + ", ".join(rows) + "]"


def matrix(rows) -> ExactMatrix:
    """Build from a list of row lists of ints/Fractions/GaussianRationals."""
    r = len(rows)
    c = len(rows[0]) if r else 0
    flat = []
    for row in rows:
        if len(row) != c:
            raise ExactError("ragged matrix literal")
        for v in row:
            flat.append(v if isinstance(v, GaussianRational) else gr(v))
    return ExactMatrix(r, c, tuple(flat))


def identity(n: int) -> ExactMatrix:
    return ExactMatrix(
        n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n))
    )


def zeros(r: int, c: int) -> ExactMatrix:
    return ExactMatrix(r, c, (ZERO,) * (r * c))


def jordan_nilpotent(n: int) -> ExactMatrix:
    """J_n(0): ones on the superdiagonal."""
    return ExactMatrix(
        n, n,
        tuple(ONE if j == i + 1 else ZERO for i in range(n) for j in range(n)),
    )


def _rref(rows: list[list[GaussianRational]]) -> tuple[list[list[GaussianRational]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(A: ExactMatrix) -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    _, pivots = _rref([A.row(i) for i in range(A.rows)])
    return len(pivots)


def null_space(A: ExactMatrix) -> list[list[GaussianRational]]:
    """Basis of the kernel as column vectors (lists of length cols)."""
    rows, pivots = _rref([A.row(i) for i in range(A.rows)])
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * A.cols
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def column_space(A: ExactMatrix) -> list[list[GaussianRational]]:
    """Basis of the column space as column vectors."""
    _, pivots = _rref([A.row(i) for i in range(A.rows)])
    return [[A.at(i, c) for i in range(A.rows)] for c in pivots]


def inverse(A: ExactMatrix) -> ExactMatrix:
    A._square()
    n = A.rows
    aug = [A.row(i) + identity(n).row(i) for i in range(n)]
    rows, pivots = _rref(aug)
    if len(pivots) != n or pivots != list(range(n)):
        raise ExactError("matrix is singular")
    return ExactMatrix(n, n, tuple(rows[i][n + j] for i in range(n) for j in range(n)))


def from_columns(cols: list[list[GaussianRational]]) -> ExactMatrix:
    n = len(cols[0])
    return ExactMatrix(
        n, len(cols), tuple(cols[j][i] for i in range(n) for j in range(len(cols)))
    )


def drazin(A: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Drazin inverse via the Fitting decomposition.

    Returns (D, k) where k is the smallest integer >= 0 with
    rank(A^k) = rank(A^(k+1)); D satisfies AD = DA, DAD = D and
    A^(k+1) D = A^k exactly.
    """
    A._square()
    n = A.rows
    if n == 0:
        return A, 0
    k = 0
    power = identity(n)
    r_prev = n
    while True:
        nxt = power * A
        r_next = rank(nxt)
        if r_next == r_prev:
            break
        power = nxt
        r_prev = r_next
        k += 1
    # power = A^k; split C^n = range(A^k) (+) ker(A^k), both A-invariant.
    if r_prev == n:
        return inverse(A), 0
    if r_prev == 0:
        return zeros(n, n), k
    cols = column_space(power) + null_space(power)
    P = from_columns(cols)
    Pinv = inverse(P)
    B = Pinv * A * P
    r = r_prev
    core = ExactMatrix(r, r, tuple(B.at(i, j) for i in range(r) for j in range(r)))
    core_inv = inverse(core)
    block = [[core_inv.at(i, j) if i < r and j < r else ZERO for j in range(n)] for i in range(n)]
    D = P * matrix(block) * Pinv
    return D, k


def charpoly(A: ExactMatrix) -> Polynomial:
    """Characteristic polynomial det(zI - A) by Faddeev-LeVerrier."""
    A._square()
    n = A.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    M = identity(n)
    c = ONE
    for k in range(1, n + 1):
        M = A * M
        c = -(M.trace()) / gr(k)
        coeffs[n - k] = c
        for i in range(n):
            idx = i * n + i
            M = ExactMatrix(
                n, n,
                tuple(e + c if t == idx else e for t, e in enumerate(M.entries)),
            )
    return Polynomial(tuple(coeffs))


def spectral_trace_check(A: ExactMatrix) -> bool:
    """Diagonal trace equals the eigenvalue sum with algebraic multiplicity.

    The eigenvalue sum is read off the characteristic polynomial as minus
    the degree-(n-1) coefficient; no eigenvalues are computed.
    """
    A._square()
    if A.rows == 0:
        return True
    p = charpoly(A)
    return A.trace() == -p.coeff(A.rows - 1)


def is_nilpotent(A: ExactMatrix) -> int | None:
    """Smallest p with A^p = 0, or None if A is not nilpotent."""
    A._square()
    n = A.rows
    power = identity(n)
    for p in range(1, n + 1):
        power = power * A
        if power.is_zero():
            return p
    return None
