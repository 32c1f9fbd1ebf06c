"""Punctured-neighborhood scans, including an exact boundary coincidence.

For a B-Fredholm operator a, every small enough scalar shift a - lambda*e
is Fredholm with the same index.  "Small enough" is a real condition:
the symbol f(z) = (z - 1/2)^2 / (z - 3) satisfies f(1) = -1/8 *exactly*,
so its essential spectrum touches the radius-1/8 sampling circle and the
scan only stabilizes at 1/16.  Exact arithmetic turns what would be a
numerical near-miss into a provable case split.
"""

from fractions import Fraction

from bfredholm.engine import classify, punctured_scan
from bfredholm.operators import scalar_shift, toeplitz_operator
from bfredholm.scalars import format_scalar, gr
from bfredholm.symbols import make_factored


def scan_and_print(name, a, radii):
    rep = punctured_scan(a, radii)
    print(f"{name}: base index {rep.base_index}")
    for row in rep.rows:
        idx = "-" if row.index is None else row.index
        print(f"  lambda = {format_scalar(row.lam):>12}   {row.classification:<14} index {idx}")
    print(f"  stable radius: {rep.stable_radius}\n")


def main():
    half = gr(Fraction(1, 2))
    simple = toeplitz_operator(make_factored(gr(1), 0, [(half, 1)], []))
    ratio = toeplitz_operator(make_factored(gr(1), 0, [(half, 2)], [(gr(3), 1)]))

    scan_and_print("T(z - 1/2)", simple, [Fraction(1, 8)])
    scan_and_print("T((z-1/2)^2/(z-3))", ratio, [Fraction(1, 8), Fraction(1, 16)])

    touched = scalar_shift(ratio, gr(Fraction(-1, 8)))
    print("shift the ratio symbol by exactly -1/8:")
    print(f"  classification: {classify(touched)}")
    print("  f(1) = -1/8, so the shifted symbol vanishes at z = 1 on the circle.")


if __name__ == "__main__":
    main()
