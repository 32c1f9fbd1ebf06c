"""B-Fredholmness is not stable under small non-ideal perturbations.

T(z - 1) has a symbol zero at z = 1 on the unit circle, so it sits
outside the representation class (its quotient image is not Drazin
invertible there).  Yet T(z - 1) - lambda is Fredholm for *every*
nonzero lambda sampled here, with an index that depends on which side
of the symbol curve lambda lands on.  The B-Fredholm class has empty
interior around this operator.
"""

from bfredholm.engine import nonstability_demo
from bfredholm.scalars import format_scalar


def main():
    print("T(z - 1) under small scalar shifts:\n")
    print(f"{'lambda':>12}   {'classification':<14} index")
    for row in nonstability_demo():
        idx = "-" if row["index"] is None else row["index"]
        print(f"{format_scalar(row['lambda']):>12}   {row['classification']:<14} {idx}")
    print("\nlambda = 0 is not even B-Fredholm; every other sample is Fredholm,")
    print("with index 0 or -1 depending on the direction of the shift.")


if __name__ == "__main__":
    main()
