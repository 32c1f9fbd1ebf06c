"""The unilateral shift, its Fredholm index, and the trace formula.

S = T(z) acts on l2(N) by (x0, x1, ...) -> (0, x0, x1, ...).  Its
adjoint-side partner T(1/z) shifts back, and the product defect
S S* - S* S = -(e0 (x) e0) is rank one with trace -1: the index of the
shift, computed without ever mentioning kernels or cokernels.
"""

from bfredholm.engine import analyze, verify_fedosov
from bfredholm.finiterank import trace
from bfredholm.operators import op_arith, op_entry, toeplitz_operator
from bfredholm.poly import poly
from bfredholm.symbols import invert_symbol, make_symbol


def main():
    z = make_symbol(poly([0, 1]), poly([1]))
    S = toeplitz_operator(z)
    St = toeplitz_operator(invert_symbol(z))

    print("T(z) * T(1/z), upper-left 4x4 window:")
    P = op_arith(S, St, "mul")
    for i in range(4):
        print("  " + "  ".join(str(op_entry(P, 0, i, j)) for j in range(4)))
    print("(the identity minus the rank-one projection onto e0)\n")

    comm = op_arith(P, op_arith(St, S, "mul"), "sub")
    print(f"tau(S S* - S* S) = {trace(comm.blocks[0].correction)}")

    rep = analyze(S)
    print(f"classification: {rep.classification}")
    print(f"index via the trace formula:  {rep.index_trace}")
    print(f"index via the winding number: {rep.index_winding}")

    verify_fedosov(S)  # raises on any disagreement
    print("both routes agree exactly.")


if __name__ == "__main__":
    main()
