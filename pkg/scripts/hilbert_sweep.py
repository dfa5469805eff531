"""Compare computed Backelin Hilbert numerators with the closed form over a parameter grid.

Prints one line per (n, r) with the residual against the closed form and the
difference of the as-stated variant. Exits 1 if any residual is nonzero.
"""
import argparse
import sys

from monocurve.families import affine_basis_for, backelin_hilbert_formula, backelin_hilbert_formula_as_stated
from monocurve.groebner import initial_ideal
from monocurve.monomial_ideal import hilbert_numerator


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--extra-r", type=int, default=3, help="r runs from 3n+2 to 3n+2+extra_r")
    args = ap.parse_args(argv)

    bad = 0
    for n in range(2, args.max_n + 1):
        for r in range(3 * n + 2, 3 * n + 3 + args.extra_r):
            num = hilbert_numerator(initial_ideal(affine_basis_for("backelin", {"n": n, "r": r})))
            residual = (backelin_hilbert_formula(n, r) - num).coeffs
            stated = (backelin_hilbert_formula_as_stated(n, r) - num).coeffs
            bad += bool(residual)
            print(f"n={n} r={r} residual={dict(sorted(residual.items()))} "
                  f"as_stated_minus_computed={dict(sorted(stated.items()))}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
