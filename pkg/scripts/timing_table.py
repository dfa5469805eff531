"""Time the main verifications on each family instance and write a CSV table.

    python3 scripts/timing_table.py --out timings.csv
"""
import argparse
import csv
import sys
import time

from monocurve.families import (
    affine_basis_for,
    arslan_certificates,
    arslan_system,
    backelin_system,
    bresinsky_certificates,
    bresinsky_system,
)
from monocurve.groebner import buchberger_complete, initial_ideal, is_groebner_basis
from monocurve.monomial_ideal import hilbert_numerator
from monocurve.resolution import buchsbaum_eisenbud_verify
from monocurve.syzygy import betti_via_schreyer
from monocurve.toric import acm_test, affine_order, gastinger_verify, projective_order


def timed(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def backelin_rows(n, r):
    inst = backelin_system(n, r)
    label = f"n={n} r={r}"
    gens = list(inst.generators.values())
    cert, dt = timed(lambda: gastinger_verify(gens, inst.spec, 3))
    yield "backelin", label, "gastinger", dt, f"{cert.count}/{cert.target}"
    ok, dt = timed(lambda: is_groebner_basis(list(inst.basis.values()), affine_order(4))[0])
    yield "backelin", label, "groebner", dt, ok
    (acm, _), dt = timed(lambda: acm_test(inst.spec))
    yield "backelin", label, "acm", dt, acm
    gb = affine_basis_for("backelin", {"n": n, "r": r})
    num, dt = timed(lambda: hilbert_numerator(initial_ideal(gb)))
    yield "backelin", label, "hilbert", dt, num.pretty()


def bresinsky_rows(h):
    inst = bresinsky_system(h)
    label = f"h={h}"
    gb, dt = timed(lambda: buchberger_complete(inst.affine_generators(), affine_order(4), use_cache=False))
    yield "bresinsky", label, "buchberger", dt, len(gb.elements)
    v, dt = timed(lambda: buchsbaum_eisenbud_verify(
        inst.complex.free_complex(), bresinsky_certificates(h), repair=True))
    yield "bresinsky", label, "exactness", dt, v.verdict
    gens = list(inst.projective.values())
    betti, dt = timed(lambda: betti_via_schreyer(gens, projective_order(4)))
    yield "bresinsky", label, "betti", dt, " ".join(map(str, betti))


def arslan_rows(h):
    inst = arslan_system(h)
    label = f"h={h}"
    v, dt = timed(lambda: buchsbaum_eisenbud_verify(
        inst.complex.free_complex(), arslan_certificates(h), repair=True))
    yield "arslan", label, "exactness", dt, v.verdict
    gens = list(inst.projective.values())
    betti, dt = timed(lambda: betti_via_schreyer(gens, projective_order(4)))
    yield "arslan", label, "betti", dt, " ".join(map(str, betti))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="CSV path (default: standard output)")
    ap.add_argument("--max-h", type=int, default=3, help="largest h for the two h-families")
    args = ap.parse_args(argv)

    rows = []
    for n, r in [(2, 8), (2, 9), (3, 11)]:
        rows += backelin_rows(n, r)
    for h in range(2, args.max_h + 1):
        rows += bresinsky_rows(h)
        rows += arslan_rows(h)

    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(stream)
        w.writerow(["family", "params", "check", "seconds", "result"])
        for fam, label, check, dt, result in rows:
            w.writerow([fam, label, check, f"{dt:.3f}", result])
    finally:
        if args.out:
            stream.close()


if __name__ == "__main__":
    main()
