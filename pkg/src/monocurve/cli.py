"""Command-line front end: build family instances and run the verifications on them."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .families import (
    FamilyParameterError,
    affine_basis_for,
    arslan_certificates,
    arslan_system,
    backelin_hilbert_formula,
    backelin_hilbert_formula_as_stated,
    backelin_system,
    bresinsky_certificates,
    bresinsky_system,
)
from .groebner import buchberger_complete, initial_ideal, is_groebner_basis
from .monomial_ideal import hilbert_numerator
from .poly import monomial_str
from .resolution import CertificateRejected, buchsbaum_eisenbud_verify
from .syzygy import NotHomogeneousError, minimize, schreyer_resolution
from .toric import (
    AFFINE,
    PROJECTIVE,
    MonomialCurveSpec,
    ScaleGuardError,
    SpecError,
    acm_test,
    affine_order,
    gastinger_verify,
    projective_closure_basis,
    projective_order,
    toric_ideal,
)

SCHEMA = 1
EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_SCALE = 0, 1, 2, 3

FAMILIES = ("backelin", "bresinsky", "bresinsky-proj", "arslan", "arslan-proj")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ---------------------------------------------------------------------------
# family lookup


def _base(name: str) -> str:
    return name[:-5] if name.endswith("-proj") else name


def _params(args) -> dict:
    base = _base(args.name)
    if base == "backelin":
        if args.n is None or args.r is None:
            raise UsageError("backelin needs --n and --r")
        return {"n": args.n, "r": args.r}
    if args.h is None:
        raise UsageError(f"{base} needs --h")
    return {"h": args.h}


def _spec(args) -> MonomialCurveSpec:
    mode = PROJECTIVE if args.name.endswith("-proj") else AFFINE
    return MonomialCurveSpec.for_family(_base(args.name), mode=mode, **_params(args))


def _generators(args) -> dict:
    """Named generators: affine minimal generators, or projective ones for ``-proj``."""
    p = _params(args)
    name = args.name
    if name == "backelin":
        return backelin_system(**p).generators
    if name == "bresinsky":
        inst = bresinsky_system(**p)
        return dict(zip(inst.projective, inst.affine_generators()))
    if name == "bresinsky-proj":
        return bresinsky_system(**p).projective
    if name == "arslan":
        inst = arslan_system(**p)
        return dict(zip(inst.projective, inst.affine_generators()))
    return arslan_system(**p).projective


def _order(args):
    return projective_order(4) if args.name.endswith("-proj") else affine_order(4)


def _stated_basis(args) -> list:
    p = _params(args)
    base = _base(args.name)
    if args.name.endswith("-proj"):
        if base == "arslan":
            return list(arslan_system(**p).projective.values())
        return list(projective_closure_basis(buchberger_complete(_generators_affine(base, p), affine_order(4))).elements)
    if base == "backelin":
        return list(backelin_system(**p).basis.values())
    if base == "bresinsky":
        return list(bresinsky_system(**p).basis.values())
    return arslan_system(**p).affine_generators()


def _generators_affine(base: str, p: dict) -> list:
    if base == "backelin":
        return list(backelin_system(**p).generators.values())
    if base == "bresinsky":
        return bresinsky_system(**p).affine_generators()
    return arslan_system(**p).affine_generators()


def _instance(args) -> dict:
    return {"family": args.name, "params": _params(args)}


def _polys(ps) -> list:
    return [str(p) for p in ps]


# ---------------------------------------------------------------------------
# subcommands; each returns (report fields, verdict or None)


def cmd_family(args):
    spec = _spec(args)
    gens = _generators(args)
    out = dict(_instance(args), exponents=list(spec.exponents), mode=spec.mode,
               generators={k: str(v) for k, v in gens.items()}, count=len(gens))
    if args.matrices:
        base = _base(args.name)
        if base == "backelin":
            raise UsageError("no stated resolution for backelin")
        inst = bresinsky_system(args.h) if base == "bresinsky" else arslan_system(args.h)
        cx = inst.complex
        out["matrices"] = [dict(M.to_dict(), name=n) for M, n in zip(cx.matrices, cx.names)]
        out["diagnostics"] = {k: [str(d) for d in v] for k, v in cx.diagnostics.items()}
    return out, None


def cmd_gb(args):
    order = _order(args)
    out = _instance(args)
    if args.verify:
        G = _stated_basis(args)
        ok, reports = is_groebner_basis(G, order)
        failing = [list(r.pair) for r in reports if not r.reduced_to_zero]
        out.update(basis=_polys(G), count=len(G), is_groebner_basis=ok, pairs=len(reports),
                   failing_pairs=failing)
        return out, ok
    gb = buchberger_complete(list(_generators(args).values()), order)
    out.update(basis=_polys(gb.elements), count=len(gb.elements), status=gb.status,
               leading_monomials=initial_ideal(gb).as_strings())
    return out, None


def cmd_gastinger(args):
    if args.name.endswith("-proj"):
        raise UsageError("gastinger works on the affine ideal; drop -proj")
    spec = _spec(args)
    if not 1 <= args.var <= spec.r:
        raise UsageError(f"--var must be in 1..{spec.r}")
    cert = gastinger_verify(list(_generators(args).values()), spec, args.var)
    return dict(_instance(args), **cert.to_dict()), cert.verdict


def cmd_acm(args):
    spec = _spec(args).with_mode(AFFINE)
    ok, witness = acm_test(spec)
    out = dict(_instance(args), acm=ok,
               witness=None if witness is None else monomial_str(witness, spec.ring))
    return out, ok


def cmd_hilbert(args):
    base = _base(args.name)
    p = _params(args)
    gb = affine_basis_for(base, p)
    num = hilbert_numerator(initial_ideal(gb))
    out = dict(_instance(args), numerator=num.pretty(), coefficients=num.to_dict())
    if not args.compare_formula:
        return out, None
    if base != "backelin":
        raise UsageError("--compare-formula is only available for backelin")
    formula = backelin_hilbert_formula(**p)
    stated = backelin_hilbert_formula_as_stated(**p)
    diff = (num - formula).to_dict()
    out.update(formula=formula.pretty(), diff=diff, match=not diff,
               stated_formula=stated.pretty(),
               stated_diff=(num - stated).to_dict())
    return out, not diff


def cmd_resolution(args):
    base = _base(args.name)
    if base not in ("bresinsky", "arslan"):
        raise UsageError("resolution needs bresinsky-proj or arslan-proj")
    inst = bresinsky_system(args.h) if base == "bresinsky" else arslan_system(args.h)
    certs = None
    if args.certificates == "paper":
        certs = bresinsky_certificates(args.h) if base == "bresinsky" else arslan_certificates(args.h)
    C = inst.complex.free_complex()
    v = buchsbaum_eisenbud_verify(C, certs, repair=not args.no_repair, seed=args.seed)
    out = dict(_instance(args), **v.to_dict())
    out["free_ranks"] = C.free_ranks()
    out["diagnostics"] = {k: [str(d) for d in ds] for k, ds in inst.complex.diagnostics.items()}
    if args.matrices:
        out["complex"] = v.complex.to_dict()
    return out, v.verdict


def cmd_betti(args):
    if args.name.endswith("-proj"):
        gens = list(_generators(args).values())
        order = _order(args)
    else:
        base = _base(args.name)
        gb = buchberger_complete(_generators_affine(base, _params(args)), affine_order(4))
        gens = list(projective_closure_basis(gb).elements)
        order = projective_order(4)
    table = minimize(schreyer_resolution(gens, order))
    graded = [[k, d, c] for (k, d), c in sorted(table.graded.items())]
    return dict(_instance(args), method=args.method, betti=table.totals, graded=graded), None


def cmd_toric(args):
    try:
        exps = tuple(int(x) for x in args.exponents.split(","))
    except ValueError:
        raise UsageError(f"bad exponent list {args.exponents!r}")
    try:
        spec = MonomialCurveSpec(exps, PROJECTIVE if args.projective else AFFINE)
    except SpecError as e:
        raise UsageError(str(e))
    gb = toric_ideal(spec)
    out = {"exponents": list(exps), "mode": spec.mode, "basis": _polys(gb.elements),
           "count": len(gb.elements), "status": gb.status}
    return out, None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="monocurve", description=__doc__)
    ap.add_argument("--version", action="version", version=f"monocurve {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, family=True):
        p = sub.add_parser(name)
        p.set_defaults(func=fn)
        if family:
            p.add_argument("--name", required=True, choices=FAMILIES)
            p.add_argument("--n", type=int)
            p.add_argument("--r", type=int)
            p.add_argument("--h", type=int)
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--timing", action="store_true", help="include wall-clock seconds")
        return p

    add("family", cmd_family).add_argument("--matrices", action="store_true")
    add("gb", cmd_gb).add_argument("--verify", action="store_true")
    add("gastinger", cmd_gastinger).add_argument("--var", type=int, required=True)
    add("acm", cmd_acm)
    add("hilbert", cmd_hilbert).add_argument("--compare-formula", action="store_true")
    p = add("resolution", cmd_resolution)
    p.add_argument("--certificates", choices=["paper", "search"], default="paper")
    p.add_argument("--no-repair", action="store_true")
    p.add_argument("--matrices", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    add("betti", cmd_betti).add_argument("--method", choices=["schreyer"], default="schreyer")
    p = add("toric", cmd_toric, family=False)
    p.add_argument("--exponents", required=True)
    p.add_argument("--projective", action="store_true")
    return ap


def _print_text(report: dict, stream):
    for k in sorted(report):
        v = report[k]
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True)
        print(f"{k}: {v}", file=stream)


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if not args.command:
            raise UsageError("missing subcommand")
        t0 = time.perf_counter()
        fields, verdict = args.func(args)
    except UsageError as e:
        print(e, file=stderr)
        print(ap.format_usage().strip(), file=stderr)
        return EXIT_USAGE
    except (FamilyParameterError, SpecError) as e:
        print(f"monocurve: {e}", file=stderr)
        return EXIT_USAGE
    except (ScaleGuardError, NotHomogeneousError) as e:
        print(f"monocurve: refused: {e}", file=stderr)
        return EXIT_SCALE if isinstance(e, ScaleGuardError) else EXIT_USAGE
    except CertificateRejected as e:
        print(f"monocurve: certificate rejected: {e}", file=stderr)
        return EXIT_FALSE
    report = {"schema": SCHEMA, "command": args.command, "argv": list(argv), "version": __version__}
    report.update(fields)
    if verdict is not None:
        report["verdict"] = bool(verdict)
    if args.timing:
        report["seconds"] = round(time.perf_counter() - t0, 3)
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2), file=stdout)
    else:
        _print_text(report, stdout)
    return EXIT_FALSE if verdict is False else EXIT_OK


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
