"""Command-line front end: run any verification, emit deterministic JSON.

Every subcommand prints a single JSON report to stdout and exits 0 when all
sub-checks pass, 1 otherwise; flag errors exit 2 via argparse.  Rational flag
values are accepted as "p/q"; sqrt2-valued parameters are not accepted on
the command line.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .centers import verify_zeta_surjective, zeta_on_dirac
from .cohomology import dirac_cohomology, verify_vogan
from .dirac import verify_identities
from .engine import AlgebraParams, check_pbw_consistency, check_relations_in_engine
from .modules import check_module_relations, forced_n_constant, induced_module, steinberg_module
from .partitions import Partition, all_partitions, phi_maps
from .scalars import ZERO, Scalar
from .dirac import dirac_element

REPORT_SCHEMA_VERSION = "1.0.0"


def report_schema_version() -> str:
    return REPORT_SCHEMA_VERSION


def _scalar_flag(text: str) -> Scalar:
    try:
        return Scalar(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _params_from_args(args) -> AlgebraParams:
    kwargs = {}
    if args.type in ("B", "D"):
        kwargs["N"] = args.N if args.N is not None else ZERO
    if args.type == "B":
        kwargs["k_short"] = args.ks if args.ks is not None else ZERO
    return AlgebraParams(args.type, args.n, args.k, **kwargs)


def _add_algebra_flags(sub, with_trials=False):
    sub.add_argument("--type", required=True, choices=("A", "B", "D"))
    sub.add_argument("--n", required=True, type=int)
    sub.add_argument("--k", required=True, type=_scalar_flag)
    sub.add_argument("--ks", type=_scalar_flag, default=None)
    sub.add_argument("--N", type=_scalar_flag, default=None)
    if with_trials:
        sub.add_argument("--trials", type=int, default=100)
        sub.add_argument("--seed", type=int, default=0)


def _assemble(suite: str, params: dict, checks: list[dict], started: float) -> dict:
    status = "pass" if all(c.get("status") == "pass" for c in checks) else "fail"
    return {
        "suite": suite,
        "schema_version": REPORT_SCHEMA_VERSION,
        "params": params,
        "checks": checks,
        "status": status,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    }


def _check(name: str, status: bool, details) -> dict:
    return {"name": name, "status": "pass" if status else "fail", "details": details}


def _cmd_pbw(args) -> dict:
    started = time.monotonic()
    params = _params_from_args(args)
    rels = check_relations_in_engine(params)
    assoc = check_pbw_consistency(params, trials=args.trials, seed=args.seed)
    checks = [
        _check("relation_closure", rels["status"] == "pass", rels["failures"]),
        _check("associativity", assoc["status"] == "pass", {"trials": args.trials, "failures": assoc["failures"]}),
    ]
    return _assemble("pbw", _echo_params(params, seed=args.seed, trials=args.trials), checks, started)


def _cmd_dirac_square(args) -> dict:
    started = time.monotonic()
    params = _params_from_args(args)
    rep = verify_identities(params)
    checks = [
        _check(c["check"], c["status"] == "pass", {k: v for k, v in c.items() if k not in ("check", "status")})
        for c in rep["checks"]
    ]
    return _assemble("dirac-square", _echo_params(params), checks, started)


def _cmd_steinberg(args) -> dict:
    started = time.monotonic()
    base = _params_from_args(args)
    if base.type == "A":
        params = base
    else:
        params = AlgebraParams(
            base.type, base.n, base.k_long, k_short=base.k_short, N=forced_n_constant(base)
        )
    module = steinberg_module(params)
    rels = check_module_relations(module)
    d_zero = module.act(dirac_element(params)).is_zero()
    checks = [
        _check("module_relations", rels["status"] == "pass", rels["failures"]),
        _check("dirac_vanishes", d_zero, {"dim": module.dim}),
    ]
    return _assemble("steinberg", _echo_params(params), checks, started)


def _cmd_cohomology(args) -> dict:
    started = time.monotonic()
    lam = Partition.parse(args.lam)
    if lam.has_distinct_parts() and args.k:
        rep = verify_vogan(lam, args.k)
        checks = [_check(name, ok, None) for name, ok in rep["checks"].items()]
        details = {k: v for k, v in rep.items() if k not in ("checks", "status", "check")}
    else:
        module = induced_module(lam, args.k)
        cohom = dirac_cohomology(module).to_json()
        checks = [_check("pipeline", cohom["status"] in ("pass",), None)]
        details = cohom
    out = _assemble(
        "cohomology", {"lambda": str(lam), "k": args.k.compact()}, checks, started
    )
    out["result"] = details
    return out


def _cmd_phi(args) -> dict:
    started = time.monotonic()
    rows = []
    ok = True
    for lam in all_partitions(args.n):
        try:
            phi1, n1, n2 = phi_maps(lam)
            rows.append({"lambda": str(lam), "phi1": list(phi1), "norm_sq": n1})
        except AssertionError as exc:  # pragma: no cover - the identity holds
            ok = False
            rows.append({"lambda": str(lam), "error": str(exc)})
    checks = [_check("norm_identity", ok, rows)]
    return _assemble("phi", {"n": args.n}, checks, started)


def _cmd_center(args) -> dict:
    started = time.monotonic()
    zd = zeta_on_dirac(args.n, args.k)
    surj = verify_zeta_surjective(args.n, args.k, args.max_r)
    checks = [
        _check("zeta_dirac_zero", zd.is_zero(), None),
        _check("zeta_surjective", surj["status"] == "pass",
               {"rank": surj["rank"], "center_dim": surj["center_dim"]}),
    ]
    return _assemble(
        "center", {"n": args.n, "k": args.k.compact(), "max_r": args.max_r}, checks, started
    )


def _cmd_all(args) -> dict:
    started = time.monotonic()
    n, k = args.n, args.k
    checks = []

    def fold(report: dict, prefix: str):
        for c in report["checks"]:
            checks.append(
                {"name": f"{prefix}:{c['name']}", "status": c["status"], "details": c["details"]}
            )

    ns = argparse.Namespace
    fold(_cmd_pbw(ns(type="A", n=n, k=k, ks=None, N=None, trials=40, seed=args.seed)), f"pbw-A{n}")
    fold(_cmd_dirac_square(ns(type="A", n=n, k=k, ks=None, N=None)), f"dirac-A{n}")
    nb = min(n, 2)
    fold(_cmd_dirac_square(ns(type="B", n=nb, k=k, ks=k, N=None)), f"dirac-B{nb}")
    nd = min(n, 3)
    fold(_cmd_dirac_square(ns(type="D", n=nd, k=k, ks=None, N=None)), f"dirac-D{nd}")
    fold(_cmd_steinberg(ns(type="A", n=n, k=k, ks=None, N=None)), f"steinberg-A{n}")
    fold(_cmd_steinberg(ns(type="B", n=nd, k=k, ks=k, N=None)), f"steinberg-B{nd}")
    fold(_cmd_steinberg(ns(type="D", n=nd, k=k, ks=None, N=None)), f"steinberg-D{nd}")
    for lam in all_partitions(n):
        if lam.has_distinct_parts():
            fold(_cmd_cohomology(ns(lam=str(lam), k=k)), f"cohomology-{lam}")
    fold(_cmd_phi(ns(n=n)), f"phi-{n}")
    if n <= 4:
        fold(_cmd_center(ns(n=n, k=k, max_r=n)), f"center-{n}")
    return _assemble("all", {"n": n, "k": k.compact(), "seed": args.seed}, checks, started)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcdirac", description="Exact Hecke-Clifford / Dirac verification harness"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pbw", help="relation closure and associativity")
    _add_algebra_flags(p, with_trials=True)
    p.set_defaults(func=_cmd_pbw)

    p = sub.add_parser("dirac-square", help="D^2 and commutation identities")
    _add_algebra_flags(p)
    p.set_defaults(func=_cmd_dirac_square)

    p = sub.add_parser("steinberg", help="Steinberg module relations and D-vanishing")
    _add_algebra_flags(p)
    p.set_defaults(func=_cmd_steinberg)

    p = sub.add_parser("cohomology", help="Dirac cohomology of an induced module")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--k", required=True, type=_scalar_flag)
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("phi", help="partition weight maps and the norm identity")
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("center", help="Jucys-Murphy center map checks")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=_scalar_flag)
    p.add_argument("--max-r", dest="max_r", type=int, default=None)
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("all", help="full verification suite")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--k", required=True, type=_scalar_flag)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_all)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_r", 0) is None:
        args.max_r = args.n
    report = args.func(args)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if report["status"] == "pass" else 1


def _echo_params(params: AlgebraParams, **extra) -> dict:
    out = {
        "type": params.type,
        "n": params.n,
        "k": params.k_long.compact(),
        "ks": params.k_short.compact(),
        "N": params.N.compact(),
    }
    out.update(extra)
    return out


if __name__ == "__main__":
    sys.exit(main())
