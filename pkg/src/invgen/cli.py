"""Command-line front end: ``invgen analyze | verify | decompose``.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import errors
from .constructions import StructuredGroup, gaschutz_d, materialize
from .errors import InvGenError, ResourceCapError
from .expr import build
from .gen import d_I, d_min_generators
from .lifting import check_lower_bound, structured_dI_lower_bound, structured_dI_upper_bound
from .modrep import endo_dim, meataxe_decompose, regular_module
from .serialize import cert_document, decomp_document, dumps, recheck_cert_document
from .suites import SUITES, RunConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

USAGE_ERRORS = (
    errors.ParseError,
    errors.UnknownSuite,
    errors.NonCoprimePrime,
    errors.HypothesisViolated,
    errors.InvalidPermutation,
    errors.NotSoluble,
    ValueError,
)


def _stage(name, fn, *args, **kwargs):
    """Run ``fn`` and tag any cap error with the stage that hit it."""
    try:
        return fn(*args, **kwargs)
    except ResourceCapError as exc:
        exc.args = (f"[{name}] {exc}",)
        raise


def analyze(expr, cfg):
    g = _stage("build", build, expr, cfg.order_cap)
    out = {"group": expr}
    if isinstance(g, StructuredGroup):
        if g.order <= cfg.order_cap:
            return _analyze_concrete(expr, _stage("materialize", materialize, g, cfg.order_cap).group,
                                     cfg, structured=g)
        return _analyze_structured(expr, g, cfg)
    return _analyze_concrete(expr, g, cfg) | out


def _analyze_concrete(expr, g, cfg, structured=None):
    g.require_soluble()
    d = _stage("d", d_min_generators, g)
    di, cert = _stage("d_I", d_I, g)
    report = {
        "group": expr,
        "kind": "concrete",
        "order": g.order,
        "primes": list(g.primes),
        "min_prime": g.min_prime,
        "derived_length": g.derived_length,
        "soluble": g.is_soluble,
        "d": d,
        "d_I": di,
        "certificate": cert_document(g, cert, expr),
    }
    if structured is not None:
        report["gaschutz_d"] = gaschutz_d(structured)
    if cfg.recheck:
        problems = recheck_cert_document(json.loads(dumps(report["certificate"])), cfg.order_cap)
        report["recheck"] = {"ok": not problems, "problems": problems}
    return report


def _analyze_structured(expr, s, cfg):
    upper = _stage("upper bound", structured_dI_upper_bound, s, seed=cfg.seed)
    lower, cert = 0, None
    for r in range(1, upper.bound):
        c = _stage("lower bound", structured_dI_lower_bound, s, r)
        if not c.holds:
            break
        lower, cert = r, c
    report = {
        "group": expr,
        "kind": "structured",
        "order": s.order,
        "primes": s.primes,
        "min_prime": s.min_prime,
        "derived_length": s.derived_length,
        "soluble": True,
        "d": gaschutz_d(s),
        "d_recorded": s.recorded_d,
        "d_I_lower": lower + 1,
        "d_I_upper": upper.bound,
        "splitting_primes": s.splitting_primes,
        "lower_bound_rows": len(cert.table) if cert else 0,
    }
    if lower + 1 == upper.bound:
        report["d_I"] = upper.bound
    if cfg.recheck and cert is not None:
        ok = check_lower_bound(s, cert)
        report["recheck"] = {"ok": ok, "problems": [] if ok else ["lower bound table differs"]}
    return report


def decompose(expr, q, cfg):
    from .expr import concrete
    g = concrete(_stage("build", build, expr, cfg.order_cap), cfg.order_cap)
    reg = _stage("regular module", regular_module, g, q)
    dec = meataxe_decompose(reg, seed=cfg.seed)
    doc = decomp_document(expr, g.order, dec, [endo_dim(c.module, check=False) for c in dec.components])
    doc["dims"] = sorted(c.module.dim for c in dec.components)
    return doc


def verify(suite, cfg):
    res = run_suite(suite, cfg)
    return {
        "suite": suite,
        "passed": res.passed,
        "rows": [r.as_dict() for r in res.rows],
        "notes": res.notes,
    }


# -- output ---------------------------------------------------------------------------------


def _csv(doc):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "rows" in doc:
        w.writerow(["check", "expected", "actual", "passed"])
        for r in doc["rows"]:
            w.writerow([r["check"], json.dumps(r["expected"]), json.dumps(r["actual"]), r["passed"]])
    elif "components" in doc:
        w.writerow(["dim", "multiplicity", "endo_dim", "trivial"])
        for c in doc["components"]:
            w.writerow([c["dim"], c["multiplicity"], c["endo_dim"], c["trivial"]])
    else:
        w.writerow(["key", "value"])
        for k in sorted(doc):
            v = doc[k]
            w.writerow([k, v if isinstance(v, (int, str)) else json.dumps(v, sort_keys=True)])
    return buf.getvalue()


def _emit(doc, cfg):
    text = dumps(doc) if cfg.output_format == "json" else _csv(doc)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order-cap", type=int, default=RunConfig.order_cap)
    common.add_argument("--subgroup-cap", type=int, default=RunConfig.subgroup_cap)
    common.add_argument("--cohomology-cap", type=int, default=RunConfig.cohomology_cap)
    common.add_argument("--brute-budget", type=int, default=RunConfig.brute_budget)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--threads", type=int, default=1,
                        help="upper bound on worker threads (work currently runs sequentially)")
    common.add_argument("--recheck", action="store_true",
                        help="re-verify emitted certificates from raw group data")
    parser = argparse.ArgumentParser(prog="invgen", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="order, d, d_I and certificates")
    a.add_argument("expr")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    dcp = sub.add_parser("decompose", parents=[common], help="split F_q G into irreducibles")
    dcp.add_argument("expr")
    dcp.add_argument("q", type=int)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.order_cap, args.subgroup_cap, args.cohomology_cap, args.brute_budget,
                        args.seed, args.format, args.out, args.threads, args.recheck)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "analyze":
            doc = analyze(args.expr, cfg)
            ok = doc.get("recheck", {"ok": True})["ok"]
        elif args.command == "verify":
            doc = verify(args.suite, cfg)
            ok = doc["passed"]
        else:
            doc = decompose(args.expr, args.q, cfg)
            ok = doc["sum_n_dim"] == doc["order"]
    except ResourceCapError as exc:
        print(f"invgen: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except USAGE_ERRORS as exc:
        print(f"invgen: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvGenError as exc:
        print(f"invgen: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(doc, cfg)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
