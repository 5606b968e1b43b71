"""Run every verification suite and print a one-line summary per suite.

    python3 scripts/run_suites.py [--seed N] [--verbose]
"""

import argparse

from invgen.suites import SUITES, RunConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    cfg = RunConfig(seed=args.seed)
    all_ok = True
    for name in SUITES:
        res = run_suite(name, cfg)
        all_ok &= res.passed
        print(f"{'ok  ' if res.passed else 'FAIL'} {name:12s} {len(res.rows):4d} checks {res.seconds:6.2f}s")
        for r in (res.rows if args.verbose else res.failures()):
            print(f"       {r.check}: expected {r.expected}, got {r.actual}")
        if args.verbose:
            for n in res.notes:
                print(f"       note: {n}")
    raise SystemExit(0 if all_ok else 1)


if __name__ == "__main__":
    main()
