"""Run every verification suite and print one summary line per suite.

    python3 scripts/run_suites.py [--json out.json] [--max-order N]
"""

import argparse
import json
import sys
import time

from poeg.suites import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", help="write the full check list here")
    ap.add_argument("--max-order", type=int, default=None)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    args = ap.parse_args()

    dump = {}
    ok = True
    for name in args.suites:
        t0 = time.perf_counter()
        res = run_suite(name, args.max_order)
        dt = time.perf_counter() - t0
        t = res.tallies()
        print(f"{name:22s} checks={t['checks']:5d} failed={t['failed']:3d} findings={t['findings']:4d} {dt:7.2f}s")
        ok &= res.ok
        dump[name] = {"tallies": t, "checks": [c.to_dict() for c in res.sorted_checks()]}
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(dump, fh, sort_keys=True, indent=1)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
