"""Open-problem sweep: irrational adjacency eigenvalues and Laplacian integrality.

Writes a CSV row per (group, question) and prints the groups, if any, where a
statement fails. Non-abelian groups go through the brute-force spectrum path.

    python3 scripts/conjecture_sweep.py [--max-order 100] [--out findings.csv]
"""

import argparse
import csv
import sys
from collections import Counter

from poeg.suites import run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=100)
    ap.add_argument("--out", default="findings.csv")
    args = ap.parse_args()

    res = run_suite("conjectures", args.max_order)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["group", "question", "holds", "abelian", "residual_degree"])
        for c in res.sorted_checks():
            w.writerow([c.group, c.check, c.detail["holds"], c.detail["abelian"], c.detail["residual_degree"]])

    tally = Counter((c.check, c.detail["holds"]) for c in res.checks)
    for (question, holds), n in sorted(tally.items()):
        print(f"{question}: holds={holds} x{n}")
    for c in res.sorted_checks():
        if not c.detail["holds"]:
            print(f"  counterexample? {c.group}: {c.check} ({c.detail})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
