#!/usr/bin/env python3
"""Run every claim at the acceptance scale and write a JSON report."""
import argparse
import json
import sys
from pathlib import Path

from bmsturm.cli import render_reports
from bmsturm.verification import run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=50)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("report.json"))
    args = ap.parse_args()

    reports = run_all(args.n_max, k=args.k, seed=args.seed, trials=args.trials, jobs=args.jobs)
    params = {"n_max": args.n_max, "k": args.k, "seed": args.seed, "trials": args.trials, "max_deg": 12}
    args.out.write_text(render_reports(reports, "json", timing=True, params=params))
    for rep in reports:
        total = sum(rep.timing_ms.values()) / 1000
        print(f"{rep.claim.value:20s} {rep.status.upper():4s} {total:8.2f}s")
    body = json.loads(args.out.read_text())
    print(f"wrote {args.out} (status {body['status']})")
    return 0 if body["status"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
