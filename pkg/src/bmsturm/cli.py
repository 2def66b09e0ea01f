"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a verification failure (or a
route disagreement under ``--cross-check``), 2 on usage or I/O errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import boros_moll as bm
from .boros_moll import Family
from .cache import CacheFormatError, RowStore, default_cache_path
from .verification import (
    VerificationReport,
    branden_random_property,
    run_all,
    verify_coefficient_identities,
    verify_k_logconcavity,
    verify_liu_wang,
    verify_polynomial_recurrences,
    verify_sturm_sequence,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CLAIMS = ("coeff-identities", "poly-recurrences", "liu-wang", "sturm", "klogconcave", "branden")
METHODS = tuple(bm.ROUTES)


@dataclass
class Config:
    n_max: int = 40
    k: int = 3
    family: Optional[Family] = None
    method: Optional[str] = None
    output_format: str = "json"
    cache_path: Optional[str] = None
    seed: int = 42
    parallelism: int = 1
    trials: int = 200
    max_deg: int = 12
    out: Optional[str] = None
    timing: bool = True

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("--n-max must be nonnegative")
        if self.k < 1:
            raise ValueError("--k must be at least 1")
        if self.parallelism < 1:
            raise ValueError("--jobs must be at least 1")
        if self.trials < 1 or self.max_deg < 1:
            raise ValueError("--trials and --max-deg must be at least 1")


def _common(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default=fmt_default)
    p.add_argument("--cache", metavar="PATH", default=None,
                   help="row cache file (default: $BMSTURM_CACHE if set)")
    p.add_argument("--out", metavar="PATH", default=None, help="write output here instead of stdout")


def _verify_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-deg", type=int, default=12)
    p.add_argument("--no-timing", action="store_true", help="omit per-n timings from the output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmsturm",
                                     description="Exact Boros-Moll rows and Q_n/R_n real-rootedness checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print Boros-Moll coefficient rows")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-max", type=int)
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--cross-check", action="store_true", help="fail unless all four routes agree")
    _common(p, "text")

    p = sub.add_parser("poly", help="print P_n, Q_n or R_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("p", "q", "r"), default="q")
    p.add_argument("--rec", action="store_true", help="build Q_n/R_n by their three-term recurrence")
    _common(p, "text")

    p = sub.add_parser("verify", help="verify one claim over 0..n-max")
    p.add_argument("claim", choices=CLAIMS)
    p.add_argument("--family", choices=("q", "r"), default=None)
    _verify_opts(p)
    _common(p, "json")

    p = sub.add_parser("report", help="verify every claim and write one consolidated report")
    _verify_opts(p)
    _common(p, "json")

    p = sub.add_parser("cache", help="fill or inspect the on-disk row cache")
    p.add_argument("action", choices=("fill", "info"))
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--cache", metavar="PATH", default=None)
    return parser


def _config(args) -> Config:
    n_max = getattr(args, "n_max", None)
    return Config(
        n_max=40 if n_max is None else n_max,
        k=getattr(args, "k", 3),
        family=Family.parse(args.family) if getattr(args, "family", None) in ("q", "r") else None,
        method=getattr(args, "method", None),
        output_format=getattr(args, "format", "json"),
        cache_path=getattr(args, "cache", None) or default_cache_path(),
        seed=getattr(args, "seed", 42),
        parallelism=getattr(args, "jobs", 1),
        trials=getattr(args, "trials", 200),
        max_deg=getattr(args, "max_deg", 12),
        out=getattr(args, "out", None),
        timing=not getattr(args, "no_timing", False),
    )


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def _check_writable(out: Optional[str]) -> None:
    if out is None:
        return
    parent = os.path.dirname(os.path.abspath(out))
    if not os.path.isdir(parent) or not os.access(parent, os.W_OK):
        raise OSError(f"cannot write to {out}")
    if os.path.exists(out) and not os.access(out, os.W_OK):
        raise OSError(f"cannot write to {out}")


# rendering

def render_rows(rows: list[bm.BMRow], fmt: str, single: bool) -> str:
    if fmt == "json":
        return json.dumps({"rows": [r.to_record() for r in rows]}, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "i", "d"])
        for r in rows:
            for i, v in enumerate(r.d):
                w.writerow([r.n, i, str(v)])
        return buf.getvalue()
    if single:
        return str(rows[0])
    return "\n".join(f"n={r.n} {r}" for r in rows)


def render_reports(reports: list[VerificationReport], fmt: str, timing: bool = True,
                   params: Optional[dict] = None) -> str:
    if fmt == "json":
        body = {"status": "pass" if all(r.passed for r in reports) else "fail",
                "claims": [r.to_dict(timing=timing) for r in reports]}
        if params is not None:
            body["parameters"] = params
        return json.dumps(body, indent=2, sort_keys=False)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "n_lo", "n_hi", "status", "kind", "n", "detail"])
        for r in reports:
            lo, hi = r.n_range
            w.writerow([r.claim.value, lo, hi, r.status, "summary", "", f"{r.checks} checks"])
            for f in r.failures:
                w.writerow([r.claim.value, lo, hi, r.status, "failure", f.n, f.detail])
            for f in r.expected_failures:
                w.writerow([r.claim.value, lo, hi, r.status, "expected", f.n, f.detail])
        return buf.getvalue()
    lines = []
    for r in reports:
        lo, hi = r.n_range
        lines.append(f"{r.claim.value:18s} n=[{lo}, {hi}]  {r.status.upper()}  "
                     f"({r.checks} checks, {len(r.failures)} failures)")
        for f in r.failures:
            lines.append(f"    FAIL n={f.n}: {f.detail}")
        for f in r.expected_failures:
            lines.append(f"    expected n={f.n}: {f.detail}")
    return "\n".join(lines)


# commands

def cmd_coeffs(cfg: Config, n: Optional[int], cross_check: bool) -> int:
    ns = [n] if n is not None else list(range(cfg.n_max + 1))
    if any(m < 0 for m in ns):
        print("error: --n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    method = cfg.method or "closed"
    if method == "closed":
        rows = [bm.bm_row(m) for m in ns]
    elif method in ("rec1", "rec2"):
        chain = bm.rows_by_rec1(max(ns)) if method == "rec1" else bm.rows_by_rec2(max(ns))
        rows = [chain[m] for m in ns]
    else:
        rows = [bm.ROUTES[method](m) for m in ns]
    status = EXIT_OK
    if cross_check:
        top = max(ns)
        by_route = {
            "closed": {m: bm.bm_row_closed(m) for m in ns},
            "double-sum": {m: bm.bm_row_double_sum(m) for m in ns},
            "rec1": {r.n: r for r in bm.rows_by_rec1(top)},
            "rec2": {r.n: r for r in bm.rows_by_rec2(top)},
        }
        for m in ns:
            seen = {name: rows_[m] for name, rows_ in by_route.items()}
            if len(set(seen.values())) != 1:
                detail = ", ".join(f"{k}={v}" for k, v in seen.items())
                print(f"route disagreement at n={m}: {detail}", file=sys.stderr)
                status = EXIT_FAIL
    _emit(render_rows(rows, cfg.output_format, single=n is not None), cfg.out)
    return status


def cmd_poly(cfg: Config, n: int, family: str, rec: bool) -> int:
    if n < 0:
        print("error: --n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if family == "p":
        f = bm.p_polynomial(n)
    elif rec:
        f = bm.family_polynomial_rec(family, n)
    else:
        f = bm.family_polynomial(family, n)
    if cfg.output_format == "json":
        text = json.dumps({"family": family, "n": n, "coeffs": [str(c) for c in f.coeffs]})
    elif cfg.output_format == "csv":
        text = "i,coeff\n" + "".join(f"{i},{c}\n" for i, c in enumerate(f.coeffs))
    else:
        text = str(f)
    _emit(text, cfg.out)
    return EXIT_OK


def reports_for_claim(cfg: Config, claim: str) -> list[VerificationReport]:
    families = [cfg.family] if cfg.family else [Family.Q, Family.R]
    if claim == "coeff-identities":
        return [verify_coefficient_identities(cfg.n_max)]
    if claim == "poly-recurrences":
        return [verify_polynomial_recurrences(cfg.n_max)]
    if claim == "liu-wang":
        return [verify_liu_wang(cfg.n_max, families)]
    if claim == "sturm":
        return [verify_sturm_sequence(f, cfg.n_max, jobs=cfg.parallelism) for f in families]
    if claim == "klogconcave":
        return [verify_k_logconcavity(cfg.n_max, cfg.k)]
    if claim == "branden":
        return [branden_random_property(cfg.trials, cfg.max_deg, cfg.seed)]
    raise ValueError(claim)


def _params(cfg: Config) -> dict:
    return {"n_max": cfg.n_max, "k": cfg.k, "seed": cfg.seed, "trials": cfg.trials, "max_deg": cfg.max_deg}


def cmd_verify(cfg: Config, claim: str) -> int:
    _check_writable(cfg.out)
    reports = reports_for_claim(cfg, claim)
    _emit(render_reports(reports, cfg.output_format, cfg.timing, _params(cfg)), cfg.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_report(cfg: Config) -> int:
    _check_writable(cfg.out)
    reports = run_all(cfg.n_max, k=cfg.k, seed=cfg.seed, trials=cfg.trials,
                      max_deg=cfg.max_deg, jobs=cfg.parallelism)
    _emit(render_reports(reports, cfg.output_format, cfg.timing, _params(cfg)), cfg.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_cache(cfg: Config, action: str) -> int:
    if cfg.cache_path is None:
        print("error: no cache path (use --cache or $BMSTURM_CACHE)", file=sys.stderr)
        return EXIT_USAGE
    cache = bm.RowCache(RowStore(cfg.cache_path))
    if action == "fill":
        for n in range(cfg.n_max + 1):
            cache.get(n)
    print(f"{cfg.cache_path}: {len(cache)} rows")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if cfg.cache_path and args.command != "cache":
            bm.set_default_cache(bm.RowCache(RowStore(cfg.cache_path)))
        if args.command == "coeffs":
            return cmd_coeffs(cfg, args.n, args.cross_check)
        if args.command == "poly":
            return cmd_poly(cfg, args.n, args.family, args.rec)
        if args.command == "verify":
            return cmd_verify(cfg, args.claim)
        if args.command == "report":
            return cmd_report(cfg)
        return cmd_cache(cfg, args.action)
    except (OSError, CacheFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
