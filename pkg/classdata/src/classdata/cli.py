"""Command line: generate schema-1 record files for a parameter range.

Examples:
  classdata --family biquadratic --m 7 --d 26,431,473 --p 3 --out t1.json
  classdata --family non_galois --m 13 --d 250 --p 3 --no-grh --out t3.json
  classdata --family cyclic --s 43,103 --t 3 --p 3 --jobs 4 --out t2.json
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .backend import gp_available
from .families import FAMILIES, DegenerateParams
from .gen import GenerationJob, gen_batch


def _int_list(text: str) -> List[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="classdata")
    ap.add_argument("--family", required=True,
                    choices=[f.lower() for f in FAMILIES])
    ap.add_argument("--p", type=int, required=True)
    ap.add_argument("--m", type=int, help="biquadratic / non-Galois m")
    ap.add_argument("--d", help="comma-separated d values")
    ap.add_argument("--s", help="comma-separated s values (cyclic)")
    ap.add_argument("--t", help="t parameter (cyclic), e.g. 3 or 3/2")
    grh = ap.add_mutually_exclusive_group()
    grh.add_argument("--grh", dest="grh", action="store_true", default=True)
    grh.add_argument("--no-grh", dest="grh", action="store_false")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--timeout", type=int, default=3600,
                    help="seconds per backend call")
    ap.add_argument("--out", required=True)
    return ap


def _param_range(args) -> List[dict]:
    family = args.family.upper()
    if family in ("BIQUADRATIC", "NON_GALOIS"):
        if args.m is None or not args.d:
            raise DegenerateParams(f"{args.family} needs --m and --d")
        return [{"m": args.m, "d": d} for d in _int_list(args.d)]
    if not args.s or not args.t:
        raise DegenerateParams("cyclic needs --s and --t")
    return [{"s": s, "t": args.t} for s in _int_list(args.s)]


def run(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        param_range = _param_range(args)
    except (DegenerateParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not gp_available():
        print("error: gp binary not found on PATH", file=sys.stderr)
        return 1
    job = GenerationJob(family=args.family.upper(), param_range=param_range,
                        p=args.p, grh=args.grh, jobs=args.jobs,
                        out_path=args.out, timeout=args.timeout)
    summary = gen_batch(job)
    print(f"wrote {summary.total} records to {job.out_path} "
          f"({summary.complete} complete, {summary.partial} partial, "
          f"{summary.elapsed:.1f}s)")
    for item in summary.failed:
        print(f"  partial: {item['params']} [{item['backend']}]")
    return 0 if summary.partial == 0 else 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
