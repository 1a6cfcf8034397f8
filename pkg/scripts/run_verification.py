"""Run the full identity suite and optionally dump the JSON report.

    python scripts/run_verification.py --max-n 16 --max-r 5 --out report.json
"""
import argparse
import time
from pathlib import Path

from umbra.identities import verify_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--max-r", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    start = time.perf_counter()
    report = verify_all(args.max_n, args.max_r, seed=args.seed)
    elapsed = time.perf_counter() - start
    for name, (ok, total) in report.counts().items():
        print(f"{name:32s} {ok:5d}/{total}")
    print(f"{len(report.entries)} checks, {len(report.failures)} failures, {elapsed:.2f}s")
    if args.out:
        args.out.write_text(report.to_json(indent=2))
    raise SystemExit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
