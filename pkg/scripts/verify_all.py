"""Run the whole catalog with timings and optionally keep a JSON report.

    python3 scripts/verify_all.py --workers 4 --out report.json
"""

import argparse
import json
import sys
import time

from qpv.catalog import verify_all


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trunc", type=int, default=None)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="write the reports here as a JSON list")
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = verify_all(args.trunc, workers=args.workers, timing=True)
    wall = time.perf_counter() - t0
    for r in sorted(reports, key=lambda r: -(r.elapsed_ms or 0))[:10]:
        print(f"{r.elapsed_ms:>9.1f} ms  {r.identity}")
    bad = [r for r in reports if r.status != "verified"]
    for r in bad:
        print(r.to_text())
    print(f"{len(reports) - len(bad)}/{len(reports)} verified in {wall:.1f} s with {args.workers} worker(s)")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=1)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
