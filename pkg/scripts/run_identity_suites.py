#!/usr/bin/env python3
"""Run the seeded random identity suites and print verdict counts per identity.

Usage: python3 scripts/run_identity_suites.py [--count N] [--seed S] [identity ...]
"""

import argparse
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from suites import MAKERS, run_suite  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=25, help="non-skipped instances per identity")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("names", nargs="*", help="identities to run (default: all of " + ", ".join(sorted(MAKERS)) + ")")
    args = ap.parse_args()
    unknown = set(args.names) - set(MAKERS)
    if unknown:
        ap.error(f"unknown identities: {', '.join(sorted(unknown))}")
    status = 0
    for name in args.names or sorted(MAKERS):
        t0 = time.perf_counter()
        results = run_suite(name, args.count, args.seed)
        counts = Counter(r.verdict for r in results)
        print(f"{name:12s} {len(results):4d} instances  {dict(counts)}  {time.perf_counter() - t0:.1f}s")
        for r in results:
            if r.verdict == "FAIL":
                status = 1
                print(f"    FAIL {r.values} {r.notes}")
    sys.exit(status)


if __name__ == "__main__":
    main()
