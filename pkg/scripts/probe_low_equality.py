#!/usr/bin/env python3
"""Compare Low_X(p) with Theta of p^{-1}(X) on random hyperplane sections of homogeneous varieties.

Prints one row per (variety, section).  Any relation other than "equal" on a
homogeneous variety is a counterexample candidate worth a closer look.
"""

import argparse
import random
import sys
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from mixedbr.config import SamplingConfig  # noqa: E402
from mixedbr.derlog import VarietySpec  # noqa: E402
from mixedbr.lowerable import conjecture_probe  # noqa: E402

from generators import homogeneous, linear_arrangement, ring_n  # noqa: E402


def corpus(seed: int, size: int) -> list:
    """Fixed non-isolated examples plus random homogeneous hypersurfaces and arrangements."""
    R3 = ring_n(3)
    out = [
        VarietySpec(R3, (R3("x*y*z"),), None, "general"),
        VarietySpec(R3, (R3("x*y*(x - y)*(x + 2*y)"),), None, "general"),
        VarietySpec(R3, (R3("x^2*z - y^3"),), None, "general"),
        VarietySpec(R3, (R3("x*y*z*(x + y + z)"),), None, "general"),
    ]
    rng = random.Random(seed)
    for k in range(size):
        if k % 2:
            out.append(linear_arrangement(R3, rng.randint(2, 4), rng))
        else:
            out.append(VarietySpec(R3, (homogeneous(R3, rng.randint(2, 3), rng, 3),), None, "general"))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random", type=int, default=6, help="number of random varieties")
    ap.add_argument("--sections", type=int, default=3)
    args = ap.parse_args()
    rows = conjecture_probe(corpus(args.seed, args.random), args.sections, SamplingConfig(seed=args.seed))
    for r in rows:
        print(f"{r.variety:40s} {str(r.section):28s} {str(r.relation):14s} {r.note}")
    print(dict(Counter(r.relation for r in rows)))


if __name__ == "__main__":
    main()
