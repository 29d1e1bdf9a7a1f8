#!/usr/bin/env python3
"""Run every problem file under problems/ through the CLI and print the results.

Usage: python3 scripts/run_examples.py [--seed N] [--samples K]
"""

import argparse
import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

# problem files that also get an identity check
CHECKS = {
    "cubic_on_crossings.txt": ["nus1"],
    "weighted_plane_curve.txt": ["nus1", "boundmutau", "mudeh"],
    "sextic_diagonal_line.txt": ["prop44"],
    "diagonal_on_fermat_cubic.txt": ["split"],
}


def run(argv):
    proc = subprocess.run([sys.executable, "-m", "mixedbr.cli", *argv, "--json", "-"], capture_output=True, text=True)
    if not proc.stdout.strip():
        return proc.returncode, {"stderr": proc.stderr.strip()}
    return proc.returncode, json.loads(proc.stdout)["results"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", default="0")
    ap.add_argument("--samples", default="5")
    args = ap.parse_args()
    flags = ["--seed", args.seed, "--samples", args.samples]
    for path in sorted((ROOT / "problems").glob("*.txt")):
        print(f"== {path.name}")
        text = path.read_text()
        cmd = "invariants" if "f =" in text else "derlog"
        code, res = run([cmd, str(path), *flags])
        print(f"  {cmd} (exit {code}): {json.dumps(res, sort_keys=True)}")
        for ident in CHECKS.get(path.name, []):
            code, res = run(["check", str(path), "--identity", ident, *flags])
            r = res.get(ident, res)
            print(f"  check {ident} (exit {code}): {r.get('verdict')} {json.dumps(r.get('values'), sort_keys=True)}")


if __name__ == "__main__":
    main()
