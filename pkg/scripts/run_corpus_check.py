#!/usr/bin/env python3
"""Generate a seeded system corpus, run the full check pipeline on every
file, and print a one-line summary per system plus totals.

Usage: python scripts/run_corpus_check.py [--seed N] [--count N]
       [--dir PATH] [--oracle]

Exits 0 when every system passes, 2 otherwise (matching `tropbetti check`).
"""

import argparse
import json
import sys
import tempfile
import time
from pathlib import Path

from tropbetti.cli import check_system, parse_system, main as cli_main


def run(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20260823)
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--dir", default=None, help="corpus directory (default: temp)")
    parser.add_argument("--oracle", action="store_true", help="enable 3^ell cross-checks")
    args = parser.parse_args(argv)

    out = Path(args.dir) if args.dir else Path(tempfile.mkdtemp(prefix="tropbetti_corpus_"))
    code = cli_main(
        ["gen", "corpus", "--seed", str(args.seed), "--count", str(args.count), "--dir", str(out)]
    )
    if code != 0:
        return code

    failures = 0
    start = time.monotonic()
    for path in sorted(out.glob("*.json")):
        t0 = time.monotonic()
        report = check_system(parse_system(path.read_bytes()), oracle=args.oracle)
        dt = time.monotonic() - t0
        status = "ok" if report["all_ok"] else "FAIL"
        failures += status == "FAIL"
        print(
            f"{path.name}: {status} n={report['n']} k={report['k']} "
            f"phi={report['phi']} betti={report['betti']} ({dt:.2f}s)"
        )
        if status == "FAIL":
            print(json.dumps(report, sort_keys=True, indent=2), file=sys.stderr)
    total = time.monotonic() - start
    print(f"checked {args.count} systems from seed {args.seed} in {total:.1f}s, "
          f"{failures} failures (corpus in {out})")
    return 0 if failures == 0 else 2


if __name__ == "__main__":
    sys.exit(run())
