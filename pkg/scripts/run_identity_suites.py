#!/usr/bin/env python3
"""Run every identity suite at its full verification bound.

The bounds match the package's strongest claims: raise them to push the
checks further, at the cost of runtime.  Exits nonzero if any case fails.
"""

import argparse
import sys

from knotchar.suites import run_suite

DEFAULT_BOUNDS = {
    "chebyshev": 200,
    "twist": 300,
    "maps": 200,
    "bridge3": 1001,
    "oracle": 61,
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=float, default=1.0,
                        help="multiply every bound by this factor")
    parser.add_argument("--suite", action="append", choices=sorted(DEFAULT_BOUNDS),
                        help="restrict to the named suite (repeatable)")
    args = parser.parse_args()

    names = args.suite or sorted(DEFAULT_BOUNDS)
    failed = False
    for name in names:
        bound = max(1, int(DEFAULT_BOUNDS[name] * args.scale))
        result = run_suite(name, bound)
        print(result.summary())
        print(f"  bound={bound} wall={result.ms} ms")
        failed = failed or not result.ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
