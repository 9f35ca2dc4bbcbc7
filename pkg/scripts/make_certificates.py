#!/usr/bin/env python3
"""Emit irreducibility certificates as JSON lines.

Covers the twist-knot family K_m for 1 <= m <= --twist-max and every
valid b(p, 3) with p <= --bridge-max.  Each line is one certificate
record; pipe to a file to archive the evidence.
"""

import argparse
import json
import sys

from knotchar.bridge import check_phi_irreducible_p3
from knotchar.twist import check_r_tilde_irreducible


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--twist-max", type=int, default=100)
    parser.add_argument("--bridge-max", type=int, default=101)
    args = parser.parse_args()

    bad = 0
    for m in range(1, args.twist_max + 1):
        report = check_r_tilde_irreducible(m)
        print(json.dumps(report.to_json(knot=f"K_{m}"), sort_keys=True))
        bad += not report.irreducible
    for p in range(5, args.bridge_max + 1, 2):
        if p % 3 == 0:
            continue
        report = check_phi_irreducible_p3(p)
        print(json.dumps(report.to_json(knot=f"b({p},3)"), sort_keys=True))
        bad += not report.irreducible
    if bad:
        print(f"{bad} certificates did not certify", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
