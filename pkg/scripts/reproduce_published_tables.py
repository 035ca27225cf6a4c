#!/usr/bin/env python3
"""Reproduce every published density table and bound in one run.

Writes the machine-readable JSON documents next to the chosen output
directory and prints the human-readable tables.  The default tier finishes
in a few minutes; --long adds the cells that need serious search time.

Usage:
    python scripts/reproduce_paper_tables.py [--long] [--out-dir OUT]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tessdom.fileio import bound_to_text  # noqa: E402
from tessdom.tables import (TableSpec, format_report,  # noqa: E402
                            klein13_interior_weighted_bound, report_to_json,
                            reproduce_table)

DEFAULT_RANGES = {"t36_torus": None, "t36_klein": None,
                  "t3344_torus": None, "t3464_torus": None,
                  "bounds_all": None}
LONG_RANGES = {"t36_torus": 9, "t36_klein": 5, "t3344_torus": 7,
               "t3464_torus": 3, "bounds_all": None}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--long", action="store_true",
                        help="include the long-running cells")
    parser.add_argument("--out-dir", default="tables_out")
    parser.add_argument("--time-limit", type=float, default=600.0,
                        help="per-cell budget in seconds")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ranges = LONG_RANGES if args.long else DEFAULT_RANGES

    mismatch = False
    for table_id, max_n in ranges.items():
        spec = TableSpec(id=table_id, max_n=max_n,
                         time_limit=args.time_limit)
        t0 = time.monotonic()
        report = reproduce_table(spec)
        print(format_report(report), end="")
        print(f"  ({time.monotonic() - t0:.1f}s)\n")
        (out_dir / f"{table_id}.json").write_text(report_to_json(report),
                                                  encoding="utf-8")
        mismatch |= any(row.agrees is False for row in report.rows)

    print("weighted interior bound on K(3^6, 13):")
    result = klein13_interior_weighted_bound()
    print(bound_to_text(result.report), end="")
    print(f"  note: {result.note}\n")
    (out_dir / "k13_weighted.txt").write_text(
        bound_to_text(result.report) + f"note {result.note}\n",
        encoding="utf-8")

    print(f"documents written to {out_dir}/")
    if mismatch:
        print("some rows DIFFER from their published values "
              "(known discrepancies; see the table notes)")
    return 2 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
