#!/usr/bin/env python3
"""Rebuild the published result tables at desk scale and print them.

Usage: python3 scripts/reproduce_tables.py [--threads K]
"""

import argparse
import json
import sys

from ecseq.cli import main as cli_main


def run(argv):
    code = cli_main(argv)
    if code != 0:
        sys.exit(code)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default="tables.json")
    args = ap.parse_args()

    results = {}
    for table in (3, 2):
        path = f"/tmp/ecseq_table{table}.json"
        run(["reproduce-table", "--table", str(table),
             "--threads", str(args.threads), "--out", path])
        with open(path) as fh:
            results[f"table{table}"] = json.load(fh)
        print(f"\n== table {table} ==")
        for row in results[f"table{table}"]["rows"]:
            ref = row.get("reference_cor")
            print(f"  q={row['q']:>4}  N={row['N']:>4}  M={row['M']:>5}  "
                  f"cor={row['observed_cor']:>4}  bound={row['bound']:>4}"
                  + (f"  reference={ref}" if ref is not None else ""))

    with open(args.out, "w") as fh:
        json.dump(results, fh, sort_keys=True, indent=2)
    print(f"\nwrote {args.out}")


if __name__ == "__main__":
    main()
