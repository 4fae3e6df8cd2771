"""Write the Ext dimension tables for every family as CSV and JSON.

Usage: python3 scripts/ext_tables.py [OUTDIR] [--max-m M] [--jobs J]
"""
import argparse
import json
import pathlib

from scomprop.config import Bounds
from scomprop.ext import FAMILIES, ext_table, table_to_csv


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("outdir", nargs="?", default="tables")
    parser.add_argument("--max-m", type=int, default=5)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    bounds = Bounds.from_env(jobs=args.jobs, max_arity=max(args.max_m, Bounds().max_arity))
    for family in FAMILIES:
        rows = ext_table(args.max_m, args.max_m, family, bounds)
        (out / f"{family}.csv").write_text(table_to_csv(rows))
        (out / f"{family}.json").write_text(json.dumps(rows, indent=1) + "\n")
        print(f"{family}: {len(rows)} rows")


if __name__ == "__main__":
    main()
