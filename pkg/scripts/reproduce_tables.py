#!/usr/bin/env python3
"""Run all six benchmark tables and print them (or write one file per table)."""
from __future__ import annotations

import argparse
from pathlib import Path

from gaussgrade.bench import format_table, run_table


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--format", choices=("csv", "md"), default="md")
    p.add_argument("--outdir", type=Path, default=None, help="write table<N>.<ext> files here")
    args = p.parse_args(argv)

    for tid in range(1, 7):
        text = format_table(run_table(tid), args.format)
        if args.outdir:
            args.outdir.mkdir(parents=True, exist_ok=True)
            ext = "csv" if args.format == "csv" else "md"
            (args.outdir / f"table{tid}.{ext}").write_text(text, encoding="utf-8")
        else:
            print(f"## Table {tid}\n")
            print(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
