#!/usr/bin/env python3
"""Dump the data behind every figure as CSV, optionally plotting it with matplotlib."""
from __future__ import annotations

import argparse
from pathlib import Path

from gaussgrade.bench import FIGURE_IDS, emit_figure_data


def plot(fid: str, data, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    h = data.header
    if h[:2] == ("m", "x"):
        for m in sorted({r[0] for r in data.rows}):
            pts = [(r[1], r[2]) for r in data.rows if r[0] == m]
            ax.plot(*zip(*pts), label=f"m={m}")
    elif fid in ("4", "5"):
        key = 0
        for k in sorted({r[key] for r in data.rows}):
            pts = [(r[1], r[2]) for r in data.rows if r[key] == k and r[2] > 0]
            ax.loglog(*zip(*pts), label=f"{h[0]}={k:g}")
    else:
        for panel in sorted({r[0] for r in data.rows}):
            pts = [r for r in data.rows if r[0] == panel]
            xcol = 2 if panel == "A" else 1
            ycol = h.index("scaled_abs_error") if (fid == "6.2" and panel == "B") else h.index("re")
            ax.semilogy([r[xcol] for r in pts], [max(r[ycol], 1e-18) for r in pts], ".-", label=f"panel {panel}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--outdir", type=Path, default=Path("figures"))
    p.add_argument("--plot", action="store_true")
    p.add_argument("ids", nargs="*", default=list(FIGURE_IDS))
    args = p.parse_args(argv)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for fid in args.ids:
        data = emit_figure_data(fid)
        (args.outdir / f"figure{fid}.csv").write_text(data.format("csv"), encoding="utf-8")
        if args.plot:
            plot(fid, data, args.outdir / f"figure{fid}.png")
        print(f"figure {fid}: {len(data.rows)} rows")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
