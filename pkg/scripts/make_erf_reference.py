#!/usr/bin/env python3
"""Write tests/data/erf_reference.json: 50 erf values from mpmath at 50 digits.

Run once; the output is committed and read by the test suite.
"""
from __future__ import annotations

import json
from pathlib import Path

import mpmath

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "erf_reference.json"


def points() -> list[float]:
    pts = [1e-300, 1e-20, 1e-8, 1e-4, 0.01, 0.1, 0.25, 0.4999, 0.5, 0.5001]
    pts += [0.75 + 0.25 * i for i in range(22)]  # 0.75 .. 6.0
    pts += [6.5, 7.0, 9.0, 27.0, 38.5]
    pts += [-0.3, -1.0, -1.7, -2.2, -3.3, -4.4, -5.5, -0.02]
    pts += [1.0 / 3.0, 2.0 ** -0.5, 3.14159, 0.123456789, 1.9999999]
    assert len(pts) == 50, len(pts)
    return pts


def main() -> None:
    rows = []
    with mpmath.workdps(50):
        for x in points():
            rows.append({"x": x, "erf": mpmath.nstr(mpmath.erf(mpmath.mpf(x)), 30)})
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(rows, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(rows)} points to {OUT}")


if __name__ == "__main__":
    main()
