"""Benchmark rows and figure data for the graded-mesh schemes."""
from __future__ import annotations

import io
import json
import math
import warnings
from dataclasses import astuple, dataclass, fields
from importlib import resources
from typing import Sequence, Union

import numpy as np

from .baseline import composite_simpson, composite_trapezoid
from .errors import DomainError
from .graded import ConditionWarning, QUADE_N_CAP, quade, quadp
from .references import REFERENCES
from .specfun import gaussian, gaussian_derivative

COLUMNS = ("scheme", "alpha", "c0", "n", "m", "re", "abs_error", "order", "nodes")
FIGURE_IDS = ("1", "2", "3", "4", "5", "6.1", "6.2")


@dataclass(frozen=True)
class BenchRow:
    scheme: str
    alpha: float
    c0: float
    n: int
    m: Union[int, tuple, None]
    re: float
    abs_error: float
    order: float
    nodes: int


def convergence_order(abs_error: float, alpha: float, scheme: str) -> float:
    """``-ln(err)/ln(alpha)``, with ``2 alpha`` in the base for quade.

    Undefined (nan) when the base is not above 1.
    """
    base = 2.0 * alpha if scheme == "quade" else alpha
    if base <= 1.0:
        return math.nan
    if abs_error == 0.0:
        return math.inf
    return -math.log(abs_error) / math.log(base)


def make_row(scheme: str, alpha: float, n: int, m, value: float, exact: float, nodes: int) -> BenchRow:
    ae = abs(value - exact)
    return BenchRow(
        scheme=scheme,
        alpha=float(alpha),
        c0=1.0 / (math.sqrt(2.0) * alpha),
        n=n,
        m=tuple(m) if isinstance(m, (list, tuple)) else m,
        re=ae / abs(exact),
        abs_error=ae,
        order=convergence_order(ae, alpha, scheme),
        nodes=nodes,
    )


def run_case(scheme: str, label: str, alpha: float, n: int, m=None) -> BenchRow:
    ref = REFERENCES[label]
    f = ref.integrand
    exact = ref.exact(alpha)
    if scheme == "quadp":
        rep = quadp(f, alpha, n, m)
        return make_row(scheme, alpha, n, m, rep.value, exact, rep.node_count)
    if scheme == "quade":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConditionWarning)
            rep = quade(f, alpha, n)
        return make_row(scheme, alpha, n, rep.params["m"], rep.value, exact, rep.node_count)
    if scheme in ("simpson", "trapezoid"):
        rule = composite_simpson if scheme == "simpson" else composite_trapezoid
        value = rule(lambda x: f(x) * gaussian(alpha, x), n)
        nodes = 2 * n + 1 if scheme == "simpson" else n + 1
        return make_row(scheme, alpha, n, None, value, exact, nodes)
    raise DomainError(f"unknown scheme {scheme!r}")


def load_grids() -> dict:
    text = resources.files("gaussgrade").joinpath("data/tables.json").read_text(encoding="utf-8")
    return json.loads(text)


def run_table(table_id) -> list[BenchRow]:
    grids = load_grids()
    key = str(table_id)
    if key not in grids:
        raise DomainError(f"unknown table {table_id!r}; choose from {sorted(grids)}")
    rows = []
    for run in grids[key]["runs"]:
        for alpha in run["alpha"]:
            for n in run["n"]:
                rows.append(run_case(run["scheme"], run["f"], alpha, n, run.get("m")))
    return rows


# -- formatting -------------------------------------------------------------


def fmt_real(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return format(x, ".16e")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, tuple):
        return ";".join(str(i) for i in v)
    if isinstance(v, float):
        return fmt_real(v)
    return str(v)


def format_rows(rows: Sequence, header: Sequence[str], fmt: str = "csv", comments: Sequence[str] = ()) -> str:
    cells = [[_cell(v) for v in (astuple(r) if hasattr(r, "__dataclass_fields__") else r)] for r in rows]
    out = io.StringIO()
    if fmt == "csv":
        for c in comments:
            out.write(f"# {c}\n")
        out.write(",".join(header) + "\n")
        for row in cells:
            out.write(",".join(row) + "\n")
        return out.getvalue()
    if fmt == "md":
        for c in comments:
            out.write(f"> {c}\n\n")
        widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(header)]
        out.write("| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |\n")
        out.write("|" + "|".join("-" * (w + 2) for w in widths) + "|\n")
        for row in cells:
            out.write("| " + " | ".join(v.rjust(w) for v, w in zip(row, widths)) + " |\n")
        return out.getvalue()
    raise DomainError(f"unknown format {fmt!r}")


def format_table(rows: Sequence[BenchRow], fmt: str = "csv") -> str:
    return format_rows(rows, [f.name for f in fields(BenchRow)], fmt)


# -- figure data --------------------------------------------------------------


@dataclass
class FigureData:
    header: tuple[str, ...]
    rows: list[tuple]
    notes: tuple[str, ...] = ()

    def format(self, fmt: str = "csv") -> str:
        return format_rows(self.rows, self.header, fmt, self.notes)


_DERIV_ORDERS = {"1": (0, 10), "2": (15, 30), "3": (35, 50)}


def _derivative_curves(orders, alpha=50.0, samples=2001) -> FigureData:
    xs = np.linspace(-0.1, 0.1, samples)
    rows = [(m, float(x), gaussian_derivative(m, alpha, float(x))) for m in orders for x in xs]
    return FigureData(("m", "x", "value"), rows, (f"m-th derivative of exp(-alpha^2 x^2), alpha={alpha:g}",))


def _trapezoid_ae(alpha: float, n: int) -> float:
    exact = REFERENCES["const1"].exact(alpha)
    return abs(composite_trapezoid(lambda x: gaussian(alpha, x), n) - exact)


def emit_figure_data(figure_id) -> FigureData:
    fid = str(figure_id)
    if fid in _DERIV_ORDERS:
        return _derivative_curves(_DERIV_ORDERS[fid])
    if fid == "4":
        alphas = np.logspace(1, 4, 31)
        rows = [(n, float(a), _trapezoid_ae(float(a), n)) for n in (100, 1000) for a in alphas]
        return FigureData(("n", "alpha", "abs_error"), rows, ("composite trapezoid, f = 1, n equal subintervals",))
    if fid == "5":
        ns = sorted({int(round(v)) for v in np.logspace(1, 5, 21)})
        rows = [(float(a), n, _trapezoid_ae(a, n)) for a in (100.0, 1000.0, 10000.0) for n in ns]
        return FigureData(("alpha", "n", "abs_error"), rows, ("composite trapezoid, f = 1, n equal subintervals",))
    if fid == "6.1":
        rows = [("A", 50.0, n, run_case("quadp", "x2", 50.0, n, 4).re) for n in range(2, 101)]
        rows += [("B", float(a), 20, run_case("quadp", "x2", float(a), 20, 4).re) for a in range(10, 501, 10)]
        return FigureData(("panel", "alpha", "n", "re"), rows, ("QuadP, m = 4, f = x^2",))
    if fid == "6.2":
        rows = [("A", 600.0, n, run_case("quade", "expx2", 600.0, n).re, math.nan) for n in range(4, QUADE_N_CAP + 1)]
        for a in range(300, 401):
            r = run_case("quade", "expx2", float(a), 4)
            rows.append(("B", float(a), 4, r.re, (2.0 * a) ** 5 * r.abs_error))
        note = f"QuadE, f = exp(-x^2); panel A stops at n = {QUADE_N_CAP} (degree cap of the power-basis moments)"
        return FigureData(("panel", "alpha", "n", "re", "scaled_abs_error"), rows, (note,))
    raise DomainError(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURE_IDS)}")
