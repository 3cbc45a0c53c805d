"""Command line entry point: ``gaussgrade {integrate,table,figure,moments,check}``.

Exit codes: 0 success, 1 domain or oracle failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
import warnings

from .bench import FIGURE_IDS, convergence_order, emit_figure_data, format_rows, format_table, run_table
from .cheb_rule import basic_rule
from .errors import DomainError, EvaluationError, OracleError
from .graded import ConditionWarning, QUADE_N_CAP, integrate_shifted, quade, quadp, single_interval
from .moments import GaussianWeight, moments_any_beta
from .oracle import adaptive_oracle
from .references import INTEGRANDS, REFERENCES


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--tol", type=float, default=1e-13, help="relative tolerance of the adaptive oracle")
    p.add_argument("--seed", default=None, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gaussgrade", description="Graded-mesh quadrature for integrals with a narrow Gaussian.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("integrate", help="integrate a built-in f against exp(-alpha^2 (x-beta)^2) on [0,1]")
    q.add_argument("--scheme", choices=("quadp", "quade", "single"), required=True)
    q.add_argument("--alpha", type=float, required=True)
    q.add_argument("--n", type=int, default=5)
    q.add_argument("--m", type=int, default=None)
    q.add_argument("--beta", type=float, default=0.0, help="peak location; 0 < beta < 1 splits at the peak")
    q.add_argument("--f", choices=sorted(INTEGRANDS), required=True)
    q.add_argument("--check", action="store_true", help="also run the adaptive oracle")
    _common(q)

    t = sub.add_parser("table", help="reproduce one of the benchmark tables")
    t.add_argument("id", choices=[str(i) for i in range(1, 7)])
    _common(t)

    fg = sub.add_parser("figure", help="emit data for one figure")
    fg.add_argument("id", choices=FIGURE_IDS)
    _common(fg)

    mo = sub.add_parser("moments", help="moments of the weight over [-1, 1]")
    mo.add_argument("--alpha", type=float, required=True)
    mo.add_argument("--beta", type=float, default=0.0)
    mo.add_argument("--kmax", type=int, required=True)
    _common(mo)

    ch = sub.add_parser("check", help="compare the schemes against the adaptive oracle")
    _common(ch)
    return p


def _integrate(args) -> str:
    f = INTEGRANDS[args.f]
    beta = args.beta
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConditionWarning)
        if args.scheme == "single":
            if args.m is None:
                raise DomainError("--m is required for the single-interval rule")
            rep = single_interval(f, args.alpha, args.m, beta)
            value, nodes, m = rep.value, rep.node_count, args.m
        elif 0.0 < beta < 1.0:
            res = integrate_shifted(f, args.alpha, beta, args.scheme, args.n, args.m)
            value = res.value
            nodes = res.left.node_count + res.right.node_count
            m = res.left.params["m"]
        elif beta == 0.0:
            if args.scheme == "quadp":
                if args.m is None:
                    raise DomainError("--m is required for quadp")
                rep = quadp(f, args.alpha, args.n, args.m)
            else:
                rep = quade(f, args.alpha, args.n)
            value, nodes, m = rep.value, rep.node_count, rep.params["m"]
        else:
            raise DomainError(f"--beta={beta} outside [0, 1); use --scheme single for a peak outside the interval")

    header = ["scheme", "alpha", "beta", "n", "m", "value", "nodes"]
    n_used = None if args.scheme == "single" else args.n
    row = [args.scheme, args.alpha, beta, n_used, tuple(m) if isinstance(m, list) else m, value, nodes]
    if beta == 0.0:
        exact = REFERENCES[args.f].exact(args.alpha)
        ae = abs(value - exact)
        header += ["exact", "re", "abs_error", "order"]
        row += [exact, ae / abs(exact), ae, convergence_order(ae, args.alpha, args.scheme)]
    if args.check:
        ref = adaptive_oracle(f, GaussianWeight(args.alpha, beta), args.tol, 0.0, 1.0)
        header += ["oracle", "oracle_re"]
        row += [ref, abs(value - ref) / abs(ref)]
    return format_rows([tuple(row)], header, args.format)


def _moments(args) -> str:
    vec = moments_any_beta(GaussianWeight(args.alpha, args.beta), args.kmax)
    return format_rows([(k, v) for k, v in enumerate(vec.values)], ("k", "w"), args.format)


def check_suite(tol: float = 1e-13) -> list[tuple[str, float, float, bool]]:
    """(name, computed, oracle, passed) for a fixed set of configurations."""
    out = []

    def add(name, computed, ref, thresh):
        out.append((name, computed, ref, abs(computed - ref) <= thresh * abs(ref)))

    expx2, x2, one = INTEGRANDS["expx2"], INTEGRANDS["x2"], INTEGRANDS["const1"]
    for alpha, beta in ((2.0, 0.0), (5.0, -1.0), (10.0, -1.7), (3.0, 0.4)):
        w = GaussianWeight(alpha, beta)
        add(f"basic m=20 expx2 alpha={alpha} beta={beta}", basic_rule(expx2, 20, w), adaptive_oracle(expx2, w, tol), 1e-10)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConditionWarning)
        for alpha, n in ((50.0, 4), (200.0, 5), (2000.0, 5)):
            ref = adaptive_oracle(expx2, GaussianWeight(alpha), tol, 0.0, 1.0)
            add(f"quade expx2 alpha={alpha} n={n}", quade(expx2, alpha, n).value, ref, 1e-9)
    for alpha, n in ((10.0, 5), (100.0, 10), (1000.0, 15)):
        ref = adaptive_oracle(x2, GaussianWeight(alpha), tol, 0.0, 1.0)
        add(f"quadp x2 alpha={alpha} n={n} m=4", quadp(x2, alpha, n, 4).value, ref, 1e-11)
    ref = adaptive_oracle(one, GaussianWeight(20.0, 0.5), tol, 0.0, 1.0)
    add("shifted const1 alpha=20 beta=0.5", integrate_shifted(one, 20.0, 0.5, "quade", 5).value, ref, 1e-11)
    return out


def _check(args) -> tuple[str, bool]:
    results = check_suite(args.tol)
    rows = [(name, computed, ref, abs(computed - ref) / abs(ref), "PASS" if ok else "FAIL")
            for name, computed, ref, ok in results]
    text = format_rows(rows, ("case", "computed", "oracle", "re", "status"), args.format)
    return text, all(ok for *_, ok in results)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        parser.error("--seed is reserved: every command is deterministic")
    ok = True
    try:
        if args.command == "integrate":
            text = _integrate(args)
        elif args.command == "table":
            text = format_table(run_table(args.id), args.format)
        elif args.command == "figure":
            text = emit_figure_data(args.id).format(args.format)
        elif args.command == "moments":
            text = _moments(args)
        else:
            text, ok = _check(args)
    except (DomainError, EvaluationError, OracleError) as exc:
        print(f"gaussgrade: error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader went away (e.g. piped into head); silence the flush at exit
            sys.stdout = open(os.devnull, "w")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
