"""Command-line front end: simulate, solve, construct, verify, catalog, render.

Exit codes: 0 ok, 1 verification mismatch, 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Iterable

from .constructions import construct, predicted_optimum
from .forbidden import enumerate_catalog
from .grid import Grid, VertexSet, make_grid
from .instance import (
    Instance,
    InstanceError,
    parse_instance,
    render_ascii,
    serialize_instance,
)
from .percolation import closure, percolates
from .solver import BudgetExhausted, SolveOptions, solve_min

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

# verify subcommand: which grid width each numbered statement is about
THEOREM_WIDTH = {1: 3, 2: 5, 3: 4}
DEFAULT_RANGES = {1: (3, 9), 2: (5, 6), 3: (4, 6)}
LEMMA1_SIZE_CAP = 250
DEFAULT_VERIFY_BUDGET = 200_000


@dataclass
class VerificationRow:
    rows: int
    cols: int
    formula: int | tuple[int, int]
    solver_value: int | None
    construction_size: int
    status: str  # match | within-interval | mismatch | skipped


def _hits_all_members(g: Grid, seeds: VertexSet, members) -> bool:
    return all(f.support.mask & seeds.mask for f in members)


def cmd_verify(
    theorem: int,
    ms: Iterable[int],
    opts: SolveOptions | None = None,
) -> tuple[list[VerificationRow], int]:
    """Check constructions and (budget permitting) exact optima for one width.

    A row mismatches when the construction fails to percolate, its size
    falls outside the predicted value or window, a forbidden-subgraph member
    misses a verified percolating set, or the solver disagrees with the
    prediction.  The exit code is 1 iff any row mismatches.
    """
    if theorem not in THEOREM_WIDTH:
        raise ValueError(f"unknown theorem {theorem}; choose 1, 2 or 3")
    opts = opts or SolveOptions(node_budget=DEFAULT_VERIFY_BUDGET)
    width = THEOREM_WIDTH[theorem]
    rows_out: list[VerificationRow] = []
    for m in ms:
        con = construct(width, m)
        g = con.grid
        pred = predicted_optimum(width, m)
        lo, hi = (pred, pred) if isinstance(pred, int) else pred
        size = len(con.seeds)
        ok = percolates(g, 3, con.seeds) and lo <= size <= hi
        members = ()
        if g.size <= LEMMA1_SIZE_CAP:
            members = enumerate_catalog(g, 3, opts.max_path_len)
            ok = ok and _hits_all_members(g, con.seeds, members)

        solver_value = None
        if opts.node_budget == 0:
            status = "skipped" if ok else "mismatch"
        else:
            try:
                report = solve_min(g, 3, opts)
                solver_value = report.optimum
                solver_ok = (
                    lo <= solver_value <= hi
                    and percolates(g, 3, report.witness)
                    and len(report.witness) == solver_value
                    and (not members or _hits_all_members(g, report.witness, members))
                )
                if not (ok and solver_ok):
                    status = "mismatch"
                elif isinstance(pred, int):
                    status = "match" if solver_value == pred else "mismatch"
                else:
                    status = "within-interval"
            except BudgetExhausted as exc:
                # the certified bound must not contradict the predicted ceiling
                status = "skipped" if ok and exc.lower_bound <= hi else "mismatch"
        rows_out.append(VerificationRow(width, m, pred, solver_value, size, status))
    exit_code = EXIT_MISMATCH if any(r.status == "mismatch" for r in rows_out) else EXIT_OK
    return rows_out, exit_code


def _format_value(v: int | tuple[int, int]) -> str:
    return str(v) if isinstance(v, int) else f"{v[0]}..{v[1]}"


def _verify_table(rows: list[VerificationRow]) -> str:
    header = f"{'grid':<8}{'formula':<10}{'solver':<8}{'constr':<8}status"
    lines = [header]
    for r in rows:
        solver = "-" if r.solver_value is None else str(r.solver_value)
        lines.append(
            f"{r.rows}x{r.cols:<6}{_format_value(r.formula):<10}"
            f"{solver:<8}{r.construction_size:<8}{r.status}"
        )
    return "\n".join(lines)


def _verify_json(theorem: int, rows: list[VerificationRow], exit_code: int) -> str:
    payload = {
        "theorem": theorem,
        "ok": exit_code == EXIT_OK,
        "rows": [
            {
                "rows": r.rows,
                "cols": r.cols,
                "formula": r.formula if isinstance(r.formula, int) else list(r.formula),
                "solver": r.solver_value,
                "construction_size": r.construction_size,
                "status": r.status,
            }
            for r in rows
        ],
    }
    return json.dumps(payload, indent=2)


# -- plumbing ------------------------------------------------------------


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "rb") as fh:
        return fh.read().decode("utf-8")


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _solve_opts(args: argparse.Namespace) -> SolveOptions:
    return SolveOptions(
        normalize_boundary=not args.no_normalize,
        node_budget=args.budget,
        parallel=args.parallel,
    )


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, default=None, metavar="NODES",
                   help="node budget for the search (0 skips solving in verify)")
    p.add_argument("--no-normalize", action="store_true",
                   help="disable the boundary-triple search restriction")
    p.add_argument("--parallel", action="store_true",
                   help="explore root branches in worker processes")


def _closure_payload(inst: Instance) -> dict:
    g = inst.grid()
    res = closure(g, inst.r, inst.seed_set(g))
    return {
        "rows": inst.rows,
        "cols": inst.cols,
        "r": inst.r,
        "seeds": [list(v) for v in inst.seeds],
        "percolates": len(res.infected) == g.size,
        "rounds": res.rounds,
        "infected_count": len(res.infected),
        "round_of": [[v[0], v[1], t] for v, t in sorted(res.round_of.items())],
    }


def _cmd_simulate(args: argparse.Namespace) -> int:
    inst = parse_instance(_read_input(args.infile))
    if args.format == "ascii":
        g = inst.grid()
        _write_output(render_ascii(g, closure(g, inst.r, inst.seed_set(g))), args.out)
    else:
        _write_output(json.dumps(_closure_payload(inst)), args.out)
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    inst = parse_instance(_read_input(args.infile))
    g = inst.grid()
    _write_output(render_ascii(g, closure(g, inst.r, inst.seed_set(g))), args.out)
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.infile:
        inst = parse_instance(_read_input(args.infile))
        g, r = inst.grid(), inst.r
    elif args.rows is not None and args.cols is not None:
        g, r = make_grid(args.rows, args.cols), args.r
    else:
        raise InstanceError("solve needs --rows/--cols or --in FILE")
    report = solve_min(g, r, _solve_opts(args))
    if args.format == "ascii":
        _write_output(render_ascii(g, closure(g, r, report.witness)), args.out)
        return EXIT_OK
    payload = {
        "optimum": report.optimum,
        "witness": [list(v) for v in sorted(report.witness)],
        "lower_bound": {"value": report.lower_bound, "source": report.lower_bound_source},
        "nodes": report.nodes_explored,
    }
    _write_output(json.dumps(payload), args.out)
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    con = construct(args.rows, args.cols)
    inst = Instance(args.rows, args.cols, 3, tuple(sorted(con.seeds)))
    _write_output(serialize_instance(inst), args.out)
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace) -> int:
    g = make_grid(args.rows, args.cols)
    items = enumerate_catalog(g, 3, args.max_path_len)
    payload = [
        {"kind": f.kind, "vertices": [list(v) for v in sorted(f.support)]}
        for f in items
    ]
    _write_output(json.dumps(payload), args.out)
    return EXIT_OK


def _parse_m_range(text: str, lower: int) -> list[int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise InstanceError(f"bad --m-range {text!r}; use M or A..B") from None
    if lo < lower or hi < lo:
        raise InstanceError(f"--m-range {text!r} outside the construction domain (min {lower})")
    return list(range(lo, hi + 1))


def _cmd_verify(args: argparse.Namespace) -> int:
    width = THEOREM_WIDTH[args.theorem]
    if args.m_range:
        ms = _parse_m_range(args.m_range, width)
    else:
        lo, hi = DEFAULT_RANGES[args.theorem]
        ms = list(range(lo, hi + 1))
    budget = DEFAULT_VERIFY_BUDGET if args.budget is None else args.budget
    opts = SolveOptions(
        normalize_boundary=not args.no_normalize,
        node_budget=budget,
        parallel=args.parallel,
    )
    rows, exit_code = cmd_verify(args.theorem, ms, opts)
    json_text = _verify_json(args.theorem, rows, exit_code)
    if args.format == "json":
        print(json_text)
    else:
        print(_verify_table(rows))
    if args.out:
        _write_output(json_text, args.out)
    return exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridperc",
        description="r-neighbor bootstrap percolation on grid graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run the percolation process on an instance")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE",
                   help="instance JSON ('-' for stdin)")
    p.add_argument("--format", choices=("ascii", "json"), default="json")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("render", help="ASCII picture of an instance's closure")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("solve", help="exact minimum percolating set")
    p.add_argument("--rows", type=int, default=None)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--in", dest="infile", default=None, metavar="FILE",
                   help="take rows/cols/r from an instance file (seeds ignored)")
    p.add_argument("--format", choices=("ascii", "json"), default="json")
    p.add_argument("--out", default=None, metavar="FILE")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="emit a width-3/4/5 seed construction")
    p.add_argument("--rows", type=int, required=True, choices=(3, 4, 5))
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check formula values against constructions and solver")
    p.add_argument("--theorem", type=int, required=True, choices=(1, 2, 3),
                   help="1: width-3 formula, 2: width-5 formula, 3: width-4 window")
    p.add_argument("--m-range", default=None, metavar="A..B")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", default=None, metavar="FILE",
                   help="also write the JSON report here")
    _add_solver_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalog", help="export the forbidden-subgraph catalog as JSON")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--max-path-len", type=int, default=6)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InstanceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
