"""Command-line front door.

Graphs are given either as a file path (text format: ``p q`` then one
``u w`` line per edge) or inline as ``family:<spec>``, e.g.
``family:path:6`` or ``family:union(path:2,star:3)``.  Sequences are quoted
token strings such as ``"v1 v2 e1 v3 e2"``.

JSON is the machine format; counts and other potentially large integers are
emitted as decimal strings, never as floats.  Exit codes: 0 success, 1
domain error (invalid graph or sequence, route disagreement), 2 usage
error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from .counting import (
    DEFAULT_ELEMENT_LIMIT,
    DEFAULT_STATE_LIMIT,
    count_based,
    count_bruteforce,
    count_dp,
    enumerate_csequences,
    path_count_bernoulli,
    path_count_recursive,
    star_count,
    star_count_recursive,
    cycle_count_bernoulli,
    zigzag_numbers,
    _iter_codes,
)
from .errors import IsolatedVertexError, ResourceLimitError
from .families import Family
from .graphs import Graph, build_family, parse_graph
from .optimize import TieBreak, check_conjecture, greedy, min_cost
from .sequences import (
    CSeq,
    component_profile,
    edge_cost,
    format_sequence,
    parse_sequence,
    short_form,
    total_cost,
    validate,
    vertex_cost,
)

FAMILY_PREFIX = "family:"


class UsageError(Exception):
    """Command-line misuse that argparse cannot catch itself."""


def load_graph(argument: str) -> Graph:
    """Resolve a graph argument: ``family:<spec>`` or a file path."""
    if argument.startswith(FAMILY_PREFIX):
        return build_family(argument[len(FAMILY_PREFIX) :])
    return parse_graph(Path(argument).read_text())


def _family_kind(argument: str) -> tuple[str, int] | None:
    """(kind, n) when the argument is a plain path/star/cycle family spec."""
    if not argument.startswith(FAMILY_PREFIX):
        return None
    spec = argument[len(FAMILY_PREFIX) :].strip()
    name, _, arg = spec.partition(":")
    if name in ("path", "star", "cycle") and arg.isdigit():
        return name, int(arg)
    return None


def _emit(payload: dict, fmt: str, plain: str) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    else:
        print(plain)


def _rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(
        value.numerator
    )


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_count(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    family = _family_kind(args.graph)
    routes = _resolve_count_routes(args.route, family, g, args)
    values: dict[str, int] = {}
    for name, compute in routes.items():
        values[name] = compute()
    agree = len(set(values.values())) == 1
    payload = {
        "graph": args.graph,
        "counts": {name: str(v) for name, v in values.items()},
        "agree": agree,
    }
    if not agree:
        print(f"count routes disagree: {payload['counts']}", file=sys.stderr)
        print(json.dumps(payload))
        return 1
    _emit(payload, args.format, str(next(iter(values.values()))))
    return 0


def _resolve_count_routes(
    route: str,
    family: tuple[str, int] | None,
    g: Graph,
    args: argparse.Namespace,
) -> dict[str, Callable[[], int]]:
    base = args.base
    routes: dict[str, Callable[[], int]] = {}

    def dp() -> int:
        if base is not None:
            return count_based(g, base, max_states=args.limit_states)
        return count_dp(g, max_states=args.limit_states)

    def oracle() -> int:
        if base is not None:
            return sum(
                1
                for codes in _iter_codes(g, element_limit=args.limit_elements)
                if codes[0] == base - 1
            )
        return count_bruteforce(g, element_limit=args.limit_elements)

    def formula() -> int:
        if family is None:
            raise UsageError("--route formula needs a family:path/star/cycle graph")
        kind, n = family
        if base is not None:
            return _based_formula(kind, n, base)
        if kind == "path":
            return path_count_bernoulli(n)
        if kind == "star":
            return star_count(n)
        return cycle_count_bernoulli(n)

    def recursion() -> int:
        if family is None:
            raise UsageError("--route recursion needs a family:path/star/cycle graph")
        kind, n = family
        if base is not None:
            raise UsageError("--route recursion does not support --base")
        if kind == "path":
            return path_count_recursive(n)
        if kind == "star":
            return star_count_recursive(n)
        return n * path_count_recursive(n)

    formula_feasible = family is not None and (
        base is None or (base == 1 and family[0] in ("path", "star"))
    )
    if route in ("dp", "all"):
        routes["dp"] = dp
    if route == "oracle" or (
        route == "all" and g.element_count <= args.limit_elements
    ):
        routes["oracle"] = oracle
    if route == "formula" or (route == "all" and formula_feasible):
        routes["formula"] = formula
    if route == "recursion" or (
        route == "all" and family is not None and base is None
    ):
        routes["recursion"] = recursion
    if not routes:
        raise UsageError(f"no applicable route for {route!r}")
    return routes


def _based_formula(kind: str, n: int, base: int) -> int:
    if kind == "path" and base == 1:
        return zigzag_numbers(max(n, 1)).secant[n - 1]
    if kind == "star" and base == 1:
        return math.factorial(2 * n) // 2**n
    raise UsageError(
        "--route formula with --base supports family:path --base 1 (endpoint) "
        "and family:star --base 1 (hub) only"
    )


def _cmd_enumerate(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    sequences = [
        format_sequence(x.elements)
        for x in enumerate_csequences(g, element_limit=args.limit_elements)
    ]
    payload = {"graph": args.graph, "count": str(len(sequences)), "sequences": sequences}
    _emit(payload, args.format, "\n".join(sequences))
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    elements = parse_sequence(args.sequence)
    problems = validate(g, elements)
    payload = {
        "graph": args.graph,
        "sequence": args.sequence,
        "valid": not problems,
        "violations": [str(v) for v in problems],
    }
    _emit(payload, args.format, "valid" if not problems else "invalid")
    if problems:
        for violation in problems:
            print(violation, file=sys.stderr)
        return 1
    return 0


def _cmd_cost(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    x = CSeq(g, parse_sequence(args.sequence))
    per_edge = {f"e{j}": edge_cost(x, j) for j in range(1, g.q + 1)}
    profile = component_profile(x)
    try:
        vertex_total = _rational(vertex_cost(x))
    except IsolatedVertexError:
        vertex_total = None
    payload = {
        "graph": args.graph,
        "sequence": format_sequence(x.elements),
        "short": short_form(x.elements, hub_zero=args.hub_zero),
        "per_edge": per_edge,
        "total": total_cost(x),
        "vertex_cost": vertex_total,
        "components": list(profile.counts),
        "peak_components": profile.peak,
    }
    _emit(payload, args.format, str(payload["total"]))
    return 0


def _cmd_optimize(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    result = min_cost(g, max_states=args.limit_states, max_witnesses=args.witnesses)
    payload = {
        "graph": args.graph,
        "min_cost": result.min_cost,
        "num_optimal": str(result.num_optimal),
        "witnesses": [format_sequence(x.elements) for x in result.witnesses],
    }
    _emit(payload, args.format, f"{result.min_cost} {result.num_optimal}")
    return 0


def _cmd_greedy(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    order = None
    if args.order:
        order = tuple(int(tok) for tok in args.order.replace(",", " ").split())
    tie = TieBreak(args.tie_break, args.seed)
    x = greedy(g, order, tie)
    payload = {
        "graph": args.graph,
        "order": list(order) if order else list(range(1, g.p + 1)),
        "policy": args.tie_break,
        "seed": args.seed,
        "sequence": format_sequence(x.elements),
        "short": short_form(x.elements, hub_zero=args.hub_zero),
        "cost": total_cost(x),
    }
    _emit(payload, args.format, f"{payload['sequence']}  cost={payload['cost']}")
    return 0


_TABLE_KINDS = ("path", "star", "cycle", "based-path", "based-star")


def _table_routes(kind: str, n: int, limit_elements: int) -> dict[str, Callable[[], int]]:
    if kind == "path":
        g = build_family(f"path:{n}")
        routes: dict[str, Callable[[], int]] = {
            "dp": lambda: count_dp(g),
            "formula": lambda: path_count_bernoulli(n),
            "recursion": lambda: path_count_recursive(n),
        }
    elif kind == "star":
        g = build_family(f"star:{n}")
        routes = {
            "dp": lambda: count_dp(g),
            "formula": lambda: star_count(n),
            "recursion": lambda: star_count_recursive(n),
        }
    elif kind == "cycle":
        g = build_family(f"cycle:{n}")
        routes = {
            "dp": lambda: count_dp(g),
            "formula": lambda: cycle_count_bernoulli(n),
            "recursion": lambda: n * path_count_recursive(n),
        }
    elif kind == "based-path":
        g = build_family(f"path:{n}")
        routes = {
            "dp": lambda: count_based(g, 1),
            "formula": lambda: zigzag_numbers(max(n, 1)).secant[n - 1],
        }
    else:  # based-star
        g = build_family(f"star:{n}")
        routes = {
            "dp": lambda: count_based(g, 1),
            "formula": lambda: math.factorial(2 * n) // 2**n,
        }
    if g.element_count <= limit_elements:
        if kind.startswith("based"):
            routes["oracle"] = lambda: sum(
                1 for codes in _iter_codes(g, element_limit=limit_elements) if codes[0] == 0
            )
        else:
            routes["oracle"] = lambda: count_bruteforce(g, element_limit=limit_elements)
    return routes


def _cmd_family_table(args: argparse.Namespace) -> int:
    if args.kind not in _TABLE_KINDS:
        raise UsageError(f"kind must be one of {_TABLE_KINDS}, got {args.kind!r}")
    rows = []
    for n in range(1, args.max + 1):
        routes = _table_routes(args.kind, n, args.limit_elements)
        if args.route != "all":
            if args.route not in routes:
                raise UsageError(f"route {args.route!r} not available for {args.kind}")
            routes = {args.route: routes[args.route]}
        values = {name: compute() for name, compute in routes.items()}
        rows.append(
            {
                "n": n,
                "counts": {name: str(v) for name, v in values.items()},
                "agree": len(set(values.values())) == 1,
            }
        )
    payload = {"kind": args.kind, "rows": rows}
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        columns = sorted({name for row in rows for name in row["counts"]})
        print(",".join(["n", *columns, "agree"]))
        for row in rows:
            cells = [str(row["n"])]
            cells += [row["counts"].get(c, "") for c in columns]
            cells.append(str(row["agree"]).lower())
            print(",".join(cells))
    else:
        columns = sorted({name for row in rows for name in row["counts"]})
        widths = {
            c: max(len(c), *(len(row["counts"].get(c, "")) for row in rows)) for c in columns
        }
        header = "n".rjust(4) + "  " + "  ".join(c.rjust(widths[c]) for c in columns) + "  agree"
        print(header)
        for row in rows:
            cells = "  ".join(row["counts"].get(c, "").rjust(widths[c]) for c in columns)
            print(f"{row['n']:>4}  {cells}  {'ok' if row['agree'] else 'MISMATCH'}")
    if not all(row["agree"] for row in rows):
        print("family-table routes disagree", file=sys.stderr)
        return 1
    return 0


def _parse_family_argument(argument: str) -> Family:
    parts = argument.split(":")
    if parts[0] == "trees" and len(parts) == 2 and parts[1].isdigit():
        return Family.trees(int(parts[1]))
    if parts[0] == "graphs" and len(parts) == 3 and parts[1].isdigit() and parts[2].isdigit():
        return Family.fixed_size(int(parts[1]), int(parts[2]))
    raise UsageError(f"family must be trees:<n> or graphs:<p>:<q>, got {argument!r}")


def _cmd_xi(args: argparse.Namespace) -> int:
    family = _parse_family_argument(args.family)
    counts = [(index, count_dp(member)) for index, member in enumerate(family)]
    if not counts:
        raise ValueError("family is empty")
    total = sum(c for _, c in counts)
    size = len(counts)
    average = Fraction(total, size)
    entries = [
        {"id": index, "c": str(c), "xi": _rational(Fraction(c) / average)}
        for index, c in counts
    ]
    payload = {
        "family": family.label,
        "size": str(size),
        "alpha": _rational(average),
        "graphs": entries,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"family {payload['family']} size {size} alpha {payload['alpha']}")
        for entry in entries:
            print(f"{entry['id']:>6}  c={entry['c']}  xi={entry['xi']}")
    return 0


def _cmd_check_conjecture(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    tie: TieBreak | str
    if args.tie_break == "exhaustive":
        tie = "exhaustive"
    else:
        tie = TieBreak(args.tie_break, args.seed)
    report = check_conjecture(g, tie, element_limit=args.limit_elements)
    payload = {
        "graph": args.graph,
        "policy": report.policy,
        "holds": report.holds,
        "num_min_cost": str(report.num_min_cost),
        "num_greedy": str(report.num_greedy),
        "counterexamples": [format_sequence(x.elements) for x in report.counterexamples],
    }
    _emit(
        payload,
        args.format,
        "holds" if report.holds else f"counterexamples: {len(report.counterexamples)}",
    )
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buildseq",
        description="Count, enumerate, validate, and cost-optimize graph construction sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt_default: str = "json") -> None:
        p.add_argument("--format", choices=("json", "csv", "plain"), default=fmt_default)
        p.add_argument("--limit-elements", type=int, default=DEFAULT_ELEMENT_LIMIT)
        p.add_argument("--limit-states", type=int, default=DEFAULT_STATE_LIMIT)
        p.add_argument("--seed", type=int, default=0)

    p_count = sub.add_parser("count", help="count construction sequences")
    p_count.add_argument("graph")
    p_count.add_argument("--route", choices=("dp", "oracle", "formula", "recursion", "all"), default="dp")
    p_count.add_argument("--base", type=int, default=None, help="count sequences starting at this vertex")
    common(p_count, fmt_default="plain")
    p_count.set_defaults(func=_cmd_count)

    p_enum = sub.add_parser("enumerate", help="list every construction sequence")
    p_enum.add_argument("graph")
    common(p_enum, fmt_default="plain")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_val = sub.add_parser("validate", help="check a candidate sequence")
    p_val.add_argument("graph")
    p_val.add_argument("sequence")
    common(p_val)
    p_val.set_defaults(func=_cmd_validate)

    p_cost = sub.add_parser("cost", help="cost report for a sequence")
    p_cost.add_argument("graph")
    p_cost.add_argument("sequence")
    p_cost.add_argument("--hub-zero", action="store_true", help="display vertex labels shifted down by one")
    common(p_cost)
    p_cost.set_defaults(func=_cmd_cost)

    p_opt = sub.add_parser("optimize", help="exact minimum cost and optimal count")
    p_opt.add_argument("graph")
    p_opt.add_argument("--witnesses", type=int, default=0, help="emit up to N minimum-cost sequences")
    common(p_opt)
    p_opt.set_defaults(func=_cmd_optimize)

    p_greedy = sub.add_parser("greedy", help="run the greedy builder")
    p_greedy.add_argument("graph")
    p_greedy.add_argument("--order", default=None, help="vertex order, e.g. 2,1,3")
    p_greedy.add_argument("--tie-break", choices=("lexicographic", "cycle-avoiding", "seeded-random"), default="lexicographic")
    p_greedy.add_argument("--hub-zero", action="store_true")
    common(p_greedy)
    p_greedy.set_defaults(func=_cmd_greedy)

    p_table = sub.add_parser("family-table", help="counts per family size across routes")
    p_table.add_argument("kind", help="path | star | cycle | based-path | based-star")
    p_table.add_argument("--max", type=int, required=True)
    p_table.add_argument("--route", choices=("dp", "oracle", "formula", "recursion", "all"), default="all")
    common(p_table, fmt_default="plain")
    p_table.set_defaults(func=_cmd_family_table)

    p_xi = sub.add_parser("xi", help="constructability over a family")
    p_xi.add_argument("family", help="trees:<n> or graphs:<p>:<q>")
    common(p_xi)
    p_xi.set_defaults(func=_cmd_xi)

    p_conj = sub.add_parser("check-conjecture", help="do greedy runs reach every minimum-cost sequence?")
    p_conj.add_argument("graph")
    p_conj.add_argument("--tie-break", choices=("exhaustive", "lexicographic", "cycle-avoiding", "seeded-random"), default="exhaustive")
    common(p_conj)
    p_conj.set_defaults(func=_cmd_check_conjecture)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
