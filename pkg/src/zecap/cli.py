"""Command-line surface: every subcommand emits one JSON report to stdout.

Reports share a fixed envelope — command, canonicalized inputs, results,
budgets, version, wall time — and serialize with sorted keys so identical
inputs produce identical bytes (wall time aside).  Exit codes: 0 success,
2 input error, 3 budget exhausted (the partial result is still emitted),
4 solver failure.

Graphs are given as expressions: numbering indices ("689"), named
shortcuts (C3..C9 cycles, K1..K9 complete, E1..E9 edgeless, S the single
vertex), compositions with + (disjoint union), * (strong product),
^ (strong power), parentheses — or the literal forms "n:bits" and
"n; u-v, u-v".  Thresholds accept "a/b", decimals, "sqrt(k)", and
"a+sqrt(k)".
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .alpha import ladder, solve_alpha
from .channel import (
    Channel,
    capacity_bounds,
    channel_from_csv,
    channel_from_json,
    confusability_graph,
)
from .creal import CReal, decimal_string, parse_real
from .decide import (
    Certificate,
    DEFAULT_NODE_BUDGET,
    DEFAULT_POWER_CAP,
    ENUM_POWER_CAP,
    HALTED,
    VALUE,
    enumerate_gt,
    locate_grid,
    semidecide_gt,
    squeeze_capacity,
)
from .errors import BudgetError, ConvergenceError, InputError
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    decode,
    disjoint_union,
    edgeless_graph,
    encode,
    graph_from_bitstring,
    graph_from_edgetext,
    graph_to_bitstring,
    single_vertex,
    strong_power,
    strong_product,
)
from .preorder import LEQ_MAX_VERTICES, asymptotic_leq_bounded, leq
from .spectrum import BoundsReport, fractional_clique_cover, lovasz_theta, sandwich

REAL_BITS = 48  # precision at which computable reals are reported


# ---------------------------------------------------------------------------
# graph expressions


_TOKEN_RE = re.compile(r"\s*([A-Z]\d*|\d+|[+*^()])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise InputError(
                f"bad graph expression near {text[pos:pos + 8]!r} (position {pos})"
            )
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise InputError("empty graph expression")
    return tokens


_NAME_RE = re.compile(r"([CKE])(\d+)$")


def _named_graph(token: str) -> Graph:
    if token == "S":
        return single_vertex()
    m = _NAME_RE.match(token)
    if m:
        kind, size = m.group(1), int(m.group(2))
        if kind == "C" and size >= 3:
            return cycle_graph(size)
        if kind == "K" and size >= 1:
            return complete_graph(size)
        if kind == "E" and size >= 1:
            return edgeless_graph(size)
    raise InputError(
        f"unknown graph name {token!r} (use S, C3.., K1.., E1.., or an index)"
    )


class _ExpressionParser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise InputError("graph expression ended unexpectedly")
        self.pos += 1
        return token

    def parse(self) -> Graph:
        g = self.union()
        if self.peek() is not None:
            raise InputError(f"unexpected token {self.peek()!r} in graph expression")
        return g

    def union(self) -> Graph:
        g = self.product()
        while self.peek() == "+":
            self.take()
            g = disjoint_union(g, self.product())
        return g

    def product(self) -> Graph:
        g = self.power()
        while self.peek() == "*":
            self.take()
            g = strong_product(g, self.power())
        return g

    def power(self) -> Graph:
        g = self.atom()
        while self.peek() == "^":
            self.take()
            token = self.take()
            if not token.isdigit():
                raise InputError(f"power exponent must be an integer, got {token!r}")
            g = strong_power(g, int(token))
        return g

    def atom(self) -> Graph:
        token = self.take()
        if token == "(":
            g = self.union()
            if self.take() != ")":
                raise InputError("unbalanced parentheses in graph expression")
            return g
        if token.isdigit():
            return decode(int(token))
        return _named_graph(token)


def parse_graph(text: str) -> Graph:
    """Parse an index, a literal form, or a composition expression."""
    stripped = text.strip()
    if ";" in stripped:
        return graph_from_edgetext(stripped)
    if ":" in stripped:
        return graph_from_bitstring(stripped)
    return _ExpressionParser(_tokenize(stripped)).parse()


# ---------------------------------------------------------------------------
# JSON rendering helpers


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def real_json(x: CReal, bits: int = REAL_BITS) -> dict:
    approx = x.approx(bits)
    return {
        "decimal": decimal_string(approx, 12),
        "value": frac_str(approx),
        "modulus": "0/1" if x.exact is not None else frac_str(Fraction(1, 1 << bits)),
        "precision_bits": bits,
        "description": x.description,
        "exact": x.exact is not None,
    }


def graph_json(g: Graph) -> dict:
    out: dict = {"vertices": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.n <= 40:
        out["index"] = encode(g)
    if g.n <= 64:
        out["bitstring"] = graph_to_bitstring(g)
    return out


def certificate_json(cert: Certificate | None) -> dict | None:
    if cert is None:
        return None
    return {
        "graph_index": cert.graph_index,
        "lambda_expr": cert.lambda_expr,
        "k": cert.level,
        "n": cert.precision,
        "alpha_power": cert.alpha_power,
        "inequality_lhs": frac_str(cert.lhs),
        "inequality_rhs": frac_str(cert.rhs),
    }


def _ladder_json(levels) -> list[dict]:
    return [
        {
            "m": lv.m,
            "alpha": lv.alpha_value,
            "value": real_json(lv.root),
        }
        for lv in levels
    ]


def _bounds_json(report: BoundsReport) -> dict:
    theta = None
    if report.theta is not None:
        theta = {
            "lo": frac_str(report.theta.lo),
            "hi": frac_str(report.theta.hi),
            "tolerance": frac_str(report.theta.tolerance),
        }
    cover = None
    if report.clique_cover is not None:
        cover = {"value": frac_str(report.clique_cover.hi)}
    width = report.width()
    return {
        "lower": frac_str(report.lower),
        "lower_decimal": decimal_string(report.lower, 12),
        "lower_real": None
        if report.lower_real is None
        else real_json(report.lower_real),
        "upper": None if report.upper is None else frac_str(report.upper),
        "upper_decimal": None
        if report.upper is None
        else decimal_string(report.upper, 12),
        "width": None if width is None else frac_str(width),
        "theta": theta,
        "clique_cover": cover,
        "ladder": _ladder_json(report.ladder),
        "errors": list(report.errors),
    }


def _write_ladder_csv(path: str, levels) -> None:
    lines = ["m,alpha,value"]
    for lv in levels:
        lines.append(f"{lv.m},{lv.alpha_value},{decimal_string(lv.root.approx(REAL_BITS), 12)}")
    Path(path).write_text("\n".join(lines) + "\n")


def _write_bounds_csv(path: str, report: BoundsReport) -> None:
    lines = ["kind,m,value"]
    for lv in report.ladder:
        lines.append(f"ladder,{lv.m},{decimal_string(lv.root.approx(REAL_BITS), 12)}")
    if report.clique_cover is not None:
        lines.append(f"clique_cover,,{decimal_string(report.clique_cover.hi, 12)}")
    if report.theta is not None:
        lines.append(f"theta_lo,,{decimal_string(report.theta.lo, 12)}")
        lines.append(f"theta_hi,,{decimal_string(report.theta.hi, 12)}")
    lines.append(f"lower,,{decimal_string(report.lower, 12)}")
    if report.upper is not None:
        lines.append(f"upper,,{decimal_string(report.upper, 12)}")
    Path(path).write_text("\n".join(lines) + "\n")


def _parse_tolerance(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse tolerance {text!r}") from None
    if tol <= 0:
        raise InputError("tolerance must be positive")
    return tol


def _load_channel(path: str, fmt: str) -> Channel:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read channel file {path!r}: {e}") from e
    if fmt == "auto":
        fmt = "json" if path.endswith(".json") or text.lstrip().startswith("{") else "csv"
    return channel_from_json(text) if fmt == "json" else channel_from_csv(text)


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (inputs, results, budgets, exit_code)


def _cmd_encode(args):
    g = parse_graph(args.expression)
    inputs = {"expression": args.expression}
    results = {"index": encode(g), "graph": graph_json(g)}
    return inputs, results, {}, 0


def _cmd_decode(args):
    g = decode(args.index)
    inputs = {"index": args.index}
    return inputs, {"graph": graph_json(g)}, {}, 0


def _cmd_alpha(args):
    g = parse_graph(args.graph)
    witness, nodes = solve_alpha(g, args.node_budget)
    inputs = {"graph": graph_json(g), "expression": args.graph}
    results = {
        "alpha": witness.size,
        "witness": sorted(witness.vertices),
        "nodes_used": nodes,
    }
    return inputs, results, {"node_budget": args.node_budget}, 0


def _cmd_ladder(args):
    g = parse_graph(args.graph)
    inputs = {"graph": graph_json(g), "expression": args.graph, "m_max": args.m}
    budgets = {"node_budget": args.node_budget, "power_cap": args.power_cap}
    code = 0
    try:
        levels = ladder(g, args.m, args.node_budget, args.power_cap)
        results = {"levels": _ladder_json(levels)}
    except BudgetError as e:
        levels = list(e.partial or [])
        results = {"levels": _ladder_json(levels), "error": str(e)}
        code = 3
    if args.csv:
        _write_ladder_csv(args.csv, levels)
    return inputs, results, budgets, code


def _cmd_bounds(args):
    g = parse_graph(args.graph)
    tol = _parse_tolerance(args.tol)
    report = sandwich(g, args.m, tol, args.node_budget, args.power_cap)
    inputs = {
        "graph": graph_json(g),
        "expression": args.graph,
        "m_max": args.m,
        "tol": frac_str(tol),
    }
    budgets = {"node_budget": args.node_budget, "power_cap": args.power_cap}
    if args.csv:
        _write_bounds_csv(args.csv, report)
    return inputs, _bounds_json(report), budgets, 3 if report.errors else 0


def _cmd_theta(args):
    g = parse_graph(args.graph)
    tol = _parse_tolerance(args.tol)
    bound = lovasz_theta(g, tol)
    inputs = {"graph": graph_json(g), "expression": args.graph, "tol": frac_str(tol)}
    results = {
        "kind": bound.kind,
        "lo": frac_str(bound.lo),
        "hi": frac_str(bound.hi),
        "lo_decimal": decimal_string(bound.lo, 12),
        "hi_decimal": decimal_string(bound.hi, 12),
        "tolerance": frac_str(bound.tolerance),
    }
    return inputs, results, {}, 0


def _cmd_chif(args):
    g = parse_graph(args.graph)
    bound = fractional_clique_cover(g)
    inputs = {"graph": graph_json(g), "expression": args.graph}
    results = {
        "kind": bound.kind,
        "value": frac_str(bound.hi),
        "decimal": decimal_string(bound.hi, 12),
    }
    return inputs, results, {}, 0


def _cmd_decide_gt(args):
    g = parse_graph(args.graph)
    lam = parse_real(args.lam)
    outcome = semidecide_gt(
        g,
        lam,
        args.budget,
        node_budget=args.node_budget,
        power_cap=args.power_cap,
        lambda_expr=args.lam.strip(),
    )
    if outcome.certificate is not None and not outcome.certificate.verify(lam):
        raise ConvergenceError("certificate failed exact re-verification")
    inputs = {
        "graph": graph_json(g),
        "expression": args.graph,
        "lambda": args.lam.strip(),
    }
    budgets = {
        "step_budget": args.budget,
        "node_budget": args.node_budget,
        "power_cap": args.power_cap,
    }
    results = {
        "status": outcome.status,
        "certificate": certificate_json(outcome.certificate),
        "steps_used": outcome.steps_used,
        "progress": {str(k): v for k, v in sorted(outcome.progress.items())},
    }
    return inputs, results, budgets, 0 if outcome.status == HALTED else 3


def _cmd_enumerate(args):
    lam = parse_real(args.lam)
    state = enumerate_gt(
        lam,
        args.horizon,
        args.stages,
        power_cap=args.power_cap,
        node_budget=args.node_budget,
        lambda_expr=args.lam.strip(),
    )
    inputs = {
        "lambda": args.lam.strip(),
        "horizon": args.horizon,
        "stages": args.stages,
    }
    budgets = {"power_cap": args.power_cap, "node_budget": args.node_budget}
    results = {
        "stage": state.stage,
        "pending_slots": state.pending,
        "emitted": [
            {
                "slot": e.slot,
                "graph_index": e.graph_index,
                "certificate": certificate_json(e.certificate),
            }
            for e in state.emitted
        ],
    }
    return inputs, results, budgets, 0


def _cmd_preorder(args):
    left = parse_graph(args.left)
    right = parse_graph(args.right)
    witness = leq(left, right, args.max_vertices, args.node_budget)
    inputs = {
        "left": graph_json(left),
        "right": graph_json(right),
        "left_expression": args.left,
        "right_expression": args.right,
    }
    results = {
        "established": witness.established,
        "mapping": None if witness.mapping is None else list(witness.mapping),
        "nodes_used": witness.nodes_used,
    }
    budgets = {"max_vertices": args.max_vertices, "node_budget": args.node_budget}
    return inputs, results, budgets, 0


def _cmd_asym_preorder(args):
    left = parse_graph(args.left)
    right = parse_graph(args.right)
    outcome = asymptotic_leq_bounded(
        left, right, args.m, args.budget, args.power_cap, args.node_budget
    )
    inputs = {
        "left": graph_json(left),
        "right": graph_json(right),
        "left_expression": args.left,
        "right_expression": args.right,
        "m": args.m,
    }
    budgets = {
        "search_budget": args.budget,
        "power_cap": args.power_cap,
        "node_budget": args.node_budget,
    }
    results = {
        "status": outcome.status,
        "n": outcome.n,
        "k": outcome.k,
        "tests_used": outcome.tests_used,
        "frontier": [list(pair) for pair in outcome.frontier],
    }
    return inputs, results, budgets, 0 if outcome.established else 3


def _cmd_channel_graph(args):
    ch = _load_channel(args.channel, args.format)
    g = confusability_graph(ch)
    inputs = {"channel": args.channel, "x_size": ch.x_size, "y_size": ch.y_size}
    results = {"graph": graph_json(g)}
    return inputs, results, {}, 0


def _cmd_capacity(args):
    ch = _load_channel(args.channel, args.format)
    tol = _parse_tolerance(args.tol)
    report = capacity_bounds(ch, args.m, tol, args.node_budget, args.power_cap)
    inputs = {
        "channel": args.channel,
        "x_size": ch.x_size,
        "y_size": ch.y_size,
        "m_max": args.m,
        "tol": frac_str(tol),
    }
    budgets = {"node_budget": args.node_budget, "power_cap": args.power_cap}
    results = {
        "graph": graph_json(report.graph),
        "theta_scale": _bounds_json(report.bounds),
        "log2_scale": {
            "lower": round(report.log2_lower, 12),
            "upper": None
            if report.log2_upper is None
            else round(report.log2_upper, 12),
        },
    }
    return inputs, results, budgets, 3 if report.bounds.errors else 0


def _cmd_locate(args):
    g = parse_graph(args.graph)
    tol = _parse_tolerance(args.tol)
    cell = locate_grid(g, args.M, tol, node_budget=args.node_budget)
    inputs = {
        "graph": graph_json(g),
        "expression": args.graph,
        "M": args.M,
        "tol": frac_str(tol),
    }
    scale = 1 << args.M
    results = {
        "resolution": cell.resolution,
        "cells": cell.cells,
        "cell_intervals": [
            [frac_str(Fraction(r, scale)), frac_str(Fraction(r + 1, scale))]
            for r in cell.cells
        ],
        "lower": frac_str(cell.lower),
        "upper": frac_str(cell.upper),
        "singleton": len(cell.cells) == 1,
    }
    return inputs, results, {"node_budget": args.node_budget}, 0


def _cmd_squeeze(args):
    g = parse_graph(args.graph)
    result = squeeze_capacity(
        g, args.K, args.budget, node_budget=args.node_budget, power_cap=args.power_cap
    )
    inputs = {"graph": graph_json(g), "expression": args.graph, "K": args.K}
    budgets = {
        "round_budget": args.budget,
        "node_budget": args.node_budget,
        "power_cap": args.power_cap,
    }
    results = {
        "status": result.status,
        "lower": frac_str(result.lower),
        "upper": frac_str(result.upper),
        "width": frac_str(result.width()),
        "lower_decimal": decimal_string(result.lower, 12),
        "upper_decimal": decimal_string(result.upper, 12),
        "rounds_used": result.rounds_used,
    }
    return inputs, results, budgets, 0 if result.status == VALUE else 3


# ---------------------------------------------------------------------------
# parser assembly


def _add_graph_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--graph",
        required=True,
        help="graph expression, e.g. C5, 'S+C5', 'K3*E2', 689, '5:1001100101'",
    )


def _add_node_budget(p: argparse.ArgumentParser, default: int | None = None) -> None:
    p.add_argument(
        "--node-budget",
        type=int,
        default=default,
        help="branch-and-bound node cap per independence solve",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zecap",
        description="Exact lower bounds, certified upper bounds, and budgeted "
        "decision procedures for the zero-error capacity of graphs and channels.",
    )
    parser.add_argument("--version", action="version", version=f"zecap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="numbering index of a graph expression")
    p.add_argument("expression")
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("decode", help="graph at a numbering index")
    p.add_argument("index", type=int)
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("alpha", help="maximum independent set with witness")
    _add_graph_flag(p)
    _add_node_budget(p)
    p.set_defaults(handler=_cmd_alpha)

    p = sub.add_parser("ladder", help="independence ladder lower bounds")
    _add_graph_flag(p)
    p.add_argument("--m", type=int, default=1, help="deepest ladder level")
    _add_node_budget(p)
    p.add_argument("--power-cap", type=int, default=None, help="strong-power vertex cap")
    p.add_argument("--csv", help="also write the level series to this CSV file")
    p.set_defaults(handler=_cmd_ladder)

    p = sub.add_parser("bounds", help="two-sided capacity sandwich")
    _add_graph_flag(p)
    p.add_argument("--m", type=int, default=1, help="deepest ladder level")
    p.add_argument("--tol", default="1e-4", help="theta interval tolerance")
    _add_node_budget(p)
    p.add_argument("--power-cap", type=int, default=None, help="strong-power vertex cap")
    p.add_argument("--csv", help="also write the bound series to this CSV file")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("theta-sdp", help="certified Lovász theta interval")
    _add_graph_flag(p)
    p.add_argument("--tol", default="1e-4", help="interval width target")
    p.set_defaults(handler=_cmd_theta)

    p = sub.add_parser("chif", help="exact fractional clique cover number")
    _add_graph_flag(p)
    p.set_defaults(handler=_cmd_chif)

    p = sub.add_parser("decide-gt", help="semi-decide capacity > threshold")
    _add_graph_flag(p)
    p.add_argument("--lambda", dest="lam", required=True, help="threshold expression")
    p.add_argument("--budget", type=int, default=1000, help="dovetail step budget")
    _add_node_budget(p, DEFAULT_NODE_BUDGET)
    p.add_argument("--power-cap", type=int, default=DEFAULT_POWER_CAP)
    p.set_defaults(handler=_cmd_decide_gt)

    p = sub.add_parser("enumerate", help="enumerate graphs with capacity > threshold")
    p.add_argument("--lambda", dest="lam", required=True, help="threshold expression")
    p.add_argument("--horizon", type=int, required=True, help="number of graphs admitted")
    p.add_argument("--stages", type=int, required=True, help="schedule stages to run")
    _add_node_budget(p, 200_000)
    p.add_argument("--power-cap", type=int, default=ENUM_POWER_CAP)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("preorder", help="decide the cohomomorphism order left <= right")
    p.add_argument("left", help="graph expression")
    p.add_argument("right", help="graph expression")
    p.add_argument("--max-vertices", type=int, default=LEQ_MAX_VERTICES)
    _add_node_budget(p)
    p.set_defaults(handler=_cmd_preorder)

    p = sub.add_parser(
        "asym-preorder", help="bounded search for an asymptotic-order witness"
    )
    p.add_argument("left", help="graph expression")
    p.add_argument("right", help="graph expression")
    p.add_argument("--m", type=int, required=True, help="slack denominator")
    p.add_argument("--budget", type=int, default=32, help="number of (n,k) tests")
    _add_node_budget(p, 2_000_000)
    p.add_argument("--power-cap", type=int, default=512)
    p.set_defaults(handler=_cmd_asym_preorder)

    p = sub.add_parser("channel-graph", help="confusability graph of a channel")
    p.add_argument("--channel", required=True, help="channel file (CSV or JSON)")
    p.add_argument("--format", choices=["auto", "csv", "json"], default="auto")
    p.set_defaults(handler=_cmd_channel_graph)

    p = sub.add_parser("capacity", help="zero-error capacity sandwich of a channel")
    p.add_argument("--channel", required=True, help="channel file (CSV or JSON)")
    p.add_argument("--format", choices=["auto", "csv", "json"], default="auto")
    p.add_argument("--m", type=int, default=1, help="deepest ladder level")
    p.add_argument("--tol", default="1e-4", help="theta interval tolerance")
    _add_node_budget(p)
    p.add_argument("--power-cap", type=int, default=None)
    p.set_defaults(handler=_cmd_capacity)

    p = sub.add_parser("locate", help="dyadic grid cells containing the capacity")
    _add_graph_flag(p)
    p.add_argument("--M", type=int, required=True, help="grid exponent")
    p.add_argument("--tol", default="1e-4", help="theta interval tolerance")
    _add_node_budget(p, DEFAULT_NODE_BUDGET)
    p.set_defaults(handler=_cmd_locate)

    p = sub.add_parser("squeeze", help="shrink the capacity interval below 2^-K")
    _add_graph_flag(p)
    p.add_argument("--K", type=int, required=True, help="target width exponent")
    p.add_argument("--budget", type=int, default=16, help="refinement rounds")
    _add_node_budget(p, DEFAULT_NODE_BUDGET)
    p.add_argument("--power-cap", type=int, default=DEFAULT_POWER_CAP)
    p.set_defaults(handler=_cmd_squeeze)

    return parser


def run(argv=None) -> tuple[int, dict]:
    """Execute one subcommand; returns (exit_code, report)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        inputs, results, budgets, code = args.handler(args)
    except InputError as e:
        inputs, results, budgets, code = {}, {"error": str(e), "kind": "input"}, {}, 2
    except BudgetError as e:
        inputs, results, budgets, code = {}, {"error": str(e), "kind": "budget"}, {}, 3
    except ConvergenceError as e:
        inputs, results, budgets, code = {}, {"error": str(e), "kind": "solver"}, {}, 4
    except Exception as e:  # pragma: no cover - defensive
        inputs, results, budgets = {}, {"error": f"{type(e).__name__}: {e}", "kind": "internal"}, {}
        code = 4
    report = {
        "command": args.command,
        "inputs": inputs,
        "results": results,
        "budgets": budgets,
        "version": __version__,
        "wall_time_s": round(time.perf_counter() - start, 6),
    }
    return code, report


def main(argv=None) -> int:
    code, report = run(argv)
    print(json.dumps(report, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
