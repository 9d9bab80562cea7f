"""Exact maximum independent set search and the capacity lower-bound ladder.

The solver runs branch and bound on the complement (max clique) with a
greedy coloring bound, all on bit-vector vertex sets.  Budgets are counted
in node expansions; running out raises BudgetError carrying the best set
found so far, never a silent claim of optimality.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from . import creal
from .errors import BudgetError, InputError
from .graphs import Graph, strong_product, vertex_budget

DEFAULT_VERTEX_CAP = 1 << 16


@dataclass
class IndependentSetWitness:
    vertices: list[int]
    size: int

    def verify(self, g: Graph) -> bool:
        if self.size != len(self.vertices) or len(set(self.vertices)) != self.size:
            return False
        for i, u in enumerate(self.vertices):
            if not 0 <= u < g.n:
                return False
            for v in self.vertices[i + 1 :]:
                if g.has_edge(u, v):
                    return False
        return True


@dataclass
class LadderValue:
    """Level m of the ladder: alpha of the 2^m-fold strong power, and its
    2^m-th root as a computable real."""

    m: int
    alpha_value: int
    root: creal.CReal


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise _OutOfNodes()


class _OutOfNodes(Exception):
    pass


def _greedy_seed(g: Graph) -> list[int]:
    # repeatedly take a minimum-degree vertex of what is left
    alive = (1 << g.n) - 1
    chosen = []
    while alive:
        best_v = -1
        best_d = g.n + 1
        m = alive
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            d = (g.masks[v] & alive).bit_count()
            if d < best_d:
                best_d = d
                best_v = v
            m ^= lsb
        chosen.append(best_v)
        alive &= ~(g.masks[best_v] | (1 << best_v))
    return chosen


def solve_alpha(
    g: Graph,
    node_budget: int | None = None,
    initial: list[int] | None = None,
) -> tuple[IndependentSetWitness, int]:
    """Exact alpha via branch and bound; returns (witness, nodes_used)."""
    n = g.n
    if n == 0:
        return IndependentSetWitness([], 0), 0
    # clique search on the complement
    full = (1 << n) - 1
    comp = [full ^ (1 << v) ^ g.masks[v] for v in range(n)]

    seed = list(initial) if initial else _greedy_seed(g)
    if initial and not IndependentSetWitness(seed, len(seed)).verify(g):
        seed = _greedy_seed(g)  # ignore a bad warm start rather than trust it
    best = {"size": len(seed), "set": list(seed)}
    budget = _Budget(node_budget)

    if n + 16 > sys.getrecursionlimit():
        sys.setrecursionlimit(n + 1000)

    def expand(r_list: list[int], p_mask: int):
        budget.spend()
        # greedy coloring of p_mask in the complement graph: each color class
        # is complement-independent, so any clique meets it at most once
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        p = p_mask
        while p:
            color += 1
            q = p
            while q:
                lsb = q & -q
                v = lsb.bit_length() - 1
                q &= ~(comp[v] | lsb)
                p ^= lsb
                order.append(v)
                bounds.append(color)
        sub = p_mask
        for i in range(len(order) - 1, -1, -1):
            if len(r_list) + bounds[i] <= best["size"]:
                return
            v = order[i]
            r_list.append(v)
            new_p = sub & comp[v]
            if new_p:
                expand(r_list, new_p)
            elif len(r_list) > best["size"]:
                best["size"] = len(r_list)
                best["set"] = list(r_list)
            r_list.pop()
            sub &= ~(1 << v)

    try:
        expand([], full)
    except _OutOfNodes:
        witness = IndependentSetWitness(sorted(best["set"]), best["size"])
        raise BudgetError(
            f"alpha node budget {node_budget} exhausted; best found {best['size']}",
            partial=witness,
            used=budget.used,
            reason="node budget",
        ) from None
    witness = IndependentSetWitness(sorted(best["set"]), best["size"])
    return witness, budget.used


def alpha(
    g: Graph,
    node_budget: int | None = None,
    max_vertices: int = DEFAULT_VERTEX_CAP,
) -> IndependentSetWitness:
    """Maximum independent set with a verified witness."""
    if g.n > max_vertices:
        raise BudgetError(
            f"alpha solver capped at {max_vertices} vertices, got {g.n}",
            reason="vertex budget",
        )
    witness, _ = solve_alpha(g, node_budget)
    return witness


def ladder(
    g: Graph,
    m_max: int,
    node_budget: int | None = None,
    max_power_vertices: int | None = None,
) -> list[LadderValue]:
    """Ladder levels 0..m_max: alpha(g^(2^m))^(1/2^m), nondecreasing in m.

    The node budget is a shared pool across levels.  On exhaustion the
    BudgetError carries the levels already certified.
    """
    if m_max < 0:
        raise InputError("ladder level must be nonnegative")
    cap = vertex_budget(max_power_vertices)
    values: list[LadderValue] = []
    power = g
    prev_witness: list[int] | None = None
    pool = node_budget
    for m in range(m_max + 1):
        if m > 0:
            try:
                power = strong_product(power, power, cap)
            except BudgetError as e:
                raise BudgetError(
                    f"ladder stopped before level {m}: {e}",
                    partial=values,
                    reason="vertex budget",
                ) from None
            if prev_witness is not None:
                side = math.isqrt(power.n)
                prev_witness = [
                    u * side + v for u in prev_witness for v in prev_witness
                ]
        try:
            witness, used = solve_alpha(power, pool, initial=prev_witness)
        except BudgetError as e:
            raise BudgetError(
                f"ladder stopped at level {m}: {e}",
                partial=values,
                used=e.used,
                reason=e.reason,
            ) from None
        if pool is not None:
            pool -= used
            if pool < 0:
                pool = 0
        prev_witness = witness.vertices
        values.append(
            LadderValue(m=m, alpha_value=witness.size, root=creal.root_pow2(witness.size, m))
        )
    return values


def capacity_lower_bound(
    g: Graph,
    m: int,
    node_budget: int | None = None,
    max_power_vertices: int | None = None,
) -> creal.CReal:
    """The level-m ladder value as a computable real lower bound."""
    return ladder(g, m, node_budget, max_power_vertices)[m].root
