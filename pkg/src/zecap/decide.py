"""Budgeted semi-decision machinery for capacity threshold questions.

The primitive is a per-level test: level k compares the exact integer
alpha(g^(2^k)) against threshold approximants, firing exactly when

    alpha(g^(2^k)) - r(n)^(2^k)  >  L_k * 2^-n

with L_k = 2^k * (|r(1)| + 1)^(2^k - 1), a certified Lipschitz constant for
t -> t^(2^k) on the interval the approximants can reach.  A firing is an
exact rational certificate that the capacity exceeds the threshold; the
test never fires when it does not.

Levels are dovetailed on a triangular schedule (stage t runs one step of
each of levels 0..t-1), so every level gets unbounded attention if the
budget allows.  Everything is budgeted: dovetail steps, branch-and-bound
nodes per alpha solve, and strong-power vertex counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import creal
from .alpha import ladder as alpha_ladder, solve_alpha
from .errors import BudgetError, InputError
from .graphs import Graph, decode, encode, power_fits, strong_power
from .spectrum import fractional_clique_cover, lovasz_theta, sandwich

HALTED = "Halted"
BUDGET_EXHAUSTED = "BudgetExhausted"
VALUE = "Value"

DEFAULT_POWER_CAP = 512
DEFAULT_NODE_BUDGET = 20_000
DEFAULT_LEVEL_CAP = 6  # 2^6-th powers of approximants stay cheap
ENUM_POWER_CAP = 256


def lipschitz_constant(lam: creal.CReal, k: int) -> Fraction:
    """Certified |t^(2^k)| slope bound around the threshold approximants."""
    r1 = abs(lam.approx(1))
    return (1 << k) * (r1 + 1) ** ((1 << k) - 1)


@dataclass
class Certificate:
    """Exact arithmetic witnessing capacity > threshold at one level."""

    graph_index: int
    lambda_expr: str
    level: int
    precision: int
    alpha_power: int
    lhs: Fraction
    rhs: Fraction

    def verify(self, lam: creal.CReal) -> bool:
        r = lam.approx(self.precision)
        lhs = self.alpha_power - r ** (1 << self.level)
        rhs = lipschitz_constant(lam, self.level) * Fraction(1, 1 << self.precision)
        return lhs == self.lhs and rhs == self.rhs and lhs > rhs


@dataclass
class DecisionOutcome:
    status: str
    certificate: Certificate | None
    progress: dict[int, dict]
    steps_used: int
    log: list[tuple[int, int, int]] = field(default_factory=list)


class _LevelRun:
    """State of one level inside the dovetail."""

    __slots__ = ("level", "alpha_value", "stalled", "next_n", "lipschitz", "nodes_used")

    def __init__(self, level: int):
        self.level = level
        self.alpha_value: int | None = None
        self.stalled: str | None = None
        self.next_n = 1
        self.lipschitz: Fraction | None = None
        self.nodes_used = 0

    def step(
        self,
        g: Graph,
        lam: creal.CReal,
        lambda_expr: str,
        node_budget: int | None,
        power_cap: int,
        level_cap: int,
    ) -> Certificate | None:
        if self.stalled is not None:
            return None
        if self.alpha_value is None:
            if self.level > level_cap:
                self.stalled = "level cap"
                return None
            if not power_fits(g.n, 1 << self.level, power_cap):
                self.stalled = "vertex budget"
                return None
            try:
                power = strong_power(g, 1 << self.level, power_cap)
                witness, used = solve_alpha(power, node_budget)
            except BudgetError as e:
                self.stalled = str(e.reason)
                self.nodes_used = e.used or 0
                return None
            self.alpha_value = witness.size
            self.nodes_used = used
            self.lipschitz = lipschitz_constant(lam, self.level)
        n = self.next_n
        self.next_n += 1
        r = lam.approx(n)
        lhs = self.alpha_value - r ** (1 << self.level)
        rhs = self.lipschitz * Fraction(1, 1 << n)
        if lhs > rhs:
            return Certificate(
                graph_index=encode(g),
                lambda_expr=lambda_expr,
                level=self.level,
                precision=n,
                alpha_power=self.alpha_value,
                lhs=lhs,
                rhs=rhs,
            )
        return None

    def describe(self) -> dict:
        return {
            "alpha": self.alpha_value,
            "last_precision": self.next_n - 1,
            "stalled": self.stalled,
            "nodes_used": self.nodes_used,
        }


def semidecide_level(
    g: Graph,
    lam: creal.CReal,
    level: int,
    step_budget: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    power_cap: int = DEFAULT_POWER_CAP,
    level_cap: int = DEFAULT_LEVEL_CAP,
    lambda_expr: str = "",
) -> DecisionOutcome:
    """Run a single level for up to step_budget precision steps."""
    if level < 0:
        raise InputError("level must be nonnegative")
    if step_budget < 1:
        raise InputError("step budget must be positive")
    run = _LevelRun(level)
    expr = lambda_expr or lam.description
    for step in range(1, step_budget + 1):
        cert = run.step(g, lam, expr, node_budget, power_cap, level_cap)
        if cert is not None:
            return DecisionOutcome(HALTED, cert, {level: run.describe()}, step)
        if run.stalled is not None:
            return DecisionOutcome(BUDGET_EXHAUSTED, None, {level: run.describe()}, step)
    return DecisionOutcome(BUDGET_EXHAUSTED, None, {level: run.describe()}, step_budget)


def semidecide_gt(
    g: Graph,
    lam: creal.CReal,
    budget: int,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    power_cap: int = DEFAULT_POWER_CAP,
    level_cap: int = DEFAULT_LEVEL_CAP,
    lambda_expr: str = "",
) -> DecisionOutcome:
    """Dovetail all levels; Halted certifies capacity(g) > threshold.

    budget counts dovetail steps (one scheduled level-step each).  The
    triangular schedule guarantees that after t stages level k has run
    t - k steps, so no level starves.
    """
    if budget < 1:
        raise InputError("budget must be positive")
    expr = lambda_expr or lam.description
    runs: list[_LevelRun] = []
    steps_used = 0
    log: list[tuple[int, int, int]] = []
    stage = 0
    while steps_used < budget:
        stage += 1
        runs.append(_LevelRun(stage - 1))
        for run in runs[:stage]:
            if steps_used >= budget:
                break
            steps_used += 1
            cert = run.step(g, lam, expr, node_budget, power_cap, level_cap)
            log.append((stage, run.level, run.next_n - 1))
            if cert is not None:
                progress = {r.level: r.describe() for r in runs}
                return DecisionOutcome(HALTED, cert, progress, steps_used, log)
    progress = {r.level: r.describe() for r in runs}
    return DecisionOutcome(BUDGET_EXHAUSTED, None, progress, steps_used, log)


# ---------------------------------------------------------------------------
# enumeration


@dataclass
class EmittedGraph:
    slot: int  # position in the underlying graph schedule (1-based)
    graph_index: int
    certificate: Certificate


@dataclass
class EnumerationState:
    stage: int
    pending: list[int]  # schedule slots still undecided (1-based)
    emitted: list[EmittedGraph]

    def emitted_indices(self) -> list[int]:
        return [e.graph_index for e in self.emitted]


class _PendingGraph:
    __slots__ = ("slot", "graph", "alpha_cache", "max_level", "blocked_levels")

    def __init__(self, slot: int, graph: Graph, power_cap: int, level_cap: int):
        self.slot = slot
        self.graph = graph
        self.alpha_cache: dict[int, int] = {}
        self.blocked_levels: set[int] = set()
        lv = 0
        while lv + 1 <= level_cap and power_fits(graph.n, 1 << (lv + 1), power_cap):
            lv += 1
        self.max_level = lv


def enumerate_gt(
    lam: creal.CReal,
    graph_horizon: int,
    stage_budget: int,
    power_cap: int = ENUM_POWER_CAP,
    node_budget: int | None = 200_000,
    level_cap: int = DEFAULT_LEVEL_CAP,
    lambda_expr: str = "",
) -> EnumerationState:
    """Staged enumeration of graphs whose capacity exceeds the threshold.

    Stage k admits the k-th graph of the numbering (slot k holds index
    k-1) and gives every pending slot j one test at level min(k-j+1, cap)
    and precision k-j+1.  A graph is emitted, with its certificate, the
    first time a test fires; graphs needing levels beyond the vertex
    budget simply stay pending.
    """
    if graph_horizon < 0:
        raise InputError("graph horizon must be nonnegative")
    if stage_budget < 0:
        raise InputError("stage budget must be nonnegative")
    expr = lambda_expr or lam.description
    pending: dict[int, _PendingGraph] = {}
    emitted: list[EmittedGraph] = []
    lipschitz: dict[int, Fraction] = {}
    stage = 0
    for stage in range(1, stage_budget + 1):
        if stage <= graph_horizon:
            pending[stage] = _PendingGraph(stage, decode(stage - 1), power_cap, level_cap)
        for slot in sorted(pending):
            item = pending[slot]
            age = stage - slot + 1
            level = min(age, item.max_level)
            while level > 0 and level in item.blocked_levels:
                level -= 1
            alpha_value = item.alpha_cache.get(level)
            if alpha_value is None:
                try:
                    power = strong_power(item.graph, 1 << level, power_cap)
                    witness, _ = solve_alpha(power, node_budget)
                    alpha_value = witness.size
                    item.alpha_cache[level] = alpha_value
                except BudgetError:
                    item.blocked_levels.add(level)
                    continue
            const = lipschitz.get(level)
            if const is None:
                const = lipschitz_constant(lam, level)
                lipschitz[level] = const
            r = lam.approx(age)
            lhs = alpha_value - r ** (1 << level)
            rhs = const * Fraction(1, 1 << age)
            if lhs > rhs:
                emitted.append(
                    EmittedGraph(
                        slot=slot,
                        graph_index=slot - 1,
                        certificate=Certificate(
                            graph_index=slot - 1,
                            lambda_expr=expr,
                            level=level,
                            precision=age,
                            alpha_power=alpha_value,
                            lhs=lhs,
                            rhs=rhs,
                        ),
                    )
                )
                del pending[slot]
    return EnumerationState(stage=stage, pending=sorted(pending), emitted=emitted)


# ---------------------------------------------------------------------------
# grid localization


@dataclass
class GridCell:
    """Dyadic cells of side 2^-M that certifiably contain the capacity."""

    resolution: int
    cells: list[int]
    lower: Fraction
    upper: Fraction


def _cell_of(x: Fraction, m_res: int) -> int:
    # value v lands in cell k when k/2^M < v <= (k+1)/2^M; 0 goes to cell 0
    return max(0, math.ceil(x * (1 << m_res)) - 1)


def locate_grid(
    g: Graph,
    resolution: int,
    tol=Fraction(1, 10**4),
    m_max: int = 1,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
) -> GridCell:
    """Locate the capacity among the 2^(2M) dyadic cells at resolution M."""
    if resolution < 0:
        raise InputError("resolution must be nonnegative")
    if (1 << resolution) < g.n:
        raise InputError(
            f"resolution 2^{resolution} cannot cover a graph on {g.n} vertices"
        )
    report = sandwich(g, m_max, tol, node_budget=node_budget)
    lower = report.lower
    upper = report.upper if report.upper is not None else Fraction(g.n)
    upper = min(upper, Fraction(g.n)) if g.n else Fraction(0)
    last = (1 << (2 * resolution)) - 1
    first_cell = min(_cell_of(lower, resolution), last)
    last_cell = min(_cell_of(upper, resolution), last)
    return GridCell(
        resolution=resolution,
        cells=list(range(first_cell, last_cell + 1)),
        lower=lower,
        upper=upper,
    )


# ---------------------------------------------------------------------------
# interval squeeze


@dataclass
class SqueezeResult:
    status: str
    lower: Fraction
    upper: Fraction
    rounds_used: int

    def width(self) -> Fraction:
        return self.upper - self.lower


def squeeze_capacity(
    g: Graph,
    k_bits: int,
    budget: int = 16,
    node_budget: int | None = DEFAULT_NODE_BUDGET,
    power_cap: int = DEFAULT_POWER_CAP,
) -> SqueezeResult:
    """Shrink a certified capacity interval below width 2^-k_bits.

    Alternates ladder refinements with upper-bound refinements (exact
    clique cover first, then theta at shrinking tolerances).  The interval
    is monotone in the budget: more rounds only ever shrink it.
    """
    if k_bits < 0:
        raise InputError("width exponent must be nonnegative")
    if budget < 1:
        raise InputError("budget must be positive")
    target = Fraction(1, 1 << k_bits)
    lower = Fraction(0)
    upper = Fraction(g.n)
    precision = k_bits + 4

    rounds = 0
    theta_tol = Fraction(1, 1 << (k_bits + 2))
    plan: list[tuple[str, object]] = [("ladder", 0), ("cover", None), ("theta", theta_tol)]
    next_level = 1
    while rounds < budget:
        if upper - lower < target:
            return SqueezeResult(VALUE, lower, upper, rounds)
        if not plan:
            if power_fits(g.n, 1 << next_level, power_cap):
                plan.append(("ladder", next_level))
                next_level += 1
            theta_tol = theta_tol / 4
            plan.append(("theta", theta_tol))
        action, arg = plan.pop(0)
        rounds += 1
        try:
            if action == "ladder":
                steps = alpha_ladder(g, int(arg), node_budget, power_cap)
                cand = steps[-1].root.lower_bound(precision)
                lower = max(lower, cand)
            elif action == "cover":
                cover = fractional_clique_cover(g)
                upper = min(upper, cover.hi)
            elif action == "theta" and g.n > 0:
                bound = lovasz_theta(g, arg)
                upper = min(upper, bound.hi)
        except Exception:
            continue  # a failed refinement leaves the interval as it was
    status = VALUE if upper - lower < target else BUDGET_EXHAUSTED
    return SqueezeResult(status, lower, upper, rounds)
