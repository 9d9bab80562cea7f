"""Cohomomorphism preorder on graphs and its asymptotic relaxation.

g is below h when a graph homomorphism maps complement(g) into
complement(h): non-adjacent distinct vertices of g must stay distinct and
non-adjacent in h.  The search is exhaustive backtracking with forward
checking, so a refusal is a proof of nonexistence (within the configured
budgets, which raise instead of guessing).

On top of the one-shot order sit the slack-power test
    g^n  <=  edgeless(2^k) ⊠ h^n      (with the rate condition k·m <= n)
and a bounded search over (n, k) witnessing the asymptotic relation for a
given slack denominator m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .alpha import alpha, solve_alpha
from .errors import BudgetError, InputError
from .graphs import (
    Graph,
    complement,
    disjoint_union,
    edgeless_graph,
    encode,
    single_vertex,
    strong_power,
    strong_product,
)

LEQ_MAX_VERTICES = 12
TEST_F_POWER_CAP = 512
TEST_F_NODE_BUDGET = 2_000_000


@dataclass
class HomWitness:
    """Outcome of a homomorphism search between graph complements.

    mapping is indexed by source-complement vertex; None means the search
    exhausted every assignment, which refutes the relation.
    """

    source: Graph  # complement of the left graph
    target: Graph  # complement of the right graph
    mapping: tuple[int, ...] | None
    nodes_used: int = 0

    @property
    def established(self) -> bool:
        return self.mapping is not None

    def verify(self) -> bool:
        if self.mapping is None:
            return False
        if len(self.mapping) != self.source.n:
            return False
        if any(not 0 <= t < self.target.n for t in self.mapping):
            return False
        return all(
            self.target.has_edge(self.mapping[u], self.mapping[v])
            for u, v in self.source.edges()
        )


def _hom_search(
    src: Graph, dst: Graph, node_budget: int | None
) -> tuple[tuple[int, ...] | None, int]:
    """Find a homomorphism src -> dst (edges to edges) or prove none exists."""
    ns, nt = src.n, dst.n
    if ns == 0:
        return (), 0
    if nt == 0:
        return None, 0
    # assign high-degree source vertices first; try low-degree targets first
    order = sorted(range(ns), key=lambda v: -src.degree(v))
    position = [0] * ns
    for i, v in enumerate(order):
        position[v] = i
    targets_by_degree = sorted(range(nt), key=dst.degree)
    full = (1 << nt) - 1
    domains = [full] * ns
    mapping = [-1] * ns
    # images of a clique are pairwise distinct, so force them ascending
    clique_source = all(src.degree(v) == ns - 1 for v in range(ns))
    nodes = 0

    def assign(i: int) -> bool:
        nonlocal nodes
        if i == ns:
            return True
        v = order[i]
        cand = domains[v]
        if clique_source and i > 0:
            prev = mapping[order[i - 1]]
            cand &= full << (prev + 1) if prev + 1 < nt else 0
        for t in targets_by_degree:
            if not cand >> t & 1:
                continue
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise BudgetError(
                    "homomorphism search exceeded node budget",
                    used=nodes,
                    reason="node budget",
                )
            mapping[v] = t
            saved: list[tuple[int, int]] = []
            ok = True
            nbrs = src.masks[v]
            while nbrs:
                lsb = nbrs & -nbrs
                w = lsb.bit_length() - 1
                nbrs ^= lsb
                if mapping[w] < 0:
                    saved.append((w, domains[w]))
                    domains[w] &= dst.masks[t]
                    if domains[w] == 0:
                        ok = False
                        break
            if ok and assign(i + 1):
                return True
            for w, old in saved:
                domains[w] = old
            mapping[v] = -1
        return False

    if assign(0):
        return tuple(mapping), nodes
    return None, nodes


def leq(
    g: Graph,
    h: Graph,
    max_vertices: int = LEQ_MAX_VERTICES,
    node_budget: int | None = None,
) -> HomWitness:
    """Decide the cohomomorphism order g <= h by exhaustive search."""
    if g.n > max_vertices or h.n > max_vertices:
        raise BudgetError(
            f"order test capped at {max_vertices} vertices, "
            f"got {g.n} and {h.n}",
            reason="vertex budget",
        )
    src = complement(g)
    dst = complement(h)
    if g.n > 0 and g.edge_count() == 0:
        # edgeless g makes the source a clique, so the question is exactly
        # whether h has an independent set of size g.n; the bounded
        # branch-and-bound solver answers that far faster than plain
        # backtracking and is equally exhaustive
        witness, nodes = solve_alpha(h, node_budget)
        mapping = (
            tuple(sorted(witness.vertices)[: g.n]) if witness.size >= g.n else None
        )
        return HomWitness(source=src, target=dst, mapping=mapping, nodes_used=nodes)
    mapping, nodes = _hom_search(src, dst, node_budget)
    return HomWitness(source=src, target=dst, mapping=mapping, nodes_used=nodes)


def test_F(
    g: Graph,
    h: Graph,
    m: int,
    n: int,
    k: int,
    power_cap: int = TEST_F_POWER_CAP,
    node_budget: int | None = TEST_F_NODE_BUDGET,
) -> int:
    """Slack-power comparison: 1 iff k·m <= n and g^n <= edgeless(2^k) ⊠ h^n."""
    if m < 0 or n < 0 or k < 0:
        raise InputError("slack test arguments must be nonnegative")
    if k * m > n:
        return 0
    if n == 0:
        gp = single_vertex()
        hp = single_vertex()
    else:
        gp = strong_power(g, n, power_cap)
        hp = strong_power(h, n, power_cap)
    target = strong_product(edgeless_graph(1 << k), hp, power_cap)
    witness = leq(gp, target, max_vertices=max(gp.n, target.n, 1), node_budget=node_budget)
    return 1 if witness.established else 0


ESTABLISHED = "Established"
INCONCLUSIVE = "Inconclusive"


@dataclass
class AsymptoticOutcome:
    status: str
    n: int | None
    k: int | None
    tests_used: int
    frontier: list[tuple[int, int]] = field(default_factory=list)

    @property
    def established(self) -> bool:
        return self.status == ESTABLISHED


def asymptotic_leq_bounded(
    g: Graph,
    h: Graph,
    m: int,
    search_budget: int = 32,
    power_cap: int = TEST_F_POWER_CAP,
    node_budget: int | None = TEST_F_NODE_BUDGET,
) -> AsymptoticOutcome:
    """Search (n, k) with k·m <= n witnessing the asymptotic relation.

    Established is a certificate; Inconclusive is NOT a refutation — the
    relation is only semi-decidable, and the frontier of attempted pairs
    is returned so callers can resume with a larger budget.
    """
    if m < 1:
        raise InputError("slack denominator must be at least 1")
    if search_budget < 1:
        raise InputError("search budget must be positive")
    tests = 0
    frontier: list[tuple[int, int]] = []
    n = 0
    while tests < search_budget:
        n += 1
        for k in range(n // m + 1):
            if tests >= search_budget:
                break
            tests += 1
            frontier.append((n, k))
            try:
                fired = test_F(g, h, m, n, k, power_cap, node_budget)
            except BudgetError:
                continue
            if fired:
                return AsymptoticOutcome(ESTABLISHED, n, k, tests, frontier)
    return AsymptoticOutcome(INCONCLUSIVE, None, None, tests, frontier)


@dataclass
class AxiomCheck:
    law: str
    subject: str
    holds: bool
    detail: str = ""


@dataclass
class AxiomReport:
    checks: list[AxiomCheck] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.holds]

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, law: str, subject: str, holds: bool, detail: str = ""):
        self.checks.append(AxiomCheck(law, subject, holds, detail))


def _label(*graphs: Graph) -> str:
    return ",".join(str(encode(x)) for x in graphs)


def strassen_axiom_suite(
    sample: Sequence[tuple[Graph, ...]],
    embed_max: int = 5,
    max_vertices: int = LEQ_MAX_VERTICES,
    node_budget: int | None = None,
) -> AxiomReport:
    """Check the preorder laws on a sample of graph pairs and triples.

    Pairs (g, h) are checked for reflexivity, alpha-monotonicity of an
    established order, and the existence of r with g <= edgeless(r) ⊠ h
    whenever h has a vertex.  Triples (a, b, c) are checked for
    transitivity.  Consecutive established pairs are combined to check
    that disjoint union and strong product respect the order.  The
    counting-order law — edgeless(i) <= edgeless(j) iff i <= j — is
    checked exhaustively up to embed_max.
    """
    report = AxiomReport()

    def related(x: Graph, y: Graph) -> bool | None:
        try:
            return leq(x, y, max_vertices, node_budget).established
        except BudgetError as e:
            report.skipped.append(f"{_label(x, y)}: {e}")
            return None

    for i in range(embed_max + 1):
        for j in range(embed_max + 1):
            got = related(edgeless_graph(i), edgeless_graph(j))
            if got is None:
                continue
            report.add(
                "counting-order",
                f"edgeless {i} vs {j}",
                got == (i <= j),
                f"expected {i <= j}, got {got}",
            )

    established_pairs: list[tuple[Graph, Graph]] = []
    for item in sample:
        if len(item) == 2:
            g, h = item
            for x in (g, h):
                got = related(x, x)
                if got is not None:
                    report.add("reflexivity", _label(x), bool(got))
            got = related(g, h)
            if got is None:
                continue
            if got:
                established_pairs.append((g, h))
                a_g = alpha(g).size
                a_h = alpha(h).size
                report.add(
                    "alpha-monotonicity",
                    _label(g, h),
                    a_g <= a_h,
                    f"alpha {a_g} vs {a_h}",
                )
            if h.n > 0:
                r = next(
                    (
                        r
                        for r in range(1, g.n + 2)
                        if related(g, strong_product(edgeless_graph(r), h))
                    ),
                    None,
                )
                report.add(
                    "scaling-witness",
                    _label(g, h),
                    r is not None,
                    f"r={r}",
                )
        elif len(item) == 3:
            a, b, c = item
            ab = related(a, b)
            bc = related(b, c)
            if ab and bc:
                ac = related(a, c)
                if ac is not None:
                    report.add("transitivity", _label(a, b, c), bool(ac))

    for (a, b), (c, d) in zip(established_pairs, established_pairs[1:]):
        got = related(disjoint_union(a, c), disjoint_union(b, d))
        if got is not None:
            report.add("union-monotone", _label(a, b, c, d), bool(got))
        got = related(strong_product(a, c), strong_product(b, d))
        if got is not None:
            report.add("product-monotone", _label(a, b, c, d), bool(got))

    return report
