"""Labeled simple graphs: integer numbering, semiring operations, isomorphism.

Graphs are labeled (vertex names matter, no canonicalization) and live on
vertices 0..n-1.  Adjacency is kept as one Python-int bitmask per vertex,
which makes the set algebra used by the solvers cheap.

The numbering maps every finite labeled graph to a distinct nonnegative
integer: all graphs on fewer vertices come first, and within a fixed vertex
count the upper-triangular adjacency bits (pair (0,1) first, row-major) are
read as a binary numeral, most significant bit first.
"""

from __future__ import annotations

import math
import os

from .errors import BudgetError, InputError

DEFAULT_MAX_VERTICES = 1 << 20
ENV_MAX_VERTICES = "ZW_MAX_VERTICES"


def vertex_budget(override: int | None = None) -> int:
    """Effective cap on vertex counts for product/power construction."""
    if override is not None:
        if override < 1:
            raise InputError("vertex budget must be positive")
        return override
    raw = os.environ.get(ENV_MAX_VERTICES)
    if raw is None:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{ENV_MAX_VERTICES} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"{ENV_MAX_VERTICES} must be positive")
    return value


class Graph:
    """Immutable simple graph with bitmask adjacency.

    ``masks[v]`` has bit ``u`` set iff ``{u, v}`` is an edge.  Constructors
    are expected to hand in symmetric, loop-free masks; the cheap invariants
    are checked here, symmetry is the builder's job (see ``from_edges``).
    """

    __slots__ = ("n", "masks", "_hash")

    def __init__(self, n: int, masks: tuple[int, ...]):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(masks) != n:
            raise InputError("adjacency mask count must equal vertex count")
        for v, m in enumerate(masks):
            if m < 0 or m >> n:
                raise InputError(f"vertex {v} mask references vertices outside 0..{n - 1}")
            if m & (1 << v):
                raise InputError(f"vertex {v} has a loop")
        self.n = n
        self.masks = tuple(masks)
        self._hash = hash((n, self.masks))

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise InputError(f"loop at vertex {u} rejected")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(n, tuple(masks))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            m = self.masks[v] >> (v + 1)
            u = v + 1
            while m:
                if m & 1:
                    out.append((v, u))
                m >>= 1
                u += 1
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def is_symmetric(self) -> bool:
        return all(
            (self.masks[u] >> v & 1) == (self.masks[v] >> u & 1)
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# numbering


def index_offset(n: int) -> int:
    """First numbering index occupied by graphs on exactly n vertices."""
    return sum(1 << ((j * j - j) // 2) for j in range(n))


def encode(g: Graph) -> int:
    """Numbering index of a labeled graph (arbitrary precision)."""
    value = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            value = (value << 1) | (g.masks[u] >> v & 1)
    return index_offset(g.n) + value


def decode(index: int) -> Graph:
    """Inverse of ``encode``: the labeled graph at a numbering index."""
    if index < 0:
        raise InputError("graph index must be nonnegative")
    n = 0
    while index_offset(n + 1) <= index:
        n += 1
    value = index - index_offset(n)
    nbits = (n * n - n) // 2
    masks = [0] * n
    pos = nbits - 1  # pair (0,1) holds the most significant bit
    for u in range(n):
        for v in range(u + 1, n):
            if value >> pos & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            pos -= 1
    return Graph(n, tuple(masks))


# ---------------------------------------------------------------------------
# constructors


def edgeless_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    """Cycle on 0..n-1 with edges {v, v+1 mod n}; degenerates for n <= 2."""
    if n < 1:
        raise InputError("cycle needs at least one vertex")
    edges = set()
    for v in range(n):
        u = (v + 1) % n
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def single_vertex() -> Graph:
    return edgeless_graph(1)


# ---------------------------------------------------------------------------
# semiring operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ (1 << v) ^ g.masks[v] for v in range(g.n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Graph sum: h's vertices are shifted above g's."""
    masks = g.masks + tuple(m << g.n for m in h.masks)
    return Graph(g.n + h.n, masks)


def strong_product(g: Graph, h: Graph, max_vertices: int | None = None) -> Graph:
    """Strong graph product; vertex (a, b) gets index a * h.n + b."""
    cap = vertex_budget(max_vertices)
    if g.n * h.n > cap:
        raise BudgetError(
            f"strong product needs {g.n * h.n} vertices, budget is {cap}",
            reason="vertex budget",
        )
    nh = h.n
    closed_h = [h.masks[b] | (1 << b) for b in range(nh)]
    masks = []
    for a in range(g.n):
        # every closed g-neighbor a' contributes a block at bit offset a'*nh
        pattern = 1 << (a * nh)
        m = g.masks[a]
        while m:
            lsb = m & -m
            pattern |= 1 << ((lsb.bit_length() - 1) * nh)
            m ^= lsb
        for b in range(nh):
            row = pattern * closed_h[b]
            row ^= 1 << (a * nh + b)  # drop the vertex itself
            masks.append(row)
    return Graph(g.n * nh, tuple(masks))


def strong_power(g: Graph, n: int, max_vertices: int | None = None) -> Graph:
    """n-fold strong product of g with itself (n >= 1)."""
    if n < 1:
        raise InputError("strong power exponent must be >= 1")
    cap = vertex_budget(max_vertices)
    if g.n >= 2:
        if n * math.log2(g.n) > math.log2(cap) + 1e-12 or g.n ** n > cap:
            raise BudgetError(
                f"strong power needs {g.n}^{n} vertices, budget is {cap}",
                reason="vertex budget",
            )
    if g.n <= 1:
        return g  # powers of the empty graph / a single vertex are themselves
    result = None
    base = g
    e = n
    while e:
        if e & 1:
            result = base if result is None else strong_product(result, base, cap)
        e >>= 1
        if e:
            base = strong_product(base, base, cap)
    return result


def power_fits(n_vertices: int, exponent: int, cap: int) -> bool:
    """Whether an n_vertices^exponent strong power stays within cap."""
    if n_vertices <= 1:
        return True
    if exponent * math.log2(n_vertices) > math.log2(cap) + 1e-12:
        return False
    return n_vertices ** exponent <= cap


# ---------------------------------------------------------------------------
# isomorphism

ISO_MAX_VERTICES = 10


def is_isomorphic(g: Graph, h: Graph, max_vertices: int = ISO_MAX_VERTICES) -> bool:
    """Exact isomorphism test by backtracking; meant for small graphs."""
    if g.n != h.n:
        return False
    if g.edge_count() != h.edge_count():
        return False
    gdeg = [g.degree(v) for v in range(g.n)]
    hdeg = [h.degree(v) for v in range(h.n)]
    if sorted(gdeg) != sorted(hdeg):
        return False
    if g.n > max_vertices:
        raise BudgetError(
            f"isomorphism search capped at {max_vertices} vertices, got {g.n}",
            reason="vertex budget",
        )
    order = sorted(range(g.n), key=lambda v: -gdeg[v])
    image = [-1] * g.n
    used = [False] * h.n

    def assign(pos: int) -> bool:
        if pos == g.n:
            return True
        s = order[pos]
        for t in range(h.n):
            if used[t] or hdeg[t] != gdeg[s]:
                continue
            ok = True
            for prev in order[:pos]:
                if (g.masks[s] >> prev & 1) != (h.masks[t] >> image[prev] & 1):
                    ok = False
                    break
            if ok:
                image[s] = t
                used[t] = True
                if assign(pos + 1):
                    return True
                used[t] = False
                image[s] = -1
        return False

    return assign(0)


# ---------------------------------------------------------------------------
# text formats


def graph_to_bitstring(g: Graph) -> str:
    nbits = (g.n * g.n - g.n) // 2
    bits = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            bits.append("1" if g.masks[u] >> v & 1 else "0")
    assert len(bits) == nbits
    return f"{g.n}:{''.join(bits)}"


def graph_from_bitstring(text: str) -> Graph:
    head, sep, bits = text.partition(":")
    if not sep:
        raise InputError(f"bit-string graph must look like 'n:0101', got {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise InputError(f"bad vertex count in {text!r}") from None
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    nbits = (n * n - n) // 2
    if len(bits) != nbits or any(c not in "01" for c in bits):
        raise InputError(
            f"bit-string for {n} vertices needs exactly {nbits} bits of 0/1, got {bits!r}"
        )
    masks = [0] * n
    pos = 0
    for u in range(n):
        for v in range(u + 1, n):
            if bits[pos] == "1":
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            pos += 1
    return Graph(n, tuple(masks))


def graph_from_edgetext(text: str) -> Graph:
    """Parse 'n; u-v,u-v,...' (edges may be empty: 'n;')."""
    head, sep, body = text.partition(";")
    if not sep:
        raise InputError(f"edge-list graph must look like 'n; 0-1,1-2', got {text!r}")
    try:
        n = int(head.strip())
    except ValueError:
        raise InputError(f"bad vertex count in {text!r}") from None
    edges = []
    body = body.strip()
    if body:
        for item in body.split(","):
            part = item.strip()
            u, sep2, v = part.partition("-")
            if not sep2:
                raise InputError(f"bad edge {part!r}; expected 'u-v'")
            try:
                edges.append((int(u), int(v)))
            except ValueError:
                raise InputError(f"bad edge {part!r}; endpoints must be integers") from None
    return Graph.from_edges(n, edges)
