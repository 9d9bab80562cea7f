"""Shared fixtures and independent brute-force oracles.

The oracles here recompute answers by definition-level enumeration —
subsets for independence numbers, all vertex maps for homomorphisms —
so the optimized solvers are always checked against something that
cannot share their bugs.
"""

import itertools
import random
from fractions import Fraction

import pytest

from zecap import Graph, Channel, cycle_graph


def brute_alpha(g: Graph) -> int:
    """Independence number by scanning every vertex subset."""
    best = 0
    for mask in range(1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all(
            not (g.masks[v] & mask)
            for v in range(g.n)
            if mask >> v & 1
        ):
            best = size
    return best


def brute_hom_exists(src: Graph, dst: Graph) -> bool:
    """Edge-preserving map existence by trying every function."""
    if src.n == 0:
        return True
    if dst.n == 0:
        return False
    edges = src.edges()
    return any(
        all(dst.has_edge(f[u], f[v]) for u, v in edges)
        for f in itertools.product(range(dst.n), repeat=src.n)
    )


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


@pytest.fixture
def pentagon() -> Graph:
    return cycle_graph(5)


def make_pentagon_channel() -> Channel:
    half = Fraction(1, 2)
    rows = tuple(
        tuple(half if y in (x, (x + 1) % 5) else Fraction(0) for y in range(5))
        for x in range(5)
    )
    return Channel(5, 5, rows)


def make_bsc(p: Fraction) -> Channel:
    return Channel(2, 2, ((1 - p, p), (p, 1 - p)))


@pytest.fixture
def pentagon_channel() -> Channel:
    return make_pentagon_channel()


@pytest.fixture
def bsc() -> Channel:
    return make_bsc(Fraction(1, 10))
