"""Shared corpus and independent oracles for the test suite.

The oracles here deliberately re-derive everything from definitions (full
subset scans, brute-force colorings) so the package's engines are checked
against code that shares nothing with them.
"""

from __future__ import annotations

import random
from itertools import combinations

from atlab import (
    Graph,
    Orientation,
    cartesian_product,
    complete,
    complete_bipartite,
    corona,
    cycle,
    hypercube,
    orient,
    path,
    star,
    tree_from_pruefer,
)


def corpus() -> list[tuple[str, Graph]]:
    """Deterministic instance zoo used by the cross-validation suites."""
    single = Graph(["0"], [])
    return [
        ("Q1", hypercube(1)),
        ("Q2", hypercube(2)),
        ("Q3", hypercube(3)),
        ("Q4", hypercube(4)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C7", cycle(7)),
        ("C8", cycle(8)),
        ("P1", path(1)),
        ("P2", path(2)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("P6", path(6)),
        ("S4", star(4)),
        ("S5", star(5)),
        ("S6", star(6)),
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K23", complete_bipartite(2, 3)),
        ("K33", complete_bipartite(3, 3)),
        ("T5", tree_from_pruefer((0, 1, 2))),
        ("T6", tree_from_pruefer((3, 3, 3, 0))),
        ("Q2xK2", cartesian_product(hypercube(2), complete(2))),
        ("K2xP3", cartesian_product(complete(2), path(3))),
        ("C3xC3", cartesian_product(cycle(3), cycle(3))),
        ("K2oK1", corona(complete(2), single)),
        ("C3oC3", corona(cycle(3), cycle(3))),
        ("Q2oP3", corona(hypercube(2), path(3))),
        ("C5+pendant", Graph([str(i) for i in range(6)],
                             [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])),
    ]


def naive_tally(d: Orientation) -> tuple[int, int]:
    """Even/odd Eulerian subdigraph counts straight from the definition."""
    arcs = d.arcs
    n = d.graph.n
    even = odd = 0
    for r in range(len(arcs) + 1):
        for sub in combinations(arcs, r):
            bal = [0] * n
            for t, h in sub:
                bal[t] += 1
                bal[h] -= 1
            if all(x == 0 for x in bal):
                if r % 2 == 0:
                    even += 1
                else:
                    odd += 1
    return even, odd


def naive_chromatic(g: Graph, k_max: int = 6) -> int:
    """Smallest k admitting a proper coloring, by raw backtracking."""
    n = g.n
    adj = g.adjacency

    def colorable(k: int) -> bool:
        colors = [-1] * n

        def rec(v: int) -> bool:
            if v == n:
                return True
            for c in range(k):
                if all(colors[u] != c for u in adj[v]):
                    colors[v] = c
                    if rec(v + 1):
                        return True
                    colors[v] = -1
            return False

        return rec(0)

    for k in range(1, k_max + 1):
        if colorable(k):
            return k
    raise AssertionError(f"not {k_max}-colorable")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph([str(i) for i in range(n)], edges)


def random_orientation(rng: random.Random, g: Graph) -> Orientation:
    return orient(g, [e[rng.randint(0, 1)] for e in g.edges])


def random_bipartite_graph(rng: random.Random, max_side: int, max_edges: int) -> Graph:
    a = rng.randint(1, max_side)
    b = rng.randint(1, max_side)
    all_pairs = [(i, a + j) for i in range(a) for j in range(b)]
    rng.shuffle(all_pairs)
    want = rng.randint(1, min(max_edges, len(all_pairs)))
    edges = sorted(all_pairs[:want])
    return Graph([str(i) for i in range(a + b)], edges)
