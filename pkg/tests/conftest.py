"""Shared test helpers: seeded random graphs and family inventories."""

from __future__ import annotations

import random

from mincw import FamilySpec, Graph, build_family, is_connected


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.15, 0.85)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if is_connected(g):
            return g


def family_graphs_up_to(max_n: int):
    """(spec, graph) for every family instance on at most max_n vertices."""
    out = []
    for n in range(1, max_n + 1):
        out.append(FamilySpec("complete", (n,)))
        out.append(FamilySpec("path", (n,)))
        out.append(FamilySpec("edgeless", (n,)))
        if n >= 3:
            out.append(FamilySpec("cycle", (n,)))
    for a in range(1, max_n):
        for b in range(a, max_n + 1 - a):
            out.append(FamilySpec("bipartite", (a, b)))
        for b in range(a, max_n - 1 - a):
            out.append(FamilySpec("doublestar", (a, b)))
    out.append(FamilySpec("multipartite", (2, 1, 1)))
    if max_n >= 6:
        out.append(FamilySpec("multipartite", (2, 2, 1)))
        out.append(FamilySpec("multipartite", (2, 2, 2)))
        out.append(FamilySpec("multipartite", (3, 2, 1)))
    return [(spec, build_family(spec)) for spec in out if spec.order <= max_n]
