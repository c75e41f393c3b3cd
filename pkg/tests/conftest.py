"""Shared test helpers: brute-force oracles and random graph generation."""

from __future__ import annotations

import itertools
import random

from turanlab.graphs import Graph


def rand_graph(rng: random.Random, nmax: int, nmin: int = 1, p: float = 0.5) -> Graph:
    n = rng.randint(nmin, nmax)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def brute_labeled_copies(h: Graph, g: Graph) -> int:
    """Independent oracle: enumerate injections directly."""
    count = 0
    for images in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(images[u], images[v]) for u, v in h.edges()):
            count += 1
    return count


def brute_homomorphisms(h: Graph, g: Graph) -> list[tuple[int, ...]]:
    """Independent oracle: enumerate all |V(g)|^|V(h)| maps."""
    out = []
    for images in itertools.product(range(g.n), repeat=h.n):
        if all(g.has_edge(images[u], images[v]) for u, v in h.edges()):
            out.append(images)
    return out


def are_isomorphic(a: Graph, b: Graph) -> bool:
    """Permutation search; fine for the tiny graphs used in tests."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    for pi in itertools.permutations(range(a.n)):
        if all(b.has_edge(pi[u], pi[v]) for u, v in a.edges()):
            if sum(1 for _ in a.edges()) == sum(1 for _ in b.edges()):
                return True
    return False
