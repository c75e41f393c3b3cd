"""Small simple undirected graphs over bitset adjacency rows.

Graphs are immutable after construction and every function here is pure,
so everything is safe to share across threads.  Vertex counts are capped
at MAX_VERTICES (default 64, one machine word per adjacency row); hosts
larger than that are only ever represented implicitly as weighted
patterns, never materialized.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import VertexLimitError

#: Hard cap on materialized graph order.  Monkeypatch for experiments that
#: genuinely need more; every constructor checks against it explicitly.
MAX_VERTICES = 64

INFINITE = math.inf


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise VertexLimitError(
            f"graph on {n} vertices exceeds the limit of {MAX_VERTICES}"
        )


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        """Build from raw adjacency rows (must already be symmetric)."""
        g = cls.__new__(cls)
        _check_order(len(adj))
        g.n = len(adj)
        g.adj = tuple(adj)
        for u in range(g.n):
            if g.adj[u] & (1 << u):
                raise ValueError(f"self-loop at vertex {u}")
            if g.adj[u] >> g.n:
                raise ValueError(f"adjacency row {u} has bits beyond n={g.n}")
        for u in range(g.n):
            for v in _bits(g.adj[u]):
                if not g.adj[v] & (1 << u):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for v in _bits(rest):
                yield (u, u + 1 + v)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """New graph with vertex i renamed perm[i]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    return list(_bits(mask))


# ---------------------------------------------------------------------------
# standard constructors


def path(r: int) -> Graph:
    """P_r: vertices 0..r-1, edges between consecutive indices."""
    if r < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def cycle(r: int) -> Graph:
    """C_r for r >= 3."""
    if r < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(r, [(i, (i + 1) % r) for i in range(r)])


def complete(r: int) -> Graph:
    """K_r."""
    if r < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(r, [(i, j) for i in range(r) for j in range(i + 1, r)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; edges exactly between distinct parts."""
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    _check_order(n)
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    edges = []
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            for u in range(offsets[a], offsets[a + 1]):
                for v in range(offsets[b], offsets[b + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


def turan(n: int, r: int) -> Graph:
    """Turan graph T_r(n): complete r-partite, part sizes differing by <= 1."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    q, s = divmod(n, r)
    return complete_multipartite([q + 1] * s + [q] * (r - s))


def petersen() -> Graph:
    """The Petersen graph: outer C_5, inner pentagram, five spokes."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


# ---------------------------------------------------------------------------
# derived constructions


def power(h: Graph, k: int) -> Graph:
    """k-th power: same vertices, edges between pairs at distance 1..k in h.

    Vertices in different components of h are never joined; k=0 gives the
    edgeless graph.
    """
    if k < 0:
        raise ValueError("power exponent must be non-negative")
    edges = []
    for src in range(h.n):
        dist = _bfs_dist(h, src)
        for v in range(src + 1, h.n):
            if 0 < dist[v] <= k:
                edges.append((src, v))
    return Graph(h.n, edges)


def blowup(pattern: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex v of the pattern by an independent set of sizes[v]
    vertices; new vertices are adjacent iff their originals are."""
    if len(sizes) != pattern.n:
        raise ValueError(
            f"got {len(sizes)} sizes for a pattern on {pattern.n} vertices"
        )
    if any(s < 1 for s in sizes):
        raise ValueError("blow-up sizes must be positive")
    n = sum(sizes)
    _check_order(n)
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    edges = []
    for u, v in pattern.edges():
        for a in range(offsets[u], offsets[u + 1]):
            for b in range(offsets[v], offsets[v + 1]):
                edges.append((a, b))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# structural metrics


def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for v in _bits(g.adj[u]):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d >= 0 for d in _bfs_dist(g, 0))


def diameter(g: Graph) -> int | float:
    """Longest shortest-path distance; INFINITE for disconnected input."""
    if g.n == 0:
        return INFINITE
    best = 0
    for src in range(g.n):
        dist = _bfs_dist(g, src)
        if min(dist) < 0:
            return INFINITE
        best = max(best, max(dist))
    return best


def radius(g: Graph) -> int | float:
    """Smallest eccentricity; INFINITE for disconnected input."""
    if g.n == 0:
        return INFINITE
    best = None
    for src in range(g.n):
        dist = _bfs_dist(g, src)
        if min(dist) < 0:
            return INFINITE
        ecc = max(dist)
        best = ecc if best is None else min(best, ecc)
    return best


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for src in range(g.n):
        if color[src] >= 0:
            continue
        color[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in _bits(g.adj[u]):
                if color[v] < 0:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return False
    return True


def clique_number(g: Graph) -> int:
    """Exact maximum clique size by branch and bound with greedy coloring."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 0

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy coloring of the candidate set; returns (vertex, color)
        # pairs in nondecreasing color order
        out = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                out.append((v, color))
                rest ^= low
                avail = (avail ^ low) & ~adj[v]
        return out

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        colored = color_bound(cand)
        for v, c in reversed(colored):
            if size + c <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    full = (1 << g.n) - 1
    expand(0, full)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by iterated k-colorability backtracking,
    seeded with the clique lower bound."""
    if g.n == 0:
        return 0
    if g.edge_count() == 0:
        return 1
    lower = clique_number(g)
    k = lower
    while not _k_colorable(g, k):
        k += 1
    return k


def _k_colorable(
    g: Graph, k: int, precolor: dict[int, int] | None = None
) -> bool:
    """Backtracking k-colorability test.  Vertices are colored in decreasing
    degree order and a fresh color may only be opened one at a time, which
    breaks color symmetry."""
    if k <= 0:
        return g.n == 0
    order = sorted(range(g.n), key=lambda v: g.adj[v].bit_count(), reverse=True)
    color = [-1] * g.n
    used = 0
    if precolor:
        for v, c in precolor.items():
            if c >= k:
                return False
            color[v] = c
            used = max(used, c + 1)
        order = [v for v in order if color[v] < 0]
        for v, c in precolor.items():
            for u in _bits(g.adj[v]):
                if color[u] == c:
                    return False

    def solve(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        forbidden = set()
        for u in _bits(g.adj[v]):
            if color[u] >= 0:
                forbidden.add(color[u])
        limit = min(k, used + 1)
        for c in range(limit):
            if c in forbidden:
                continue
            color[v] = c
            if solve(i + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return solve(0, used)
