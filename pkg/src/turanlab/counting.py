"""Exact labeled/unlabeled copy counting by injective-homomorphism search.

Counts are plain Python ints, so they are arbitrary precision by
construction.  Labeled semantics are primitive; unlabeled counts are
derived by exact division, and a non-exact division is treated as an
internal bug rather than rounded.
"""

from __future__ import annotations

from math import perm

from .graphs import Graph, bits


def _embedding_order(h: Graph, vertices: list[int]) -> tuple[list[int], list[list[int]]]:
    """Order `vertices` so each one is adjacent to an earlier one whenever
    possible; returns the order plus, per position, the positions of
    earlier neighbors."""
    remaining = set(vertices)
    order: list[int] = []
    placed_mask = 0
    while remaining:
        best_v = None
        best_key = None
        for v in remaining:
            key = ((h.adj[v] & placed_mask).bit_count(), h.adj[v].bit_count())
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        order.append(best_v)
        placed_mask |= 1 << best_v
        remaining.discard(best_v)
    pos = {v: i for i, v in enumerate(order)}
    prev = [
        sorted(pos[u] for u in bits(h.adj[v]) if pos[u] < i)
        for i, v in enumerate(order)
    ]
    return order, prev


def labeled_copies(h: Graph, g: Graph) -> int:
    """Number of injective maps V(h) -> V(g) sending edges to edges.

    Copies need not be induced.  Returns 0 when v(h) > v(g).
    """
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    isolated = [v for v in range(h.n) if h.adj[v] == 0]
    core = [v for v in range(h.n) if h.adj[v] != 0]
    # isolated pattern vertices admit a closed count once the rest is placed
    tail = perm(g.n - len(core), len(isolated))
    if tail == 0:
        return 0
    if not core:
        return tail
    order, prev = _embedding_order(h, core)
    gadj = g.adj
    degs_g = g.degrees()
    base = []
    for v in order:
        need = h.adj[v].bit_count()
        mask = 0
        for u in range(g.n):
            if degs_g[u] >= need:
                mask |= 1 << u
        base.append(mask)
    last = len(order) - 1
    img = [0] * len(order)

    def count(i: int, used: int) -> int:
        cand = base[i] & ~used
        for j in prev[i]:
            cand &= gadj[img[j]]
        if i == last:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            img[i] = low.bit_length() - 1
            total += count(i + 1, used | low)
        return total

    return count(0, 0) * tail


def exists_copy(h: Graph, g: Graph) -> bool:
    """True iff g contains at least one (not necessarily induced) copy of h."""
    if h.n > g.n:
        return False
    if h.n == 0:
        return True
    core = [v for v in range(h.n) if h.adj[v] != 0]
    if not core:
        return True
    order, prev = _embedding_order(h, core)
    gadj = g.adj
    degs_g = g.degrees()
    base = []
    for v in order:
        need = h.adj[v].bit_count()
        mask = 0
        for u in range(g.n):
            if degs_g[u] >= need:
                mask |= 1 << u
        base.append(mask)
    img = [0] * len(order)

    def search(i: int, used: int) -> bool:
        if i == len(order):
            return True
        cand = base[i] & ~used
        for j in prev[i]:
            cand &= gadj[img[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            img[i] = low.bit_length() - 1
            if search(i + 1, used | low):
                return True
        return False

    return search(0, 0)


def automorphism_count(h: Graph) -> int:
    """|Aut(h)|.  An injective edge-preserving self-map on equal vertex and
    edge counts is automatically an automorphism."""
    return labeled_copies(h, h)


def enumerate_automorphisms(h: Graph) -> list[tuple[int, ...]]:
    """All automorphisms of h as image tuples (small graphs only)."""
    if h.n == 0:
        return [()]
    out: list[tuple[int, ...]] = []
    order, prev = _embedding_order(h, list(range(h.n)))
    deg = h.degrees()
    img = [0] * h.n

    def search(i: int, used: int) -> None:
        if i == h.n:
            result = [0] * h.n
            for p, v in enumerate(order):
                result[v] = img[p]
            out.append(tuple(result))
            return
        v = order[i]
        cand = ~used & ((1 << h.n) - 1)
        for j in prev[i]:
            cand &= h.adj[img[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            u = low.bit_length() - 1
            if deg[u] == deg[v]:
                img[i] = u
                search(i + 1, used | low)

    search(0, 0)
    return out


def unlabeled_copies(h: Graph, g: Graph) -> int:
    """labeled_copies(h, g) / |Aut(h)|; the division is always exact."""
    total = labeled_copies(h, g)
    aut = automorphism_count(h)
    q, rem = divmod(total, aut)
    if rem:
        raise ArithmeticError(
            f"labeled count {total} not divisible by |Aut|={aut}; counting bug"
        )
    return q
