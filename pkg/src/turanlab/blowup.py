"""Weighted patterns and exact copy counts inside blow-up hosts.

A blow-up host on astronomically many vertices is represented by its
pattern graph plus part sizes.  Copy counts inside it are organized as a
polynomial in falling factorials of the part sizes: every edge-preserving
placement of the (blown-up) pattern vertices into host fibers contributes
one monomial, where the count landing on host vertex u becomes the
falling-factorial exponent of s_u.  Distributing the copies of a single
pattern vertex over several host fibers is allowed and carries a
multinomial coefficient; collapsing those split placements is what makes
the evaluation agree exactly with brute-force labeled counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, perm, prod
from typing import Iterator, NamedTuple, Sequence

from .counting import enumerate_automorphisms, _embedding_order
from .errors import BudgetExceededError
from .graphs import Graph, bits, blowup

#: Default cap on enumeration nodes; override per call or via the CLI.
DEFAULT_BUDGET = 25_000_000


@dataclass(frozen=True)
class WeightedPattern:
    """A pattern graph with positive integer part sizes per vertex."""

    pattern: Graph
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.pattern.n:
            raise ValueError(
                f"{len(self.weights)} weights for a pattern on "
                f"{self.pattern.n} vertices"
            )
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def is_reduced(self) -> bool:
        """True iff no two pattern vertices share the same neighborhood."""
        seen = set()
        for row in self.pattern.adj:
            if row in seen:
                return False
            seen.add(row)
        return True

    def materialize(self) -> Graph:
        """The explicit blow-up graph (subject to the vertex cap)."""
        return blowup(self.pattern, self.weights)


class BlowupPolynomial:
    """Sum of falling-factorial monomials indexed by fiber-count vectors."""

    __slots__ = ("pattern_order", "terms")

    def __init__(self, pattern_order: int, terms: dict[tuple[int, ...], int]):
        self.pattern_order = pattern_order
        self.terms = {m: c for m, c in terms.items() if c}

    def evaluate(self, sizes: Sequence[int]) -> int:
        """Exact big-integer evaluation at the given part sizes."""
        if len(sizes) != self.pattern_order:
            raise ValueError(
                f"{len(sizes)} sizes for a polynomial over "
                f"{self.pattern_order} fibers"
            )
        if any(s < 0 for s in sizes):
            raise ValueError("part sizes must be non-negative")
        total = 0
        for m, coeff in self.terms.items():
            term = coeff
            for s, e in zip(sizes, m):
                if e:
                    term *= perm(s, e)
                    if not term:
                        break
            total += term
        return total

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def to_jsonable(self) -> dict:
        return {
            "pattern_order": self.pattern_order,
            "terms": [
                {"fibers": list(m), "coeff": c}
                for m, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "BlowupPolynomial":
        return cls(
            data["pattern_order"],
            {tuple(t["fibers"]): t["coeff"] for t in data["terms"]},
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BlowupPolynomial)
            and self.pattern_order == other.pattern_order
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        return (
            f"BlowupPolynomial(order={self.pattern_order}, "
            f"terms={len(self.terms)})"
        )


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int | None):
        self.left = DEFAULT_BUDGET if limit is None else limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceededError("enumeration node budget exhausted")


def hom_enumerate(
    hp: Graph, host: Graph, budget: int | None = None
) -> list[tuple[int, ...]]:
    """All graph homomorphisms V(hp) -> V(host), as image tuples."""
    if hp.n == 0:
        return [()]
    if host.n == 0:
        return []
    guard = _Budget(budget)
    order, prev = _embedding_order(hp, list(range(hp.n)))
    hostadj = host.adj
    full = (1 << host.n) - 1
    img = [0] * hp.n
    out: list[tuple[int, ...]] = []

    def search(i: int) -> None:
        guard.spend()
        cand = full
        for j in prev[i]:
            cand &= hostadj[img[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            img[i] = low.bit_length() - 1
            if i + 1 == hp.n:
                result = [0] * hp.n
                for p, v in enumerate(order):
                    result[v] = img[p]
                out.append(tuple(result))
                guard.spend()
            else:
                search(i + 1)

    search(0)
    return out


def _placement_order(pattern: Graph, weights: Sequence[int]) -> tuple[list[int], list[list[int]]]:
    """Order pattern vertices so constrained ones come early and heavy ones
    late; heavy fibers then distribute over already-narrowed host sets."""
    remaining = set(range(pattern.n))
    order: list[int] = []
    placed_mask = 0
    while remaining:
        best = min(
            remaining,
            key=lambda v: (
                -(pattern.adj[v] & placed_mask).bit_count(),
                weights[v],
                -pattern.adj[v].bit_count(),
                v,
            ),
        )
        order.append(best)
        placed_mask |= 1 << best
        remaining.discard(best)
    pos = {v: i for i, v in enumerate(order)}
    prev = [
        sorted(pos[u] for u in bits(pattern.adj[v]) if pos[u] < i)
        for i, v in enumerate(order)
    ]
    return order, prev


def blowup_copies_polynomial(
    wp: WeightedPattern, host_pattern: Graph, budget: int | None = None
) -> BlowupPolynomial:
    """Polynomial P with P(sizes) = labeled copies of wp.materialize()
    inside blowup(host_pattern, sizes), for every sizes vector.

    Each copy of a pattern vertex picks a host fiber subject to full
    adjacency against the fibers picked by neighboring pattern vertices;
    grouping placements by their per-fiber count vector gives one
    falling-factorial monomial per group, weighted by multinomials.
    """
    k = host_pattern.n
    pattern, weights = wp.pattern, wp.weights
    if pattern.n == 0:
        return BlowupPolynomial(k, {(0,) * k: 1})
    if k == 0:
        return BlowupPolynomial(0, {})
    guard = _Budget(budget)
    order, prev = _placement_order(pattern, weights)
    hostadj = host_pattern.adj
    full = (1 << k) - 1
    terms: dict[tuple[int, ...], int] = {}
    support_cn = [full] * len(order)  # common host-neighborhood of each fiber's support
    mvec = [0] * k

    def place(i: int, coeff: int) -> None:
        if i == len(order):
            key = tuple(mvec)
            terms[key] = terms.get(key, 0) + coeff
            return
        p = order[i]
        allowed = full
        for j in prev[i]:
            allowed &= support_cn[j]
        verts = bits(allowed)
        if not verts:
            return
        w = weights[p]

        def split(j: int, left: int, mult: int, cn: int) -> None:
            guard.spend()
            if j == len(verts) - 1:
                # remainder goes to the last allowed vertex (possibly zero)
                v = verts[j]
                if left:
                    mvec[v] += left
                    support_cn[i] = cn & hostadj[v]
                    place(i + 1, coeff * mult)
                    mvec[v] -= left
                else:
                    support_cn[i] = cn
                    place(i + 1, coeff * mult)
                return
            v = verts[j]
            split(j + 1, left, mult, cn)
            for c in range(1, left + 1):
                mvec[v] += c
                split(j + 1, left - c, mult * comb(left, c), cn & hostadj[v])
                mvec[v] -= c

        split(0, w, 1, full)

    place(0, 1)
    return BlowupPolynomial(k, terms)


def blowup_automorphism_count(wp: WeightedPattern) -> int:
    """|Aut| of the blown-up graph, via weight-preserving pattern
    automorphisms times the factorials of the fiber sizes.

    Requires a twin-free (reduced) pattern: with duplicated neighborhoods
    the fibers of the blow-up merge and this formula undercounts.
    """
    if not wp.is_reduced():
        raise ValueError(
            "pattern has twin vertices; reduce it (merge twins into weights) "
            "before counting blow-up automorphisms"
        )
    fiber_perms = prod(factorial(w) for w in wp.weights)
    total = 0
    for pi in enumerate_automorphisms(wp.pattern):
        if all(wp.weights[pi[p]] == wp.weights[p] for p in range(wp.pattern.n)):
            total += fiber_perms
    return total


class PartsMaximum(NamedTuple):
    sizes: tuple[int, ...]
    value: int
    exact: bool


def _compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ways to write n as k positive parts, ordered."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def maximize_over_parts(
    poly: BlowupPolynomial,
    n: int,
    exhaustive_limit: int = 200_000,
    restarts: int = 20,
    seed: int = 0,
) -> PartsMaximum:
    """Maximize poly over positive part sizes summing to n.

    Exact (full scan) for two fibers or whenever the composition count is
    small; otherwise a continuous-relaxation seed plus steepest-ascent
    unit transfers, flagged as heuristic.
    """
    k = poly.pattern_order
    if k < 1:
        raise ValueError("polynomial has no fibers")
    if n < k:
        raise ValueError(f"n={n} too small for {k} positive parts")
    if k == 1:
        return PartsMaximum((n,), poly.evaluate((n,)), True)
    if k == 2:
        best = None
        for m in range(1, n):
            val = poly.evaluate((m, n - m))
            if best is None or val > best[1]:
                best = ((m, n - m), val)
        return PartsMaximum(best[0], best[1], True)
    if comb(n - 1, k - 1) <= exhaustive_limit:
        best = None
        for sizes in _compositions(n, k):
            val = poly.evaluate(sizes)
            if best is None or val > best[1]:
                best = (sizes, val)
        return PartsMaximum(best[0], best[1], True)

    seeds = [_balanced_parts(n, k)]
    seeds.append(_relaxation_seed(poly, n, restarts, seed))
    best_sizes, best_val = None, None
    for start in seeds:
        if start is None:
            continue
        sizes, val = _local_search(poly, list(start))
        if best_val is None or val > best_val:
            best_sizes, best_val = sizes, val
    return PartsMaximum(tuple(best_sizes), best_val, False)


def _balanced_parts(n: int, k: int) -> tuple[int, ...]:
    q, s = divmod(n, k)
    return tuple([q + 1] * s + [q] * (k - s))


def _relaxation_seed(
    poly: BlowupPolynomial, n: int, restarts: int, seed: int
) -> tuple[int, ...] | None:
    from .optimizer import DensityForm, maximize_density

    form = DensityForm.from_polynomial(poly)
    if not form.terms:
        return None
    x, _ = maximize_density(form, restarts=restarts, seed=seed)
    return round_to_parts(x, n)


def round_to_parts(x: Sequence[float], n: int) -> tuple[int, ...]:
    """Round a simplex point to positive integers summing to n
    (largest-remainder, then steal to clear zeros)."""
    k = len(x)
    raw = [xi * n for xi in x]
    parts = [int(r) for r in raw]
    deficit = n - sum(parts)
    by_rem = sorted(range(k), key=lambda i: raw[i] - parts[i], reverse=True)
    for i in range(deficit):
        parts[by_rem[i % k]] += 1
    for i in range(k):
        while parts[i] < 1:
            donor = max(range(k), key=lambda j: parts[j])
            parts[donor] -= 1
            parts[i] += 1
    return tuple(parts)


def _local_search(
    poly: BlowupPolynomial, sizes: list[int]
) -> tuple[list[int], int]:
    k = len(sizes)
    current = poly.evaluate(sizes)
    improved = True
    while improved:
        improved = False
        for i in range(k):
            if sizes[i] <= 1:
                continue
            for j in range(k):
                if i == j:
                    continue
                sizes[i] -= 1
                sizes[j] += 1
                val = poly.evaluate(sizes)
                if val > current:
                    current = val
                    improved = True
                else:
                    sizes[i] += 1
                    sizes[j] -= 1
    return sizes, current
