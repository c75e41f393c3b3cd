"""Explicit extremal constructions and their exact parameter arithmetic.

The central pair: H is a path power whose two low-degree end vertices are
blown up into independent sets of size a ("double broom" for the basic
case), and G is a blow-up of an odd-cycle power with one oversized part.
All rationals are exact end to end: the comparison margins here are small
and must not be corrupted by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blowup import WeightedPattern
from .graphs import Graph, cycle, path, power


def constant_condition_holds(r: int, epsilon: Fraction, a: int) -> bool:
    """Exact test of 2*eps^(2r-2) * (1 - (2r-2)*eps)^(2a) > (1/2)^(2a)."""
    eps = Fraction(epsilon)
    lhs = 2 * eps ** (2 * r - 2) * (1 - (2 * r - 2) * eps) ** (2 * a)
    return lhs > Fraction(1, 4) ** a


def choose_terminal_multiplicity(r: int, epsilon: Fraction) -> int:
    """Smallest a >= 1 for which the constant condition holds.

    For 0 < eps < 1/(4r) the rescaled base 2*(1 - (2r-2)*eps) exceeds 1,
    so the search terminates.
    """
    eps = Fraction(epsilon)
    if not 0 < eps < Fraction(1, 4 * r):
        raise ValueError(f"need 0 < epsilon < 1/{4 * r}, got {eps}")
    # condition rescaled by 4^a: 2 * eps^(2r-2) * (2 - (4r-4)*eps)^(2a) > 1
    base = (2 - (4 * r - 4) * eps) ** 2
    value = 2 * eps ** (2 * r - 2) * base
    a = 1
    while value <= 1:
        value *= base
        a += 1
    return a


@dataclass(frozen=True)
class CounterexampleParams:
    """Exact parameters (r, epsilon, a, n) for the construction pair."""

    r: int
    epsilon: Fraction
    a: int
    n: int

    def __post_init__(self) -> None:
        if self.r < 3:
            raise ValueError("need r >= 3")
        eps = Fraction(self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        if not 0 < eps < Fraction(1, 4 * self.r):
            raise ValueError(f"need 0 < epsilon < 1/{4 * self.r}, got {eps}")
        if self.a < 1:
            raise ValueError("need a >= 1")
        if not constant_condition_holds(self.r, eps, self.a):
            raise ValueError(
                f"constant condition fails for r={self.r}, eps={eps}, a={self.a}"
            )
        if self.n < 1:
            raise ValueError("need n >= 1")


def counterexample_h(r: int, a: int) -> WeightedPattern:
    """Pattern P_{2r}^{r-2} with weight a on its two degree-(r-2) vertices.

    Fails loudly if the path power does not have exactly two vertices of
    degree r-2 (which would mean the construction itself is broken).
    """
    if r < 3:
        raise ValueError("need r >= 3")
    if a < 1:
        raise ValueError("need a >= 1")
    pattern = power(path(2 * r), r - 2)
    low = [v for v in range(pattern.n) if pattern.degree(v) == r - 2]
    if len(low) != 2:
        raise AssertionError(
            f"expected exactly two degree-{r - 2} vertices, found {low}"
        )
    weights = [1] * pattern.n
    for v in low:
        weights[v] = a
    return WeightedPattern(pattern, tuple(weights))


def counterexample_g(r: int, epsilon: Fraction, n: int) -> WeightedPattern:
    """Blow-up of C_{2r-1}^{r-2}: one part of size n - (2r-2)*floor(eps*n)
    on pattern vertex 0, the remaining 2r-2 parts of size floor(eps*n)."""
    if r < 3:
        raise ValueError("need r >= 3")
    eps = Fraction(epsilon)
    small = (eps.numerator * n) // eps.denominator
    big = n - (2 * r - 2) * small
    if small < 1:
        raise ValueError(f"floor(eps*n) = {small} is degenerate")
    if big < 1:
        raise ValueError(f"large part size {big} is degenerate")
    pattern = power(cycle(2 * r - 1), r - 2)
    weights = (big,) + (small,) * (2 * r - 2)
    return WeightedPattern(pattern, weights)


def multipartite_upper_bound(r: int, a: int, n: int) -> Fraction:
    """The closed-form ceiling n^(2r-2) * (n/2)^(2a) on labeled copies of
    the construction H in any complete (r-1)-partite host, kept rational
    so odd n compares exactly."""
    return Fraction(n) ** (2 * r - 2) * (Fraction(n, 2)) ** (2 * a)


@dataclass(frozen=True)
class PendantPathSizes:
    """Sizes of the independent sets hung on a 10-vertex path: big sets at
    positions 2 and 9, huge sets at positions 1, 4, 7 and 10."""

    a2: int
    a9: int
    b1: int
    b4: int
    b7: int
    b10: int

    def __post_init__(self) -> None:
        if min(self.a2, self.a9, self.b1, self.b4, self.b7, self.b10) < 1:
            raise ValueError("all pendant set sizes must be >= 1")


def pendant_path_pattern(sizes: PendantPathSizes) -> WeightedPattern:
    """Weighted-pattern form: a 16-vertex tree (path 0..9 plus one pattern
    vertex per pendant set) with the set sizes as weights."""
    edges = [(i, i + 1) for i in range(9)]
    attach = [1, 8, 0, 3, 6, 9]  # path positions of a2, a9, b1, b4, b7, b10
    weights = [1] * 10
    for k, anchor in enumerate(attach):
        edges.append((anchor, 10 + k))
        weights.append(0)
    pattern = Graph(16, edges)
    w = (sizes.a2, sizes.a9, sizes.b1, sizes.b4, sizes.b7, sizes.b10)
    for k, size in enumerate(w):
        weights[10 + k] = size
    return WeightedPattern(pattern, tuple(weights))


def pendant_path(sizes: PendantPathSizes) -> Graph:
    """Explicit graph for the pendant-path family (vertex cap applies)."""
    return pendant_path_pattern(sizes).materialize()
