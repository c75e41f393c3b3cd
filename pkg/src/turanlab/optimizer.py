"""Continuous relaxation of blow-up copy counts.

The leading-order density of copies in blowup(F, x*n) is the homogeneous
form f(x) = sum of coeff * prod x_u^(m_u) over the same terms as the exact
counting polynomial; maximizing f over the simplex guides which host
pattern and which part fractions are asymptotically best.

Floating point lives only in this module.  Any ranking that feeds an
exact verdict must be confirmed by integer evaluation at a concrete n;
helpers for that confirmation are provided here and flagged in reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blowup import (
    BlowupPolynomial,
    WeightedPattern,
    blowup_copies_polynomial,
)
from .errors import BudgetExceededError
from .graphs import Graph, clique_number, complete, cycle, petersen
from .graph6 import graph6_serialize


@dataclass(frozen=True)
class DensityForm:
    """Homogeneous polynomial sum of coeff * prod x^m over the simplex."""

    order: int
    terms: tuple[tuple[tuple[int, ...], int], ...]
    host: Graph | None = None
    _arrays: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def from_polynomial(
        cls, poly: BlowupPolynomial, host: Graph | None = None
    ) -> "DensityForm":
        terms = tuple(sorted(poly.terms.items()))
        return cls(poly.pattern_order, terms, host)

    @property
    def degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def _matrices(self) -> tuple[np.ndarray, np.ndarray]:
        if "E" not in self._arrays:
            if self.terms:
                e = np.array([m for m, _ in self.terms], dtype=np.float64)
                c = np.array([float(c) for _, c in self.terms])
            else:
                e = np.zeros((0, self.order))
                c = np.zeros(0)
            self._arrays["E"] = e
            self._arrays["c"] = c
        return self._arrays["E"], self._arrays["c"]

    def value(self, x) -> float:
        e, c = self._matrices()
        if not len(c):
            return 0.0
        x = np.asarray(x, dtype=np.float64)
        return float(c @ np.prod(x**e, axis=1))

    def gradient(self, x) -> np.ndarray:
        e, c = self._matrices()
        x = np.asarray(x, dtype=np.float64)
        grad = np.zeros(self.order)
        if not len(c):
            return grad
        powers = x**e  # 0**0 == 1 under numpy
        for v in range(self.order):
            col = e[:, v]
            down = np.where(col > 0, x[v] ** np.maximum(col - 1, 0), 0.0)
            others = np.prod(np.delete(powers, v, axis=1), axis=1)
            grad[v] = float(np.sum(c * col * down * others))
        return grad


def density_form(
    wp: WeightedPattern, host: Graph, budget: int | None = None
) -> DensityForm:
    """Leading-order copy density of wp's blow-up inside blow-ups of host."""
    poly = blowup_copies_polynomial(wp, host, budget=budget)
    return DensityForm.from_polynomial(poly, host)


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto {x >= 0, sum x = 1} (sort and threshold)."""
    v = np.asarray(v, dtype=np.float64)
    u = np.sort(v)[::-1]
    css = np.cumsum(u)
    idx = np.arange(1, len(v) + 1)
    rho = np.nonzero(u + (1.0 - css) / idx > 0)[0][-1]
    lam = (1.0 - css[rho]) / (rho + 1)
    return np.maximum(v + lam, 0.0)


def _stationarity(x: np.ndarray, grad: np.ndarray) -> float:
    """Norm of the gradient projected on the simplex face at x."""
    active = x > 1e-12
    if not active.any():
        return float(np.linalg.norm(grad))
    lam = grad[active].mean()
    pg = np.where(active, grad - lam, np.maximum(grad - lam, 0.0))
    return float(np.linalg.norm(pg))


def maximize_density(
    form: DensityForm,
    restarts: int = 50,
    seed: int = 0,
    tol: float = 1e-10,
    max_iter: int = 5000,
) -> tuple[np.ndarray, float]:
    """Multistart projected gradient ascent; deterministic given the seed.

    Returns the best weights found and the value there.  A form with no
    terms (no homomorphism at all) scores 0 at the barycenter.
    """
    k = form.order
    center = np.full(k, 1.0 / k)
    if not form.terms:
        return center, 0.0
    rng = np.random.default_rng(seed)
    starts = [center]
    starts += [rng.dirichlet(np.ones(k)) for _ in range(max(0, restarts - 1))]
    best_x, best_val = center, form.value(center)
    for x in starts:
        x = project_simplex(np.asarray(x))
        step = 1.0
        val = form.value(x)
        for _ in range(max_iter):
            grad = form.gradient(x)
            if _stationarity(x, grad) <= tol:
                break
            moved = False
            while step > 1e-16:
                cand = project_simplex(x + step * grad)
                cval = form.value(cand)
                if cval > val:
                    x, val = cand, cval
                    step *= 1.3
                    moved = True
                    break
                step *= 0.5
            if not moved:
                break
        if val > best_val:
            best_x, best_val = x, val
    return best_x, best_val


DEFAULT_CATALOG_NAMES = ("K2", "C5", "C7", "Petersen")


def default_catalog() -> list[Graph]:
    return [complete(2), cycle(5), cycle(7), petersen()]


def pattern_catalog_search(
    wp: WeightedPattern,
    r: int,
    catalog: list[Graph] | None = None,
    extra: list[Graph] = (),
    restarts: int = 50,
    seed: int = 0,
    check_n: int | None = None,
    budget: int | None = None,
) -> list[dict]:
    """Rank candidate host patterns by the maximized copy density of wp.

    Every catalog entry must be K_r-free (checked, violators rejected).
    When check_n is given, each ranking entry also carries an exact integer
    count at that many host vertices, found by rounding the optimizer
    weights and hill-climbing with unit transfers; ties in the float
    ranking are broken by these exact counts.
    """
    patterns = list(catalog) if catalog is not None else default_catalog()
    patterns += list(extra)
    for pat in patterns:
        if clique_number(pat) >= r:
            raise ValueError(
                f"catalog pattern {graph6_serialize(pat)} is not K_{r}-free"
            )
    records = []
    for pat in patterns:
        rec = {
            "graph6": graph6_serialize(pat),
            "pattern_order": pat.n,
            "value": None,
            "weights": None,
            "exact_at_n": None,
            "note": "",
        }
        try:
            poly = blowup_copies_polynomial(wp, pat, budget=budget)
        except BudgetExceededError:
            # one oversized host should not kill the whole ranking; it is
            # reported unranked instead
            rec["note"] = "budget exceeded"
            records.append(rec)
            continue
        form = DensityForm.from_polynomial(poly, pat)
        x, val = maximize_density(form, restarts=restarts, seed=seed)
        rec["value"] = val
        rec["weights"] = [float(w) for w in x]
        if not form.terms:
            rec["note"] = "no homomorphism"
        if check_n is not None and form.terms:
            sizes = list(_round_nonneg(x, check_n))
            rec["exact_at_n"] = _hill_climb_nonneg(poly, sizes)[1]
            rec["check_n"] = check_n
        records.append(rec)
    # density values live in [0, 1]; quantize so restart-level float noise
    # cannot order patterns, then let exact counts and size break ties;
    # budget-exceeded entries sink to the bottom
    records.sort(
        key=lambda rec: (
            -round(rec["value"], 10) if rec["value"] is not None else 1.0,
            -(rec["exact_at_n"] or 0),
            rec["pattern_order"],
            rec["graph6"],
        )
    )
    return records


def _round_nonneg(x: np.ndarray, n: int) -> tuple[int, ...]:
    raw = [xi * n for xi in x]
    parts = [int(v) for v in raw]
    deficit = n - sum(parts)
    by_rem = sorted(range(len(x)), key=lambda i: raw[i] - parts[i], reverse=True)
    for i in range(deficit):
        parts[by_rem[i % len(x)]] += 1
    return tuple(parts)


def _hill_climb_nonneg(
    poly: BlowupPolynomial, sizes: list[int]
) -> tuple[list[int], int]:
    current = poly.evaluate(sizes)
    improved = True
    while improved:
        improved = False
        for i in range(len(sizes)):
            if sizes[i] == 0:
                continue
            for j in range(len(sizes)):
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
