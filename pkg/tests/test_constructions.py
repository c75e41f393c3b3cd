from fractions import Fraction

import pytest

from turanlab.blowup import blowup_copies_polynomial, maximize_over_parts
from turanlab.constructions import (
    CounterexampleParams,
    PendantPathSizes,
    choose_terminal_multiplicity,
    constant_condition_holds,
    counterexample_g,
    counterexample_h,
    multipartite_upper_bound,
    pendant_path,
    pendant_path_pattern,
)
from turanlab.counting import automorphism_count
from turanlab.graphs import (
    _k_colorable,
    chromatic_number,
    clique_number,
    complete,
    cycle,
    diameter,
    is_bipartite,
    is_connected,
    path,
    power,
)


class TestChooseMultiplicity:
    def test_reference_value(self):
        # exact rational iteration of 2*(1/16)^4*(3/4)^(2a) > 4^(-a)
        assert choose_terminal_multiplicity(3, Fraction(1, 16)) == 13

    def test_minimality(self):
        assert not constant_condition_holds(3, Fraction(1, 16), 12)
        assert constant_condition_holds(3, Fraction(1, 16), 13)

    def test_epsilon_range_enforced(self):
        # 1/8 >= 1/(4r) for r=3, and the rescaled base degenerates there
        with pytest.raises(ValueError):
            choose_terminal_multiplicity(3, Fraction(1, 8))
        with pytest.raises(ValueError):
            choose_terminal_multiplicity(3, Fraction(0))

    def test_r4(self):
        assert choose_terminal_multiplicity(4, Fraction(1, 32)) == 21


class TestParams:
    def test_valid(self):
        CounterexampleParams(3, Fraction(1, 16), 13, 160)

    def test_condition_enforced(self):
        with pytest.raises(ValueError):
            CounterexampleParams(3, Fraction(1, 16), 12, 160)

    def test_epsilon_enforced(self):
        with pytest.raises(ValueError):
            CounterexampleParams(3, Fraction(1, 8), 13, 160)


class TestH:
    def test_r3_double_broom(self):
        wp = counterexample_h(3, 2)
        assert wp.pattern == path(6)
        assert wp.weights == (2, 1, 1, 1, 1, 2)
        explicit = wp.materialize()
        assert explicit.n == 8
        assert chromatic_number(explicit) == 2

    def test_a1_identity(self):
        wp = counterexample_h(4, 1)
        assert wp.pattern == power(path(8), 2)
        assert wp.weights == (1,) * 8

    def test_r3_diameter_five(self):
        for a in (1, 2, 3):
            explicit = counterexample_h(3, a).materialize()
            assert is_bipartite(explicit)
            assert is_connected(explicit)
            assert diameter(explicit) == 5

    def test_weighted_vertices_never_share_a_color(self):
        # in every proper (r-1)-coloring of the pattern the two weighted
        # vertices get different colors: pin them equal and show failure
        for r in (3, 4, 5):
            wp = counterexample_h(r, 2)
            heavy = [v for v, w in enumerate(wp.weights) if w == 2]
            assert len(heavy) == 2
            same = {heavy[0]: 0, heavy[1]: 0}
            assert not _k_colorable(wp.pattern, r - 1, precolor=same)
            assert chromatic_number(wp.pattern) == r - 1


class TestG:
    def test_r3_weights(self):
        wp = counterexample_g(3, Fraction(1, 16), 160)
        assert wp.pattern == cycle(5)
        assert wp.weights == (120, 10, 10, 10, 10)
        assert sum(wp.weights) == 160

    def test_r4_weights(self):
        wp = counterexample_g(4, Fraction(1, 20), 200)
        assert wp.pattern == power(cycle(7), 2)
        assert sorted(wp.weights) == [10] * 6 + [140]
        assert sum(wp.weights) == 200

    def test_clique_number_r_minus_one(self):
        for r in (3, 4, 5):
            pat = counterexample_g(r, Fraction(1, 8 * r), 64 * r).pattern
            assert clique_number(pat) == r - 1

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            counterexample_g(3, Fraction(1, 16), 15)  # floor(eps*n) = 0


class TestBound:
    def test_direct(self):
        assert multipartite_upper_bound(3, 1, 4) == 1024

    def test_homogeneity(self):
        r, a = 4, 3
        ratio = multipartite_upper_bound(r, a, 20) / multipartite_upper_bound(
            r, a, 10
        )
        assert ratio == 2 ** (2 * r - 2 + 2 * a)

    def test_odd_n_rational(self):
        b = multipartite_upper_bound(3, 1, 5)
        assert b == Fraction(5**4 * 25, 4)

    def test_small_instance_matches_explicit_counting(self):
        from turanlab.blowup import blowup
        from turanlab.counting import labeled_copies

        wp = counterexample_h(3, 2)
        poly = blowup_copies_polynomial(wp, cycle(5))
        sizes = (6, 1, 1, 1, 1)
        host = blowup(cycle(5), sizes)
        assert host.n == 10
        assert poly.evaluate(sizes) == labeled_copies(wp.materialize(), host)

    def test_dominates_exact_bipartite_max(self):
        wp = counterexample_h(3, 2)
        poly = blowup_copies_polynomial(wp, complete(2))
        aut = automorphism_count(wp.materialize())
        for n in range(8, 41, 4):
            best = maximize_over_parts(poly, n)
            unlabeled_max = Fraction(best.value, aut)
            assert unlabeled_max <= multipartite_upper_bound(3, 2, n)


class TestPendantPath:
    def test_all_ones(self):
        g = pendant_path(PendantPathSizes(1, 1, 1, 1, 1, 1))
        assert g.n == 16
        assert g.edge_count() == 15
        assert is_bipartite(g)
        assert diameter(g) == 11

    def test_bipartite_for_every_profile(self):
        for sizes in [(2, 1, 3, 1, 1, 2), (1, 1, 5, 5, 5, 5)]:
            assert is_bipartite(pendant_path(PendantPathSizes(*sizes)))

    def test_pattern_weights(self):
        wp = pendant_path_pattern(PendantPathSizes(2, 3, 4, 5, 6, 7))
        assert wp.pattern.n == 16
        assert wp.weights[:10] == (1,) * 10
        assert wp.weights[10:] == (2, 3, 4, 5, 6, 7)
        assert wp.materialize().n == 10 + 2 + 3 + 4 + 5 + 6 + 7

    def test_positive_sizes(self):
        with pytest.raises(ValueError):
            PendantPathSizes(0, 1, 1, 1, 1, 1)
