"""Exact-solver tests: oracle agreement, frozen optima, tiling searches."""

from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest
from helpers import oracle_max_packing, small_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from tritile.constructions import (
    badly_coloured_k5,
    ex_bes_1,
    ex_bes_2,
    ex_bes_3,
    ex_triangle,
    ex_triangle_alt,
    pinned_apex_colouring,
    pinned_apex_sizes,
    random_min_degree_colouring,
    special_blowup,
)
from tritile.graphs import ColouredGraph, blow_up, complete_colouring
from tritile.solvers import (
    clique_tiling_interpolated,
    find_bowtie,
    find_perfect_clique_tiling,
    max_mixed_tiling,
    max_single_colour_tiling,
)

# Expected exact optima for the extremal instances exercised by the audit:
# mixed-colour ones equal min(5d-4n, (4d-3n)/2, (2d-n)/3), single-colour ones
# the formula of their construction family.
MIXED_EXPECTED = {
    (12, 10): 2,
    (24, 20): 4,
    (24, 21): 6,
    (30, 25): 5,
    (36, 30): 6,
    (36, 31): 8,
    (48, 40): 8,
    (48, 41): 10,
    (48, 42): 12,
}


class TestMixedSolver:
    def test_badly_k5_packs_nothing(self):
        res = max_mixed_tiling(badly_coloured_k5())
        assert res.optimum == 0 and res.proved_optimal
        assert len(res.tiling) == 0

    def test_all_red_cliques(self):
        assert max_mixed_tiling(complete_colouring(6, 2, 0)).optimum == 2
        res = max_mixed_tiling(complete_colouring(9, 2, 0))
        assert res.optimum == 3 and res.proved_optimal
        assert res.tiling.verify(complete_colouring(9, 2, 0))

    @pytest.mark.parametrize("n,delta", sorted(MIXED_EXPECTED))
    def test_extremal_instances(self, n, delta):
        g = ex_triangle(n, delta)
        res = max_mixed_tiling(g)
        assert res.proved_optimal
        assert res.optimum == MIXED_EXPECTED[(n, delta)]
        assert res.tiling.verify(g) and len(res.tiling) == res.optimum

    def test_small_instance_against_oracle(self):
        g = ex_triangle(12, 10)
        assert max_mixed_tiling(g).optimum == oracle_max_packing(g.mono_triangles())

    def test_alt_construction(self):
        g = ex_triangle_alt(24, 21)
        res = max_mixed_tiling(g)
        assert res.optimum == 6 and res.proved_optimal
        assert res.nodes_explored == 1

    def test_root_certificate_on_large_instance(self):
        res = max_mixed_tiling(ex_triangle(48, 42))
        assert res.optimum == 12 and res.proved_optimal
        assert res.nodes_explored == 1

    def test_pinned_apex_instance(self):
        g = pinned_apex_colouring(pinned_apex_sizes(18, 15))
        res = max_mixed_tiling(g)
        assert res.optimum == 3 and res.proved_optimal

    def test_special_blowups(self):
        assert max_mixed_tiling(special_blowup(t=2)).optimum == 1
        assert max_mixed_tiling(special_blowup(t=3)).optimum == 2
        assert max_mixed_tiling(special_blowup(n=20, delta=13)).optimum == 2

    def test_budget_exhaustion_keeps_lower_bound(self):
        res = max_mixed_tiling(ex_triangle(30, 25), budget=0)
        assert not res.proved_optimal
        assert res.optimum <= 5
        assert res.tiling.verify(ex_triangle(30, 25))

    @settings(max_examples=150, deadline=None)
    @given(small_graphs(max_n=8))
    def test_matches_oracle(self, g: ColouredGraph):
        res = max_mixed_tiling(g)
        assert res.proved_optimal
        assert res.optimum == oracle_max_packing(g.mono_triangles())
        assert res.tiling.verify(g) and len(res.tiling) == res.optimum

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_n=7), st.randoms(use_true_random=False))
    def test_relabelling_invariance(self, g: ColouredGraph, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert max_mixed_tiling(g).optimum == max_mixed_tiling(g.relabelled(perm)).optimum

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_n=7), st.integers(min_value=0))
    def test_adding_an_edge_never_hurts(self, g: ColouredGraph, pick):
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                   if not g.has_edge(u, v)]
        if not missing:
            return
        u, v = missing[pick % len(missing)]
        bigger = ColouredGraph(g.n, g.r, g.edges() + [(u, v, pick % g.r)])
        assert max_mixed_tiling(bigger).optimum >= max_mixed_tiling(g).optimum

    def test_determinism(self):
        g = ex_triangle(24, 21)
        assert max_mixed_tiling(g) == max_mixed_tiling(g)


class TestSingleColourSolver:
    SINGLE_EXPECTED = [
        (ex_bes_1, 9, 8, 1),
        (ex_bes_1, 22, 16, 3),
        (ex_bes_2, 25, 22, 4),
        (ex_bes_3, 24, 20, 2),
    ]

    @pytest.mark.parametrize("gen,n,delta,expected", SINGLE_EXPECTED)
    def test_extremal_instances(self, gen, n, delta, expected):
        g = gen(n, delta)
        res = max_single_colour_tiling(g)
        assert res.proved_optimal
        assert res.optimum == expected
        assert res.tiling.verify(g)
        colours = {t.colour for t in res.tiling}
        assert len(colours) <= 1

    @settings(max_examples=100, deadline=None)
    @given(small_graphs(max_n=8))
    def test_single_never_beats_mixed(self, g: ColouredGraph):
        single = max_single_colour_tiling(g)
        assert single.optimum <= max_mixed_tiling(g).optimum
        per_colour = max(
            (oracle_max_packing([t for t in g.mono_triangles() if t.colour == c])
             for c in range(g.r)),
            default=0)
        assert single.optimum == per_colour

    def test_tie_breaks_to_lower_colour(self):
        edges = [(0, 1, 0), (0, 2, 0), (1, 2, 0), (3, 4, 1), (3, 5, 1), (4, 5, 1)]
        res = max_single_colour_tiling(ColouredGraph(6, 2, edges))
        assert res.optimum == 1
        assert [t.colour for t in res.tiling] == [0]


class TestPerfectTilings:
    def test_complete_hosts(self):
        g = complete_colouring(6, 2, 0)
        assert len(find_perfect_clique_tiling(g, 3)) == 2
        assert len(find_perfect_clique_tiling(g, 6)) == 1

    def test_tripartite_host(self):
        g = blow_up(complete_colouring(3, 2, 0), [2, 2, 2])
        tiling = find_perfect_clique_tiling(g, 3)
        assert tiling is not None and len(tiling) == 2 and tiling.verify(g)

    def test_absence_is_proven(self):
        star = ColouredGraph(4, 2, [(0, 1, 0), (0, 2, 0), (0, 3, 0)])
        assert find_perfect_clique_tiling(star, 2) is None

    def test_validation(self):
        g = complete_colouring(5, 2, 0)
        with pytest.raises(ValueError):
            find_perfect_clique_tiling(g, 3)
        with pytest.raises(ValueError):
            find_perfect_clique_tiling(g, 1)

    def test_interpolation_on_complete_host(self):
        big, small = clique_tiling_interpolated(complete_colouring(6, 2, 0), 6)
        assert len(big) == 1 and len(small) == 0

    def test_interpolation_on_extremal_host(self):
        g = ex_triangle(12, 10)
        big, small = clique_tiling_interpolated(g, 6)
        assert len(big) == 2 and len(small) == 0
        assert big.verify(g)
        assert all(len(t) == 6 for t in big)

    def test_interpolation_mixes_sizes(self):
        g = blow_up(complete_colouring(4, 2, 0), [3, 3, 3, 3])
        big, small = clique_tiling_interpolated(g, 4)
        assert len(big) == 3 and len(small) == 0
        g = blow_up(complete_colouring(3, 2, 0), [4, 4, 4])
        big, small = clique_tiling_interpolated(g, 4)
        assert len(big) == 0 and len(small) == 4
        assert all(len(t) == 3 for t in small)
        assert not big.mask & small.mask

    def test_interpolation_range_check(self):
        with pytest.raises(ValueError):
            clique_tiling_interpolated(ex_triangle(12, 10), 4)

    def test_interpolation_on_random_hosts_strictly_inside_the_band(self):
        # These degrees leave several K5 leftovers; the search has to place
        # them without wandering (a padded-graph encoding used to stall here).
        for n, delta, seed in ((31, 25, 0), (36, 29, 1), (42, 34, 2)):
            g = random_min_degree_colouring(n, delta, np.random.default_rng(seed))
            big, small = clique_tiling_interpolated(g, 6)
            assert len(big) == 5 * delta - 4 * n
            assert len(small) == 5 * n - 6 * delta
            assert not big.mask & small.mask
            covered = big.mask | small.mask
            assert covered.bit_count() == n
            for t in list(big) + list(small):
                for u, v in combinations(t.vertices, 2):
                    assert g.has_edge(u, v)


class TestFindBowtie:
    def test_finds_centre(self):
        edges = ([(0, 1, 0), (0, 2, 0), (1, 2, 0),
                  (2, 3, 1), (2, 4, 1), (3, 4, 1)])
        bow = find_bowtie(ColouredGraph(5, 2, edges))
        assert bow is not None and bow.centre == 2
        assert bow.verify(ColouredGraph(5, 2, edges))

    def test_none_without_triangles(self):
        assert find_bowtie(badly_coloured_k5()) is None

    def test_forbidden_vertices_block(self):
        edges = ([(0, 1, 0), (0, 2, 0), (1, 2, 0),
                  (2, 3, 1), (2, 4, 1), (3, 4, 1)])
        assert find_bowtie(ColouredGraph(5, 2, edges), forbidden=[3]) is None
