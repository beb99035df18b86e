# Tests for Four-Chromatic Search
"""Tests for orthochroma/search.py"""

import pytest
from pydantic import ValidationError

from orthochroma.models import SearchConfig
from orthochroma.search import (
    build_pool,
    iter_search,
    orbit_points,
    search_4chromatic,
    sqrt2_directions,
)
from orthochroma.sphere import colour3


FIVE = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [-1, 1, 0]]


class TestPools:
    """Tests for point pools."""

    def test_sqrt2_directions_are_units(self):
        points = sqrt2_directions(2)
        assert any(not P.is_rational for P in points)
        assert all(P.x * P.x + P.y * P.y + P.z * P.z == 1 for P in points)
        assert len(points) == len(set(points))

    def test_orbit_points_cover_three_colours(self):
        points = orbit_points(5)
        assert {colour3(P).value for P in points} == {"red", "white", "black"}

    def test_explicit_pool(self):
        pool = build_pool(SearchConfig(generators=["explicit"], explicit_points=FIVE))
        assert pool.n == 5
        assert pool.m == 6

    def test_rational_pool_is_rational(self):
        pool = build_pool(SearchConfig(generators=["rational"], height=5))
        assert pool.is_rational


class TestSearch:
    """Tests for the search harness."""

    def test_zero_budget(self):
        report = search_4chromatic(SearchConfig(seed=42), 0)
        assert report.seed == 42
        assert report.candidates_evaluated == 0
        assert report.found == []

    def test_rational_only_never_finds(self):
        config = SearchConfig(generators=["rational"], height=7, subset_size=14, seed=1)
        report = search_4chromatic(config, 25)
        assert report.candidates_evaluated == 25
        assert report.found == []
        assert report.best_lower_bound <= 3
        assert sum(report.chi_histogram.values()) == 25

    def test_five_vertex_graph(self):
        config = SearchConfig(generators=["explicit"], explicit_points=FIVE, subset_size=5)
        report = search_4chromatic(config, 3)
        assert report.best_lower_bound == 3
        assert report.chi_histogram == {3: 3}

    @pytest.mark.parametrize("strategy", ["random", "degree"])
    def test_reproducible(self, strategy):
        config = SearchConfig(generators=["rational", "sqrt2"], height=3, strategy=strategy, subset_size=8, seed=5)
        first = list(iter_search(config, 10))
        second = list(iter_search(config, 10))
        assert first == second
        assert [c.index for c in first] == list(range(10))

    def test_workers_do_not_change_results(self):
        base = SearchConfig(generators=["rational", "sqrt2"], height=3, subset_size=8, seed=9)
        parallel = base.model_copy(update={"workers": 2})
        assert search_4chromatic(base, 6) == search_4chromatic(parallel, 6)

    def test_seed_changes_candidates(self):
        a = SearchConfig(generators=["rational"], height=5, strategy="random", seed=1)
        b = a.model_copy(update={"seed": 2})
        assert [c.vertices for c in iter_search(a, 5)] != [c.vertices for c in iter_search(b, 5)]

    def test_config_validation(self):
        with pytest.raises(ValidationError):
            SearchConfig(generators=["spiral"])
        with pytest.raises(ValidationError):
            SearchConfig(subset_size=0)
