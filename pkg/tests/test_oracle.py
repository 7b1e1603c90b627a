import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import orthosparse.oracle as oracle
from orthosparse.exceptions import BadK, IllConditioned, SubsetCountError
from orthosparse.generate import GenConfig, gen_general_instance
from orthosparse.linalg import restricted_least_squares
from orthosparse.oracle import brute_force_solve, enumerate_supports, subset_count
from orthosparse.selector import fast_sparse_solve


class TestEnumeration:
    def test_subset_count(self):
        assert subset_count(5, 2) == math.comb(5, 2)
        assert subset_count(5, 5) == 1

    def test_count_rejects_bad_k(self):
        with pytest.raises(BadK):
            subset_count(5, 0)
        with pytest.raises(BadK):
            subset_count(5, 6)

    def test_lexicographic_and_complete(self):
        subs = list(enumerate_supports(5, 3))
        assert len(subs) == 10
        assert subs == sorted(subs)
        assert subs[0] == (0, 1, 2) and subs[-1] == (2, 3, 4)
        assert all(s == tuple(sorted(s)) for s in subs)


class TestBruteForceSolve:
    def test_ortho_fixture(self, ortho_fixture):
        A, y = ortho_fixture
        s1 = brute_force_solve(A, y, 1)
        assert s1.support == (0,)
        np.testing.assert_allclose(s1.values, [3.0])
        assert s1.residual == pytest.approx(np.sqrt(29.0), rel=1e-14)
        assert (s1.method, s1.refit) == ("brute", True)
        s2 = brute_force_solve(A, y, 2)
        assert s2.support == (0, 1)
        assert s2.residual == pytest.approx(5.0, rel=1e-14)

    def test_skew_fixture_beats_fast(self, skew_fixture):
        A, y = skew_fixture
        brute = brute_force_solve(A, y, 1)
        fast = fast_sparse_solve(A, y, 1)
        assert brute.support == (0,)
        np.testing.assert_allclose(brute.values, [1.0], rtol=1e-12)
        assert brute.residual == pytest.approx(1.0, rel=1e-12)
        assert fast.residual > brute.residual

    @given(st.integers(0, 300), st.integers(1, 5))
    @settings(max_examples=30, deadline=None)
    def test_never_worse_than_fast(self, seed, k):
        rng = np.random.default_rng(seed)
        A, y = rng.standard_normal((12, 5)), rng.standard_normal(12)
        brute = brute_force_solve(A, y, k)
        for refit in (False, True):
            fast = fast_sparse_solve(A, y, k, refit=refit)
            assert brute.residual <= fast.residual + 1e-10 * (1 + brute.residual)

    def test_exact_tie_resolves_to_lex_smallest(self, tie_fixture):
        A, y = tie_fixture
        sol = brute_force_solve(A, y, 1)
        assert sol.support == (0,)  # {1} has the same residual

    def test_four_way_tie(self):
        A = np.vstack([np.eye(4), np.zeros((1, 4))])
        y = np.array([1.0, 1.0, 1.0, 1.0, 2.0])
        sol = brute_force_solve(A, y, 2)
        assert sol.support == (0, 1)  # all six supports tie exactly


@pytest.fixture(scope="module")
def instance():
    return gen_general_instance(GenConfig(30, 10, seed=77))


class TestDeterminism:
    def test_worker_counts_agree_bitwise(self, instance):
        A, y = instance
        base = brute_force_solve(A, y, 3, workers=1)
        for w in (2, 5, 8):
            other = brute_force_solve(A, y, 3, workers=w)
            assert other.support == base.support
            assert np.array_equal(other.values, base.values)
            assert other.residual == base.residual

    def test_chunk_size_is_irrelevant(self, instance, monkeypatch):
        A, y = instance
        base = brute_force_solve(A, y, 3)
        monkeypatch.setattr(oracle, "_CHUNK", 5)
        small = brute_force_solve(A, y, 3, workers=4)
        assert small.support == base.support
        assert np.array_equal(small.values, base.values)
        assert small.residual == base.residual

    def test_repeat_calls_identical(self, instance):
        A, y = instance
        a = brute_force_solve(A, y, 4, workers=3)
        b = brute_force_solve(A, y, 4, workers=3)
        assert a.support == b.support and a.residual == b.residual


class TestGuards:
    def test_budget_refusal(self, monkeypatch):
        rng = np.random.default_rng(0)
        A, y = rng.standard_normal((10, 6)), rng.standard_normal(10)
        monkeypatch.setattr(oracle, "SUBSET_BUDGET", 10)
        with pytest.raises(SubsetCountError, match="force"):
            brute_force_solve(A, y, 3)  # C(6,3) = 20 > 10
        sol = brute_force_solve(A, y, 3, force=True)
        assert len(sol.support) == 3

    def test_ill_conditioned_names_subset(self):
        a = np.arange(1.0, 8.0)
        rng = np.random.default_rng(1)
        A = np.column_stack([a, a, rng.standard_normal(7)])
        with pytest.raises(IllConditioned, match=r"\(0, 1\)"):
            brute_force_solve(A, np.ones(7), 2)

    def test_values_match_restricted_refit(self, skew_fixture):
        A, y = skew_fixture
        sol = brute_force_solve(A, y, 2)
        assert sol.support == (0, 1)
        # winner is re-solved through the same restricted path callers use
        np.testing.assert_array_equal(
            sol.values, restricted_least_squares(A, sol.support, y)
        )
