import numpy as np
import pytest

from orthosparse.diagnostics import (
    canonical_probe,
    converse_witness_search,
    lemma1_condition,
    orthogonality_check,
)
from orthosparse.exceptions import DimensionError
from orthosparse.generate import GenConfig, gen_general_instance, gen_orthogonal_instance
from orthosparse.linalg import gram_and_inverse
from orthosparse.oracle import brute_force_solve
from orthosparse.selector import fast_sparse_solve


class TestOrthogonalityCheck:
    def test_ortho_fixture(self, ortho_fixture):
        diag = orthogonality_check(ortho_fixture[0])
        assert diag.orthogonal
        assert diag.max_offdiag_coherence == 0.0
        np.testing.assert_allclose(diag.lemma1_deviation, [0.0, 0.0], atol=1e-15)
        np.testing.assert_allclose(np.diag(diag.gram), [1.0, 4.0])

    def test_skew_fixture(self, skew_fixture):
        diag = orthogonality_check(skew_fixture[0])
        assert not diag.orthogonal
        assert diag.max_offdiag_coherence == pytest.approx(1 / np.sqrt(2), rel=1e-14)
        # G = [[1,1],[1,2]], Ginv = [[2,-1],[-1,1]]: deviations |2*1-1|, |1*2-1|
        np.testing.assert_allclose(diag.lemma1_deviation, [1.0, 1.0], rtol=1e-12)

    def test_tol_is_recorded(self, skew_fixture):
        diag = orthogonality_check(skew_fixture[0], tol=0.9)
        assert diag.tol == 0.9
        assert diag.orthogonal  # coherence 0.707 <= 0.9 under this loose tol


class TestLemma1Condition:
    def test_agrees_on_fixtures(self, ortho_fixture, skew_fixture):
        d_ok = orthogonality_check(ortho_fixture[0])
        d_bad = orthogonality_check(skew_fixture[0])
        assert lemma1_condition(d_ok) is True
        assert lemma1_condition(d_bad) is False

    def test_agrees_on_generated(self):
        for seed in range(10):
            A, _ = gen_orthogonal_instance(GenConfig(20, 5, seed=seed))
            B, _ = gen_general_instance(GenConfig(20, 5, seed=seed))
            da, db = orthogonality_check(A), orthogonality_check(B)
            assert da.orthogonal and lemma1_condition(da)
            assert not db.orthogonal and not lemma1_condition(db)


class TestCanonicalProbe:
    def test_probe_vector_definition(self, skew_fixture):
        A = skew_fixture[0]
        _, Ginv = gram_and_inverse(A)
        y, _, _ = canonical_probe(A, 1)
        np.testing.assert_allclose(y, A @ Ginv[:, 1], rtol=1e-14)

    def test_agreement_on_orthogonal(self):
        A, _ = gen_orthogonal_instance(GenConfig(15, 4, seed=3))
        for i in range(4):
            _, fast_res, brute_res = canonical_probe(A, i)
            assert abs(fast_res - brute_res) <= 1e-9 * (1 + brute_res)


class TestConverseWitnessSearch:
    def test_skew_witness_values(self, skew_fixture):
        w = converse_witness_search(skew_fixture[0])
        assert w is not None
        assert w.index == 0
        assert w.fast_residual == pytest.approx(np.sqrt(2.0), rel=1e-12)
        assert w.brute_residual == pytest.approx(1.0, rel=1e-12)
        assert w.gap == pytest.approx(np.sqrt(2.0) - 1.0, rel=1e-10)

    def test_orthogonal_has_no_witness(self, ortho_fixture):
        assert converse_witness_search(ortho_fixture[0]) is None

    def test_generated_nonorthogonal_always_witnessed(self):
        for seed in range(10):
            A, _ = gen_general_instance(GenConfig(25, 6, seed=seed))
            w = converse_witness_search(A)
            assert w is not None and w.gap > 1e-8

    def test_gap_never_meaningfully_negative(self):
        # the exhaustive solve is optimal, so fast minus brute >= -rounding
        for seed in range(5):
            A, _ = gen_general_instance(GenConfig(20, 5, seed=seed))
            for i in range(5):
                _, fast_res, brute_res = canonical_probe(A, i)
                assert fast_res - brute_res >= -1e-10 * (1 + brute_res)

    def test_witness_y_reproduces_gap(self, skew_fixture):
        A = skew_fixture[0]
        w = converse_witness_search(A)
        refast = fast_sparse_solve(A, w.y, 1)
        rebrute = brute_force_solve(A, w.y, 1)
        assert refast.residual == pytest.approx(w.fast_residual, rel=1e-14)
        assert rebrute.residual == pytest.approx(w.brute_residual, rel=1e-14)

    def test_single_column_rejected(self):
        with pytest.raises(DimensionError):
            converse_witness_search(np.array([[1.0], [2.0]]))
