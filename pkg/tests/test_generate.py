import numpy as np
import pytest

from orthosparse.exceptions import DimensionError
from orthosparse.generate import (
    GenConfig,
    gen_general_instance,
    gen_orthogonal_instance,
)
from orthosparse.linalg import gram, gram_coherence, gram_condition


class TestGenConfig:
    def test_defaults(self):
        cfg = GenConfig(10, 3, seed=0)
        assert cfg.scale_range == (0.5, 3.0)
        assert cfg.noise == 1.0

    @pytest.mark.parametrize("m,n", [(3, 3), (2, 5), (5, 0)])
    def test_bad_dimensions(self, m, n):
        with pytest.raises(DimensionError):
            GenConfig(m, n, seed=0)

    def test_bad_seed(self):
        with pytest.raises(ValueError):
            GenConfig(10, 3, seed=-1)
        with pytest.raises(ValueError):
            GenConfig(10, 3, seed=2**64)

    def test_bad_scales_and_noise(self):
        with pytest.raises(ValueError):
            GenConfig(10, 3, seed=0, scale_range=(0.0, 1.0))
        with pytest.raises(ValueError):
            GenConfig(10, 3, seed=0, scale_range=(2.0, 1.0))
        with pytest.raises(ValueError):
            GenConfig(10, 3, seed=0, noise=-0.1)


class TestOrthogonalInstances:
    def test_deterministic(self):
        cfg = GenConfig(18, 5, seed=123)
        A1, y1 = gen_orthogonal_instance(cfg)
        A2, y2 = gen_orthogonal_instance(cfg)
        assert np.array_equal(A1, A2) and np.array_equal(y1, y2)

    def test_seeds_differ(self):
        A1, _ = gen_orthogonal_instance(GenConfig(18, 5, seed=1))
        A2, _ = gen_orthogonal_instance(GenConfig(18, 5, seed=2))
        assert not np.array_equal(A1, A2)

    def test_columns_orthogonal(self):
        A, _ = gen_orthogonal_instance(GenConfig(30, 8, seed=5))
        assert gram_coherence(gram(A)) < 1e-12

    def test_column_norms_within_scale_range(self):
        cfg = GenConfig(30, 8, seed=9, scale_range=(0.5, 3.0))
        A, _ = gen_orthogonal_instance(cfg)
        norms = np.linalg.norm(A, axis=0)
        assert np.all(norms >= 0.5 - 1e-12) and np.all(norms <= 3.0 + 1e-12)
        assert len(np.unique(np.round(norms, 9))) == 8  # distinct scales

    def test_shapes(self):
        A, y = gen_orthogonal_instance(GenConfig(12, 4, seed=0))
        assert A.shape == (12, 4) and y.shape == (12,)
        assert A.flags["F_CONTIGUOUS"]

    def test_noise_stream_is_independent(self):
        # same matrix regardless of noise level: separate substreams
        quiet = GenConfig(15, 4, seed=7, noise=0.0)
        loud = GenConfig(15, 4, seed=7, noise=2.0)
        A1, y1 = gen_orthogonal_instance(quiet)
        A2, y2 = gen_orthogonal_instance(loud)
        assert np.array_equal(A1, A2)
        assert not np.array_equal(y1, y2)

    def test_zero_noise_lands_in_span(self):
        A, y = gen_orthogonal_instance(GenConfig(15, 4, seed=7, noise=0.0))
        x, *_ = np.linalg.lstsq(A, y, rcond=None)
        assert np.linalg.norm(A @ x - y) < 1e-10


class TestGeneralInstances:
    def test_deterministic(self):
        cfg = GenConfig(20, 6, seed=42)
        A1, y1 = gen_general_instance(cfg)
        A2, y2 = gen_general_instance(cfg)
        assert np.array_equal(A1, A2) and np.array_equal(y1, y2)

    def test_meets_thresholds(self):
        for seed in range(8):
            A, _ = gen_general_instance(
                GenConfig(25, 5, seed=seed), min_coherence=0.1, max_gram_condition=1e6
            )
            G = gram(A)
            assert gram_coherence(G) >= 0.1
            assert gram_condition(G) <= 1e6

    def test_needs_two_columns(self):
        with pytest.raises(DimensionError):
            gen_general_instance(GenConfig(5, 1, seed=0))
