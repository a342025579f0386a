import numpy as np
import pytest

from mulinl.models import FundamentalMatrix, \
                          Hypothesis, \
                          normalize
from mulinl.synthetic.generate import fundamental_matrix, \
                                      fundamental_points
from mulinl.synthetic.scene import SceneSpec


def motion_scene():
    return SceneSpec.from_dict({'model': 'fundmat',
                                'bounds': [[0, 640], [0, 480], [0, 640], [0, 480]],
                                'camera': {'focal': 800, 'width': 640, 'height': 480},
                                'outliers': 0,
                                'structures': [{'n_in': 30, 'sigma': 0,
                                                'rotation': [2, 5, 1],
                                                'translation': [1, 0.2, 0.1]}]})


def epipolar_residuals(fundamental, pairs):
    first = np.hstack([pairs[:, :2], np.ones((len(pairs), 1))])
    second = np.hstack([pairs[:, 2:], np.ones((len(pairs), 1))])
    residuals = np.einsum('ij,jk,ik->i', second, fundamental, first)
    return residuals / (np.linalg.norm(fundamental)
                        * np.linalg.norm(first, axis=1)
                        * np.linalg.norm(second, axis=1))


class FundamentalMatrixTest:
    def test_matrix_layout(self):
        # Given
        model = FundamentalMatrix()
        hypothesis = Hypothesis(theta=np.arange(1, 9, dtype=float), alpha=0.5)
        pairs = np.array([[1.0, 2.0, 3.0, 4.0]])

        # When
        matrix = model.matrix(hypothesis)

        # Then
        carrier_residual = model.carriers(pairs)[0, 0] @ hypothesis.theta - hypothesis.alpha
        matrix_residual = np.array([3.0, 4.0, 1.0]) @ matrix @ np.array([1.0, 2.0, 1.0])
        assert matrix_residual == pytest.approx(carrier_residual)

    def test_eight_pairs_recover_the_motion(self, rng):
        # Given
        spec = motion_scene()
        structure = spec.structures[0]
        pairs = fundamental_points(spec, structure, rng)
        model = FundamentalMatrix()
        (normalized, transform) = normalize(pairs, model)

        # When
        hypothesis = model.denormalize_hypothesis(model.solve_elemental(normalized[:8]), transform)
        matrix = model.matrix(hypothesis)

        # Then
        truth = fundamental_matrix(spec, structure)
        cosine = np.sum(matrix * truth) / (np.linalg.norm(matrix) * np.linalg.norm(truth))
        assert np.all(np.abs(epipolar_residuals(matrix, pairs)) < 1e-8)
        assert abs(cosine) == pytest.approx(1, abs=1e-6)

    def test_rank2_export_is_singular(self, rng):
        # Given
        model = FundamentalMatrix()
        hypothesis = Hypothesis(theta=rng.normal(size=8), alpha=0.3)

        # When
        geometry = model.geometry(hypothesis, rank2=True)

        # Then
        singular_values = np.linalg.svd(geometry['matrix'], compute_uv=False)
        assert singular_values[2] <= 1e-12 * singular_values[0]
        assert np.linalg.matrix_rank(model.matrix(hypothesis)) == 3
