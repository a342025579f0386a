import numpy as np
import pytest

from mulinl.bases.errors import InvalidInputError, \
                                UnknownModelError
from mulinl.models import carrier_covariance, \
                          Cylinder3D, \
                          DataPoint, \
                          Ellipse2D, \
                          FundamentalMatrix, \
                          Homography, \
                          Hypothesis, \
                          Line2D, \
                          ProblemModel, \
                          unit_determinant


MODELS = [Line2D, Ellipse2D, Cylinder3D, FundamentalMatrix, Homography]


def finite_difference_jacobians(model, points, step=1e-6):
    jacobians = np.zeros(model.jacobians(points).shape)
    for coordinate in range(model.l):
        shift = np.zeros(model.l)
        shift[coordinate] = step
        forward = model.carriers(points + shift)
        backward = model.carriers(points - shift)
        jacobians[..., coordinate] = (forward - backward) / (2 * step)
    return jacobians


class CarriersTest:
    def test_line_carrier_is_the_point(self):
        # When
        bundle = Line2D().lift([3, 4])

        # Then
        assert np.array_equal(bundle.carriers, [[3, 4]])
        assert np.array_equal(bundle.jacobians[0], np.eye(2))
        assert np.allclose(bundle.covariances[0], np.eye(2))

    def test_ellipse_carrier_and_jacobian(self):
        # When
        bundle = Ellipse2D().lift([2, 3])

        # Then
        assert np.array_equal(bundle.carriers[0], [2, 3, 4, 6, 9])
        assert np.array_equal(bundle.jacobians[0][:, 0], [1, 0, 4, 3, 0])

    def test_ellipse_carrier_covariance(self):
        # When
        bundle = Ellipse2D().lift([1, 0])

        # Then
        assert bundle.covariances[0][2, 2] == pytest.approx(4)

    def test_fundamental_carrier(self):
        # When
        bundle = FundamentalMatrix().lift([1, 2, 3, 4])

        # Then
        assert np.array_equal(bundle.carriers[0], [1, 2, 3, 4, 3, 4, 6, 8])

    def test_homography_has_two_carriers(self):
        # When
        bundle = Homography().lift([1, 2, 3, 4])

        # Then
        assert bundle.carriers.shape == (2, 9)
        assert bundle.zeta == 2
        assert np.array_equal(bundle.carriers[0], [-1, -2, -1, 0, 0, 0, 3, 6, 3])
        assert np.array_equal(bundle.carriers[1], [0, 0, 0, -1, -2, -1, 4, 8, 4])

    def test_cylinder_carrier(self):
        # When
        bundle = Cylinder3D().lift([1, 2, 3])

        # Then
        assert np.array_equal(bundle.carriers[0], [1, 2, 3, 4, 6, 9, 1, 2, 3])

    def test_data_point_covariance_is_rescaled(self):
        # When
        point = DataPoint(y=[1, 2], covariance=np.diag([4, 1]))

        # Then
        assert np.linalg.det(point.covariance) == pytest.approx(1)
        assert np.allclose(point.covariance, np.diag([2, 0.5]))

    def test_wrong_dimension_raises(self):
        # When
        with pytest.raises(InvalidInputError) as errors:
            Line2D().lift([1, 2, 3])

        # Then
        assert 'expected 2 columns, found 3.' in errors.value.errors['points']

    def test_non_finite_point_raises(self):
        # When
        with pytest.raises(InvalidInputError):
            Line2D().lift([1, np.inf])

    def test_singular_covariance_raises(self):
        # When
        with pytest.raises(InvalidInputError):
            unit_determinant(np.zeros((2, 2)))

    def test_negative_definite_covariance_raises(self):
        # When
        with pytest.raises(InvalidInputError):
            DataPoint(y=[1, 2], covariance=-np.eye(2))

    def test_indefinite_covariance_with_positive_determinant_raises(self):
        # When
        with pytest.raises(InvalidInputError):
            unit_determinant(-np.eye(4))

    def test_asymmetric_covariance_raises(self):
        # When
        with pytest.raises(InvalidInputError):
            unit_determinant([[2.0, 1.0], [0.0, 2.0]])

    def test_negative_definite_covariances_are_refused_when_lifting(self):
        # When
        with pytest.raises(InvalidInputError):
            Line2D().lift_all([[0, 0], [1, 1]], [-np.eye(2)] * 2)

    @pytest.mark.parametrize('model_class', MODELS)
    def test_jacobians_match_finite_differences(self, model_class, rng):
        # Given
        model = model_class()
        points = rng.uniform(-2, 2, size=(100, model.l))

        # When
        analytic = model.jacobians(points)
        numeric = finite_difference_jacobians(model, points)

        # Then
        assert analytic.shape == (100, model.zeta, model.m, model.l)
        assert np.all(np.abs(analytic - numeric) <= 1e-5 * np.maximum(1, np.abs(analytic)))

    @pytest.mark.parametrize('model_class', MODELS)
    def test_carrier_covariances_are_symmetric(self, model_class, rng):
        # Given
        model = model_class()
        points = rng.uniform(-2, 2, size=(10, model.l))

        # When
        lifted = model.lift_all(points, np.diag(np.arange(1, model.l + 1, dtype=float)))

        # Then
        assert lifted.covariances.shape == (10, model.zeta, model.m, model.m)
        assert np.allclose(lifted.covariances, np.swapaxes(lifted.covariances, -1, -2))

    def test_carrier_covariance_propagates(self):
        # Given
        jacobian = np.array([[1.0, 0.0], [2.0, 1.0]])

        # When
        covariance = carrier_covariance(jacobian, np.diag([1.0, 4.0]))

        # Then
        assert np.allclose(covariance, [[1, 2], [2, 8]])


class ElementalSolveTest:
    def test_line_through_two_points(self):
        # When
        hypothesis = Line2D().solve_elemental([[0, 0], [1, 1]])

        # Then
        assert np.allclose(np.abs(hypothesis.theta), [1 / np.sqrt(2), 1 / np.sqrt(2)])
        assert hypothesis.theta[0] * hypothesis.theta[1] < 0
        assert hypothesis.alpha == pytest.approx(0, abs=1e-12)

    def test_line_intercept_has_the_hypothesis_sign(self):
        # When
        hypothesis = Line2D().solve_elemental([[0, 2], [5, 2]])

        # Then
        assert hypothesis.projections(np.array([[7.0, 2.0]]))[0] == pytest.approx(0, abs=1e-12)
        assert abs(hypothesis.alpha) == pytest.approx(2)
        assert hypothesis.alpha == pytest.approx(2 * hypothesis.theta[1])

    def test_repeated_points_are_degenerate(self):
        # When
        hypothesis = Line2D().solve_elemental([[1, 1], [1, 1]])

        # Then
        assert hypothesis is None

    def test_homography_of_identity_pairs(self):
        # Given
        pairs = [[0, 0, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [1, 1, 1, 1]]

        # When
        hypothesis = Homography().solve_elemental(pairs)

        # Then
        assert np.allclose(np.abs(hypothesis.theta), np.eye(3).ravel() / np.sqrt(3))
        assert hypothesis.alpha == 0

    def test_data_points_are_accepted(self):
        # When
        hypothesis = Line2D().solve_elemental([DataPoint(y=[0, 0]), DataPoint(y=[0, 3])])

        # Then
        assert np.allclose(np.abs(hypothesis.theta), [1, 0])


class HypothesisTest:
    def test_flipped_describes_the_same_structure(self):
        # Given
        hypothesis = Hypothesis(theta=[0.6, 0.8], alpha=2)
        carriers = np.array([[1.0, 1.0], [2.0, 0.5]])

        # When
        flipped = hypothesis.flipped()

        # Then
        assert np.allclose(flipped.projections(carriers), -hypothesis.projections(carriers))

    def test_vector_round_trip(self):
        # Given
        hypothesis = Hypothesis(theta=[0.6, 0.8], alpha=2)

        # When
        rebuilt = Hypothesis.from_vector(hypothesis.as_vector())

        # Then
        assert np.allclose(rebuilt.theta, hypothesis.theta)
        assert rebuilt.alpha == pytest.approx(2)

    def test_from_vector_refuses_null_theta(self):
        assert Hypothesis.from_vector([0, 0, 1]) is None


class ModelRegistryTest:
    def test_finds_every_model_by_name(self):
        # When
        names = sorted(model.name for model in ProblemModel.models())

        # Then
        assert names == ['cylinder3d', 'ellipse2d', 'fundmat', 'homography', 'line2d']

    def test_model_from_name_forwards_options(self):
        # When
        model = ProblemModel.model_from_name('ellipse2d', max_axis_ratio=3, degeneracy_ratio=1e-6)

        # Then
        assert isinstance(model, Ellipse2D)
        assert model.max_axis_ratio == 3
        assert model.degeneracy_ratio == 1e-6

    def test_unknown_model_raises(self):
        # When
        with pytest.raises(UnknownModelError) as errors:
            ProblemModel.model_from_name('plane3d')

        # Then
        assert 'model' in errors.value.errors

    def test_elemental_sizes(self):
        assert [model_class().m_e for model_class in MODELS] == [2, 5, 9, 8, 4]
