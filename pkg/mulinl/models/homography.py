import numpy as np

from mulinl.models.model import Hypothesis, \
                                ProblemModel


class Homography(ProblemModel):
    """Planar homography [x' y' 1]^T ~ H [x y 1]^T on point pairs (x, y, x', y').

    Each pair yields two DLT rows, theta = H.ravel() has unit norm and
    there is no intercept.
    """
    name = 'homography'
    l = 4
    m = 9
    zeta = 2
    m_e = 4
    has_intercept = False
    coordinate_blocks = ((0, 2), (2, 4))
    column_names = ('x', 'y', 'x_prime', 'y_prime')

    def carriers(self, points):
        (x, y, xp, yp) = np.asarray(points, dtype=float).T
        zeros = np.zeros_like(x)
        ones = np.ones_like(x)
        first = np.stack([-x, -y, -ones, zeros, zeros, zeros, xp * x, xp * y, xp], axis=-1)
        second = np.stack([zeros, zeros, zeros, -x, -y, -ones, yp * x, yp * y, yp], axis=-1)
        return np.stack([first, second], axis=1)

    def jacobians(self, points):
        (x, y, xp, yp) = np.asarray(points, dtype=float).T
        jacobians = np.zeros((len(x), 2, 9, 4))
        jacobians[:, 0, 0, 0] = -1
        jacobians[:, 0, 1, 1] = -1
        jacobians[:, 0, 6, 0] = xp
        jacobians[:, 0, 7, 1] = xp
        jacobians[:, 0, 6, 2] = x
        jacobians[:, 0, 7, 2] = y
        jacobians[:, 0, 8, 2] = 1
        jacobians[:, 1, 3, 0] = -1
        jacobians[:, 1, 4, 1] = -1
        jacobians[:, 1, 6, 0] = yp
        jacobians[:, 1, 7, 1] = yp
        jacobians[:, 1, 6, 3] = x
        jacobians[:, 1, 7, 3] = y
        jacobians[:, 1, 8, 3] = 1
        return jacobians

    @staticmethod
    def matrix(hypothesis):
        return hypothesis.theta.reshape(3, 3).copy()

    def normalize_hypothesis(self, hypothesis, transform):
        first = transform.homogeneous_matrix(0)
        second = transform.homogeneous_matrix(1)
        normalized = second @ self.matrix(hypothesis) @ np.linalg.inv(first)
        return Hypothesis.from_vector(normalized.ravel(), has_intercept=False)

    def denormalize_hypothesis(self, hypothesis, transform):
        first = transform.homogeneous_matrix(0)
        second = transform.homogeneous_matrix(1)
        original = np.linalg.solve(second, self.matrix(hypothesis)) @ first
        return Hypothesis.from_vector(original.ravel(), has_intercept=False)

    def geometry(self, hypothesis, **options):
        return {'matrix': self.matrix(hypothesis)}
