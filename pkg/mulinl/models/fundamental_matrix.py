import numpy as np

from mulinl.models.model import ProblemModel


class FundamentalMatrix(ProblemModel):
    """Epipolar constraint [x' y' 1] F [x y 1]^T = 0 on point pairs
    (x, y, x', y').

    theta = (F31, F32, F13, F23, F11, F21, F12, F22) and alpha = -F33.
    """
    name = 'fundmat'
    l = 4
    m = 8
    coordinate_blocks = ((0, 2), (2, 4))
    column_names = ('x', 'y', 'x_prime', 'y_prime')

    def carriers(self, points):
        (x, y, xp, yp) = np.asarray(points, dtype=float).T
        return np.stack([x, y, xp, yp, x * xp, x * yp, y * xp, y * yp], axis=-1)[:, None, :]

    def jacobians(self, points):
        (x, y, xp, yp) = np.asarray(points, dtype=float).T
        jacobians = np.zeros((len(x), 1, 8, 4))
        jacobians[:, 0, 0, 0] = 1
        jacobians[:, 0, 1, 1] = 1
        jacobians[:, 0, 2, 2] = 1
        jacobians[:, 0, 3, 3] = 1
        jacobians[:, 0, 4, 0] = xp
        jacobians[:, 0, 4, 2] = x
        jacobians[:, 0, 5, 0] = yp
        jacobians[:, 0, 5, 3] = x
        jacobians[:, 0, 6, 1] = xp
        jacobians[:, 0, 6, 2] = y
        jacobians[:, 0, 7, 1] = yp
        jacobians[:, 0, 7, 3] = y
        return jacobians

    @staticmethod
    def matrix(hypothesis, rank2=False):
        theta = hypothesis.theta
        fundamental = np.array([[theta[4], theta[6], theta[2]],
                                [theta[5], theta[7], theta[3]],
                                [theta[0], theta[1], -hypothesis.alpha]])
        if rank2:
            (u, singular_values, vt) = np.linalg.svd(fundamental)
            singular_values[2] = 0
            fundamental = u @ np.diag(singular_values) @ vt
        return fundamental

    def geometry(self, hypothesis, rank2=False, **options):
        return {'matrix': self.matrix(hypothesis, rank2=rank2)}
