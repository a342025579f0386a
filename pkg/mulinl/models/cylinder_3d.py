from dataclasses import dataclass
import numpy as np

from mulinl.models.model import Hypothesis, \
                                ProblemModel


@dataclass
class CylinderTolerances:
    singular_ratio: float = 0.01
    equal_ratio: float = 0.05
    max_angle_degrees: float = 1.0


class Cylinder3D(ProblemModel):
    """General quadric [y 1] P [y 1]^T = 0 restricted to cylinders.

    theta = (a, 2b, 2c, d, 2e, f, 2g, 2h, 2k) and alpha = -p for
    P = [[a, b, c, g], [b, d, e, h], [c, e, f, k], [g, h, k, p]].
    """
    name = 'cylinder3d'
    l = 3
    m = 9
    coordinate_blocks = ((0, 3),)
    column_names = ('x', 'y', 'z')

    def __init__(self, cylinder=None, **kwargs):
        super().__init__(**kwargs)
        self.tolerances = cylinder or CylinderTolerances()

    def carriers(self, points):
        (x, y, z) = np.asarray(points, dtype=float).T
        return np.stack([x * x, x * y, x * z, y * y, y * z, z * z, x, y, z], axis=-1)[:, None, :]

    def jacobians(self, points):
        (x, y, z) = np.asarray(points, dtype=float).T
        jacobians = np.zeros((len(x), 1, 9, 3))
        jacobians[:, 0, 0, 0] = 2 * x
        jacobians[:, 0, 1, 0] = y
        jacobians[:, 0, 1, 1] = x
        jacobians[:, 0, 2, 0] = z
        jacobians[:, 0, 2, 2] = x
        jacobians[:, 0, 3, 1] = 2 * y
        jacobians[:, 0, 4, 1] = z
        jacobians[:, 0, 4, 2] = y
        jacobians[:, 0, 5, 2] = 2 * z
        jacobians[:, 0, 6, 0] = 1
        jacobians[:, 0, 7, 1] = 1
        jacobians[:, 0, 8, 2] = 1
        return jacobians

    @staticmethod
    def quadric_from_hypothesis(hypothesis):
        (a, b2, c2, d, e2, f, g2, h2, k2) = hypothesis.theta
        (b, c, e, g, h, k) = (b2 / 2, c2 / 2, e2 / 2, g2 / 2, h2 / 2, k2 / 2)
        return np.array([[a, b, c, g],
                         [b, d, e, h],
                         [c, e, f, k],
                         [g, h, k, -hypothesis.alpha]])

    @staticmethod
    def hypothesis_from_quadric(quadric):
        quadric = (quadric + quadric.T) / 2
        theta = [quadric[0, 0], 2 * quadric[0, 1], 2 * quadric[0, 2],
                 quadric[1, 1], 2 * quadric[1, 2], quadric[2, 2],
                 2 * quadric[0, 3], 2 * quadric[1, 3], 2 * quadric[2, 3]]
        return Hypothesis.from_vector(np.append(theta, quadric[3, 3]))

    def elemental_equations(self, carriers):
        # nine-point solve on vech(X X^T), X = [x y z 1]
        carriers = np.asarray(carriers, dtype=float).reshape(-1, 9)
        (xx, xy, xz, yy, yz, zz, x, y, z) = carriers.T
        ones = np.ones_like(x)
        return np.stack([xx, 2 * xy, 2 * xz, 2 * x,
                         yy, 2 * yz, 2 * y,
                         zz, 2 * z,
                         ones], axis=-1)

    def hypothesis_from_nullspace(self, vech):
        (a, b, c, g, d, e, h, f, k, p) = vech
        quadric = np.array([[a, b, c, g],
                            [b, d, e, h],
                            [c, e, f, k],
                            [g, h, k, p]])
        return self.hypothesis_from_quadric(quadric)

    def validate_hypothesis(self, hypothesis):
        quadric = self.quadric_from_hypothesis(hypothesis)
        block = quadric[:3, :3]
        offset = quadric[:3, 3]
        singular_values = np.linalg.svd(block, compute_uv=False)
        if not singular_values[0] > 0:
            return False
        if not singular_values[2] / singular_values[0] < self.tolerances.singular_ratio:
            return False
        if not (singular_values[0] - singular_values[1]) / singular_values[0] < self.tolerances.equal_ratio:
            return False
        parameters = self.cylinder_parameters(hypothesis)
        if parameters is None:
            return False
        (axis, _, radius) = parameters
        # the offset must lie in the radial plane: its axis component is measured
        # against |d|, or against s1 * r when the axis passes near the origin
        reference = max(np.linalg.norm(offset), singular_values[0] * radius)
        return abs(axis @ offset) < np.sin(np.radians(self.tolerances.max_angle_degrees)) * reference

    def cylinder_parameters(self, hypothesis):
        quadric = self.quadric_from_hypothesis(hypothesis)
        (eigenvalues, eigenvectors) = np.linalg.eigh(quadric[:3, :3])
        order = np.argsort(np.abs(eigenvalues))
        (axis_value, first, second) = eigenvalues[order]
        if first * second <= 0:
            return None
        if first < 0:
            quadric = -quadric
            (first, second) = (-first, -second)
            eigenvalues = -eigenvalues
        axis = eigenvectors[:, order[0]]
        radial = eigenvectors[:, order[1:]]
        offset = quadric[:3, 3]
        radial_values = eigenvalues[order[1:]]
        point = -radial @ ((radial.T @ offset) / radial_values)
        level = quadric[3, 3] + offset @ point
        radius_squared = -level / ((first + second) / 2)
        if not radius_squared > 0:
            return None
        return axis, point, float(np.sqrt(radius_squared))

    def geometry(self, hypothesis, **options):
        parameters = self.cylinder_parameters(hypothesis)
        if parameters is None:
            return {}
        (axis, point, radius) = parameters
        return {'axis': axis, 'point': point, 'radius': radius}
