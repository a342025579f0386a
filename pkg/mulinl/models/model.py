import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
import numpy as np

from mulinl.bases.errors import InvalidInputError, \
                                UnknownModelError


DEGENERACY_RATIO = 1e-8
ELEMENTAL_CHUNK = 4096
MIN_THETA_NORM = 1e-12
SYMMETRY_TOLERANCE = 1e-9


@dataclass
class DataPoint:
    y: np.ndarray
    covariance: Optional[np.ndarray] = None

    def __post_init__(self):
        self.y = np.asarray(self.y, dtype=float).ravel()
        if self.covariance is not None:
            self.covariance = unit_determinant(self.covariance)

    def covariance_or_identity(self):
        if self.covariance is None:
            return np.eye(self.y.size)
        return self.covariance


@dataclass
class CarrierBundle:
    carriers: np.ndarray
    jacobians: np.ndarray
    covariances: np.ndarray

    @property
    def zeta(self):
        return self.carriers.shape[0]


@dataclass
class Hypothesis:
    theta: np.ndarray
    alpha: float = 0.0

    def __post_init__(self):
        self.theta = np.asarray(self.theta, dtype=float).ravel()
        self.alpha = float(self.alpha)

    @classmethod
    def from_vector(cls, vector, has_intercept=True):
        vector = np.asarray(vector, dtype=float).ravel()
        theta = vector[:-1] if has_intercept else vector
        alpha = -vector[-1] if has_intercept else 0.0
        norm = np.linalg.norm(theta)
        if not np.isfinite(norm) or norm < MIN_THETA_NORM:
            return None
        return cls(theta=theta / norm, alpha=alpha / norm)

    def flipped(self):
        return Hypothesis(theta=-self.theta, alpha=-self.alpha)

    def as_vector(self, has_intercept=True):
        if has_intercept:
            return np.append(self.theta, -self.alpha)
        return self.theta.copy()

    def projections(self, carriers):
        return carriers @ self.theta - self.alpha


@dataclass
class LiftedPoints:
    carriers: np.ndarray
    jacobians: np.ndarray
    covariances: np.ndarray

    def __len__(self):
        return self.carriers.shape[0]

    def subset(self, indices):
        return LiftedPoints(carriers=self.carriers[indices],
                            jacobians=self.jacobians[indices],
                            covariances=self.covariances[indices])

    def bundle(self, index):
        return CarrierBundle(carriers=self.carriers[index],
                             jacobians=self.jacobians[index],
                             covariances=self.covariances[index])


def is_symmetric_positive_definite(matrix):
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or not np.all(np.isfinite(matrix)):
        return False
    if not np.allclose(matrix, matrix.T, rtol=SYMMETRY_TOLERANCE, atol=0):
        return False
    try:
        np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError:
        return False
    return True


def unit_determinant(covariance):
    covariance = np.asarray(covariance, dtype=float)
    if not is_symmetric_positive_definite(covariance):
        errors = InvalidInputError()
        errors.add_error('covariance', 'must be symmetric positive definite.')
        raise errors
    determinant = np.linalg.det(covariance)
    return covariance / determinant ** (1.0 / covariance.shape[-1])


def carrier_covariance(jacobian, c_y):
    jacobian = np.asarray(jacobian, dtype=float)
    return jacobian @ np.asarray(c_y, dtype=float) @ np.swapaxes(jacobian, -1, -2)


class ProblemModel():
    name = None
    l = None
    m = None
    zeta = 1
    has_intercept = True
    coordinate_blocks: Sequence[Tuple[int, int]] = ()
    column_names: Sequence[str] = ()

    def __init__(self, degeneracy_ratio=DEGENERACY_RATIO, **options):
        self.degeneracy_ratio = degeneracy_ratio

    @property
    def m_e(self):
        return math.ceil(self.m / self.zeta)

    @property
    def unknowns(self):
        return self.m + 1 if self.has_intercept else self.m

    def carriers(self, points):
        raise NotImplementedError

    def jacobians(self, points):
        raise NotImplementedError

    def check_points(self, points):
        points = np.asarray(points, dtype=float)
        if points.ndim == 1:
            points = points.reshape(1, -1)
        errors = InvalidInputError()
        if errors.check_columns('points', points, self.l):
            errors.check_finite('points', points)
        errors.maybe_raise()
        return points

    def lift(self, y, covariance=None):
        if isinstance(y, DataPoint):
            covariance = y.covariance if covariance is None else covariance
            y = y.y
        lifted = self.lift_all(self.check_points(y),
                               None if covariance is None else [covariance])
        return lifted.bundle(0)

    def lift_all(self, points, covariances=None):
        points = self.check_points(points)
        carriers = self.carriers(points)
        jacobians = self.jacobians(points)
        if covariances is None:
            covariance_matrices = jacobians @ np.swapaxes(jacobians, -1, -2)
        else:
            c_y = np.asarray(covariances, dtype=float)
            if c_y.ndim == 2:
                c_y = np.broadcast_to(c_y, (points.shape[0],) + c_y.shape)
            c_y = np.stack([unit_determinant(c) for c in c_y])
            covariance_matrices = carrier_covariance(jacobians, c_y[:, None, :, :])
        return LiftedPoints(carriers=carriers,
                            jacobians=jacobians,
                            covariances=covariance_matrices)

    def solve_elemental(self, subset):
        subset = [point.y if isinstance(point, DataPoint) else point for point in subset]
        points = self.check_points(np.asarray(subset, dtype=float))
        hypothesis = self.solve_from_carriers(self.carriers(points))
        if hypothesis is None or not self.validate_hypothesis(hypothesis):
            return None
        return hypothesis

    def solve_elementals(self, subsets, chunk_by=ELEMENTAL_CHUNK):
        """Solves a stack of elemental subsets, shaped (count, m_e, l), with
        one batched singular value decomposition per chunk. Gives a list
        holding a hypothesis or None per subset."""
        subsets = np.asarray(subsets, dtype=float)
        (count, size) = subsets.shape[:2]
        carriers = self.carriers(subsets.reshape(count * size, -1))
        carriers = carriers.reshape((count, size) + carriers.shape[1:])
        hypotheses = []
        for start in range(0, count, chunk_by):
            equations = np.stack([self.elemental_equations(chunk_carriers)
                                  for chunk_carriers in carriers[start:start + chunk_by]])
            for vector in self.nullspace_vectors(equations):
                hypothesis = None if vector is None else self.hypothesis_from_nullspace(vector)
                if hypothesis is not None and not self.validate_hypothesis(hypothesis):
                    hypothesis = None
                hypotheses.append(hypothesis)
        return hypotheses

    def equations_from_carriers(self, carriers):
        rows = np.asarray(carriers, dtype=float).reshape(-1, self.m)
        if self.has_intercept:
            rows = np.hstack([rows, np.ones((rows.shape[0], 1))])
        return rows

    def elemental_equations(self, carriers):
        return self.equations_from_carriers(carriers)

    def hypothesis_from_nullspace(self, vector):
        return Hypothesis.from_vector(vector, self.has_intercept)

    def nullspace_vectors(self, equations):
        # equations is (count, rows, unknowns)
        (count, rows, unknowns) = equations.shape
        if rows < unknowns - 1:
            return [None] * count
        finite = np.isfinite(equations).all(axis=(1, 2))
        safe = np.where(finite[:, None, None], equations, 0.0)
        _, singular_values, vt = np.linalg.svd(safe, full_matrices=True)
        largest = singular_values[:, 0]
        with np.errstate(divide='ignore', invalid='ignore'):
            ratios = singular_values[:, unknowns - 2] / largest
        usable = finite & (largest > 0) & (ratios >= self.degeneracy_ratio)
        return [vt[index, -1] if usable[index] else None for index in range(count)]

    def nullspace_vector(self, equations):
        return self.nullspace_vectors(np.asarray(equations, dtype=float)[None])[0]

    def solve_from_carriers(self, carriers):
        vector = self.nullspace_vector(self.elemental_equations(carriers))
        if vector is None:
            return None
        return self.hypothesis_from_nullspace(vector)

    def validate_hypothesis(self, hypothesis):
        return True

    def geometry(self, hypothesis, **options):
        return {}

    def normalize_hypothesis(self, hypothesis, transform):
        basis = transform.carrier_basis(self)
        vector = basis.T @ hypothesis.as_vector(self.has_intercept)
        return Hypothesis.from_vector(vector, self.has_intercept)

    def denormalize_hypothesis(self, hypothesis, transform):
        basis = transform.carrier_basis(self)
        vector = np.linalg.solve(basis.T, hypothesis.as_vector(self.has_intercept))
        return Hypothesis.from_vector(vector, self.has_intercept)

    def __repr__(self):
        return '<{} l={} m={} zeta={} m_e={}>'.format(self.__class__.__name__,
                                                     self.l,
                                                     self.m,
                                                     self.zeta,
                                                     self.m_e)

    @classmethod
    def models(cls):
        found = []
        for subclass in cls.__subclasses__():
            if subclass.name:
                found.append(subclass)
            found += subclass.models()
        return found

    @classmethod
    def model_from_name(cls, name, **options):
        for model in cls.models():
            if model.name == name:
                return model(**options)
        errors = UnknownModelError()
        errors.add_error('model',
                         'unknown model {}, expected one of {}'.format(name,
                                                                      ', '.join(sorted(m.name for m in cls.models()))))
        raise errors
