from dataclasses import dataclass, \
                        field
from typing import List, Optional, Tuple
import numpy as np

from mulinl.bases.errors import ConfigError, \
                                DegenerateDataError, \
                                InvalidInputError, \
                                StructureNotFoundError, \
                                TooFewPointsError
from mulinl.bases.recover import MEAN_SHIFT_ITERATIONS, \
                                 MEAN_SHIFT_TOLERANCE
from mulinl.bases.refit import Refit, \
                               TLS_RELATIVE_CHANGE, \
                               TLS_SWEEPS
from mulinl.bases.scale import DENOMINATOR_CLAMP
from mulinl.models.cylinder_3d import CylinderTolerances
from mulinl.models.ellipse_2d import MAX_AXIS_RATIO
from mulinl.models.model import DEGENERACY_RATIO, \
                                unit_determinant
from mulinl.models.normalization import denormalize, \
                                        normalize, \
                                        NormalizationTransform
from mulinl.utils.config import MULINL_SEED
from mulinl.utils.logger import counted, \
                                logger


DEFAULT_TRIALS = 1000
EXACT_FIT_CLAMP = 1e-12
MAX_CONSECUTIVE_FAILURES = 2
SIGMA_TLS_MODES = ('max', 'robust')


@dataclass
class TolerancesConfig:
    mean_shift_tolerance: float = MEAN_SHIFT_TOLERANCE
    mean_shift_iterations: int = MEAN_SHIFT_ITERATIONS
    tls_sweeps: int = TLS_SWEEPS
    tls_relative_change: float = TLS_RELATIVE_CHANGE
    denominator_clamp: float = DENOMINATOR_CLAMP
    degeneracy_ratio: float = DEGENERACY_RATIO
    exact_fit_clamp: float = EXACT_FIT_CLAMP


@dataclass
class EstimatorConfig:
    trials: int = DEFAULT_TRIALS
    epsilon: float = 5.0
    threshold: float = 0.5
    recovery_ratio: float = 0.1
    min_recovery_trials: int = 50
    rank_cap: float = 50.0
    seed: int = MULINL_SEED
    normalize: bool = True
    include_first_segment: bool = True
    sigma_tls_mode: str = 'max'
    max_attempts: int = 100
    max_workers: Optional[int] = None
    tolerances: TolerancesConfig = field(default_factory=TolerancesConfig)
    cylinder: CylinderTolerances = field(default_factory=CylinderTolerances)
    max_axis_ratio: float = MAX_AXIS_RATIO
    rank2_export: bool = False

    @classmethod
    def from_dict(cls, datum):
        datum = dict(datum)
        if isinstance(datum.get('tolerances'), dict):
            datum['tolerances'] = TolerancesConfig(**datum['tolerances'])
        if isinstance(datum.get('cylinder'), dict):
            datum['cylinder'] = CylinderTolerances(**datum['cylinder'])
        return cls(**datum)

    def validate(self):
        errors = ConfigError()
        if self.trials < 1:
            errors.add_error('trials', 'must be at least 1, got {}.'.format(self.trials))
        errors.check_range('epsilon', self.epsilon, 0, 50)
        errors.check_range('threshold', self.threshold, 0, 1)
        if not self.epsilon < self.rank_cap <= 100:
            errors.add_error('rank_cap',
                             'must be in ({}, 100], got {}.'.format(self.epsilon, self.rank_cap))
        errors.check_positive('recovery_ratio', self.recovery_ratio)
        if self.min_recovery_trials < 1:
            errors.add_error('min_recovery_trials', 'must be at least 1.')
        if self.max_attempts < 1:
            errors.add_error('max_attempts', 'must be at least 1.')
        if self.sigma_tls_mode not in SIGMA_TLS_MODES:
            errors.add_error('sigma_tls_mode',
                             'must be one of {}, got {}.'.format(', '.join(SIGMA_TLS_MODES),
                                                                self.sigma_tls_mode))
        errors.check_positive('max_axis_ratio', self.max_axis_ratio)
        for name in ('mean_shift_tolerance', 'denominator_clamp', 'degeneracy_ratio', 'exact_fit_clamp'):
            errors.check_positive('tolerances.{}'.format(name), getattr(self.tolerances, name))
        errors.maybe_raise()
        return self

    def model_options(self):
        return {'degeneracy_ratio': self.tolerances.degeneracy_ratio,
                'max_axis_ratio': self.max_axis_ratio,
                'cylinder': self.cylinder}


@dataclass
class StructureEstimate:
    inliers: np.ndarray
    hypothesis: object
    sigma_hat: float
    sigma_tls: float
    strength: float
    discovery: int
    exact_fit: bool = False
    weak: bool = False
    region: Optional[Tuple[float, float]] = None
    rank: Optional[int] = None

    @property
    def n_in(self):
        return len(self.inliers)

    @property
    def theta(self):
        return self.hypothesis.theta

    @property
    def alpha(self):
        return self.hypothesis.alpha


@dataclass
class IterationDiagnostics:
    iteration: int
    remaining: int
    status: str
    sigma_hat: Optional[float] = None
    region: Optional[Tuple[float, float]] = None
    weak: bool = False
    density: Optional[float] = None
    n_in: Optional[int] = None
    strength: Optional[float] = None
    message: Optional[str] = None


@dataclass
class EstimationResult:
    structures: List[StructureEstimate]
    unclassified: np.ndarray
    diagnostics: List[IterationDiagnostics] = field(default_factory=list)
    n: int = 0

    @property
    def strengths(self):
        return [structure.strength for structure in self.structures]

    @property
    def strength_gap(self):
        return strength_gap(self.strengths)

    def labels(self):
        labels = np.full(self.n, -1, dtype=int)
        for (index, structure) in enumerate(self.structures):
            labels[structure.inliers] = index
        return labels


def strength(n_in, sigma_tls, clamp=EXACT_FIT_CLAMP):
    return n_in / max(sigma_tls, clamp)


def strength_gap(strengths):
    """Index i of the largest ratio strengths[i] / strengths[i + 1]."""
    if len(strengths) < 2:
        return None
    ratios = [current / following if following > 0 else np.inf
              for (current, following) in zip(strengths[:-1], strengths[1:])]
    return int(np.argmax(ratios))


class Pipeline(Refit):

    def prepared_covariances(self, points, covariances):
        if covariances is None:
            return np.broadcast_to(np.eye(self.model.l), (len(points), self.model.l, self.model.l))
        covariances = np.asarray(covariances, dtype=float)
        if covariances.ndim == 2:
            covariances = np.broadcast_to(unit_determinant(covariances),
                                          (len(points),) + covariances.shape)
        else:
            covariances = np.stack([unit_determinant(covariance) for covariance in covariances])
        if covariances.shape != (len(points), self.model.l, self.model.l):
            errors = InvalidInputError()
            errors.add_error('covariances', 'expected one {0}x{0} matrix per point.'.format(self.model.l))
            raise errors
        return covariances

    def estimate_structure(self, points, covariances, remaining, iteration):
        model = self.model
        config = self.config
        tolerances = config.tolerances
        current = points[remaining]
        current_covariances = covariances[remaining]

        if config.normalize:
            (normalized, transform) = normalize(current, model)
        else:
            (normalized, transform) = (current, NormalizationTransform.identity(model))
        lifted = model.lift_all(normalized, transform.transform_covariances(current_covariances))

        scale = self.estimate_iteration_scale(normalized, lifted, iteration)
        recovered = self.recover_structure(normalized, lifted, scale, iteration)
        if not len(recovered.inliers):
            errors = StructureNotFoundError()
            errors.add_error('recovery', 'the mode at {:.6g} kept no point.'.format(recovered.mode.mode))
            raise errors

        fit = self.tls_refit(lifted.subset(recovered.inliers),
                             recovered.hypothesis,
                             has_intercept=model.has_intercept,
                             sweeps=tolerances.tls_sweeps,
                             relative_change=tolerances.tls_relative_change,
                             sigma_mode=config.sigma_tls_mode,
                             clamp=tolerances.denominator_clamp)

        if config.normalize:
            (hypothesis, sigma_hat) = denormalize(model, transform, fit.hypothesis, scale.sigma_hat)
            if hypothesis is None:
                errors = DegenerateDataError()
                errors.add_error('hypothesis', 'could not be mapped back to the input space.')
                raise errors
        else:
            (hypothesis, sigma_hat) = (fit.hypothesis, scale.sigma_hat)

        inliers = remaining[recovered.inliers]
        original = model.lift_all(points[inliers], covariances[inliers])
        sigma_tls = self.tls_scale(original, hypothesis, config.sigma_tls_mode, tolerances.denominator_clamp)
        exact_fit = sigma_tls < tolerances.exact_fit_clamp
        sigma_tls = max(sigma_tls, tolerances.exact_fit_clamp)

        structure = StructureEstimate(inliers=np.sort(inliers),
                                      hypothesis=hypothesis,
                                      sigma_hat=sigma_hat,
                                      sigma_tls=sigma_tls,
                                      strength=strength(len(inliers), sigma_tls, tolerances.exact_fit_clamp),
                                      discovery=iteration,
                                      exact_fit=exact_fit,
                                      weak=scale.weak,
                                      region=scale.region)
        diagnostic = IterationDiagnostics(iteration=iteration,
                                          remaining=len(remaining),
                                          status='structure',
                                          sigma_hat=sigma_hat,
                                          region=scale.region,
                                          weak=scale.weak,
                                          density=recovered.mode.density,
                                          n_in=structure.n_in,
                                          strength=structure.strength)
        return structure, diagnostic

    def run(self, points, covariances=None):
        model = self.model
        points = model.check_points(points)
        covariances = self.prepared_covariances(points, covariances)
        n = len(points)
        remaining = np.arange(n)
        structures = []
        diagnostics = []

        if n < 5 * model.m_e:
            logger.warning(lambda: '{} cannot make an initial set for {}'.format(counted(n, 'point'), model))
            diagnostics.append(IterationDiagnostics(iteration=0,
                                                    remaining=n,
                                                    status='too-few-points',
                                                    message='needs at least {}.'.format(counted(5 * model.m_e,
                                                                                                'point'))))
            return EstimationResult(structures=[], unclassified=remaining, diagnostics=diagnostics, n=n)

        iteration = 0
        failures = 0
        while len(remaining) >= 10 * model.m_e and failures < MAX_CONSECUTIVE_FAILURES:
            try:
                (structure, diagnostic) = self.estimate_structure(points, covariances, remaining, iteration)
            except (StructureNotFoundError, TooFewPointsError) as errors:
                failures += 1
                logger.warning(lambda: 'iteration {} found no structure in {}: {}'.format(iteration,
                                                                                          counted(len(remaining), 'point'),
                                                                                          errors))
                diagnostics.append(IterationDiagnostics(iteration=iteration,
                                                        remaining=len(remaining),
                                                        status='failed',
                                                        message=str(errors)))
                iteration += 1
                continue
            except DegenerateDataError as errors:
                logger.warning(lambda: 'iteration {} stopped on degenerate data: {}'.format(iteration, errors))
                diagnostics.append(IterationDiagnostics(iteration=iteration,
                                                        remaining=len(remaining),
                                                        status='degenerate',
                                                        message=str(errors)))
                break

            failures = 0
            structures.append(structure)
            diagnostics.append(diagnostic)
            remaining = np.setdiff1d(remaining, structure.inliers, assume_unique=True)
            logger.info(lambda: 'iteration {}: sigma {:.6g}, {}, strength {:.6g}, {} left'.format(iteration,
                                                                                                   structure.sigma_hat,
                                                                                                   counted(structure.n_in, 'inlier'),
                                                                                                   structure.strength,
                                                                                                   counted(len(remaining), 'point')))
            iteration += 1

        structures = sorted(structures, key=lambda structure: -structure.strength)
        for (rank, structure) in enumerate(structures, 1):
            structure.rank = rank

        logger.info(lambda: '{} found, {} unclassified'.format(counted(len(structures), 'structure'),
                                                               counted(len(remaining), 'point')))
        return EstimationResult(structures=structures,
                                unclassified=remaining,
                                diagnostics=diagnostics,
                                n=n)
