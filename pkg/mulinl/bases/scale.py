from dataclasses import dataclass, \
                        field
from typing import List, Optional, Tuple
import numpy as np

from mulinl.bases.errors import StructureNotFoundError, \
                                TooFewPointsError
from mulinl.bases.sampler import round_half_up, \
                                 Sampler
from mulinl.utils.logger import counted, \
                                logger
from mulinl.utils.random import SCALE_STAGE


DENOMINATOR_CLAMP = 1e-15
MIN_SEGMENT_WIDTH = 1e-12


@dataclass
class WorstCase:
    distances: np.ndarray
    projections: np.ndarray
    variances: np.ndarray
    clamped: np.ndarray
    single: bool = False


@dataclass
class TrialDistances:
    trial: int
    hypothesis: object
    distances: np.ndarray
    order: Optional[np.ndarray] = None

    def __post_init__(self):
        self.distances = np.asarray(self.distances, dtype=float)
        if self.order is None:
            self.order = np.argsort(self.distances, kind='stable')

    @property
    def sorted_distances(self):
        return self.distances[self.order]

    def score(self, n_epsilon):
        return float(self.sorted_distances[:n_epsilon].sum())


@dataclass
class ExpansionRecord:
    percent: float
    width: float
    counts: np.ndarray
    stop: int

    @property
    def estimate(self):
        return self.stop * self.width


@dataclass
class ScaleEstimate:
    sigma_hat: float
    region: Optional[Tuple[float, float]]
    collected: np.ndarray
    records: List[ExpansionRecord] = field(default_factory=list)
    weak: bool = False
    trial: Optional[int] = None
    hypothesis: object = None


class ScaleEstimation(Sampler):

    @staticmethod
    def worst_case(lifted, hypothesis, clamp=DENOMINATOR_CLAMP):
        """Per point, the carrier with the largest Mahalanobis distance
        to the hypothesis, along with its projection and variance."""
        carriers = np.asarray(lifted.carriers, dtype=float)
        covariances = np.asarray(lifted.covariances, dtype=float)
        single = carriers.ndim == 2
        if single:
            carriers = carriers[None]
            covariances = covariances[None]
        theta = hypothesis.theta
        projections = carriers @ theta
        variances = (covariances @ theta) @ theta
        clamped = variances < clamp
        variances = np.maximum(variances, clamp)
        distances = np.abs(projections - hypothesis.alpha) / np.sqrt(variances)
        worst = np.argmax(distances, axis=1)
        rows = np.arange(len(worst))
        return WorstCase(distances=distances[rows, worst],
                         projections=projections[rows, worst],
                         variances=variances[rows, worst],
                         clamped=clamped.any(axis=1),
                         single=single)

    @staticmethod
    def mahalanobis(lifted, hypothesis, clamp=DENOMINATOR_CLAMP):
        worst = ScaleEstimation.worst_case(lifted, hypothesis, clamp)
        if worst.single:
            return float(worst.distances[0]), bool(worst.clamped[0])
        return worst.distances, worst.clamped

    @staticmethod
    def initial_set_size(n, epsilon, m_e):
        if n < 5 * m_e:
            errors = TooFewPointsError()
            errors.add_error('points',
                             'needs at least {}, got {}.'.format(counted(5 * m_e, 'point'), n))
            raise errors
        return max(round_half_up(epsilon * n / 100), 5 * m_e)

    @staticmethod
    def best_index(scores):
        # np.argmin keeps the first of equal minima
        return int(np.argmin(np.asarray(scores, dtype=float)))

    @staticmethod
    def select_best_trial(trials, n_epsilon):
        return ScaleEstimation.best_index([trial.score(n_epsilon) for trial in trials])

    @staticmethod
    def expansion_stop(counts, threshold=0.5, include_first_segment=True):
        counts = [int(count) for count in counts]
        running = counts[0]
        for k in range(1, len(counts)):
            if include_first_segment:
                average = running / k
            elif k == 1:
                average = counts[0]
            else:
                average = (running - counts[0]) / (k - 1)
            if average > 0:
                ratio = counts[k] / average
            else:
                ratio = np.inf if counts[k] else 0.0
            if ratio <= threshold:
                return k
            running += counts[k]
        return max(1, len(counts) - 1)

    @staticmethod
    def segment_counts(sorted_distances, width, max_segments):
        segments = np.floor(np.asarray(sorted_distances) / width)
        segments = segments[segments < max_segments].astype(np.int64)
        return np.bincount(segments)

    @staticmethod
    def estimate_scale(winning,
                       epsilon=5,
                       rank_cap=50,
                       threshold=0.5,
                       include_first_segment=True):
        sorted_distances = winning.sorted_distances
        n = len(sorted_distances)
        records = []
        start = None
        stop = None
        j = 0
        while epsilon + j <= rank_cap:
            percent = epsilon + j
            rank = min(max(round_half_up(percent * n / 100), 1), n)
            width = max(float(sorted_distances[rank - 1]), MIN_SEGMENT_WIDTH)
            counts = ScaleEstimation.segment_counts(sorted_distances, width, n)
            record = ExpansionRecord(percent=percent,
                                     width=width,
                                     counts=counts,
                                     stop=ScaleEstimation.expansion_stop(counts,
                                                                         threshold,
                                                                         include_first_segment))
            records.append(record)
            if start is None:
                if record.stop >= 2:
                    start = j
            elif record.stop == 1:
                stop = j
                break
            j += 1

        if start is None:
            sigma_hat = records[-1].width
            region = None
            weak = True
        else:
            region_records = records[start:stop]
            sigma_hat = max(record.estimate for record in region_records)
            region = (region_records[0].percent, region_records[-1].percent)
            weak = False

        collected_count = int(np.searchsorted(sorted_distances, sigma_hat, side='right'))
        return ScaleEstimate(sigma_hat=float(sigma_hat),
                             region=region,
                             collected=winning.order[:collected_count],
                             records=records,
                             weak=weak,
                             trial=winning.trial,
                             hypothesis=winning.hypothesis)

    def estimate_iteration_scale(self, points, lifted, iteration):
        config = self.config
        clamp = config.tolerances.denominator_clamp
        n_epsilon = self.initial_set_size(len(lifted), config.epsilon, self.model.m_e)

        def evaluate(index, hypothesis):
            (distances, _) = self.mahalanobis(lifted, hypothesis, clamp)
            return float(np.sort(distances)[:n_epsilon].sum()), hypothesis

        results = self.sample_trials(points,
                                     np.arange(len(lifted)),
                                     config.trials,
                                     iteration,
                                     SCALE_STAGE,
                                     evaluate)
        valid = [(index, result) for (index, result) in enumerate(results) if result is not None]
        if not valid:
            errors = StructureNotFoundError()
            errors.add_error('trials', 'every elemental subset was degenerate.')
            raise errors

        best = self.best_index([result[0] for (_, result) in valid])
        (trial, (score, hypothesis)) = valid[best]
        logger.debug(lambda: 'trial {} wins with a sum of {:.6g} over the first {}'.format(trial,
                                                                                           score,
                                                                                           counted(n_epsilon, 'point')))

        (distances, _) = self.mahalanobis(lifted, hypothesis, clamp)
        winning = TrialDistances(trial=trial, hypothesis=hypothesis, distances=distances)
        return self.estimate_scale(winning,
                                   epsilon=config.epsilon,
                                   rank_cap=config.rank_cap,
                                   threshold=config.threshold,
                                   include_first_segment=config.include_first_segment)
