from dataclasses import dataclass
from typing import Optional
import numpy as np

from mulinl.bases.errors import ModeNotFoundError, \
                                StructureNotFoundError
from mulinl.bases.sampler import round_half_up
from mulinl.bases.scale import DENOMINATOR_CLAMP, \
                               ScaleEstimation
from mulinl.models.model import Hypothesis
from mulinl.utils.asynchronous import async_map, \
                                      chunks_from
from mulinl.utils.logger import counted, \
                                logger
from mulinl.utils.random import RECOVERY_STAGE


MEAN_SHIFT_TOLERANCE = 1e-6
MEAN_SHIFT_ITERATIONS = 100
MEAN_SHIFT_CHUNK = 256


@dataclass
class ModeResult:
    mode: float
    density: float
    hypothesis: Optional[Hypothesis] = None
    iterations: int = 0
    trial: Optional[int] = None


@dataclass
class RecoveredStructure:
    hypothesis: Hypothesis
    inliers: np.ndarray
    mode: ModeResult
    converged: np.ndarray


def shift_step(positions, projections, bandwidths):
    # window mean weighted by 1/B, the exact ascent step of the Epanechnikov density
    windows = (positions[:, None] - projections[None, :]) ** 2 <= bandwidths[None, :]
    counts = windows.sum(axis=1)
    weights = windows / bandwidths[None, :]
    totals = weights.sum(axis=1)
    sums = weights @ projections
    shifted = np.where(counts > 0, sums / np.where(counts > 0, totals, 1), positions)
    return shifted, counts


class Recover(ScaleEstimation):

    @staticmethod
    def bandwidth(lifted, hypothesis, sigma_hat, clamp=DENOMINATOR_CLAMP):
        worst = ScaleEstimation.worst_case(lifted, hypothesis, clamp)
        bandwidths = sigma_hat ** 2 * worst.variances
        if worst.single:
            return float(bandwidths[0])
        return bandwidths

    @staticmethod
    def kernel_density(position, projections, bandwidths, sigma_hat):
        profile = 1 - (position - projections) ** 2 / bandwidths
        return float(np.clip(profile, 0, None).sum() / (len(projections) * sigma_hat))

    @staticmethod
    def mean_shift(z0,
                   projections,
                   bandwidths,
                   sigma_hat=1.0,
                   tolerance=MEAN_SHIFT_TOLERANCE,
                   max_iterations=MEAN_SHIFT_ITERATIONS):
        projections = np.asarray(projections, dtype=float)
        bandwidths = np.asarray(bandwidths, dtype=float)
        position = np.array([float(z0)])

        (_, counts) = shift_step(position, projections, bandwidths)
        if not counts[0]:
            errors = ModeNotFoundError()
            errors.add_error('z0', 'no projection has {} in its window.'.format(z0))
            raise errors

        iterations = 0
        while iterations < max_iterations:
            (shifted, _) = shift_step(position, projections, bandwidths)
            iterations += 1
            moved = abs(shifted[0] - position[0])
            position = shifted
            if moved <= tolerance * sigma_hat:
                break

        mode = float(position[0])
        return ModeResult(mode=mode,
                          density=Recover.kernel_density(mode, projections, bandwidths, sigma_hat),
                          iterations=iterations)

    @staticmethod
    def converge_all(starts,
                     projections,
                     bandwidths,
                     sigma_hat=1.0,
                     tolerance=MEAN_SHIFT_TOLERANCE,
                     max_iterations=MEAN_SHIFT_ITERATIONS,
                     chunk_by=MEAN_SHIFT_CHUNK,
                     max_workers=None):
        """Mean shift from every start at once, chunk_by starts per batch."""
        projections = np.asarray(projections, dtype=float)
        bandwidths = np.asarray(bandwidths, dtype=float)
        starts = np.asarray(starts, dtype=float)
        if not len(starts):
            return starts.copy()

        def converge_chunk(chunk):
            positions = chunk.copy()
            active = np.arange(len(positions))
            for _ in range(max_iterations):
                (shifted, _) = shift_step(positions[active], projections, bandwidths)
                moved = np.abs(shifted - positions[active])
                positions[active] = shifted
                active = active[moved > tolerance * sigma_hat]
                if not len(active):
                    break
            return positions

        chunks = list(chunks_from(starts, chunk_by))
        return np.concatenate(list(async_map(converge_chunk, chunks, max_workers=max_workers)))

    def recovery_trials(self):
        return max(round_half_up(self.config.trials * self.config.recovery_ratio),
                   self.config.min_recovery_trials)

    def recover_structure(self, points, lifted, scale, iteration):
        config = self.config
        tolerances = config.tolerances
        sigma_hat = scale.sigma_hat

        def evaluate(index, hypothesis):
            worst = self.worst_case(lifted, hypothesis, tolerances.denominator_clamp)
            bandwidths = sigma_hat ** 2 * worst.variances
            try:
                result = self.mean_shift(hypothesis.alpha,
                                         worst.projections,
                                         bandwidths,
                                         sigma_hat,
                                         tolerances.mean_shift_tolerance,
                                         tolerances.mean_shift_iterations)
            except ModeNotFoundError:
                return None
            result.hypothesis = hypothesis
            result.trial = index
            return result

        results = self.sample_trials(points,
                                     np.asarray(scale.collected),
                                     self.recovery_trials(),
                                     iteration,
                                     RECOVERY_STAGE,
                                     evaluate)

        best = None
        for result in results:
            if result is not None and (best is None or result.density > best.density):
                best = result
        if best is None:
            errors = StructureNotFoundError()
            errors.add_error('recovery', 'no trial reached a mode from {}.'.format(counted(len(scale.collected),
                                                                                        'collected point')))
            raise errors

        worst = self.worst_case(lifted, best.hypothesis, tolerances.denominator_clamp)
        bandwidths = sigma_hat ** 2 * worst.variances
        converged = self.converge_all(worst.projections,
                                      worst.projections,
                                      bandwidths,
                                      sigma_hat,
                                      tolerances.mean_shift_tolerance,
                                      tolerances.mean_shift_iterations,
                                      max_workers=config.max_workers)
        inliers = np.flatnonzero(np.abs(converged - best.mode) <= np.sqrt(bandwidths))

        logger.debug(lambda: 'mode {:.6g} of trial {} with density {:.6g} gathers {}'.format(best.mode,
                                                                                            best.trial,
                                                                                            best.density,
                                                                                            counted(len(inliers), 'point')))

        return RecoveredStructure(hypothesis=Hypothesis(theta=best.hypothesis.theta, alpha=best.mode),
                                  inliers=inliers,
                                  mode=best,
                                  converged=converged)
