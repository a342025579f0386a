from dataclasses import dataclass
import numpy as np

from mulinl.bases.recover import Recover
from mulinl.bases.scale import DENOMINATOR_CLAMP
from mulinl.models.model import Hypothesis


TLS_SWEEPS = 10
TLS_RELATIVE_CHANGE = 1e-10
SCATTER_TIE_RATIO = 1e-10
ROBUST_STD_FACTOR = 1.4826


@dataclass
class TlsFit:
    hypothesis: Hypothesis
    sigma_tls: float
    sweeps: int = 0
    degenerate: bool = False


class Refit(Recover):

    @staticmethod
    def tls_scale(lifted, hypothesis, mode='max', clamp=DENOMINATOR_CLAMP):
        distances = Recover.worst_case(lifted, hypothesis, clamp).distances
        if mode == 'robust':
            return float(ROBUST_STD_FACTOR * np.median(distances))
        return float(distances.max())

    @staticmethod
    def tls_refit(lifted,
                  hypothesis,
                  has_intercept=True,
                  sweeps=TLS_SWEEPS,
                  relative_change=TLS_RELATIVE_CHANGE,
                  sigma_mode='max',
                  clamp=DENOMINATOR_CLAMP):
        """Heteroscedastic TLS by reweighted eigen-solves of the carrier scatter.

        Every carrier of every inlier is one equation, weighted by the inverse
        of its variance under the current hypothesis. Without intercept the
        scatter is not centered and alpha stays 0.
        """
        m = lifted.carriers.shape[-1]
        carriers = np.asarray(lifted.carriers, dtype=float).reshape(-1, m)
        covariances = np.asarray(lifted.covariances, dtype=float).reshape(-1, m, m)

        current = hypothesis if has_intercept else Hypothesis(theta=hypothesis.theta, alpha=0.0)
        degenerate = False
        sweep = 0
        while sweep < sweeps:
            sweep += 1
            weights = 1 / np.maximum((covariances @ current.theta) @ current.theta, clamp)
            if has_intercept:
                center = weights @ carriers / weights.sum()
            else:
                center = np.zeros(m)
            centered = carriers - center
            scatter = (centered * weights[:, None]).T @ centered
            (eigenvalues, eigenvectors) = np.linalg.eigh(scatter)
            if eigenvalues[1] - eigenvalues[0] <= SCATTER_TIE_RATIO * abs(eigenvalues[-1]):
                degenerate = True
                break

            theta = eigenvectors[:, 0]
            if theta @ current.theta < 0:
                theta = -theta
            refit = Hypothesis(theta=theta, alpha=center @ theta if has_intercept else 0.0)
            previous = current.as_vector(has_intercept)
            change = np.linalg.norm(refit.as_vector(has_intercept) - previous) / np.linalg.norm(previous)
            current = refit
            if change < relative_change:
                break

        return TlsFit(hypothesis=current,
                      sigma_tls=Refit.tls_scale(lifted, current, sigma_mode, clamp),
                      sweeps=sweep,
                      degenerate=degenerate)
