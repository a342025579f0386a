from dataclasses import dataclass
from typing import Tuple
import numpy as np

from mulinl.bases.errors import DegenerateDataError


DESIGN_SEED = 20170101


@dataclass
class NormalizationTransform:
    blocks: Tuple[Tuple[int, int], ...]
    centroids: Tuple[np.ndarray, ...]
    scales: Tuple[float, ...]

    @classmethod
    def identity(cls, model):
        return cls(blocks=tuple(model.coordinate_blocks),
                   centroids=tuple(np.zeros(stop - start) for (start, stop) in model.coordinate_blocks),
                   scales=tuple(1.0 for _ in model.coordinate_blocks))

    @property
    def dimension(self):
        return self.blocks[-1][1]

    @property
    def gain(self):
        """Geometric mean of the per-coordinate scales: a scale of sigma in
        the input space reads as sigma * gain in the normalized space."""
        log_gain = sum((stop - start) * np.log(scale)
                       for ((start, stop), scale) in zip(self.blocks, self.scales))
        return float(np.exp(log_gain / self.dimension))

    def apply(self, points):
        points = np.array(points, dtype=float)
        for ((start, stop), centroid, scale) in zip(self.blocks, self.centroids, self.scales):
            points[:, start:stop] = scale * (points[:, start:stop] - centroid)
        return points

    def invert(self, points):
        points = np.array(points, dtype=float)
        for ((start, stop), centroid, scale) in zip(self.blocks, self.centroids, self.scales):
            points[:, start:stop] = points[:, start:stop] / scale + centroid
        return points

    def scaling_diagonal(self):
        diagonal = np.empty(self.dimension)
        for ((start, stop), scale) in zip(self.blocks, self.scales):
            diagonal[start:stop] = scale
        return diagonal

    def transform_covariances(self, covariances):
        if covariances is None:
            return None
        diagonal = self.scaling_diagonal()
        scaling = np.outer(diagonal, diagonal) / self.gain ** 2
        return np.asarray(covariances, dtype=float) * scaling

    def homogeneous_matrix(self, block_index):
        (start, stop) = self.blocks[block_index]
        size = stop - start
        scale = self.scales[block_index]
        matrix = np.eye(size + 1)
        matrix[:size, :size] *= scale
        matrix[:size, size] = -scale * self.centroids[block_index]
        return matrix

    def carrier_basis(self, model):
        """Matrix K with [x(y); 1] = K [x(T y); 1] for single-carrier models."""
        design_rng = np.random.default_rng(DESIGN_SEED)
        normalized = design_rng.uniform(-2, 2, size=(4 * (model.m + 1), model.l))
        original = self.invert(normalized)
        normalized_rows = np.hstack([model.carriers(normalized)[:, 0, :],
                                     np.ones((normalized.shape[0], 1))])
        original_rows = np.hstack([model.carriers(original)[:, 0, :],
                                   np.ones((original.shape[0], 1))])
        basis_transposed = np.linalg.lstsq(normalized_rows, original_rows, rcond=None)[0]
        return basis_transposed.T


def normalize(points, model):
    points = np.asarray(points, dtype=float)
    centroids = []
    scales = []
    for (start, stop) in model.coordinate_blocks:
        block = points[:, start:stop]
        centroid = block.mean(axis=0)
        mean_distance = np.linalg.norm(block - centroid, axis=1).mean() if len(block) else 0.0
        if not mean_distance > 0:
            errors = DegenerateDataError()
            errors.add_error('points', 'all points are identical, nothing to normalize.')
            raise errors
        centroids.append(centroid)
        scales.append(float(np.sqrt(stop - start) / mean_distance))
    transform = NormalizationTransform(blocks=tuple(model.coordinate_blocks),
                                       centroids=tuple(centroids),
                                       scales=tuple(scales))
    return transform.apply(points), transform


def denormalize(model, transform, hypothesis, *scales):
    original = model.denormalize_hypothesis(hypothesis, transform)
    gain = transform.gain
    return (original,) + tuple(scale / gain for scale in scales)
