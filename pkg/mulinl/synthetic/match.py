from dataclasses import dataclass
from typing import List, Optional
import numpy as np


MIN_PRECISION = 0.5
MIN_RECALL = 0.5


@dataclass
class StructureVerdict:
    truth: int
    estimate: Optional[int]
    overlap: int
    true_size: int
    estimate_size: int

    @property
    def precision(self):
        return self.overlap / self.estimate_size if self.estimate_size else 0.0

    @property
    def recall(self):
        return self.overlap / self.true_size if self.true_size else 0.0

    @property
    def correct(self):
        return self.estimate is not None \
               and self.precision >= MIN_PRECISION \
               and self.recall >= MIN_RECALL


@dataclass
class MatchReport:
    verdicts: List[StructureVerdict]
    precision: float
    recall: float

    @property
    def correct_count(self):
        return sum(verdict.correct for verdict in self.verdicts)


def match_labels(estimated, truth):
    """Pairs every true structure with the estimate holding most of its points.

    estimated holds, per point, the index of its estimate in strength order
    (-1 when unclassified) and truth the true structure id (-1 for outliers).
    Estimates are handed out strongest first; two true structures claiming
    the same estimate go by overlap, then by id, and the loser is unmatched.
    """
    estimated = np.asarray(estimated, dtype=int)
    truth = np.asarray(truth, dtype=int)
    true_ids = sorted(set(truth[truth >= 0].tolist()))
    estimate_sizes = np.bincount(estimated[estimated >= 0]) if (estimated >= 0).any() else np.zeros(0, dtype=int)

    claims = []
    for true_id in true_ids:
        members = estimated[truth == true_id]
        members = members[members >= 0]
        if not len(members):
            claims.append((None, 0, true_id))
            continue
        overlaps = np.bincount(members)
        plurality = int(np.argmax(overlaps))
        claims.append((plurality, int(overlaps[plurality]), true_id))

    verdicts = {}
    taken = set()
    ordered = sorted((claim for claim in claims if claim[0] is not None),
                     key=lambda claim: (claim[0], -claim[1], claim[2]))
    for (estimate, overlap, true_id) in ordered:
        true_size = int((truth == true_id).sum())
        if estimate in taken:
            verdicts[true_id] = StructureVerdict(true_id, None, 0, true_size, 0)
            continue
        taken.add(estimate)
        verdicts[true_id] = StructureVerdict(true_id,
                                             estimate,
                                             overlap,
                                             true_size,
                                             int(estimate_sizes[estimate]))
    for (estimate, _, true_id) in claims:
        if estimate is None:
            verdicts[true_id] = StructureVerdict(true_id, None, 0, int((truth == true_id).sum()), 0)

    verdicts = [verdicts[true_id] for true_id in true_ids]
    matched = [verdict for verdict in verdicts if verdict.estimate is not None]
    overlap_total = sum(verdict.overlap for verdict in matched)
    estimate_total = sum(verdict.estimate_size for verdict in matched)
    true_total = sum(verdict.true_size for verdict in verdicts)
    return MatchReport(verdicts=verdicts,
                       precision=overlap_total / estimate_total if estimate_total else 0.0,
                       recall=overlap_total / true_total if true_total else 0.0)


def match(result, labels):
    return match_labels(result.labels(), labels)
