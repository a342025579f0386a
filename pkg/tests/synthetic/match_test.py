import numpy as np

from mulinl.synthetic.match import match_labels


class MatchLabelsTest:
    def test_perfect_estimate(self):
        # Given
        truth = np.array([0] * 10 + [1] * 8 + [-1] * 5)

        # When
        report = match_labels(truth, truth)

        # Then
        assert report.correct_count == 2
        assert report.precision == 1
        assert report.recall == 1

    def test_merged_structures_count_once(self):
        # Given
        truth = np.array([0] * 100 + [1] * 100)
        estimated = np.zeros(200, dtype=int)

        # When
        report = match_labels(estimated, truth)

        # Then
        assert report.correct_count == 1
        assert report.verdicts[0].precision == 0.5
        assert report.verdicts[0].recall == 1
        assert report.verdicts[1].estimate is None

    def test_estimate_swamped_by_outliers_is_wrong(self):
        # Given
        truth = np.array([0] * 200 + [-1] * 177)
        estimated = np.array([0] * 84 + [-1] * 116 + [0] * 177)

        # When
        report = match_labels(estimated, truth)

        # Then
        verdict = report.verdicts[0]
        assert verdict.overlap == 84
        assert verdict.estimate_size == 261
        assert not verdict.correct

    def test_relabelling_the_estimates_changes_nothing(self):
        # Given
        truth = np.array([0] * 30 + [1] * 20 + [-1] * 10)
        estimated = np.array([1] * 28 + [-1] * 2 + [0] * 20 + [-1] * 10)
        relabelled = np.where(estimated >= 0, 1 - estimated, -1)

        # When
        report = match_labels(estimated, truth)
        relabelled_report = match_labels(relabelled, truth)

        # Then
        assert [verdict.correct for verdict in report.verdicts] \
               == [verdict.correct for verdict in relabelled_report.verdicts]
        assert report.precision == relabelled_report.precision
        assert report.recall == relabelled_report.recall

    def test_unclassified_structure_is_unmatched(self):
        # Given
        truth = np.array([0] * 10 + [1] * 10)
        estimated = np.array([0] * 10 + [-1] * 10)

        # When
        report = match_labels(estimated, truth)

        # Then
        assert report.correct_count == 1
        assert report.recall == 0.5
