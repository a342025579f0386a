import numpy as np
import pytest

from mulinl.bases.pipeline import EstimatorConfig
from mulinl.estimator import Estimator
from mulinl.synthetic.bench import bench, \
                                   summarize
from mulinl.synthetic.generate import generate
from mulinl.synthetic.match import match
from mulinl.synthetic.scene import scene_from_name


RUNS = 30


def scenario_summary(name, runs=RUNS):
    spec = scene_from_name(name)
    table = bench(spec, EstimatorConfig(trials=spec.trials), runs)
    return table, summarize(table)


@pytest.mark.acceptance
class LineScenesTest:
    def test_lines1(self):
        # When
        (table, summary) = scenario_summary('lines1')

        # Then
        rates = summary['rate'].tolist()
        assert all(rate >= 0.95 for rate in rates[:4])
        assert rates[4] >= 0.8
        strongest = summary.iloc[0]
        assert 8 <= strongest['sigma_tls_mean'] <= 14
        assert 315 <= strongest['inliers_mean'] <= 355
        assert table['seconds'].mean() <= 5

    def test_lines2(self):
        # When
        (_, summary) = scenario_summary('lines2')

        # Then
        rates = summary['rate'].tolist()
        assert rates[:3] == [1, 1, 1]
        assert rates[3] >= 0.9
        assert rates[4] >= 0.45

    def test_strength_separates_inlier_structures(self):
        # Given
        spec = scene_from_name('lines1')
        separated = 0

        for run in range(RUNS):
            (points, labels) = generate(spec, run)
            result = Estimator('line2d', trials=spec.trials, seed=run).run(points)
            report = match(result, labels)
            matched = {verdict.estimate for verdict in report.verdicts if verdict.correct}
            inlier_strengths = [result.structures[index].strength for index in matched]
            remaining_strengths = [structure.strength for (index, structure) in enumerate(result.structures)
                                   if index not in matched]
            if not remaining_strengths \
               or (inlier_strengths and min(inlier_strengths) >= 2 * max(remaining_strengths)):
                separated += 1

        # Then
        assert separated >= 0.9 * RUNS

    def test_scaled_scene_scales_the_estimate(self):
        # Given
        spec = scene_from_name('lines1')
        (points, _) = generate(spec, 0)
        estimator = Estimator('line2d', trials=spec.trials, seed=0)

        # When
        result = estimator.run(points)
        scaled_result = estimator.run(10 * points)

        # Then
        for (structure, scaled) in zip(result.structures, scaled_result.structures):
            assert scaled.sigma_hat == pytest.approx(10 * structure.sigma_hat, rel=1e-9)
            assert np.array_equal(scaled.inliers, structure.inliers)


@pytest.mark.acceptance
class OtherScenesTest:
    def test_ellipses1(self):
        # When
        (table, _) = scenario_summary('ellipses1')

        # Then
        all_correct = table.groupby('run')['correct'].all()
        assert all_correct.sum() >= 26
        assert table.groupby('run')['seconds'].first().mean() <= 60

    def test_cylinders(self):
        # When
        (_, summary) = scenario_summary('cylinders')

        # Then
        detections = summary['detections'].tolist()
        assert detections[0] >= 27
        assert detections[1] >= 25

    def test_homography_planes(self):
        # Given
        spec = scene_from_name('homography-synth')
        config = EstimatorConfig(trials=spec.trials)

        # When
        table = bench(spec, config, RUNS)

        # Then
        precise = (table['precision'] >= 0.9).groupby(table['run']).all()
        assert precise.sum() >= 27
