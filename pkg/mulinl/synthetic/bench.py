from collections import OrderedDict
from dataclasses import replace
import time
import numpy as np
import pandas as pd

from mulinl.estimation_errors import EstimationErrors
from mulinl.estimator import Estimator
from mulinl.synthetic.generate import generate
from mulinl.synthetic.match import match
from mulinl.utils.logger import counted, \
                                logger


RUN_COLUMNS = ['run', 'seed', 'structure', 'n_true', 'correct', 'precision', 'recall',
               'rank', 'sigma_hat', 'sigma_tls', 'n_in', 'strength', 'seconds', 'error']


def run_rows(spec, config, run, seed):
    (points, labels) = generate(spec, seed)
    estimator = Estimator(spec.model, replace(config, seed=seed))
    started = time.perf_counter()
    try:
        result = estimator.run(points)
    except EstimationErrors as errors:
        seconds = time.perf_counter() - started
        logger.warning(lambda: 'run {} failed: {}'.format(run, errors))
        rows = [OrderedDict([('run', run), ('seed', seed), ('structure', index),
                             ('n_true', structure.n_in), ('correct', False),
                             ('seconds', seconds), ('error', str(errors))])
                for (index, structure) in enumerate(spec.structures)]
        return rows, (points, None)
    seconds = time.perf_counter() - started

    report = match(result, labels)
    rows = []
    for verdict in report.verdicts:
        row = OrderedDict([('run', run),
                           ('seed', seed),
                           ('structure', verdict.truth),
                           ('n_true', verdict.true_size),
                           ('correct', verdict.correct),
                           ('precision', verdict.precision),
                           ('recall', verdict.recall)])
        if verdict.estimate is not None:
            estimate = result.structures[verdict.estimate]
            row.update([('rank', estimate.rank),
                        ('sigma_hat', estimate.sigma_hat),
                        ('sigma_tls', estimate.sigma_tls),
                        ('n_in', estimate.n_in),
                        ('strength', estimate.strength)])
        row['seconds'] = seconds
        rows.append(row)
    logger.info(lambda: 'run {}: {} of {} correct in {:.3f}s'.format(run,
                                                                     report.correct_count,
                                                                     counted(len(report.verdicts), 'structure'),
                                                                     seconds))
    return rows, (points, result)


def bench(spec, config, runs, seed=0, on_run=None):
    """One row per run and true structure; run r uses seed + r for both the
    scene and the estimator."""
    rows = []
    for run in range(runs):
        (run_table, outcome) = run_rows(spec, config, run, seed + run)
        rows += run_table
        if on_run is not None:
            on_run(run, *outcome)
    return pd.DataFrame(rows, columns=RUN_COLUMNS)


def summarize(table):
    grouped = table.groupby('structure', sort=True)
    summary = pd.DataFrame({'runs': grouped['run'].count(),
                            'detections': grouped['correct'].sum().astype(int),
                            'scale_mean': grouped['sigma_hat'].mean(),
                            'scale_std': grouped['sigma_hat'].std(ddof=0),
                            'sigma_tls_mean': grouped['sigma_tls'].mean(),
                            'sigma_tls_std': grouped['sigma_tls'].std(ddof=0),
                            'inliers_mean': grouped['n_in'].mean(),
                            'inliers_std': grouped['n_in'].std(ddof=0),
                            'seconds_mean': grouped['seconds'].mean()})
    summary['rate'] = summary['detections'] / summary['runs']
    return summary.reset_index()


def plot_dump(points, result):
    dump = OrderedDict()
    dump['structures'] = [OrderedDict([('rank', structure.rank),
                                       ('strength', structure.strength),
                                       ('points', points[structure.inliers])])
                          for structure in result.structures]
    dump['unclassified'] = points[result.unclassified]
    return dump
