# pylint: disable=W0622

import time
from argh import arg
from compose import compose

from mulinl.bases.errors import TooFewPointsError
from mulinl.bases.pipeline import EstimatorConfig
from mulinl.estimator import Estimator
from mulinl.models.model import ProblemModel
from mulinl.serialization.as_dict import result_document
from mulinl.serialization.dumps import dumps
from mulinl.utils.config import COMMAND_NAME, \
                                MULINL_SEED
from mulinl.utils.dataset import read_points, \
                                 write_atomically
from mulinl.utils.logger import counted, \
                                logger


MODEL_NAMES = sorted(model.name for model in ProblemModel.models())

estimation_options = compose(arg('--trials', type=int, help='number of elemental subsets M per iteration'),
                             arg('--epsilon', type=float, help='initial set percentage'),
                             arg('--seed', type=int, help='base seed of every random stream'),
                             arg('--sigma-tls-mode', choices=('max', 'robust'), help='scale reported after the refit'),
                             arg('--literal-expansion', help='average the expansion density from the second segment on'),
                             arg('--no-normalize', help='work on the raw coordinates'))


def config_from(trials=None,
                epsilon=5.0,
                seed=MULINL_SEED,
                sigma_tls_mode='max',
                literal_expansion=False,
                no_normalize=False,
                rank2=False,
                default_trials=None):
    options = {'epsilon': epsilon,
               'seed': seed,
               'sigma_tls_mode': sigma_tls_mode,
               'include_first_segment': not literal_expansion,
               'normalize': not no_normalize,
               'rank2_export': rank2}
    if trials is not None:
        options['trials'] = trials
    elif default_trials is not None:
        options['trials'] = default_trials
    return EstimatorConfig(**options)


@estimation_options
@arg('--model', required=True, choices=MODEL_NAMES, help='problem model')
@arg('--input', required=True, help='CSV or JSON point file')
@arg('--output', required=True, help='result JSON path')
@arg('--rank2', help='project exported fundamental matrices to rank 2')
@arg('--timing', help='write the wall-clock seconds into the result')
@arg('--compact', help='leave the inlier indices out of the result')
def estimate(model=None,
             input=None,
             output=None,
             trials=None,
             epsilon=5.0,
             seed=MULINL_SEED,
             sigma_tls_mode='max',
             literal_expansion=False,
             no_normalize=False,
             rank2=False,
             timing=False,
             compact=False):
    """e.g. `python manager.py estimate --model line2d --input lines.csv --output result.json`"""
    config = config_from(trials, epsilon, seed, sigma_tls_mode, literal_expansion, no_normalize, rank2)
    estimator = Estimator(model, config)
    points = read_points(input, estimator.model.l)
    if len(points) < 5 * estimator.model.m_e:
        errors = TooFewPointsError()
        errors.add_error('input', '{} needs at least {}, found {}.'.format(model,
                                                                            counted(5 * estimator.model.m_e, 'point'),
                                                                            len(points)))
        raise errors

    started = time.perf_counter()
    result = estimator.run(points)
    seconds = time.perf_counter() - started

    document = result_document(result,
                               estimator.model,
                               config,
                               seconds=seconds if timing else None,
                               includes=['-inlier_indices'] if compact else None)
    write_atomically(output, dumps(document))
    logger.info(lambda: '{} written to {}'.format(counted(len(result.structures), 'structure'), output))


estimate.__doc__ = estimate.__doc__.replace('python manager.py', COMMAND_NAME)
