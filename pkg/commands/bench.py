from argh import arg

from commands.estimate import config_from, \
                              estimation_options
from commands.synth import scene_for
from mulinl.serialization.dumps import dumps
from mulinl.serialization.serialize import serialize
from mulinl.synthetic.bench import bench as bench_runs, \
                                   plot_dump as plot_dump_from, \
                                   summarize
from mulinl.synthetic.scene import scenario_names
from mulinl.utils.config import MULINL_SEED
from mulinl.utils.dataset import write_atomically
from mulinl.utils.logger import logger


def table_paths(output):
    stem = output[:-len('.csv')] if output.endswith('.csv') else output
    return {'runs_csv': '{}.csv'.format(stem),
            'runs_json': '{}.json'.format(stem),
            'summary_csv': '{}.summary.csv'.format(stem),
            'summary_json': '{}.summary.json'.format(stem)}


@estimation_options
@arg('--scenario', help='one of {}'.format(', '.join(scenario_names())))
@arg('--scene', help='YAML scene file, instead of a named scenario')
@arg('--runs', type=int, help='number of seeded runs')
@arg('--output', required=True, help='table path stem, CSV and JSON are written')
@arg('--plot-dump', help='JSON path for the first run points per structure')
def bench(scenario=None,
          scene=None,
          runs=1,
          trials=None,
          epsilon=5.0,
          seed=MULINL_SEED,
          sigma_tls_mode='max',
          literal_expansion=False,
          no_normalize=False,
          output=None,
          plot_dump=None):
    """e.g. `python manager.py bench --scenario lines1 --runs 100 --output lines1-bench`"""
    spec = scene_for(scenario, scene)
    config = config_from(trials,
                         epsilon,
                         seed,
                         sigma_tls_mode,
                         literal_expansion,
                         no_normalize,
                         default_trials=spec.trials).validate()

    def dump_first_run(run, points, result):
        if plot_dump and run == 0 and result is not None:
            write_atomically(plot_dump, dumps(serialize(plot_dump_from(points, result))))

    table = bench_runs(spec, config, runs, seed=seed, on_run=dump_first_run)
    summary = summarize(table)

    paths = table_paths(output)
    write_atomically(paths['runs_csv'], table.to_csv(index=False))
    write_atomically(paths['runs_json'], table.to_json(orient='records', indent=2))
    write_atomically(paths['summary_csv'], summary.to_csv(index=False))
    write_atomically(paths['summary_json'], summary.to_json(orient='records', indent=2))
    logger.info(lambda: '\n{}'.format(summary.to_string(index=False)))
