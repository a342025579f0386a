from argh import arg

from mulinl.models.model import ProblemModel
from mulinl.synthetic.generate import generate
from mulinl.synthetic.scene import load_scene, \
                                   scenario_names, \
                                   scene_from_name
from mulinl.utils.config import MULINL_SEED
from mulinl.utils.dataset import write_labels, \
                                 write_points
from mulinl.utils.logger import counted, \
                                logger


def labels_path_for(output):
    (stem, _) = output.rsplit('.', 1) if '.' in output else (output, None)
    return '{}.labels.csv'.format(stem)


def scene_for(scenario=None, scene=None):
    if scene is not None:
        return load_scene(scene)
    return scene_from_name(scenario)


@arg('--scenario', help='one of {}'.format(', '.join(scenario_names())))
@arg('--scene', help='YAML scene file, instead of a named scenario')
@arg('--seed', type=int, help='scene seed')
@arg('--output', required=True, help='CSV point file; labels go next to it')
@arg('--labels', help='labels file path')
def synth(scenario=None, scene=None, seed=MULINL_SEED, output=None, labels=None):
    """e.g. `python manager.py synth --scenario lines1 --output lines1.csv`"""
    spec = scene_for(scenario, scene)
    (points, point_labels) = generate(spec, seed)
    model = ProblemModel.model_from_name(spec.model)
    write_points(output, points, model.column_names)
    labels = labels or labels_path_for(output)
    write_labels(labels, point_labels)
    logger.info(lambda: '{} of {} written to {} and {}'.format(counted(len(points), 'point'),
                                                               spec.name,
                                                               output,
                                                               labels))
