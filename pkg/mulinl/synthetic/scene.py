from dataclasses import dataclass, \
                        field
import os
from typing import List, Optional
import yaml

from mulinl.bases.errors import InvalidSceneError, \
                                UnreadableFileError, \
                                UnknownScenarioError
from mulinl.models.model import ProblemModel


SCENES_DIR = os.path.join(os.path.dirname(os.path.realpath(__file__)), 'scenes')


@dataclass
class StructureSpec:
    n_in: int
    sigma: float
    parameters: dict = field(default_factory=dict)


@dataclass
class SceneSpec:
    name: str
    model: str
    bounds: List[List[float]]
    outliers: int
    structures: List[StructureSpec]
    camera: Optional[dict] = None
    outlier_inflation: Optional[float] = None
    trials: Optional[int] = None

    @property
    def n(self):
        return sum(structure.n_in for structure in self.structures) + self.outliers

    @classmethod
    def from_dict(cls, datum, name=None):
        errors = InvalidSceneError()
        if not isinstance(datum, dict):
            errors.add_error('scene', 'expected a mapping, got {}.'.format(type(datum).__name__))
            raise errors

        model_names = [model.name for model in ProblemModel.models()]
        model_name = datum.get('model')
        if model_name not in model_names:
            errors.add_error('model', 'expected one of {}, got {}.'.format(', '.join(sorted(model_names)),
                                                                          model_name))
            raise errors
        model = ProblemModel.model_from_name(model_name)

        bounds = datum.get('bounds') or []
        if len(bounds) != model.l or any(len(bound) != 2 or not bound[0] < bound[1] for bound in bounds):
            errors.add_error('bounds', 'expected {} increasing [low, high] pairs.'.format(model.l))

        outliers = datum.get('outliers', 0)
        if not isinstance(outliers, int) or outliers < 0:
            errors.add_error('outliers', 'must be a non-negative integer, got {}.'.format(outliers))

        structures = []
        for (index, structure) in enumerate(datum.get('structures') or []):
            n_in = structure.get('n_in')
            sigma = structure.get('sigma', 0.0)
            if not isinstance(n_in, int) or n_in < 0:
                errors.add_error('structures.{}.n_in'.format(index),
                                 'must be a non-negative integer, got {}.'.format(n_in))
            if not isinstance(sigma, (int, float)) or sigma < 0:
                errors.add_error('structures.{}.sigma'.format(index),
                                 'must be a non-negative number, got {}.'.format(sigma))
            parameters = {key: value for (key, value) in structure.items() if key not in ('n_in', 'sigma')}
            structures.append(StructureSpec(n_in=n_in, sigma=sigma, parameters=parameters))

        errors.maybe_raise()
        return cls(name=name or datum.get('name', model_name),
                   model=model_name,
                   bounds=[[float(low), float(high)] for (low, high) in bounds],
                   outliers=outliers,
                   structures=structures,
                   camera=datum.get('camera'),
                   outlier_inflation=datum.get('outlier_inflation'),
                   trials=datum.get('trials'))


def scenario_names():
    return sorted(os.path.splitext(file_name)[0]
                  for file_name in os.listdir(SCENES_DIR)
                  if file_name.endswith('.yml'))


def load_scene(path):
    try:
        with open(path, encoding='utf8') as scene_file:
            datum = yaml.safe_load(scene_file)
    except OSError as error:
        errors = UnreadableFileError()
        errors.add_error('scene', '{}: {}'.format(path, error))
        raise errors
    except yaml.YAMLError as error:
        errors = InvalidSceneError()
        errors.add_error('scene', '{}: {}'.format(path, error))
        raise errors
    return SceneSpec.from_dict(datum, name=os.path.splitext(os.path.basename(path))[0])


def scene_from_name(name):
    if name not in scenario_names():
        errors = UnknownScenarioError()
        errors.add_error('scenario',
                         'unknown scenario {}, expected one of {}'.format(name, ', '.join(scenario_names())))
        raise errors
    return load_scene(os.path.join(SCENES_DIR, '{}.yml'.format(name)))
