from collections import OrderedDict
from dataclasses import fields, \
                        is_dataclass
from functools import singledispatch
from typing import Iterable, List

from mulinl.bases.pipeline import EstimationResult, \
                                  EstimatorConfig, \
                                  IterationDiagnostics, \
                                  StructureEstimate, \
                                  TolerancesConfig
from mulinl.bases.scale import ScaleEstimate
from mulinl.models.cylinder_3d import CylinderTolerances
from mulinl.models.model import Hypothesis
from mulinl.serialization.serialize import serialize
from mulinl.synthetic.match import MatchReport, \
                                   StructureVerdict


@singledispatch
def as_dict(value, model=None, includes=None, rank2=False):
    return serialize(value)


@as_dict.register(list)
@as_dict.register(tuple)
def as_dict_for_list(values, model=None, includes=None, rank2=False):
    return [as_dict(value, model=model, includes=includes, rank2=rank2) for value in values]


def _dataclass_as_dict(value, model=None, includes=None, rank2=False):
    result = OrderedDict()
    for key in _keys_to_serialize([field.name for field in fields(value)], includes):
        item = getattr(value, key)
        result[key] = as_dict(item, model=model, rank2=rank2) if is_dataclass(item) else serialize(item)
    return result


@as_dict.register(CylinderTolerances)
@as_dict.register(EstimatorConfig)
@as_dict.register(IterationDiagnostics)
@as_dict.register(TolerancesConfig)
def as_dict_for_dataclass(value, model=None, includes=None, rank2=False):
    return _dataclass_as_dict(value, model=model, includes=includes, rank2=rank2)


@as_dict.register(Hypothesis)
def as_dict_for_hypothesis(hypothesis, model=None, includes=None, rank2=False):
    return OrderedDict([('theta', serialize(hypothesis.theta)),
                        ('alpha', hypothesis.alpha)])


STRUCTURE_KEYS = ['rank', 'strength', 'scale', 'sigma_tls', 'n_in', 'theta', 'alpha',
                  'exact_fit', 'weak', 'region', 'discovery', 'geometry', 'inlier_indices']


@as_dict.register(StructureEstimate)
def as_dict_for_structure(structure, model=None, includes=None, rank2=False):
    values = {'scale': structure.sigma_hat,
              'theta': structure.theta,
              'inlier_indices': structure.inliers,
              'n_in': structure.n_in}
    keys = _keys_to_serialize(STRUCTURE_KEYS, includes)
    result = OrderedDict()
    for key in keys:
        if key == 'geometry':
            if model is not None:
                result[key] = serialize(model.geometry(structure.hypothesis, rank2=rank2))
            continue
        result[key] = serialize(values[key] if key in values else getattr(structure, key))
    return result


@as_dict.register(EstimationResult)
def as_dict_for_result(result, model=None, includes=None, rank2=False):
    document = OrderedDict()
    document['structures'] = [as_dict(structure, model=model, includes=includes, rank2=rank2)
                              for structure in result.structures]
    document['unclassified'] = serialize(result.unclassified)
    document['strength_gap'] = result.strength_gap
    document['diagnostics'] = [as_dict(diagnostic) for diagnostic in result.diagnostics]
    return document


@as_dict.register(ScaleEstimate)
def as_dict_for_scale(scale, model=None, includes=None, rank2=False):
    return OrderedDict([('sigma_hat', scale.sigma_hat),
                        ('region', serialize(scale.region)),
                        ('weak', scale.weak),
                        ('trial', scale.trial),
                        ('collected', len(scale.collected)),
                        ('records', [OrderedDict([('percent', record.percent),
                                                  ('width', record.width),
                                                  ('stop', record.stop)])
                                     for record in scale.records])])


@as_dict.register(MatchReport)
def as_dict_for_match(report, model=None, includes=None, rank2=False):
    return OrderedDict([('precision', report.precision),
                        ('recall', report.recall),
                        ('correct', report.correct_count),
                        ('verdicts', [as_dict(verdict) for verdict in report.verdicts])])


@as_dict.register(StructureVerdict)
def as_dict_for_verdict(verdict, model=None, includes=None, rank2=False):
    return OrderedDict([('truth', verdict.truth),
                        ('estimate', verdict.estimate),
                        ('overlap', verdict.overlap),
                        ('precision', verdict.precision),
                        ('recall', verdict.recall),
                        ('correct', verdict.correct)])


def result_document(result, model, config, seconds=None, includes=None):
    document = OrderedDict()
    document['model'] = model.name
    document['n'] = result.n
    document['config'] = as_dict(config)
    document.update(as_dict(result, model=model, includes=includes, rank2=config.rank2_export))
    if seconds is not None:
        document['seconds'] = seconds
    return document


def _keys_to_serialize(keys: List[str], includes: Iterable=None) -> List[str]:
    excluded = _excluded_keys(includes)
    return [key for key in keys if key not in excluded]


def _excluded_keys(includes: Iterable=None):
    if includes is None:
        includes = ()
    string_includes = filter(lambda include: isinstance(include, str), includes)
    excluded_keys = filter(lambda string_include: string_include.startswith('-'), string_includes)
    return set(map(lambda excluded_key: excluded_key[1:], excluded_keys))
