import numpy as np

from mulinl.bases.pipeline import EstimationResult, \
                                  EstimatorConfig, \
                                  IterationDiagnostics, \
                                  StructureEstimate
from mulinl.models import Ellipse2D, \
                          Hypothesis, \
                          Line2D
from mulinl.serialization import as_dict, \
                                 result_document


def line_structure():
    return StructureEstimate(inliers=np.array([0, 2, 3]),
                             hypothesis=Hypothesis(theta=[0.6, 0.8], alpha=2),
                             sigma_hat=0.5,
                             sigma_tls=0.25,
                             strength=12.0,
                             discovery=0,
                             region=(5, 9),
                             rank=1)


class AsDictTest:
    def test_structure_keys_in_order(self):
        # When
        structure_dict = as_dict(line_structure(), model=Line2D())

        # Then
        assert list(structure_dict) == ['rank', 'strength', 'scale', 'sigma_tls', 'n_in', 'theta', 'alpha',
                                         'exact_fit', 'weak', 'region', 'discovery', 'geometry', 'inlier_indices']
        assert structure_dict['scale'] == 0.5
        assert structure_dict['n_in'] == 3
        assert structure_dict['inlier_indices'] == [0, 2, 3]
        assert structure_dict['geometry'] == {'normal': [0.6, 0.8], 'offset': 2.0}

    def test_excluded_keys(self):
        # When
        structure_dict = as_dict(line_structure(), includes=['-inlier_indices'])

        # Then
        assert 'inlier_indices' not in structure_dict
        assert 'geometry' not in structure_dict

    def test_ellipse_geometry(self):
        # Given
        theta = np.array([-2, -4, 1, 0, 1], dtype=float)
        structure = line_structure()
        structure.hypothesis = Hypothesis(theta=theta / np.linalg.norm(theta), alpha=-1 / np.linalg.norm(theta))

        # When
        geometry = as_dict(structure, model=Ellipse2D())['geometry']

        # Then
        assert np.allclose(geometry['center'], [1, 2])

    def test_config_nests_its_tolerances(self):
        # When
        config_dict = as_dict(EstimatorConfig(trials=10))

        # Then
        assert config_dict['trials'] == 10
        assert config_dict['tolerances']['tls_sweeps'] == 10
        assert config_dict['cylinder']['equal_ratio'] == 0.05

    def test_result_document(self):
        # Given
        result = EstimationResult(structures=[line_structure()],
                                  unclassified=np.array([1]),
                                  diagnostics=[IterationDiagnostics(iteration=0, remaining=4, status='structure')],
                                  n=4)

        # When
        document = result_document(result, Line2D(), EstimatorConfig())
        timed_document = result_document(result, Line2D(), EstimatorConfig(), seconds=1.5)

        # Then
        assert list(document) == ['model', 'n', 'config', 'structures', 'unclassified',
                                  'strength_gap', 'diagnostics']
        assert document['model'] == 'line2d'
        assert document['unclassified'] == [1]
        assert document['strength_gap'] is None
        assert document['diagnostics'][0]['status'] == 'structure'
        assert timed_document['seconds'] == 1.5
