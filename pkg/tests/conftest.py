import os
import numpy as np
import pytest

from mulinl.synthetic.scene import SceneSpec


def pytest_collection_modifyitems(config, items):
    if os.environ.get('MULINL_ACCEPTANCE') == '1':
        return
    skip_acceptance = pytest.mark.skip(reason='set MULINL_ACCEPTANCE=1 to run')
    for item in items:
        if 'acceptance' in item.keywords:
            item.add_marker(skip_acceptance)


@pytest.fixture
def rng():
    return np.random.default_rng(20170101)


@pytest.fixture
def noise_free_line_points():
    x = np.linspace(0, 100, 100)
    return np.stack([x, 0.5 * x + 3], axis=-1)


@pytest.fixture
def two_lines_scene():
    return SceneSpec.from_dict({'model': 'line2d',
                                'bounds': [[0, 400], [0, 400]],
                                'outliers': 60,
                                'structures': [{'n_in': 150, 'sigma': 1,
                                                'start': [20, 40], 'end': [380, 360]},
                                               {'n_in': 120, 'sigma': 1,
                                                'start': [20, 350], 'end': [380, 80]}]},
                               name='two-lines')


def write_text(path, text):
    with open(path, 'w', encoding='utf8') as text_file:
        text_file.write(text)
    return str(path)
