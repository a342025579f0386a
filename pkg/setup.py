import io
import pathlib
import re

from setuptools import setup


HERE = pathlib.Path(__file__).parent
INSTALL_REQUIRES = (HERE / 'requirements.txt').read_text().splitlines()
TESTS_REQUIRE = (HERE / 'requirements-test.txt').read_text().splitlines()[1:]

with io.open('README.md', 'rt', encoding='utf8') as f:
    readme = f.read()

with io.open('mulinl/__init__.py', 'rt', encoding='utf8') as f:
    version = re.search(r'__version__ = \'(.*?)\'', f.read(), re.M).group(1)

setup(name='mulinl',
      version=version,
      license='MPL-2.0',
      description='Threshold-free robust estimation of multiple inlier structures.',
      long_description=readme,
      long_description_content_type='text/markdown',
      packages=[
        'mulinl',
        'mulinl.bases',
        'mulinl.models',
        'mulinl.serialization',
        'mulinl.synthetic',
        'mulinl.utils'
      ],
      package_data={'mulinl.synthetic': ['scenes/*.yml']},
      include_package_data=True,
      python_requires='>=3.7',
      install_requires=INSTALL_REQUIRES,
      tests_require=TESTS_REQUIRE,
      classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Image Recognition',
        'Topic :: Software Development :: Libraries :: Python Modules',
       ],
)
