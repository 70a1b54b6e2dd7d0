import os

from setuptools import find_packages, setup


def is_optional_enabled(optional):
    return os.environ.get(optional, None) is not None


# Dependencies versions
VERSION_NUMPY = '>=1.23.0'
VERSION_PANDAS = '>=1.5.0'
VERSION_MATPLOTLIB = '>=3.6.0'
VERSION_PYYAML = '>=6.0'

LATEST_DEPS = 'CARLESON_LATEST_DEPS'

if is_optional_enabled(LATEST_DEPS):
    print('Dependencies will be installed in theirs latest versions.')
    VERSION_NUMPY = ''
    VERSION_PANDAS = ''
    VERSION_MATPLOTLIB = ''
    VERSION_PYYAML = ''

setup(
    name='carleson-tools',
    packages=find_packages(exclude=['tests', 'tests.*']),
    python_requires='>=3.9',
    install_requires=[
        'numpy' + VERSION_NUMPY,
        'pandas' + VERSION_PANDAS,
        'matplotlib' + VERSION_MATPLOTLIB,
        'PyYAML' + VERSION_PYYAML,
    ],
    entry_points={
        'console_scripts': ['carleson=carleson.carleson_cmd:main'],
    },
    version='1.0',
    description='Inclusion calculus of Carleson sets and Carleson windows in the unit disk.',
    long_description='Carleson Tools computes the constants c > 1 for which a Carleson window'
                     ' W(b,h/c) lies in the Carleson set S(b,h) and S(b,h) lies in W(b,ch).'
                     ' Closed-form intervals are checked against a deterministic sampling'
                     ' oracle that reports margin-robust counterexamples, and the landmark'
                     ' geometry of the windows can be drawn as SVG figures.',
)
