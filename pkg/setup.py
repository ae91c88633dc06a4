# Copyright 2023 The hkmatrix Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Package Setup script for hkmatrix."""

import os

from setuptools import find_packages
from setuptools import setup


def select_constraint(default, unconstrained=''):
  """Select dependency constraint based on HKMATRIX_DEPENDENCY_SELECTOR."""
  if os.environ.get('HKMATRIX_DEPENDENCY_SELECTOR') == 'UNCONSTRAINED':
    return unconstrained
  return default


# Get version from version module.
with open('hkmatrix/version.py') as fp:
  globals_dict = {}
  exec(fp.read(), globals_dict)  # pylint: disable=exec-used
__version__ = globals_dict['__version__']

# Get the long description from the README file.
with open('README.md') as fp:
  _LONG_DESCRIPTION = fp.read()

setup(
    name='hkmatrix',
    version=__version__,
    author='The hkmatrix Authors',
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ],
    namespace_packages=[],
    install_requires=[
        'absl-py' + select_constraint('>=0.9,<3'),
        'apache-beam' + select_constraint('>=2.40,<3'),
        'numpy' + select_constraint('>=1.17,<3'),
    ],
    extras_require={
        # Independent symbolic oracle for the series tests.
        'test': ['sympy' + select_constraint('>=1.9,<2')],
    },
    python_requires='>=3.8,<4',
    packages=find_packages(),
    include_package_data=True,
    zip_safe=False,
    entry_points={
        'console_scripts': ['hkmatrix=hkmatrix.tools.cli:run_main'],
    },
    description=('hkmatrix computes heat-kernel coefficients by exact '
                 'matrix, series and calculus pipelines and checks the '
                 'algebra behind them.'),
    long_description=_LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords='heat kernel combinatorics bialgebra power series',
    requires=[])
