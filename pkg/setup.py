#!/usr/bin/env python
# -*- coding: utf-8; py-indent-offset:4 -*-

import os.path
import codecs
import setuptools

# Get the long description from the relevant file
here = os.path.abspath(os.path.dirname(__file__))
with codecs.open(os.path.join(here, 'README.md'), encoding='utf-8') as readme:
    long_description = readme.read()


setuptools.setup(

  name='QBEtools',

  version='0.1.0',

  license='MIT',

  description='Quantum ballistic evolution: step operator predicates, Halmos-Wallen decomposition and Feynman dynamics',

  keywords=['quantum', 'partial isometry', 'quantum Turing machine', 'Hamiltonian'],

  long_description=long_description,

  long_description_content_type='text/markdown',

  packages=setuptools.find_packages(exclude=['tests', 'examples', 'examples.*']),

  package_data={'QBEtools': ['schemas/*.json']},

  install_requires=[
    'numpy>=1.17.0',
    'scipy>=1.4.0',
    'pandas>=0.24.0',
    'networkx>=2.4',
    'click>=7.0',
    'jsonschema>=3.2.0'
  ],

  extras_require={
    'test': ['pytest>=6.0', 'hypothesis>=5.0']
  },

  entry_points={
    'console_scripts': ['qbe=QBEtools.cli.cli:main']
  },

  classifiers=[
    'Development Status :: 3 - Alpha',
    'Programming Language :: Python :: 3',
    'License :: OSI Approved :: MIT License',
    'Intended Audience :: Science/Research',
    'Topic :: Scientific/Engineering :: Physics'
  ],

  python_requires='>=3.7'

)
