# -*- coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators
# Licensed under the MIT License

from __future__ import absolute_import, division, print_function

from setuptools import setup

setup(
    name = 'pinchant',
    author = 'Peter Williams <peter@newton.cx>',
    version = '0.1.0',
    license = 'MIT',
    description = 'Model of dielectric-waveguide pinching-antenna radiation and links.',

    # Synchronize with README.md:
    install_requires = [
        'numpy >=1.20',
        'pwkit >=0.8.19',
        'pytoml >=0.1.14',
        'scipy >=1.6',
    ],

    packages = [
        'pinchant',
        'pinchant.cli',
        'pinchant.tests',
    ],

    package_data = {
        'pinchant.tests': ['*.toml'],
    },

    entry_points = {
        'console_scripts': [
            'pinchant = pinchant.cli:main',
        ],
    },

    include_package_data = True,

    classifiers = [
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Topic :: Scientific/Engineering :: Physics',
    ],

    keywords = 'waveguide antenna coupled-mode radiation pattern wireless',
)
