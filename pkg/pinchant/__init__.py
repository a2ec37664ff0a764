# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""
Main module for the pinchant project: closed-form electromagnetic modeling
of pinching-antenna systems built on dielectric slab waveguides.
"""

from __future__ import absolute_import, division, print_function
