# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Base classes shared across the package: the exception hierarchy that the
command-line layer maps onto exit codes.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
ConfigurationError
DegeneratePatternError
DomainError
ModeSolverError
MultimodeError
NoGuidedModeError
PassError
PhaseMismatchError
SingularGeometryError
'''.split()


class PassError(Exception):
    """Base for every error raised deliberately by this package."""


class ConfigurationError(PassError, ValueError):
    """A geometry, scenario file, or simulation plan holds an invalid value."""


class DomainError(PassError, ValueError):
    """A coordinate lies outside the domain on which an operation is defined."""


class SingularGeometryError(DomainError):
    """The UE sits exactly on the radiating PA, so the 1/r law is singular."""


class ModeSolverError(PassError, RuntimeError):
    """The TE0 dispersion relation could not be solved.

    The absolute residual of ``u tan(u) - w`` at the last iterate is kept in
    the *residual* attribute, or None if no iterate exists.

    """
    def __init__(self, message, residual=None):
        super(ModeSolverError, self).__init__(message)
        self.residual = residual


class MultimodeError(ModeSolverError):
    """V >= pi/2: the slab supports more than one even mode."""


class NoGuidedModeError(ModeSolverError):
    """V <= 0: there is no guided mode at all."""


class PhaseMismatchError(PassError, NotImplementedError):
    """The main and PA propagation constants differ; only Delta = 0 is solved."""


class DegeneratePatternError(PassError, ArithmeticError):
    """A pattern or a Monte-Carlo reduction has no usable (nonzero, finite) content."""
