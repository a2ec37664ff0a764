# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Even TE0 mode of an isolated symmetric dielectric slab.

The slab has width W along y, core index n1 and cladding index n0, and
carries a wave along x at frequency f. With u = beta_y W/2 and
w = sigma W/2 the even mode satisfies

    u tan(u) = w,     u**2 + w**2 = V**2,     V = (beta_0 W/2) sqrt(n1**2 - n0**2)

and is the only even mode as long as V < pi/2. All quantities are SI.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
BRACKET_EPSILON
ModeSolution
SlabGeometry
U_XTOL
even_mode_profile
normalized_frequency
solve_te0
width_for_v
'''.split()

import numpy as np
from pwkit.astutil import halfpi, twopi
from pwkit.numutil import broadcastize
from scipy.constants import epsilon_0, mu_0
from scipy.optimize import brentq

from .bases import ConfigurationError, ModeSolverError, MultimodeError, NoGuidedModeError


BRACKET_EPSILON = 1e-9
U_XTOL = 1e-12
RESIDUAL_TOL = 1e-10
NEWTON_POLISH_STEPS = 4


def _check_materials(core_index, clad_index, frequency):
    if not frequency > 0:
        raise ConfigurationError('frequency must be positive; got %r Hz' % frequency)
    if not clad_index >= 1:
        raise ConfigurationError('cladding index must be at least 1; got %r' % clad_index)
    if not core_index > clad_index:
        raise ConfigurationError('core index must exceed cladding index; got n1=%r, n0=%r'
                                 % (core_index, clad_index))


def _free_space_wavenumber(frequency):
    return twopi * frequency * np.sqrt(mu_0 * epsilon_0)


class SlabGeometry(object):
    """Physical description of one slab. Instances are treated as immutable.

    Arguments:

    width
      Core width W, in m.
    core_index
      Core refractive index n1.
    clad_index
      Cladding refractive index n0; n1 > n0 >= 1.
    frequency
      Operating frequency f, in Hz.

    """
    def __init__(self, width, core_index, clad_index, frequency):
        self.width = float(width)
        self.core_index = float(core_index)
        self.clad_index = float(clad_index)
        self.frequency = float(frequency)

        if not self.width > 0:
            raise ConfigurationError('slab width must be positive; got %r m' % width)
        _check_materials(self.core_index, self.clad_index, self.frequency)

    @property
    def free_space_wavenumber(self):
        "beta_0 = 2 pi f sqrt(mu_0 epsilon_0), in rad/m."
        return _free_space_wavenumber(self.frequency)

    @property
    def wavelength(self):
        "Free-space wavelength, in m."
        return twopi / self.free_space_wavenumber

    @property
    def index_contrast(self):
        return np.sqrt(self.core_index**2 - self.clad_index**2)

    def with_width(self, width):
        return SlabGeometry(width, self.core_index, self.clad_index, self.frequency)

    def same_medium(self, other):
        """True if *other* shares our indices and frequency (widths may differ)."""
        return (self.core_index == other.core_index and
                self.clad_index == other.clad_index and
                self.frequency == other.frequency)

    def __eq__(self, other):
        if not isinstance(other, SlabGeometry):
            return NotImplemented
        return self.width == other.width and self.same_medium(other)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.width, self.core_index, self.clad_index, self.frequency))

    def __repr__(self):
        return ('SlabGeometry(width=%r, core_index=%r, clad_index=%r, frequency=%r)'
                % (self.width, self.core_index, self.clad_index, self.frequency))


def normalized_frequency(geom):
    "V = (beta_0 W / 2) sqrt(n1**2 - n0**2)."
    return 0.5 * geom.free_space_wavenumber * geom.width * geom.index_contrast


def width_for_v(core_index, clad_index, frequency, v_target):
    """Invert the V formula: the slab width at which the normalized frequency is
    *v_target*.

    Raises MultimodeError if v_target >= pi/2 and NoGuidedModeError if
    v_target <= 0.

    """
    _check_materials(core_index, clad_index, frequency)

    if not v_target < halfpi:
        raise MultimodeError('V = %r is not below pi/2; the slab would be multimode' % v_target)
    if not v_target > 0:
        raise NoGuidedModeError('V = %r is not positive; no guided mode exists' % v_target)

    contrast = np.sqrt(core_index**2 - clad_index**2)
    return 2 * v_target / (_free_space_wavenumber(frequency) * contrast)


class ModeSolution(object):
    """Solved TE0 modal constants of one slab.

    beta_x is the propagation constant, beta_y the transverse core
    wavenumber, sigma the cladding decay constant (all per m); v_num, u and w
    are the dimensionless normalized frequency and transverse variables.

    """
    def __init__(self, geometry, u, w, v_num):
        self.geometry = geometry
        self.u = u
        self.w = w
        self.v_num = v_num

        width = geometry.width
        beta0 = geometry.free_space_wavenumber
        self.beta_y = 2 * u / width
        self.sigma = 2 * w / width
        self.beta_x = np.sqrt((beta0 * geometry.core_index)**2 - self.beta_y**2)

    @property
    def guided_wavelength(self):
        "lambda_g = 2 pi / beta_x, in m."
        return twopi / self.beta_x

    @property
    def effective_index(self):
        return self.beta_x / self.geometry.free_space_wavenumber

    @property
    def dispersion_residual(self):
        "|u tan(u) - w|"
        return abs(self.u * np.tan(self.u) - self.w)

    def profile(self, y, center=0., amplitude=1.):
        """Even-mode transverse field of this slab centered at *center*."""
        return even_mode_profile(y, center, self.geometry.width, self.beta_y,
                                 self.sigma, amplitude)

    def __repr__(self):
        return ('ModeSolution(v_num=%.6g, u=%.9g, w=%.9g, beta_x=%.9g, beta_y=%.9g, sigma=%.9g)'
                % (self.v_num, self.u, self.w, self.beta_x, self.beta_y, self.sigma))


def _dispersion(u, v):
    return u * np.tan(u) - np.sqrt(max(v * v - u * u, 0.))


def _newton_polish(u, v, lo, hi):
    """A few Newton steps on the dispersion function, each accepted only if it
    stays inside the bracket and lowers the residual.

    """
    g = _dispersion(u, v)

    for _ in range(NEWTON_POLISH_STEPS):
        w = np.sqrt(max(v * v - u * u, 0.))

        if g == 0 or w == 0:
            break

        dg = np.tan(u) + u / np.cos(u)**2 + u / w
        trial = u - g / dg

        if not lo < trial < hi:
            break

        g_trial = _dispersion(trial, v)
        if abs(g_trial) >= abs(g):
            break

        u, g = trial, g_trial

    return u


def solve_te0(geom, max_iter=200):
    """Solve the even TE0 mode of *geom*.

    Arguments:

    geom
      A SlabGeometry.
    max_iter
      Iteration cap for the bracketed root search.

    Returns a ModeSolution. Raises MultimodeError when V >= pi/2,
    NoGuidedModeError when V <= 0, and ModeSolverError (carrying the
    residual) when the root search does not converge.

    """
    v = normalized_frequency(geom)

    if not v < halfpi:
        raise MultimodeError('V = %.6g is not below pi/2 for %r; the slab is multimode' % (v, geom))
    if not v > 0:
        raise NoGuidedModeError('V = %.6g is not positive for %r' % (v, geom))

    # g(u) runs from about -V at the bottom of the bracket to V tan(V) > 0 at
    # the top, crossing zero exactly once.
    lo = min(BRACKET_EPSILON, 0.5 * v)
    hi = min(v, halfpi - BRACKET_EPSILON)

    try:
        u, info = brentq(_dispersion, lo, hi, args=(v,), xtol=U_XTOL,
                         maxiter=max_iter, full_output=True, disp=False)
    except ValueError as e:
        raise ModeSolverError('cannot bracket the TE0 root for V = %.6g: %s' % (v, e)) from e

    if not info.converged:
        raise ModeSolverError('TE0 root search did not converge in %d iterations for V = %.6g'
                              % (max_iter, v), residual=abs(_dispersion(u, v)))

    u = _newton_polish(u, v, lo, hi)
    w = np.sqrt(v * v - u * u)
    residual = abs(u * np.tan(u) - w)

    if residual > RESIDUAL_TOL:
        raise ModeSolverError('TE0 residual %.3g exceeds %.1g for V = %.6g'
                              % (residual, RESIDUAL_TOL, v), residual=residual)

    return ModeSolution(geom, u, w, v)


@broadcastize(1)
def even_mode_profile(y, center, width, beta_y, sigma, amplitude=1.):
    """Transverse field of an even slab mode.

    Arguments:

    y
      Transverse coordinate(s), in m.
    center
      Slab centerline, in m.
    width
      Slab width W, in m.
    beta_y, sigma
      Core wavenumber and cladding decay constant, per m.
    amplitude
      Field amplitude on the centerline.

    Returns ``amplitude cos(beta_y (y - center))`` inside the core and the
    matching exponential tail ``amplitude cos(beta_y W/2) exp(-sigma (|y -
    center| - W/2))`` outside it.

    """
    offset = y - center
    dist = np.abs(offset)
    half = 0.5 * width
    core = dist <= half

    result = np.empty_like(y)
    result[core] = amplitude * np.cos(beta_y * offset[core])
    result[~core] = amplitude * np.cos(beta_y * half) * np.exp(-sigma * (dist[~core] - half))
    return result
