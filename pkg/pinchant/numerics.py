# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Small numerical kernels shared by the field and pattern modules.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
SINC_SERIES_CUT
composite_simpson
piecewise_simpson
periodic_mean
sinc
uniform_angle_grid
'''.split()

import numpy as np
from pwkit.astutil import twopi
from pwkit.numutil import broadcastize
from scipy.integrate import simpson


SINC_SERIES_CUT = 1e-6


@broadcastize(1)
def sinc(x):
    """Unnormalized sinc, sin(x)/x, with sinc(0) = 1 exactly.

    Below |x| = SINC_SERIES_CUT the two-term Taylor series is used; its
    truncation error there is below 1e-25.

    """
    result = np.empty_like(x)
    small = np.abs(x) < SINC_SERIES_CUT
    big = ~small
    result[big] = np.sin(x[big]) / x[big]
    result[small] = 1. - x[small]**2 / 6
    return result


def composite_simpson(func, a, b, n_panels):
    """Integrate *func* over [a, b] with the composite Simpson rule.

    Arguments:

    func
      Callable taking a 1D array of abscissae and returning samples whose
      last axis runs along them. Leading axes (e.g. one per angle) are
      integrated independently.
    a, b
      Integration bounds.
    n_panels
      Number of panels; must be even.

    Returns the integral with the last axis removed.

    """
    n_panels = int(n_panels)

    if n_panels < 2 or n_panels % 2:
        raise ValueError('Simpson rule needs an even panel count >= 2; got %r' % n_panels)

    x = np.linspace(a, b, n_panels + 1)
    return simpson(func(x), x=x, axis=-1)


def piecewise_simpson(func, breakpoints, n_panels):
    """Sum composite Simpson integrals over consecutive intervals of
    *breakpoints*, using *n_panels* panels in each. Integrands with a
    derivative jump at a breakpoint keep full order this way.

    """
    total = 0.
    for lo, hi in zip(breakpoints[:-1], breakpoints[1:]):
        total = total + composite_simpson(func, lo, hi, n_panels)
    return total


def uniform_angle_grid(n_angles):
    """*n_angles* uniformly spaced angles on [0, 2 pi), endpoint excluded."""
    n_angles = int(n_angles)

    if n_angles < 2:
        raise ValueError('need at least two angles; got %d' % n_angles)

    return twopi * np.arange(n_angles) / n_angles


def periodic_mean(samples, angles):
    """(1/2pi) times the periodic trapezoidal integral of *samples* over *angles*.

    *angles* must be a uniform grid covering [0, 2pi) with the endpoint
    excluded, in which case the rule reduces to a plain average.

    """
    angles = np.asarray(angles, dtype=float)
    samples = np.asarray(samples)

    if angles.ndim != 1 or angles.size < 2 or samples.shape != angles.shape:
        raise ValueError('need matching 1D sample and angle arrays with at least two entries')

    step = twopi / angles.size
    expected = angles[0] + step * np.arange(angles.size)

    if not np.allclose(angles, expected, rtol=0, atol=1e-9 * twopi):
        raise ValueError('angle grid is not uniform over a full turn (spacing should be %.6g rad)'
                         % step)

    return samples.sum() / samples.size
