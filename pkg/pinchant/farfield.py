# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Far-field radiation of the two PAs in the x-y plane.

Angles phi are measured counterclockwise from the +x axis (the direction of
guided propagation), so k_x = beta_0 cos(phi) and k_y = beta_0 sin(phi).
The radiated field of one PA factors into a projection factor -sin(phi), a
longitudinal factor F_x from the PA amplitude B(x) and a transverse factor
F_y from the PA core profile. The system pattern is the coherent sum of the
upper and lower PA contributions.

Where the transverse aperture sits is selected by an *aperture* keyword:

physical
  The upper PA core itself, y in [W_m/2, W_m/2 + W_s].
shifted
  y in [W_m, W_m + W_s].
outer
  Phase reference at W_m + W_s, i.e. y in [W_m + W_s/2, W_m + 3 W_s/2]
  (default).

In each case the lower PA uses the mirror image of the upper aperture, and
`oracle_radiation_integral` integrates over the same bounds as the closed
form it checks.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
APERTURES
DEFAULT_APERTURE
DEFAULT_N_ANGLES
FarFieldPattern
aperture_bounds
aperture_center
aperture_discrepancy
compute_pattern
directivity
normalized_power_pattern
oracle_radiation_integral
pattern_factor_x
pattern_factor_y
projection_factor
single_pa_pattern
total_pattern
'''.split()

import numpy as np
from pwkit.astutil import twopi
from pwkit.numutil import broadcastize
from scipy.integrate import simpson

from .bases import DegeneratePatternError
from .coupling import (SQRT2, amplitude_kernel, coupling_coefficient, normalize_side,
                       require_phase_matched)
from .numerics import composite_simpson, periodic_mean, sinc, uniform_angle_grid

APERTURES = ('physical', 'shifted', 'outer')
DEFAULT_APERTURE = 'outer'
DEFAULT_N_ANGLES = 1440
ORACLE_PANELS = 2048
AXIS_SNAP = 1e-12


def aperture_center(cfg, aperture=DEFAULT_APERTURE):
    "Center of the upper PA's radiating aperture, in m."
    wm = cfg.main.width
    ws = cfg.pa.width

    if aperture == 'physical':
        return 0.5 * wm + 0.5 * ws
    if aperture == 'shifted':
        return wm + 0.5 * ws
    if aperture == 'outer':
        return wm + ws
    raise ValueError('unknown aperture convention %r; expected one of %s'
                     % (aperture, ', '.join(APERTURES)))


def aperture_bounds(cfg, s, aperture=DEFAULT_APERTURE):
    "Transverse integration bounds (lo, hi) of the aperture of PA *s*."
    c = aperture_center(cfg, aperture)
    if normalize_side(s) == 'lower':
        c = -c
    half = 0.5 * cfg.pa.width
    return c - half, c + half


@broadcastize(1)
def projection_factor(phi):
    """P(phi) = -sin(phi), snapped to exact zero along the guide axis, where
    the floating-point sine of the nearest double to pi is not zero.

    """
    p = -np.sin(phi)
    p[np.abs(p) < AXIS_SNAP] = 0.
    return p


@broadcastize(1)
def _longitudinal_kernel(phi, beta0, beta_sx, kappa, pa_length, pa_position, a0):
    a = beta0 * np.cos(phi) - beta_sx
    p = SQRT2 * kappa
    omega_plus = 0.5 * pa_length * (a + p)
    omega_minus = 0.5 * pa_length * (a - p)
    delta_x = kappa * pa_length / SQRT2

    return (-pa_length * a0 / (2 * SQRT2) * np.exp(1j * a * pa_position) *
            (np.exp(1j * delta_x) * sinc(omega_plus) - np.exp(-1j * delta_x) * sinc(omega_minus)))


@broadcastize(1)
def _transverse_kernel(phi, beta0, beta_sy, pa_width, center, y_s):
    ky = beta0 * np.sin(phi)
    omega_plus = 0.5 * pa_width * (ky + beta_sy)
    omega_minus = 0.5 * pa_width * (ky - beta_sy)

    return 0.5 * pa_width * (
        np.exp(1j * ((ky + beta_sy) * center - beta_sy * y_s)) * sinc(omega_plus) +
        np.exp(1j * ((ky - beta_sy) * center + beta_sy * y_s)) * sinc(omega_minus))


def pattern_factor_x(cfg, kappa, phi):
    """Longitudinal pattern factor F_x(phi): the integral of
    ``B(x') exp(-j beta_sx x') exp(j k_x x')`` over the PA length, in closed
    form as a pair of sinc terms.

    """
    require_phase_matched(cfg)
    return _longitudinal_kernel(phi, cfg.main.free_space_wavenumber, cfg.pa_mode.beta_x,
                                kappa, cfg.pa_length, cfg.pa_position, cfg.input_amplitude)


def pattern_factor_y(cfg, phi, s, aperture=DEFAULT_APERTURE):
    """Transverse pattern factor F_y(phi) of PA *s*: the integral of
    ``cos(beta_sy (y' - y_s)) exp(j k_y y')`` over that PA's aperture. For
    the lower PA both the aperture and y_s are mirrored.

    """
    require_phase_matched(cfg)
    center = aperture_center(cfg, aperture)
    y_s = cfg.upper_center

    if normalize_side(s) == 'lower':
        center, y_s = -center, -y_s

    return _transverse_kernel(phi, cfg.main.free_space_wavenumber, cfg.pa_mode.beta_y,
                              cfg.pa.width, center, y_s)


def single_pa_pattern(cfg, kappa, phi, s, aperture=DEFAULT_APERTURE):
    "Far-field pattern of PA *s* alone."
    return (projection_factor(phi) * pattern_factor_x(cfg, kappa, phi) *
            pattern_factor_y(cfg, phi, s, aperture))


def total_pattern(cfg, kappa, phi, aperture=DEFAULT_APERTURE):
    "F(phi) = P(phi) F_x(phi) [F_y,upper(phi) + F_y,lower(phi)]."
    fy = (pattern_factor_y(cfg, phi, 'upper', aperture) +
          pattern_factor_y(cfg, phi, 'lower', aperture))
    return projection_factor(phi) * pattern_factor_x(cfg, kappa, phi) * fy


def normalized_power_pattern(samples):
    """G = |F|^2 / max |F|^2 for an array of complex pattern samples."""
    power = np.abs(np.asarray(samples))**2

    if power.ndim != 1 or power.size < 2:
        raise ValueError('need a 1D array of at least two pattern samples; got shape %r'
                         % (power.shape,))
    if not np.all(np.isfinite(power)):
        raise DegeneratePatternError('pattern samples contain non-finite values')

    peak = power.max()
    if not peak > 0:
        raise DegeneratePatternError('pattern is identically zero over %d samples' % power.size)

    return power / peak


def directivity(power_pattern, angles):
    """D = G / ((1/2pi) integral of G over a full turn). *angles* must be a
    uniform grid over [0, 2pi) with the endpoint excluded.

    """
    power_pattern = np.asarray(power_pattern, dtype=float)
    mean = periodic_mean(power_pattern, angles)

    if not mean > 0:
        raise DegeneratePatternError('power pattern integrates to %r over the full turn' % mean)

    return power_pattern / mean


def oracle_radiation_integral(cfg, kappa, phi, aperture=DEFAULT_APERTURE,
                              n_panels=ORACLE_PANELS, full_2d=False):
    """Brute-force far-field pattern by composite Simpson quadrature of

    ``B(x') E_s(y') exp(-j beta_sx x') exp(j (k_x x' + k_y y'))``

    over the PA length and each PA's aperture (core cosine only), summed over
    the two PAs and multiplied by the projection factor.

    Arguments:

    cfg, kappa
      The phase-matched configuration and its coupling coefficient.
    phi
      Angle or 1D array of angles, rad.
    aperture
      Aperture convention; see the module docstring.
    n_panels
      Simpson panels per dimension (even).
    full_2d
      If true, integrate the unfactored integrand on a 2D mesh one angle at
      a time instead of taking the product of two 1D integrals. Far slower;
      used to check separability.

    """
    require_phase_matched(cfg)
    phi_arr = np.atleast_1d(np.asarray(phi, dtype=float))
    beta0 = cfg.main.free_space_wavenumber
    kx = beta0 * np.cos(phi_arr)[:, np.newaxis]
    ky = beta0 * np.sin(phi_arr)[:, np.newaxis]
    beta_sx = cfg.pa_mode.beta_x
    beta_sy = cfg.pa_mode.beta_y
    x_lo, x_hi = cfg.coupling_region

    def amplitude(xp):
        return amplitude_kernel(xp - x_lo, kappa, cfg.input_amplitude)[1]

    sides = []
    for s in ('upper', 'lower'):
        y_s = cfg.pa_center(s)
        sides.append((aperture_bounds(cfg, s, aperture), y_s))

    if not full_2d:
        fx = composite_simpson(lambda xp: amplitude(xp) * np.exp(1j * (kx - beta_sx) * xp),
                               x_lo, x_hi, n_panels)
        fy = 0.
        for (y_lo, y_hi), y_s in sides:
            fy = fy + composite_simpson(lambda yp: np.cos(beta_sy * (yp - y_s)) * np.exp(1j * ky * yp),
                                        y_lo, y_hi, n_panels)
        result = fx * fy
    else:
        xs = np.linspace(x_lo, x_hi, n_panels + 1)
        bx = amplitude(xs)[:, np.newaxis]
        result = np.zeros(phi_arr.shape, dtype=complex)

        for i in range(phi_arr.size):
            total = 0.
            for (y_lo, y_hi), y_s in sides:
                ys = np.linspace(y_lo, y_hi, n_panels + 1)
                integrand = (bx * np.cos(beta_sy * (ys[np.newaxis, :] - y_s)) *
                             np.exp(-1j * beta_sx * xs[:, np.newaxis]) *
                             np.exp(1j * (kx[i, 0] * xs[:, np.newaxis] + ky[i, 0] * ys[np.newaxis, :])))
                total = total + simpson(simpson(integrand, x=ys, axis=1), x=xs)
            result[i] = total

    result = projection_factor(phi_arr) * result

    if np.ndim(phi) == 0:
        return complex(result[0])
    return result


def aperture_discrepancy(cfg, kappa, phi, n_panels=ORACLE_PANELS):
    """How far the outer closed form strays from an integral over the
    shifted aperture bounds: max ||F_outer| - |F_oracle|| / max |F_oracle|
    over the angles *phi*.

    """
    closed = np.abs(total_pattern(cfg, kappa, phi, 'outer'))
    oracle = np.abs(oracle_radiation_integral(cfg, kappa, phi, 'shifted', n_panels=n_panels))
    return np.max(np.abs(closed - oracle)) / np.max(oracle)


class FarFieldPattern(object):
    """A sampled far-field pattern.

    Attributes *angles* (rad, uniform over [0, 2pi)), *complex_pattern*,
    *power_pattern* (G, peak exactly 1) and *directivity* (D, unit angular
    mean) are arrays over the grid. The configuration, coupling coefficient
    and aperture convention are kept so the pattern can be evaluated off the
    grid with `directivity_at`.

    """
    def __init__(self, cfg, kappa, angles, complex_pattern, aperture=DEFAULT_APERTURE):
        self.cfg = cfg
        self.kappa = kappa
        self.aperture = aperture
        self.angles = np.asarray(angles, dtype=float)
        self.complex_pattern = np.asarray(complex_pattern, dtype=complex)
        self.power_pattern = normalized_power_pattern(self.complex_pattern)
        self.directivity = directivity(self.power_pattern, self.angles)

        # |F|^2 corresponding to D = 1
        self.isotropic_power = (np.abs(self.complex_pattern)**2).max() / self.directivity.max()

    @property
    def n_angles(self):
        return self.angles.size

    @property
    def peak_directivity(self):
        return self.directivity.max()

    @property
    def main_lobe_angle(self):
        "Angle of the pattern maximum, folded into [0, pi] using the mirror symmetry."
        phi = self.angles[np.argmax(self.power_pattern)]
        return min(phi, twopi - phi)

    def half_power_beamwidth(self):
        """Full width (rad) of the main lobe between its half-power points,
        found by walking outward from the peak and interpolating linearly
        at each crossing.

        """
        g = self.power_pattern
        n = g.size
        step = twopi / n
        peak = int(np.argmax(g))
        width = 0.

        for direction in (1, -1):
            prev = g[peak]
            for k in range(1, n):
                cur = g[(peak + direction * k) % n]
                if cur < 0.5:
                    width += step * (k - 1 + (prev - 0.5) / (prev - cur))
                    break
                prev = cur
            else:
                return twopi

        return width

    def directivity_at(self, phi):
        """D at arbitrary angles, from the closed-form pattern normalized by this
        grid's angular mean.

        """
        f = total_pattern(self.cfg, self.kappa, phi, self.aperture)
        return np.abs(f)**2 / self.isotropic_power

    def summary(self):
        return dict(
            pa_length_m = self.cfg.pa_length,
            aperture = self.aperture,
            n_angles = self.n_angles,
            kappa = self.kappa,
            peak_directivity = self.peak_directivity,
            main_lobe_deg = np.degrees(self.main_lobe_angle),
            half_power_beamwidth_deg = np.degrees(self.half_power_beamwidth()),
        )


def compute_pattern(cfg, kappa=None, n_angles=DEFAULT_N_ANGLES, aperture=DEFAULT_APERTURE):
    """Sample the system pattern of *cfg* on a uniform grid of *n_angles*.

    *kappa* defaults to the closed-form coupling coefficient of *cfg*.

    """
    if aperture not in APERTURES:
        raise ValueError('unknown aperture convention %r; expected one of %s'
                         % (aperture, ', '.join(APERTURES)))

    if kappa is None:
        kappa = coupling_coefficient(cfg)

    angles = uniform_angle_grid(n_angles)
    return FarFieldPattern(cfg, kappa, angles, total_pattern(cfg, kappa, angles, aperture),
                           aperture=aperture)
