# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Coupled-mode description of a main slab waveguide with two identical
pinching antennas (PAs) attached symmetrically above and below it.

The main guide occupies |y| <= W_m/2 and runs along x over [0, L]. Each PA
is a slab of width W_s and length L_s whose centerline sits at
y = +/-(W_m + W_s)/2, spanning x in [x_p - L_s/2, x_p + L_s/2]. Inside that
coupling region the main-guide amplitude A and the amplitude B of each PA
exchange power at the rate kappa. Positions are in m throughout.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
CouplingSolution
PassConfiguration
amplitude_along_guide
coupled_powers
coupling_coefficient
coupling_coefficient_quadrature
coupling_length
main_field
mode_amplitudes
normalization_integral
normalization_integral_quadrature
normalize_side
overlap_integral
overlap_integral_quadrature
pa_field
require_phase_matched
single_pa_coupling_length
single_pa_power
solve_coupling
transverse_profile_main
transverse_profile_pa
'''.split()

import numpy as np
from pwkit.numutil import broadcastize
from scipy.constants import epsilon_0, mu_0

from .bases import ConfigurationError, DomainError, PhaseMismatchError
from .numerics import composite_simpson, piecewise_simpson
from .slab import solve_te0

SQRT2 = np.sqrt(2.)
ORACLE_PANELS = 100000
TAIL_CUTOFF = 1e-12


class PassConfiguration(object):
    """The full system: one main slab and two identical PAs.

    Arguments:

    main
      SlabGeometry of the main waveguide.
    pa
      SlabGeometry shared by both PAs. It must use the same indices and
      frequency as *main*.
    pa_length
      PA length L_s, in m.
    pa_position
      PA center x_p, in m; L_s/2 <= x_p <= L - L_s/2.
    waveguide_length
      Main waveguide length L, in m.
    input_amplitude
      Field amplitude A_0 fed into the main guide at x = 0.
    main_mode, pa_mode
      Optional pre-solved ModeSolution instances for the two slabs. When
      omitted the modes are solved here.

    """
    def __init__(self, main, pa, pa_length, pa_position, waveguide_length,
                 input_amplitude=1., main_mode=None, pa_mode=None):
        if not main.same_medium(pa):
            raise ConfigurationError('main guide and PAs must share indices and frequency; '
                                     'got %r and %r' % (main, pa))

        self.main = main
        self.pa = pa
        self.pa_length = float(pa_length)
        self.pa_position = float(pa_position)
        self.waveguide_length = float(waveguide_length)
        self.input_amplitude = float(input_amplitude)

        if not self.waveguide_length > 0:
            raise ConfigurationError('waveguide length must be positive; got %r m' % waveguide_length)
        if not self.pa_length > 0:
            raise ConfigurationError('PA length must be positive; got %r m' % pa_length)
        if self.pa_length > self.waveguide_length:
            raise ConfigurationError('PA length %r m exceeds waveguide length %r m'
                                     % (pa_length, waveguide_length))

        half = 0.5 * self.pa_length
        if not half <= self.pa_position <= self.waveguide_length - half:
            raise ConfigurationError('PA center %r m must lie in [%r, %r] m'
                                     % (pa_position, half, self.waveguide_length - half))

        if not self.input_amplitude > 0:
            raise ConfigurationError('input amplitude must be positive; got %r' % input_amplitude)

        self.main_mode = main_mode if main_mode is not None else solve_te0(main)

        if pa_mode is not None:
            self.pa_mode = pa_mode
        elif pa == main:
            self.pa_mode = self.main_mode
        else:
            self.pa_mode = solve_te0(pa)


    @classmethod
    def symmetric(cls, slab, pa_length, pa_position, waveguide_length, input_amplitude=1.):
        """Phase-matched configuration: the PAs reuse the main slab geometry."""
        return cls(slab, slab, pa_length, pa_position, waveguide_length,
                   input_amplitude=input_amplitude)


    def replace(self, pa_length=None, pa_position=None, waveguide_length=None):
        """Copy with a different PA length, PA position, or guide length. The
        solved modes are reused.

        """
        return PassConfiguration(
            self.main, self.pa,
            self.pa_length if pa_length is None else pa_length,
            self.pa_position if pa_position is None else pa_position,
            self.waveguide_length if waveguide_length is None else waveguide_length,
            input_amplitude = self.input_amplitude,
            main_mode = self.main_mode,
            pa_mode = self.pa_mode,
        )


    @property
    def upper_center(self):
        "y_u = (W_m + W_s)/2; the lower PA sits at y_d = -y_u."
        return 0.5 * (self.main.width + self.pa.width)

    @property
    def pa_centers(self):
        yu = self.upper_center
        return yu, -yu

    @property
    def coupling_region(self):
        half = 0.5 * self.pa_length
        return self.pa_position - half, self.pa_position + half

    @property
    def phase_mismatch(self):
        "Delta = beta_sx - beta_mx, rad/m."
        return self.pa_mode.beta_x - self.main_mode.beta_x

    @property
    def is_phase_matched(self):
        return self.phase_mismatch == 0

    def pa_center(self, s):
        s = normalize_side(s)
        return self.upper_center if s == 'upper' else -self.upper_center

    def describe(self):
        """Plain-data summary in SI units, for provenance records."""
        return dict(
            frequency_hz = self.main.frequency,
            core_index = self.main.core_index,
            clad_index = self.main.clad_index,
            main_width_m = self.main.width,
            pa_width_m = self.pa.width,
            main_v = self.main_mode.v_num,
            pa_v = self.pa_mode.v_num,
            pa_length_m = self.pa_length,
            pa_position_m = self.pa_position,
            waveguide_length_m = self.waveguide_length,
            input_amplitude = self.input_amplitude,
        )

    def __repr__(self):
        return ('<PassConfiguration W_m=%.6g W_s=%.6g L_s=%.6g x_p=%.6g L=%.6g>'
                % (self.main.width, self.pa.width, self.pa_length, self.pa_position,
                   self.waveguide_length))


def normalize_side(s):
    if s in ('upper', 'u', '+'):
        return 'upper'
    if s in ('lower', 'd', 'l', '-'):
        return 'lower'
    raise ValueError('PA side must be "upper" or "lower"; got %r' % (s,))


def require_phase_matched(cfg):
    delta = cfg.phase_mismatch
    if delta != 0:
        raise PhaseMismatchError('only the phase-matched case (Delta = 0) is solved; this '
                                 'configuration has Delta = %.6g rad/m (W_m=%r, W_s=%r)'
                                 % (delta, cfg.main.width, cfg.pa.width))


class CouplingSolution(object):
    """kappa (rad/m), the coupling length L_c (m), and the phase mismatch
    Delta (rad/m).

    """
    def __init__(self, kappa, coupling_length, delta=0.):
        self.kappa = kappa
        self.coupling_length = coupling_length
        self.delta = delta

    def __repr__(self):
        return ('CouplingSolution(kappa=%.9g, coupling_length=%.9g, delta=%.3g)'
                % (self.kappa, self.coupling_length, self.delta))


# Closed forms

def normalization_integral(mode, amplitude=1.):
    """Closed form of the integral of |E(y)|^2 over all y for a solved mode.

    ``amplitude**2 * (W/2 + sin(beta_y W)/(2 beta_y) + cos(beta_y W/2)**2 / sigma)``

    """
    width = mode.geometry.width
    by = mode.beta_y
    return amplitude**2 * (0.5 * width + np.sin(by * width) / (2 * by) +
                           np.cos(0.5 * by * width)**2 / mode.sigma)


def overlap_integral(cfg):
    """Closed form of the overlap between the main-guide profile and the
    upper PA's evanescent tail, integrated over the main core. Both profiles
    have unit amplitude.

    """
    half_m = 0.5 * cfg.main.width
    bmy = cfg.main_mode.beta_y
    bsy = cfg.pa_mode.beta_y
    ss = cfg.pa_mode.sigma

    bracket = (2 * ss * np.cos(bmy * half_m) * np.sinh(ss * half_m) +
               2 * bmy * np.sin(bmy * half_m) * np.cosh(ss * half_m))
    return (np.cos(0.5 * bsy * cfg.pa.width) * np.exp(-ss * half_m) * bracket /
            (ss**2 + bmy**2))


def coupling_coefficient(cfg):
    """Coupling coefficient kappa_m between the main guide and each PA, rad/m.

    ``kappa = beta_0**2 (n1**2 - n0**2) I_ms / (2 beta_mx N_m)``, with the
    overlap I_ms from `overlap_integral` and the normalization N_m from
    `normalization_integral`. The expression is exact for any pair of
    widths; only the phase-matched case is used downstream.

    """
    beta0 = cfg.main.free_space_wavenumber
    contrast2 = cfg.main.core_index**2 - cfg.main.clad_index**2
    return (beta0**2 * contrast2 * overlap_integral(cfg) /
            (2 * cfg.main_mode.beta_x * normalization_integral(cfg.main_mode)))


def coupling_length(kappa):
    "L_c = pi / (2 sqrt(2) kappa): first point of complete transfer into the PAs."
    if not kappa > 0:
        raise DomainError('coupling coefficient must be positive; got %r' % kappa)
    return np.pi / (2 * SQRT2 * kappa)


def single_pa_coupling_length(kappa):
    "pi / (2 kappa): complete transfer into a lone PA under the two-guide model."
    if not kappa > 0:
        raise DomainError('coupling coefficient must be positive; got %r' % kappa)
    return np.pi / (2 * kappa)


def solve_coupling(cfg):
    kappa = coupling_coefficient(cfg)
    return CouplingSolution(kappa, coupling_length(kappa), cfg.phase_mismatch)


# Amplitudes and powers

@broadcastize(1, ret_spec=(0, 0))
def amplitude_kernel(x_tilde, kappa, a0):
    theta = SQRT2 * kappa * x_tilde
    a = a0 * np.cos(theta) + 0j
    b = -1j * (a0 / SQRT2) * np.sin(theta)
    return a, b


def mode_amplitudes(cfg, kappa, x_tilde):
    """Amplitudes (A, B) at local coordinate x_tilde in [0, L_s] of the coupling
    region, with A(0) = A_0 and B(0) = 0. B is the amplitude of each PA.

    """
    require_phase_matched(cfg)
    xt = np.asarray(x_tilde, dtype=float)

    if np.any(xt < 0) or np.any(xt > cfg.pa_length):
        raise DomainError('local coordinate must lie in [0, %r] m; got %r' % (cfg.pa_length, x_tilde))

    return amplitude_kernel(x_tilde, kappa, cfg.input_amplitude)


def amplitude_along_guide(cfg, kappa, x):
    """Main-guide amplitude A at global position x in [0, L]: A_0 before the
    coupling region, the cosine exchange inside it, and the value reached at
    its far end afterwards.

    """
    require_phase_matched(cfg)
    xa = np.asarray(x, dtype=float)

    if np.any(xa < 0) or np.any(xa > cfg.waveguide_length):
        raise DomainError('position must lie in [0, %r] m; got %r' % (cfg.waveguide_length, x))

    start, _ = cfg.coupling_region
    x_tilde = np.clip(xa - start, 0., cfg.pa_length)
    return amplitude_kernel(x_tilde, kappa, cfg.input_amplitude)[0]


def coupled_powers(kappa, x_tilde):
    """Normalized powers (P_m, P_s) after an interaction length x_tilde.

    P_m = cos^2(sqrt(2) kappa x_tilde) stays in the main guide and each PA
    holds P_s = sin^2(sqrt(2) kappa x_tilde)/2. x_tilde may exceed any
    particular L_s so the function can drive length sweeps.

    """
    xt = np.asarray(x_tilde, dtype=float)

    if np.any(xt < 0):
        raise DomainError('interaction length must be nonnegative; got %r' % (x_tilde,))

    theta = SQRT2 * kappa * xt
    pm = np.cos(theta)**2
    ps = 0.5 * np.sin(theta)**2

    if xt.ndim == 0:
        return float(pm), float(ps)
    return pm, ps


def single_pa_power(kappa, x_tilde):
    """Reference model for a lone PA: the synchronous two-guide coupler power
    sin^2(kappa x_tilde). It serves as a baseline curve only.

    """
    xt = np.asarray(x_tilde, dtype=float)

    if np.any(xt < 0):
        raise DomainError('interaction length must be nonnegative; got %r' % (x_tilde,))

    p = np.sin(kappa * xt)**2
    return float(p) if xt.ndim == 0 else p


# Field profiles

def transverse_profile_main(cfg, y):
    "Main-guide transverse field E_m(y), with amplitude A_0 on the axis."
    return cfg.main_mode.profile(y, 0., cfg.input_amplitude)


def transverse_profile_pa(cfg, s, y):
    """Transverse field E_s(y) of the PA on side *s* ("upper" or "lower"),
    centered on that PA with unit peak; the coupled amplitude B carries the
    scale.

    """
    return cfg.pa_mode.profile(y, cfg.pa_center(s), 1.)


def pa_field(cfg, kappa, x, y, s):
    """Field along the PA on side *s*:
    ``B(x - x_p + L_s/2) E_s(y) exp(-j beta_sx x)`` inside the coupling
    region and zero outside it.

    """
    require_phase_matched(cfg)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    start, stop = cfg.coupling_region
    inside = (x >= start) & (x <= stop)

    x_tilde = np.where(inside, x - start, 0.)
    _, b = amplitude_kernel(x_tilde, kappa, cfg.input_amplitude)
    field = b * transverse_profile_pa(cfg, s, y) * np.exp(-1j * cfg.pa_mode.beta_x * x)
    field = np.where(inside, field, 0j)
    return complex(field) if field.ndim == 0 else field


def main_field(cfg, kappa, x, y):
    """Field along the main guide: ``A(x) E_m(y)/A_0 exp(-j beta_mx x)``."""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    a = amplitude_along_guide(cfg, kappa, x)
    shape = cfg.main_mode.profile(y, 0., 1.)
    field = a * shape * np.exp(-1j * cfg.main_mode.beta_x * x)
    return complex(field) if field.ndim == 0 else field


# Quadrature oracles

def _tail_extent(mode):
    # distance beyond the interface where the evanescent factor drops to TAIL_CUTOFF
    return -np.log(TAIL_CUTOFF) / mode.sigma


def normalization_integral_quadrature(mode, amplitude=1., n_panels=ORACLE_PANELS):
    """Composite-Simpson evaluation of the integral of |E(y)|^2, split at the
    core edges and truncated where the tail has fallen by TAIL_CUTOFF.

    """
    half = 0.5 * mode.geometry.width
    reach = half + _tail_extent(mode)
    func = lambda y: mode.profile(y, 0., amplitude)**2
    return piecewise_simpson(func, [-reach, -half, half, reach], n_panels)


def overlap_integral_quadrature(cfg, n_panels=ORACLE_PANELS):
    """Composite-Simpson evaluation of the main/upper-PA overlap over the main
    core, using the full field profiles.

    """
    half = 0.5 * cfg.main.width
    func = lambda y: cfg.main_mode.profile(y, 0., 1.) * cfg.pa_mode.profile(y, cfg.upper_center, 1.)
    return composite_simpson(func, -half, half, n_panels)


def coupling_coefficient_quadrature(cfg, swap=False, n_panels=ORACLE_PANELS):
    """Brute-force coupling coefficient: both integrals of

    ``kappa = omega eps_0 (n1^2 - n0^2) int_core E_1 E_2 dy /
    ((2 beta_1x / (omega mu_0)) int |E_1|^2 dy)``

    evaluated numerically. Guide 1 is the main guide, or the upper PA when
    *swap* is true; guide 2 is the other one.

    """
    omega = 2 * np.pi * cfg.main.frequency
    contrast2 = cfg.main.core_index**2 - cfg.main.clad_index**2

    if swap:
        recv, recv_center = cfg.pa_mode, cfg.upper_center
        other, other_center = cfg.main_mode, 0.
    else:
        recv, recv_center = cfg.main_mode, 0.
        other, other_center = cfg.pa_mode, cfg.upper_center

    half = 0.5 * recv.geometry.width
    func = lambda y: recv.profile(y, recv_center, 1.) * other.profile(y, other_center, 1.)
    overlap = composite_simpson(func, recv_center - half, recv_center + half, n_panels)
    norm = normalization_integral_quadrature(recv, n_panels=n_panels)

    return (omega * epsilon_0 * contrast2 * overlap) / ((2 * recv.beta_x / (omega * mu_0)) * norm)
