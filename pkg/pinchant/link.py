# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Channel between the waveguide input port and a user (UE) served by the PA
pair, and the resulting spectral efficiency.

The PAs radiate from M_p = (x_p, 0). A UE at (x_ue, y_ue) sees the angle
phi_ue = atan2(y_ue, x_ue - x_p), taken in [0, 2pi), and the distance r.
The channel is

    h = sqrt(eta 2P_s D(phi_ue) / r) exp(-j (2 pi r_p / lambda_g + 2 pi r / lambda))

with eta = c / (4 pi^2 f), r_p = x_p the in-guide path length, and 1/r
power decay for propagation in the plane. Radiation efficiency is taken as
one.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
CHANNEL_MODELS
ChannelCoefficient
LinkScenario
channel
channel_gain
db_to_linear
path_loss_constant
spectral_efficiency
ue_angle
'''.split()

import numpy as np
from pwkit.astutil import twopi
from scipy.constants import c as speed_of_light

from .bases import ConfigurationError, SingularGeometryError
from .coupling import coupled_powers

CHANNEL_MODELS = ('directional', 'omni')


def db_to_linear(db):
    return 10.**(np.asarray(db, dtype=float) / 10)


def path_loss_constant(frequency):
    "eta = c / (4 pi^2 f), the in-plane free-space path-loss constant."
    return speed_of_light / (4 * np.pi**2 * frequency)


def ue_angle(pa_position, x_ue, y_ue):
    "Angle of the UE seen from the PA center, counterclockwise from +x, in [0, 2pi)."
    return np.mod(np.arctan2(y_ue, np.subtract(x_ue, pa_position)), twopi)


class LinkScenario(object):
    """PA deployment plus one UE.

    Arguments:

    cfg
      PassConfiguration; its pa_position places the PAs.
    ue_position
      (x_ue, y_ue) in m.
    transmit_power
      P_T in W.
    noise_power
      sigma^2 in W.

    """
    def __init__(self, cfg, ue_position, transmit_power=1., noise_power=1.):
        self.cfg = cfg
        self.x_ue, self.y_ue = (float(v) for v in ue_position)
        self.transmit_power = float(transmit_power)
        self.noise_power = float(noise_power)

        if not self.transmit_power > 0:
            raise ConfigurationError('transmit power must be positive; got %r W' % transmit_power)
        if not self.noise_power > 0:
            raise ConfigurationError('noise power must be positive; got %r W' % noise_power)
        if self.distance == 0:
            raise SingularGeometryError('UE at (%r, %r) m coincides with the PA center'
                                        % (self.x_ue, self.y_ue))

    @classmethod
    def from_snr(cls, cfg, ue_position, snr_db, transmit_power=1.):
        """Scenario with the noise power implied by a transmit SNR P_T/sigma^2 in dB."""
        return cls(cfg, ue_position, transmit_power, transmit_power / db_to_linear(snr_db))

    @property
    def ue_position(self):
        return self.x_ue, self.y_ue

    @property
    def transmit_snr(self):
        return self.transmit_power / self.noise_power

    @property
    def distance(self):
        return np.hypot(self.x_ue - self.cfg.pa_position, self.y_ue)

    @property
    def angle(self):
        return ue_angle(self.cfg.pa_position, self.x_ue, self.y_ue)


class ChannelCoefficient(object):
    """Channel coefficient with the factors that built it.

    *magnitude* and *phase* define h; *eta*, *coupled_fraction* (2P_s),
    *directivity* (D at the UE angle), *distance* (r), *guided_distance*
    (r_p), *guided_wavelength* and *wavelength* are kept for auditing.

    """
    def __init__(self, magnitude, phase, eta, coupled_fraction, directivity, distance,
                 guided_distance, guided_wavelength, wavelength, angle):
        self.magnitude = magnitude
        self.phase = phase
        self.eta = eta
        self.coupled_fraction = coupled_fraction
        self.directivity = directivity
        self.distance = distance
        self.guided_distance = guided_distance
        self.guided_wavelength = guided_wavelength
        self.wavelength = wavelength
        self.angle = angle

    @property
    def value(self):
        return self.magnitude * np.exp(1j * self.phase)

    @property
    def gain(self):
        "|h|^2"
        return self.magnitude**2

    def recomputed_magnitude(self):
        return np.sqrt(self.eta * self.coupled_fraction * self.directivity / self.distance)

    def __repr__(self):
        return ('ChannelCoefficient(magnitude=%.9g, phase=%.6f, D=%.6g, r=%.6g)'
                % (self.magnitude, self.phase, self.directivity, self.distance))


def _check_pattern(cfg, pattern):
    pcfg = pattern.cfg
    if (pcfg.pa_length != cfg.pa_length or pcfg.main != cfg.main or pcfg.pa != cfg.pa):
        raise ConfigurationError('pattern was computed for %r, not for %r' % (pcfg, cfg))


def _check_model(model):
    if model not in CHANNEL_MODELS:
        raise ConfigurationError('unknown channel model %r; expected one of %s'
                                 % (model, ', '.join(CHANNEL_MODELS)))


def _directivity(pattern, phi, model):
    if model == 'omni':
        return np.ones_like(phi)
    return pattern.directivity_at(phi)


def channel(scenario, pattern, model='directional'):
    """Channel coefficient for *scenario*.

    Arguments:

    scenario
      A LinkScenario.
    pattern
      FarFieldPattern computed for the scenario's configuration (any PA
      position; |F| does not depend on it).
    model
      "directional" uses the pattern's directivity; "omni" sets D = 1.

    Returns a ChannelCoefficient.

    """
    _check_model(model)
    cfg = scenario.cfg
    _check_pattern(cfg, pattern)

    _, ps = coupled_powers(pattern.kappa, cfg.pa_length)
    coupled = 2 * ps
    eta = path_loss_constant(cfg.main.frequency)
    phi = scenario.angle
    r = scenario.distance
    d = float(_directivity(pattern, np.atleast_1d(phi), model)[0])

    r_p = cfg.pa_position
    lam_g = cfg.main_mode.guided_wavelength
    lam = cfg.main.wavelength
    phase = np.mod(-(twopi * r_p / lam_g + twopi * r / lam), twopi)

    return ChannelCoefficient(np.sqrt(eta * coupled * d / r), phase, eta, coupled, d, r,
                              r_p, lam_g, lam, phi)


def channel_gain(pattern, pa_positions, x_ue, y_ue, model='directional'):
    """|h|^2 for a UE at (x_ue, y_ue) and an array of PA positions, using the
    PA length and slabs of *pattern*'s configuration. The phase is not
    computed.

    """
    _check_model(model)
    cfg = pattern.cfg
    pa_positions = np.asarray(pa_positions, dtype=float)

    _, ps = coupled_powers(pattern.kappa, cfg.pa_length)
    eta = path_loss_constant(cfg.main.frequency)
    dx = x_ue - pa_positions
    r = np.hypot(dx, y_ue)

    if np.any(r == 0):
        raise SingularGeometryError('UE at (%r, %r) m coincides with a PA position' % (x_ue, y_ue))

    phi = np.mod(np.arctan2(y_ue, dx), twopi)
    return eta * (2 * ps) * _directivity(pattern, phi, model) / r


def spectral_efficiency(scenario, h, log_base=2):
    """R = log(1 + |h|^2 P_T / sigma^2) in the given base (2 gives bit/s/Hz).

    *h* may be a ChannelCoefficient, a complex coefficient, or an array of
    coefficients.

    """
    if isinstance(h, ChannelCoefficient):
        gain = h.gain
    else:
        gain = np.abs(h)**2

    arg = 1 + gain * scenario.transmit_snr

    if log_base == 2:
        return np.log2(arg)
    if log_base == 'e' or log_base == np.e:
        return np.log(arg)
    return np.log(arg) / np.log(log_base)
