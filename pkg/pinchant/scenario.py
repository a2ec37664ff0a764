# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Scenario files. Keys carry their units in their names (GHz, mm, m, cm, dB,
W); everything is converted to SI once, here, when the domain objects are
built. Defaults reproduce the standard 60 GHz test case: n1 = sqrt(2.1),
n0 = 1, V = 1.5, PA length 2 wavelengths.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
DEFAULT_V_NUMBER
ScenarioConfiguration
load_scenario
'''.split()

import numbers

from .bases import ConfigurationError
from .config import Configuration
from .coupling import PassConfiguration
from .deployment import DEFAULT_SNR_DB, SimulationPlan
from .farfield import APERTURES
from .slab import SlabGeometry, width_for_v

DEFAULT_V_NUMBER = 1.5
FORMATS = ('csv', 'json')


def _number(section, key, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ConfigurationError('[%s] %s must be a number; got %r' % (section, key, value))
    return float(value)


def _positive(section, key, value):
    value = _number(section, key, value)
    if not value > 0:
        raise ConfigurationError('[%s] %s must be positive; got %r' % (section, key, value))
    return value


def _integer(section, key, value, minimum):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
        raise ConfigurationError('[%s] %s must be an integer >= %d; got %r'
                                 % (section, key, minimum, value))
    return int(value)


def _slab_width(section, width_mm, v_number, n1, n0, frequency, fallback_v):
    """Width in m from exactly one of width_mm / v_number; None if neither is
    given and there is no fallback.

    """
    if width_mm is not None and v_number is not None:
        raise ConfigurationError('[%s] give width_mm or v_number, not both (got %r and %r)'
                                 % (section, width_mm, v_number))

    if width_mm is not None:
        return 1e-3 * _positive(section, 'width_mm', width_mm)

    if v_number is None:
        if fallback_v is None:
            return None
        v_number = fallback_v

    # A V beyond the single-mode limit raises MultimodeError from here.
    return width_for_v(n1, n0, frequency, _number(section, 'v_number', v_number))


class WaveguideConfiguration(Configuration):
    __section__ = 'waveguide'

    f_ghz = 60.
    "Operating frequency, in GHz."

    n1 = 2.1**0.5
    "Core refractive index of every slab."

    n0 = 1.
    "Cladding refractive index."

    width_mm = None
    "Main slab width, in mm. Give this or v_number, not both."

    v_number = None
    "Normalized frequency of the main slab. If neither this nor width_mm is given, 1.5."

    length_m = 0.15
    "Main waveguide length for pattern and mode work, in m."

    amplitude = 1.
    "Field amplitude fed into the main guide."

    def frequency(self):
        return 1e9 * _positive('waveguide', 'f_ghz', self.f_ghz)

    def to_slab(self):
        n1 = _number('waveguide', 'n1', self.n1)
        n0 = _number('waveguide', 'n0', self.n0)
        f = self.frequency()

        if not n0 >= 1:
            raise ConfigurationError('[waveguide] n0 must be at least 1; got %r' % n0)
        if not n1 > n0:
            raise ConfigurationError('[waveguide] n1 must exceed n0; got n1=%r, n0=%r' % (n1, n0))

        width = _slab_width('waveguide', self.width_mm, self.v_number, n1, n0, f, DEFAULT_V_NUMBER)
        return SlabGeometry(width, n1, n0, f)


class PAConfiguration(Configuration):
    __section__ = 'pa'

    length_lambda = 2.
    "PA length, in free-space wavelengths."

    position_m = None
    "PA center along the guide, in m. Default: the middle of the guide."

    width_mm = None
    "PA width, in mm. If neither this nor v_number is given, the PAs copy the main slab."

    v_number = None
    "Normalized frequency of the PA slabs."

    def to_slab(self, main):
        width = _slab_width('pa', self.width_mm, self.v_number, main.core_index,
                            main.clad_index, main.frequency, None)
        if width is None:
            return main
        return main.with_width(width)


class PatternConfiguration(Configuration):
    __section__ = 'pattern'

    n_angles = 1440
    "Number of uniformly spaced angles over the full turn."

    aperture = 'outer'
    "Transverse aperture convention: outer, shifted, or physical."

    lengths_lambda = (0.75, 1.5, 2., 2.5)
    "PA lengths, in wavelengths, swept by the pattern command."

    oracle_panels = 2048
    "Simpson panels per dimension for the brute-force pattern integral."

    def validate(self):
        _integer('pattern', 'n_angles', self.n_angles, 2)
        _integer('pattern', 'oracle_panels', self.oracle_panels, 2)
        if self.oracle_panels % 2:
            raise ConfigurationError('[pattern] oracle_panels must be even; got %r' % self.oracle_panels)
        if self.aperture not in APERTURES:
            raise ConfigurationError('[pattern] aperture must be one of %s; got %r'
                                     % (', '.join(APERTURES), self.aperture))
        for v in self.lengths_lambda:
            _positive('pattern', 'lengths_lambda', v)


class CouplingSweepConfiguration(Configuration):
    __section__ = 'coupling'

    max_length_mm = 30.
    "Longest PA length in the coupled-power sweep, in mm."

    n_points = 601
    "Number of PA lengths in the sweep, starting from zero."

    def validate(self):
        _positive('coupling', 'max_length_mm', self.max_length_mm)
        _integer('coupling', 'n_points', self.n_points, 2)


class SimulationConfiguration(Configuration):
    __section__ = 'simulation'

    L_m = 40.
    "Waveguide length for the placement study, in m."

    ue_height_m = 5.
    "Distance of the UE below the waveguide, in m."

    drops = 10000
    "Number of random UE positions."

    seed = 0
    "Seed of the drop generator; recorded in every output."

    snr_db = DEFAULT_SNR_DB
    "Transmit SNR values P_T/sigma^2, in dB."

    grid_cm = 1.
    "Placement grid resolution, in cm."

    fixed_position_m = None
    "PA center of the fixed-antenna baseline, in m. Default: L_m / 2."

    transmit_power_w = 1.
    "Transmit power P_T, in W; the noise power follows from each SNR."

    log_base = 2
    "Base of the rate logarithm: 2 for bit/s/Hz, or 'e'."

    def to_plan(self):
        if not (self.log_base == 'e' or (isinstance(self.log_base, numbers.Real) and
                                         not isinstance(self.log_base, bool) and self.log_base > 1)):
            raise ConfigurationError("[simulation] log_base must be a number > 1 or 'e'; got %r"
                                     % (self.log_base,))

        if isinstance(self.snr_db, (str, bytes)) or not hasattr(self.snr_db, '__iter__'):
            raise ConfigurationError('[simulation] snr_db must be a list of numbers; got %r'
                                     % (self.snr_db,))

        _positive('simulation', 'transmit_power_w', self.transmit_power_w)

        return SimulationPlan(
            waveguide_length = _positive('simulation', 'L_m', self.L_m),
            ue_height = _positive('simulation', 'ue_height_m', self.ue_height_m),
            num_drops = _integer('simulation', 'drops', self.drops, 1),
            snr_db = [_number('simulation', 'snr_db', s) for s in self.snr_db],
            grid_resolution = 1e-2 * _positive('simulation', 'grid_cm', self.grid_cm),
            seed = _integer('simulation', 'seed', self.seed, 0),
            fixed_position = (None if self.fixed_position_m is None else
                              _number('simulation', 'fixed_position_m', self.fixed_position_m)),
            log_base = self.log_base,
        )


class OutputConfiguration(Configuration):
    __section__ = 'output'

    directory = '.'
    "Directory receiving the output files."

    formats = ('csv',)
    "Output formats: any of csv, json."

    def validate(self):
        if isinstance(self.formats, str):
            self.formats = (self.formats,)
        for fmt in self.formats:
            if fmt not in FORMATS:
                raise ConfigurationError('[output] formats must be drawn from %s; got %r'
                                         % (', '.join(FORMATS), fmt))


class ScenarioConfiguration(Configuration):
    __section__ = 'scenario'

    name = 'default'
    "Free-form label copied into outputs."

    waveguide = WaveguideConfiguration
    pa = PAConfiguration
    pattern = PatternConfiguration
    coupling = CouplingSweepConfiguration
    simulation = SimulationConfiguration
    output = OutputConfiguration

    def validate(self):
        """Check every section, raising ConfigurationError (or MultimodeError /
        NoGuidedModeError for an out-of-range V) on the first problem.

        """
        self.pass_configuration()
        self.pattern.validate()
        self.coupling.validate()
        self.simulation.to_plan()
        self.output.validate()
        return self

    def main_slab(self):
        return self.waveguide.to_slab()

    def pa_slab(self, main=None):
        if main is None:
            main = self.main_slab()
        return self.pa.to_slab(main)

    def pass_configuration(self, pa_length_lambda=None, waveguide_length=None):
        """The PassConfiguration this scenario describes, optionally with a
        different PA length (in wavelengths) or guide length (in m).

        """
        main = self.main_slab()
        pa = self.pa_slab(main)

        if pa_length_lambda is None:
            pa_length_lambda = _positive('pa', 'length_lambda', self.pa.length_lambda)
        if waveguide_length is None:
            waveguide_length = _positive('waveguide', 'length_m', self.waveguide.length_m)

        if self.pa.position_m is None:
            position = 0.5 * waveguide_length
        else:
            position = _number('pa', 'position_m', self.pa.position_m)

        try:
            return PassConfiguration(main, pa, pa_length_lambda * main.wavelength, position,
                                     waveguide_length,
                                     input_amplitude=_positive('waveguide', 'amplitude',
                                                               self.waveguide.amplitude))
        except ConfigurationError as e:
            raise ConfigurationError('[pa] %s' % e) from e

    def simulation_plan(self):
        return self.simulation.to_plan()


def load_scenario(path=None):
    """Load and validate a scenario. With no *path*, the defaults are used.
    Unrecognized sections and keys are reported and ignored.

    """
    if path is None:
        return ScenarioConfiguration().validate()

    return ScenarioConfiguration.from_path(path).validate()
