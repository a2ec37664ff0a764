# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Tests of the far-field pattern: closed forms against the brute-force
radiation integral, pattern structure and normalization.

"""
from __future__ import absolute_import, division, print_function

import numpy as np
from numpy.testing import assert_allclose
import pytest

from ..bases import DegeneratePatternError
from ..coupling import coupling_coefficient
from ..farfield import (APERTURES, DEFAULT_APERTURE, aperture_bounds, aperture_discrepancy, compute_pattern,
                        directivity, normalized_power_pattern, oracle_radiation_integral,
                        pattern_factor_x, pattern_factor_y, projection_factor,
                        single_pa_pattern, total_pattern)
from ..numerics import composite_simpson, periodic_mean, sinc, uniform_angle_grid
from .coupling_test import standard_config

LENGTHS = (0.75, 1.5, 2., 2.5)

# main lobe (deg, folded), peak D, HPBW (deg) on the default 1440-point grid
PHYSICAL_REFERENCE = {
    0.75: (64., 3.871, 38.),
    1.5: (16., 2.961, 16.5),
    2.: (15.25, 3.671, 16.),
    2.5: (14.25, 3.917, 15.25),
}

OUTER_REFERENCE = {
    0.75: (63.5, 4.605, 28.4),
    1.5: (27.75, 4.104, 13.6),
    2.: (26.5, 3.951, 13.1),
    2.5: (57., 3.578, 33.4),
}


def max_relative_deviation(closed, oracle):
    return np.max(np.abs(np.abs(closed) - np.abs(oracle))) / np.max(np.abs(oracle))


def test_sinc():
    assert sinc(0.) == 1.
    assert_allclose(sinc(np.array([1e-7, -1e-7, 0.5, np.pi])),
                    [1., 1., np.sin(0.5) / 0.5, 0.], atol=1e-15)


def test_projection_factor():
    assert projection_factor(0.) == 0.
    assert projection_factor(np.pi) == 0.
    assert projection_factor(1.5 * np.pi) == 1.


def test_aperture_bounds():
    cfg = standard_config()
    wm = cfg.main.width
    ws = cfg.pa.width

    assert_allclose(aperture_bounds(cfg, 'upper', 'physical'), (0.5 * wm, 0.5 * wm + ws))
    assert_allclose(aperture_bounds(cfg, 'upper', 'shifted'), (wm, wm + ws))
    assert_allclose(aperture_bounds(cfg, 'upper', 'outer'), (wm + 0.5 * ws, wm + 1.5 * ws))
    assert_allclose(aperture_bounds(cfg, 'lower', 'shifted'), (-wm - ws, -wm))

    with pytest.raises(ValueError):
        aperture_bounds(cfg, 'upper', 'sideways')


def test_closed_form_vs_oracle():
    angles = uniform_angle_grid(720)

    configs = [standard_config(length) for length in LENGTHS]
    configs += [standard_config(2., v=1.35), standard_config(2., v=1.55)]

    for cfg in configs:
        kappa = coupling_coefficient(cfg)
        closed = total_pattern(cfg, kappa, angles)
        oracle = oracle_radiation_integral(cfg, kappa, angles)
        assert max_relative_deviation(closed, oracle) < 1e-6


def test_closed_form_vs_oracle_every_aperture():
    cfg = standard_config()
    kappa = coupling_coefficient(cfg)
    angles = uniform_angle_grid(720)

    for aperture in APERTURES:
        closed = total_pattern(cfg, kappa, angles, aperture)
        oracle = oracle_radiation_integral(cfg, kappa, angles, aperture)
        assert max_relative_deviation(closed, oracle) < 1e-6
        # G itself, not just |F|
        assert np.max(np.abs(normalized_power_pattern(closed) - normalized_power_pattern(oracle))) < 1e-6


def test_oracle_separability():
    cfg = standard_config()
    kappa = coupling_coefficient(cfg)
    phi = np.array([0.3, 2., 4.4])

    product = oracle_radiation_integral(cfg, kappa, phi, n_panels=256)
    mesh = oracle_radiation_integral(cfg, kappa, phi, n_panels=256, full_2d=True)
    assert_allclose(mesh, product, rtol=1e-10)


def test_oracle_axis_nulls():
    cfg = standard_config()
    kappa = coupling_coefficient(cfg)
    assert oracle_radiation_integral(cfg, kappa, 0.) == 0
    assert oracle_radiation_integral(cfg, kappa, np.pi) == 0


def test_longitudinal_factor_vs_quadrature():
    cfg = standard_config()
    kappa = coupling_coefficient(cfg)
    start, stop = cfg.coupling_region
    beta0 = cfg.main.free_space_wavenumber
    beta_sx = cfg.pa_mode.beta_x
    phi = np.random.default_rng(3).uniform(0., 2 * np.pi, size=100)
    kx = beta0 * np.cos(phi)[:, np.newaxis]

    def integrand(x):
        b = -1j / np.sqrt(2) * np.sin(np.sqrt(2) * kappa * (x - start))
        return b * np.exp(-1j * beta_sx * x) * np.exp(1j * kx * x)

    numeric = composite_simpson(integrand, start, stop, 4096)
    assert_allclose(pattern_factor_x(cfg, kappa, phi), numeric, rtol=1e-8,
                    atol=1e-8 * np.abs(numeric).max())

    # moving the PAs only changes a unit-modulus prefactor
    moved = cfg.replace(pa_position=0.05)
    assert_allclose(np.abs(pattern_factor_x(moved, kappa, phi)),
                    np.abs(pattern_factor_x(cfg, kappa, phi)), rtol=1e-10)


def test_transverse_factor_vs_quadrature():
    cfg = standard_config()
    beta0 = cfg.main.free_space_wavenumber
    beta_sy = cfg.pa_mode.beta_y
    phi = np.random.default_rng(5).uniform(0., 2 * np.pi, size=100)
    ky = beta0 * np.sin(phi)[:, np.newaxis]

    for s in ('upper', 'lower'):
        y_s = cfg.pa_center(s)
        lo, hi = aperture_bounds(cfg, s, 'shifted')
        func = lambda y: np.cos(beta_sy * (y - y_s)) * np.exp(1j * ky * y)
        numeric = composite_simpson(func, lo, hi, 2048)
        assert_allclose(pattern_factor_y(cfg, phi, s, 'shifted'), numeric, rtol=1e-8,
                        atol=1e-8 * np.abs(numeric).max())

    # along the axis k_y = 0 and the two PAs contribute equally
    assert_allclose(pattern_factor_y(cfg, 0., 'upper'), pattern_factor_y(cfg, 0., 'lower'),
                    rtol=1e-12)


def test_per_pa_patterns_sum():
    cfg = standard_config()
    kappa = coupling_coefficient(cfg)
    phi = uniform_angle_grid(360)
    total = total_pattern(cfg, kappa, phi)
    assert_allclose(single_pa_pattern(cfg, kappa, phi, 'upper') +
                    single_pa_pattern(cfg, kappa, phi, 'lower'),
                    total, rtol=1e-12, atol=1e-12 * np.abs(total).max())


def test_pattern_structure():
    for length in LENGTHS:
        pattern = compute_pattern(standard_config(length))
        g = pattern.power_pattern
        n = pattern.n_angles

        assert g.max() == 1.
        assert g[0] == 0. and g[n // 2] == 0.
        assert_allclose(g[1:], g[:0:-1], rtol=0, atol=1e-10)
        assert abs(periodic_mean(pattern.directivity, pattern.angles) - 1) < 1e-10


def _landmarks(aperture, reference):
    lobes = []
    peaks = []
    widths = []

    for length in LENGTHS:
        pattern = compute_pattern(standard_config(length), aperture=aperture)
        lobe, peak, hpbw = reference[length]

        assert abs(np.degrees(pattern.main_lobe_angle) - lobe) <= 0.5
        assert_allclose(pattern.peak_directivity, peak, rtol=0.01)
        assert abs(np.degrees(pattern.half_power_beamwidth()) - hpbw) <= 1.

        lobes.append(pattern.main_lobe_angle)
        peaks.append(pattern.peak_directivity)
        widths.append(pattern.half_power_beamwidth())

    return np.array(lobes), np.array(peaks), np.array(widths)


def test_pattern_reference_values_physical():
    lobes, peaks, widths = _landmarks('physical', PHYSICAL_REFERENCE)

    # longer PAs steer toward end-fire and narrow the beam
    assert np.all(np.diff(lobes) < 0)
    assert np.all(np.diff(widths) < 0)
    # peak directivity grows from 1.5 lambda on; the short PA's broad lobe is an exception
    assert np.all(np.diff(peaks[1:]) > 0)
    assert peaks[0] > peaks[1]


def test_pattern_reference_values_default():
    assert DEFAULT_APERTURE == 'outer'
    lobes, peaks, widths = _landmarks(DEFAULT_APERTURE, OUTER_REFERENCE)

    # the outer aperture trades gain for length
    assert np.all(np.diff(peaks) < 0)
    # longest PA still points closer to the axis than the shortest one
    assert lobes[-1] < lobes[0]
    # 1.5 to 2 lambda steers and narrows; at 2.5 lambda the lobe jumps back out
    assert lobes[2] < lobes[1] and widths[2] < widths[1]
    assert lobes[3] > lobes[2]


def test_directivity_toward_ue_below():
    for aperture, expected in (('physical', 1.567), ('outer', 1.396)):
        pattern = compute_pattern(standard_config(), aperture=aperture)
        k = 3 * pattern.n_angles // 4
        assert_allclose(pattern.angles[k], 1.5 * np.pi)
        assert_allclose(pattern.directivity[k], expected, rtol=0.01)


def test_directivity_at_matches_grid():
    pattern = compute_pattern(standard_config())
    assert_allclose(pattern.directivity_at(pattern.angles), pattern.directivity,
                    rtol=1e-12, atol=1e-15)


def test_grid_refinement():
    cfg = standard_config()
    coarse = compute_pattern(cfg)
    fine = compute_pattern(cfg, n_angles=2 * coarse.n_angles)

    assert abs(fine.peak_directivity / coarse.peak_directivity - 1) < 1e-3

    phi = np.random.default_rng(13).uniform(0., 2 * np.pi, size=1000)
    d_coarse = coarse.directivity_at(phi)
    d_fine = fine.directivity_at(phi)
    assert np.max(np.abs(np.sqrt(d_fine / d_coarse) - 1)) < 1e-3


def test_normalized_power_pattern():
    assert_allclose(normalized_power_pattern(np.full(8, 3. - 4j)), 1.)

    f = np.exp(1j * np.arange(10)) * np.arange(10)
    g = normalized_power_pattern(f)
    assert np.argmax(g) == np.argmax(normalized_power_pattern(17.5 * f))
    assert g.max() == 1.

    with pytest.raises(DegeneratePatternError):
        normalized_power_pattern(np.zeros(16))
    with pytest.raises(DegeneratePatternError):
        normalized_power_pattern(np.array([1., np.nan]))
    with pytest.raises(ValueError):
        normalized_power_pattern(np.ones(1))


def test_directivity_normalization():
    angles = uniform_angle_grid(64)
    assert_allclose(directivity(np.ones(64), angles), 1.)

    with pytest.raises(DegeneratePatternError):
        directivity(np.zeros(64), angles)
    with pytest.raises(ValueError):
        directivity(np.ones(64), np.linspace(0., np.pi, 64))


def test_aperture_discrepancy_reported():
    cfg = standard_config()
    kappa = coupling_coefficient(cfg)
    gap = aperture_discrepancy(cfg, kappa, uniform_angle_grid(360))
    assert np.isfinite(gap)
    assert gap > 1e-3


def test_bad_aperture():
    with pytest.raises(ValueError):
        compute_pattern(standard_config(), aperture='nonsense')
