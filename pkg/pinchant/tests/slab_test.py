# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Tests of the TE0 slab mode solver.

"""
from __future__ import absolute_import, division, print_function

import numpy as np
from numpy.testing import assert_allclose
import pytest

from ..bases import ConfigurationError, ModeSolverError, MultimodeError, NoGuidedModeError
from ..slab import SlabGeometry, even_mode_profile, normalized_frequency, solve_te0, width_for_v

F60 = 60e9
N1 = np.sqrt(2.1)
N0 = 1.


def standard_slab(v=1.5):
    return SlabGeometry(width_for_v(N1, N0, F60, v), N1, N0, F60)


def test_standard_width():
    geom = standard_slab()
    assert_allclose(geom.width, 2.27465e-3, rtol=1e-5)
    assert_allclose(geom.wavelength, 4.99654e-3, rtol=1e-5)
    # the quoted "2.2 mm" width, accepted within 5%
    assert abs(geom.width - 2.2e-3) / 2.2e-3 < 0.05


def test_width_round_trip():
    for v in (0.3, 1.0, 1.35, 1.5, 1.55):
        geom = SlabGeometry(width_for_v(N1, N0, F60, v), N1, N0, F60)
        assert_allclose(normalized_frequency(geom), v, rtol=1e-12)


def test_widths_in_wavelengths():
    lam = standard_slab().wavelength
    assert_allclose(width_for_v(N1, N0, F60, 1.35) / lam, 0.408, rtol=0.01)
    assert_allclose(width_for_v(N1, N0, F60, 1.55) / lam, 0.470, rtol=0.01)


def test_standard_mode():
    mode = solve_te0(standard_slab())
    assert_allclose(mode.u, 0.914856, rtol=1e-5)
    assert_allclose(mode.w, 1.188713, rtol=1e-5)
    assert_allclose(mode.beta_y, 804.393, rtol=1e-5)
    assert_allclose(mode.sigma, 1045.183, rtol=1e-5)
    assert_allclose(mode.beta_x, 1635.155, rtol=1e-5)
    assert mode.geometry.free_space_wavenumber < mode.beta_x < N1 * mode.geometry.free_space_wavenumber
    assert 1. < mode.effective_index < N1
    assert_allclose(mode.guided_wavelength, 2 * np.pi / mode.beta_x)


def test_identities_random_geometries():
    rng = np.random.default_rng(20260101)

    for _ in range(50):
        v = rng.uniform(0.3, 1.55)
        f = rng.uniform(10e9, 300e9)
        n0 = rng.uniform(1., 1.5)
        n1 = n0 + rng.uniform(0.05, 1.)
        geom = SlabGeometry(width_for_v(n1, n0, f, v), n1, n0, f)
        mode = solve_te0(geom)
        beta0 = geom.free_space_wavenumber

        assert 0 < mode.u < min(v, np.pi / 2)
        assert abs(mode.u * np.tan(mode.u) - mode.w) < 1e-10
        assert abs(mode.u**2 + mode.w**2 - mode.v_num**2) < 1e-10
        assert_allclose(mode.beta_y**2 + mode.sigma**2, beta0**2 * (n1**2 - n0**2), rtol=1e-10)
        assert_allclose(mode.beta_x**2 + mode.beta_y**2, beta0**2 * n1**2, rtol=1e-12)
        assert_allclose(mode.beta_x**2 - mode.sigma**2, beta0**2 * n0**2, rtol=1e-10)


def test_beta_x_increases_with_v():
    lo = solve_te0(standard_slab(1.35))
    hi = solve_te0(standard_slab(1.55))
    assert hi.beta_x > lo.beta_x


def test_single_mode_limit():
    with pytest.raises(MultimodeError):
        width_for_v(N1, N0, F60, np.pi / 2)

    with pytest.raises(NoGuidedModeError):
        width_for_v(N1, N0, F60, 0.)

    # 3 mm puts V well above pi/2
    wide = SlabGeometry(3.0e-3, N1, N0, F60)
    assert normalized_frequency(wide) > np.pi / 2

    with pytest.raises(MultimodeError) as info:
        solve_te0(wide)

    assert isinstance(info.value, ModeSolverError)


def test_invalid_geometry():
    with pytest.raises(ConfigurationError):
        SlabGeometry(-1e-3, N1, N0, F60)
    with pytest.raises(ConfigurationError):
        SlabGeometry(1e-3, 1.0, 1.2, F60)
    with pytest.raises(ConfigurationError):
        SlabGeometry(1e-3, N1, 0.9, F60)
    with pytest.raises(ConfigurationError):
        SlabGeometry(1e-3, N1, N0, 0.)


def test_geometry_equality():
    a = standard_slab()
    b = SlabGeometry(a.width, N1, N0, F60)
    assert a == b
    assert hash(a) == hash(b)
    assert a != a.with_width(1e-3)
    assert a.same_medium(a.with_width(1e-3))


def test_profile_continuity():
    mode = solve_te0(standard_slab())
    half = 0.5 * mode.geometry.width
    eps = 1e-12

    inside = mode.profile(np.array([half - eps, -half + eps]))
    outside = mode.profile(np.array([half + eps, -half - eps]))
    assert_allclose(inside, outside, rtol=1e-8)
    assert_allclose(mode.profile(0.), 1.)
    assert_allclose(mode.profile(0.01, center=0.01, amplitude=2.5), 2.5)


def test_profile_tail():
    mode = solve_te0(standard_slab())
    half = 0.5 * mode.geometry.width
    y = half + np.array([1e-3, 2e-3])
    prof = even_mode_profile(y, 0., mode.geometry.width, mode.beta_y, mode.sigma)
    assert_allclose(prof[1] / prof[0], np.exp(-mode.sigma * 1e-3), rtol=1e-12)
    assert_allclose(prof, mode.profile(-y))
