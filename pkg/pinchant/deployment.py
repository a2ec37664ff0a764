# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Monte-Carlo placement study.

UEs are dropped uniformly along a long waveguide at a fixed distance below
it. For every drop the PA pair is placed by exhaustive grid search, either
assuming an omnidirectional PA (D = 1) or using the closed-form directional
pattern, and compared with a fixed radiator at the guide midpoint. Every
scheme is scored with the directional model.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
DEFAULT_SNR_DB
SCHEMES
SchemeResult
SimulationPlan
optimize_placement
run_plan
snr_gap_db
'''.split()

from collections import OrderedDict

import numpy as np
from pwkit import reraise_context
from pwkit.parallel import make_parallel_helper
from scipy.optimize import brentq

from .bases import ConfigurationError, DegeneratePatternError
from .farfield import DEFAULT_APERTURE, DEFAULT_N_ANGLES, compute_pattern
from .link import channel_gain, db_to_linear
from .logs import log

SCHEMES = ('fixed_antenna', 'omni_optimized', 'directional_optimized')
DEFAULT_SNR_DB = tuple(range(20, 85, 5))
CHUNK_DROPS = 250


class SimulationPlan(object):
    """Parameters of one Monte-Carlo run.

    Arguments:

    waveguide_length
      L, in m; UE abscissae are uniform on [0, L].
    ue_height
      Distance of the UE below the guide, in m (the UE sits at y = -ue_height).
    num_drops
      Number of UE realizations.
    snr_db
      Transmit SNR grid P_T/sigma^2, in dB.
    grid_resolution
      Spacing of the placement grid over [L_s/2, L - L_s/2], in m.
    seed
      Nonnegative integer; drop i uses ``default_rng([seed, i])``.
    fixed_position
      PA center of the fixed-antenna baseline, in m; None means L/2.
    log_base
      Base of the rate logarithm.

    """
    def __init__(self, waveguide_length=40., ue_height=5., num_drops=10000,
                 snr_db=DEFAULT_SNR_DB, grid_resolution=0.01, seed=0,
                 fixed_position=None, log_base=2):
        self.waveguide_length = float(waveguide_length)
        self.ue_height = float(ue_height)
        self.num_drops = int(num_drops)
        self.snr_db = np.array(sorted(float(s) for s in snr_db))
        self.grid_resolution = float(grid_resolution)
        self.seed = int(seed)
        self.fixed_position = (0.5 * self.waveguide_length if fixed_position is None
                               else float(fixed_position))
        self.log_base = log_base

        if not self.waveguide_length > 0:
            raise ConfigurationError('waveguide length must be positive; got %r m' % waveguide_length)
        if not self.ue_height > 0:
            raise ConfigurationError('UE height must be positive; got %r m' % ue_height)
        if self.num_drops < 1:
            raise ConfigurationError('need at least one drop; got %r' % num_drops)
        if self.snr_db.size < 1:
            raise ConfigurationError('SNR grid is empty')
        if not self.grid_resolution > 0:
            raise ConfigurationError('placement grid resolution must be positive; got %r m'
                                     % grid_resolution)
        if self.seed < 0:
            raise ConfigurationError('seed must be a nonnegative integer; got %r' % seed)
        if not 0 <= self.fixed_position <= self.waveguide_length:
            raise ConfigurationError('fixed PA position %r m lies outside the %r m guide'
                                     % (fixed_position, self.waveguide_length))


    def placement_grid(self, pa_length):
        """Candidate PA centers: every grid_resolution from L_s/2 up to L - L_s/2."""
        lo = 0.5 * pa_length
        hi = self.waveguide_length - lo
        n = int(np.floor((hi - lo) / self.grid_resolution + 1e-9)) + 1 if hi >= lo else 0

        if n < 1:
            raise ConfigurationError('placement grid is empty: PA length %r m does not fit '
                                     'a %r m guide' % (pa_length, self.waveguide_length))

        return lo + self.grid_resolution * np.arange(n)


    def ue_drop(self, index):
        "(x_ue, y_ue) of drop *index*, reproducible from (seed, index) alone."
        rng = np.random.default_rng([self.seed, int(index)])
        return rng.uniform(0., self.waveguide_length), -self.ue_height


    def describe(self):
        return dict(
            waveguide_length_m = self.waveguide_length,
            ue_height_m = self.ue_height,
            num_drops = self.num_drops,
            snr_db = [float(s) for s in self.snr_db],
            grid_resolution_m = self.grid_resolution,
            seed = self.seed,
            fixed_position_m = self.fixed_position,
            log_base = self.log_base,
        )


def _rate(gains, snr_db, log_base):
    arg = 1 + np.multiply.outer(gains, db_to_linear(snr_db))

    if log_base == 2:
        return np.log2(arg)
    if log_base == 'e' or log_base == np.e:
        return np.log(arg)
    return np.log(arg) / np.log(log_base)


class SchemeResult(object):
    """Outcome of one placement scheme.

    *positions* holds the chosen PA center and *gains* the directional |h|^2
    for every drop; *mean_rate* is the drop-averaged rate at each entry of
    *snr_db*.

    """
    def __init__(self, scheme, snr_db, ue_x, positions, gains, log_base=2):
        self.scheme = scheme
        self.snr_db = np.asarray(snr_db, dtype=float)
        self.ue_x = ue_x
        self.positions = positions
        self.gains = gains
        self.log_base = log_base
        self.mean_rate = self.mean_rate_at(self.snr_db)

    @property
    def num_drops(self):
        return self.gains.size

    def rates(self, snr_db):
        "Per-drop rates, shape (num_drops, len(snr_db))."
        return _rate(self.gains, np.atleast_1d(snr_db), self.log_base)

    def mean_rate_at(self, snr_db):
        r = self.rates(snr_db).mean(axis=0)
        return float(r[0]) if np.ndim(snr_db) == 0 else r


def optimize_placement(drop, model, pattern, grid):
    """Grid-search the PA center for one UE.

    Arguments:

    drop
      (x_ue, y_ue) in m.
    model
      "omni" or "directional": the channel model maximized.
    pattern
      FarFieldPattern of the deployed configuration.
    grid
      Ascending candidate PA centers, in m.

    Returns the maximizing grid point; ties go to the smaller x_p.

    """
    grid = np.asarray(grid, dtype=float)

    if grid.size == 0:
        raise ConfigurationError('placement grid is empty')

    gains = channel_gain(pattern, grid, drop[0], drop[1], model)
    return grid[np.argmax(gains)]


def _simulate_chunk(i, fixed_arg, var_arg):
    """Note that this must be a freestanding function for parallelization to work
    using `multiprocessing`.

    Returns rows of (x_ue, x_p fixed, gain fixed, x_p omni, gain omni, x_p
    directional, gain directional), all gains under the directional model.

    """
    plan, pattern, grid = fixed_arg
    start, stop = var_arg
    out = np.empty((stop - start, 7))
    fixed = np.array([plan.fixed_position])

    for k, index in enumerate(range(start, stop)):
        x_ue, y_ue = plan.ue_drop(index)

        try:
            directional = channel_gain(pattern, grid, x_ue, y_ue, 'directional')
            omni = channel_gain(pattern, grid, x_ue, y_ue, 'omni')
            fixed_gain = channel_gain(pattern, fixed, x_ue, y_ue, 'directional')[0]
        except Exception:
            reraise_context('with drop %d at (x_ue=%r, y_ue=%r)', index, x_ue, y_ue)

        i_omni = np.argmax(omni)
        i_dir = np.argmax(directional)
        out[k] = (x_ue, fixed[0], fixed_gain, grid[i_omni], directional[i_omni],
                  grid[i_dir], directional[i_dir])

    return out


def run_plan(plan, cfg, pattern=None, aperture=DEFAULT_APERTURE,
             n_angles=DEFAULT_N_ANGLES, parallel=False):
    """Run the placement study.

    Arguments:

    plan
      SimulationPlan.
    cfg
      PassConfiguration supplying the slabs and PA length; its guide length
      and PA position are replaced by the plan's.
    pattern
      Optional precomputed FarFieldPattern for *cfg*'s slabs and PA length.
    aperture, n_angles
      Pattern settings used when *pattern* is not given.
    parallel
      `pwkit.parallel` setup parameter. Results are identical whatever it is.

    Returns an OrderedDict mapping each name in SCHEMES to a SchemeResult.

    """
    sim_cfg = cfg.replace(waveguide_length=plan.waveguide_length,
                          pa_position=0.5 * plan.waveguide_length)

    if pattern is None:
        pattern = compute_pattern(sim_cfg, n_angles=n_angles, aperture=aperture)

    grid = plan.placement_grid(sim_cfg.pa_length)

    if not grid[0] <= plan.fixed_position <= plan.waveguide_length - grid[0]:
        raise ConfigurationError('fixed PA position %r m must lie in [%r, %r] m'
                                 % (plan.fixed_position, grid[0], plan.waveguide_length - grid[0]))

    bounds = [(start, min(start + CHUNK_DROPS, plan.num_drops))
              for start in range(0, plan.num_drops, CHUNK_DROPS)]

    log('simulating %d drops over %d placement points (%d chunks)',
        plan.num_drops, grid.size, len(bounds))

    phelp = make_parallel_helper(parallel)
    with phelp.get_ppmap() as ppmap:
        chunks = ppmap(_simulate_chunk, (plan, pattern, grid), bounds)

    table = np.concatenate(chunks, axis=0)
    bad = ~np.all(np.isfinite(table), axis=1)

    if bad.any():
        first = int(np.nonzero(bad)[0][0])
        raise DegeneratePatternError('non-finite channel values in %d of %d drops; first is drop %d '
                                     'with row %r' % (bad.sum(), plan.num_drops, first,
                                                      table[first].tolist()))

    ue_x = table[:, 0]
    results = OrderedDict()

    for k, scheme in enumerate(SCHEMES):
        results[scheme] = SchemeResult(scheme, plan.snr_db, ue_x, table[:, 1 + 2 * k],
                                       table[:, 2 + 2 * k], log_base=plan.log_base)

    return results


def snr_gap_db(upper, lower, snr_db):
    """Horizontal gap between two mean-rate curves: how many dB less transmit
    SNR *upper* needs to reach the mean rate that *lower* attains at
    *snr_db*.

    """
    target = lower.mean_rate_at(snr_db)
    func = lambda s: upper.mean_rate_at(s) - target

    if func(snr_db) >= 0:
        return snr_db - brentq(func, snr_db - 200., snr_db, xtol=1e-9)

    # upper trails lower here, so the gap is negative
    return snr_db - brentq(func, snr_db, snr_db + 200., xtol=1e-9)
