# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""The batch operations behind the command-line tools. Each takes a validated
ScenarioConfiguration, writes its tables under the scenario's output
directory, and returns what it computed so callers (and tests) need not
re-read the files.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
cmd_coupling_sweep
cmd_linksim
cmd_modes
cmd_pattern
pattern_file_stem
'''.split()

import numpy as np
from pwkit.io import Path

from .coupling import (coupled_powers, coupling_length, require_phase_matched,
                       single_pa_coupling_length, single_pa_power, solve_coupling)
from .deployment import SCHEMES, run_plan, snr_gap_db
from .export import write_tables
from .farfield import compute_pattern, oracle_radiation_integral
from .logs import log

EVALUATOR_NOTE = 'all schemes scored with the closed-form directional channel model'


def _provenance(scenario, **extra):
    prov = dict(scenario=scenario.to_dict())
    prov.update(extra)
    return prov


def _out_path(scenario, stem):
    return Path(scenario.output.directory) / stem


def cmd_modes(scenario):
    """Solve the main and PA slabs. Returns a list of dicts, one per slab, plus
    the coupling solution; writes ``modes`` tables.

    """
    cfg = scenario.pass_configuration()
    rows = []

    for label, mode in (('main', cfg.main_mode), ('pa', cfg.pa_mode)):
        rows.append(dict(
            slab = label,
            width_m = mode.geometry.width,
            v_num = mode.v_num,
            u = mode.u,
            w = mode.w,
            beta_x = mode.beta_x,
            beta_y = mode.beta_y,
            sigma = mode.sigma,
            guided_wavelength_m = mode.guided_wavelength,
            effective_index = mode.effective_index,
            single_mode = bool(mode.v_num < np.pi / 2),
        ))

    coupling = solve_coupling(cfg) if cfg.is_phase_matched else None
    columns = list(rows[0].keys())
    extra = dict(resolved=cfg.describe())

    if coupling is not None:
        extra.update(kappa=coupling.kappa, coupling_length_m=coupling.coupling_length)

    write_tables(_out_path(scenario, 'modes'), columns, [[r[c] for c in columns] for r in rows],
                 _provenance(scenario, **extra), scenario.output.formats)
    return rows, coupling


def pattern_file_stem(length_lambda):
    return 'pattern_Ls%slambda' % ('%g' % length_lambda).replace('.', 'p')


def cmd_pattern(scenario, lengths_lambda=None, oracle=False, aperture=None, n_angles=None):
    """Closed-form patterns for each PA length (in wavelengths).

    Returns a list of ``(length_lambda, FarFieldPattern, deviation)`` where
    *deviation* is max ||F| - |F_oracle|| / max |F_oracle| when *oracle* is
    true and None otherwise. Writes one table per length and a summary.

    """
    pcfg = scenario.pattern
    if lengths_lambda is None:
        lengths_lambda = pcfg.lengths_lambda
    if aperture is None:
        aperture = pcfg.aperture
    if n_angles is None:
        n_angles = pcfg.n_angles

    results = []
    summary_rows = []

    for length in lengths_lambda:
        cfg = scenario.pass_configuration(pa_length_lambda=length)
        pattern = compute_pattern(cfg, n_angles=n_angles, aperture=aperture)
        log('Ls = %g lambda: kappa = %.6g rad/m, peak D = %.4f', length, pattern.kappa,
            pattern.peak_directivity)

        columns = ['phi_deg', 're_F', 'im_F', 'G', 'D']
        table = [np.degrees(pattern.angles), pattern.complex_pattern.real,
                 pattern.complex_pattern.imag, pattern.power_pattern, pattern.directivity]
        deviation = None

        if oracle:
            f_oracle = oracle_radiation_integral(cfg, pattern.kappa, pattern.angles, aperture,
                                                 n_panels=pcfg.oracle_panels)
            mag = np.abs(f_oracle)
            deviation = float(np.max(np.abs(np.abs(pattern.complex_pattern) - mag)) / mag.max())
            columns += ['re_F_oracle', 'im_F_oracle']
            table += [f_oracle.real, f_oracle.imag]
            log('Ls = %g lambda: max closed-form vs. oracle deviation %.3g', length, deviation)

        summary = pattern.summary()
        summary.update(length_lambda=length, oracle_max_deviation=deviation)
        write_tables(_out_path(scenario, pattern_file_stem(length)), columns,
                     np.array(table).T,
                     _provenance(scenario, resolved=cfg.describe(), summary=summary),
                     scenario.output.formats)

        summary_rows.append([length, summary['peak_directivity'], summary['main_lobe_deg'],
                             summary['half_power_beamwidth_deg'],
                             np.nan if deviation is None else deviation])
        results.append((length, pattern, deviation))

    write_tables(_out_path(scenario, 'pattern_summary'),
                 ['length_lambda', 'peak_directivity', 'main_lobe_deg', 'hpbw_deg',
                  'oracle_max_deviation'],
                 summary_rows, _provenance(scenario, aperture=aperture), scenario.output.formats)
    return results


def cmd_coupling_sweep(scenario, max_length_mm=None, n_points=None):
    """Coupled power versus PA length, for the PA pair (2 P_s) and for the
    lone-PA reference model. Returns a dict of arrays and lengths.

    """
    if max_length_mm is None:
        max_length_mm = scenario.coupling.max_length_mm
    if n_points is None:
        n_points = scenario.coupling.n_points

    cfg = scenario.pass_configuration()
    require_phase_matched(cfg)
    coupling = solve_coupling(cfg)
    kappa = coupling.kappa
    lengths = np.linspace(0., 1e-3 * max_length_mm, int(n_points))

    pm, ps = coupled_powers(kappa, lengths)
    single = single_pa_power(kappa, lengths)
    result = dict(
        length_mm = 1e3 * lengths,
        pair_coupled_percent = 100 * (2 * ps),
        single_coupled_percent = 100 * single,
        main_percent = 100 * pm,
        kappa = kappa,
        coupling_length_mm = 1e3 * coupling_length(kappa),
        single_coupling_length_mm = 1e3 * single_pa_coupling_length(kappa),
    )

    columns = ['length_mm', 'pair_coupled_percent', 'single_coupled_percent', 'main_percent']
    write_tables(_out_path(scenario, 'coupling_sweep'), columns,
                 np.array([result[c] for c in columns]).T,
                 _provenance(scenario, resolved=cfg.describe(), kappa=kappa,
                             coupling_length_mm=result['coupling_length_mm'],
                             single_coupling_length_mm=result['single_coupling_length_mm']),
                 scenario.output.formats)
    return result


def cmd_linksim(scenario, parallel=False, trace=False, aperture=None):
    """Run the placement study. Returns the OrderedDict of SchemeResults and
    the directional-versus-omni SNR gap (dB) at the middle of the SNR grid.

    """
    if aperture is None:
        aperture = scenario.pattern.aperture

    plan = scenario.simulation_plan()
    cfg = scenario.pass_configuration(waveguide_length=plan.waveguide_length)
    results = run_plan(plan, cfg, aperture=aperture, n_angles=scenario.pattern.n_angles,
                       parallel=parallel)

    mid_snr = float(plan.snr_db[plan.snr_db.size // 2])
    gap = snr_gap_db(results['directional_optimized'], results['omni_optimized'], mid_snr)
    log('directional vs. omni placement gap at %g dB: %.2f dB', mid_snr, gap)

    rows = []
    for scheme in SCHEMES:
        res = results[scheme]
        for snr, rate in zip(res.snr_db, res.mean_rate):
            rows.append([scheme, snr, rate, plan.num_drops, plan.seed])

    prov = _provenance(scenario, resolved=cfg.describe(), plan=plan.describe(), seed=plan.seed,
                       aperture=aperture, evaluator=EVALUATOR_NOTE,
                       mid_snr_db=mid_snr, directional_vs_omni_gap_db=gap)
    write_tables(_out_path(scenario, 'linksim_results'),
                 ['scheme', 'snr_db', 'mean_rate_bps_hz', 'num_drops', 'seed'],
                 rows, prov, scenario.output.formats)

    if trace:
        first = results[SCHEMES[0]]
        columns = ['drop', 'x_ue']
        table = [np.arange(plan.num_drops), first.ue_x]
        for scheme in SCHEMES:
            columns += ['x_p_' + scheme, 'gain_' + scheme]
            table += [results[scheme].positions, results[scheme].gains]
        rows = [[int(r[0])] + list(r[1:]) for r in np.array(table, dtype=float).T]
        write_tables(_out_path(scenario, 'linksim_trace'), columns, rows, prov,
                     scenario.output.formats)

    return results, gap
