# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Swiss-army-knife command-line interface to pinchant functionality.

"""
from __future__ import absolute_import, division, print_function

import argparse, sys

import numpy as np
from pwkit import Holder, cli

from ..bases import (ConfigurationError, DegeneratePatternError, DomainError,
                     ModeSolverError, PhaseMismatchError)
from ..logs import set_quiet

SUBCOMMANDS = ('coupling-sweep', 'init-config', 'linksim', 'modes', 'pattern')


@Holder
class ExitCodes():
    SUCCESS = 0
    USAGE = 1
    CONFIG = 3
    SOLVER = 4
    DEGENERATE = 5


def fail(code, fmt, *args):
    """Like `pwkit.cli.die`, but exiting with *code*."""
    text = fmt % args if len(args) else str(fmt)
    print('error:', text, file=sys.stderr)
    raise SystemExit(code)


def make_common_parser(prog):
    """Options shared by every subcommand: where the scenario comes from and
    where the results go.

    """
    ap = argparse.ArgumentParser(prog=prog)
    ap.add_argument('-c', '--config', dest='config_path', metavar='CONFIG-PATH',
                    help='The scenario file (TOML, or JSON by suffix); defaults if omitted.')
    ap.add_argument('-o', '--out', dest='out_dir', metavar='DIR',
                    help='Directory for output files [scenario [output] directory].')
    ap.add_argument('--seed', dest='seed', type=int, metavar='U64',
                    help='Override the [simulation] seed.')
    ap.add_argument('--format', dest='format', metavar='csv|json',
                    help='Output format(s), comma-separated [scenario [output] formats].')
    ap.add_argument('-q', '--quiet', dest='quiet', action='store_true',
                    help='Suppress progress messages on stderr.')
    return ap


def load_settings(ap, args):
    """Parse *args* and load the scenario they point at, with command-line
    overrides applied and everything validated.

    """
    from ..scenario import load_scenario

    settings = ap.parse_args(args=args)
    set_quiet(settings.quiet)
    scenario = load_scenario(settings.config_path)

    if settings.out_dir is not None:
        scenario.output.directory = settings.out_dir
    if settings.seed is not None:
        if settings.seed < 0 or settings.seed >= 2**64:
            raise ConfigurationError('--seed must be an unsigned 64-bit integer; got %d' % settings.seed)
        scenario.simulation.seed = settings.seed
    if settings.format is not None:
        scenario.output.formats = tuple(f.strip() for f in settings.format.split(',') if f.strip())

    return settings, scenario.validate()


def _parse_lengths(text):
    try:
        return [float(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise ConfigurationError('--lengths must be a comma-separated list of numbers; got %r' % text)


def modes_cli(args):
    from ..commands import cmd_modes

    ap = make_common_parser('pinchant modes')
    settings, scenario = load_settings(ap, args)
    rows, coupling = cmd_modes(scenario)

    print('%-5s %10s %8s %10s %10s %12s %12s %12s %12s' %
          ('slab', 'W [mm]', 'V', 'u', 'w', 'beta_x', 'beta_y', 'sigma', 'lam_g [mm]'))
    for r in rows:
        print('%-5s %10.6f %8.5f %10.7f %10.7f %12.6f %12.6f %12.6f %12.6f' %
              (r['slab'], 1e3 * r['width_m'], r['v_num'], r['u'], r['w'], r['beta_x'],
               r['beta_y'], r['sigma'], 1e3 * r['guided_wavelength_m']))

    if all(r['single_mode'] for r in rows):
        print('single-mode PASS: every slab has V < pi/2')

    if coupling is None:
        print('main and PA widths differ: the system is not phase matched')
    else:
        print('kappa = %.6f rad/m; coupling length L_c = %.6f mm' %
              (coupling.kappa, 1e3 * coupling.coupling_length))


def pattern_cli(args):
    from ..commands import cmd_pattern
    from ..farfield import APERTURES

    ap = make_common_parser('pinchant pattern')
    ap.add_argument('--lengths', dest='lengths', metavar='L1,L2,...',
                    help='PA lengths in wavelengths [scenario [pattern] lengths_lambda].')
    ap.add_argument('--oracle', dest='oracle', action='store_true',
                    help='Also evaluate the brute-force radiation integral and report deviations.')
    ap.add_argument('--aperture', dest='aperture', choices=APERTURES,
                    help='Transverse aperture convention [scenario [pattern] aperture].')
    ap.add_argument('--angles', dest='n_angles', type=int, metavar='N',
                    help='Number of angles over the full turn [scenario [pattern] n_angles].')
    settings, scenario = load_settings(ap, args)

    if settings.n_angles is not None and settings.n_angles < 2:
        raise ConfigurationError('--angles must be at least 2; got %d' % settings.n_angles)

    lengths = None if settings.lengths is None else _parse_lengths(settings.lengths)
    results = cmd_pattern(scenario, lengths_lambda=lengths, oracle=settings.oracle,
                          aperture=settings.aperture, n_angles=settings.n_angles)

    print('%8s %10s %12s %10s %14s' % ('Ls [lam]', 'peak D', 'lobe [deg]', 'HPBW [deg]', 'oracle dev'))
    for length, pattern, deviation in results:
        print('%8g %10.4f %12.2f %10.2f %14s' %
              (length, pattern.peak_directivity, np.degrees(pattern.main_lobe_angle),
               np.degrees(pattern.half_power_beamwidth()),
               '-' if deviation is None else '%.3g' % deviation))


def coupling_sweep_cli(args):
    from ..commands import cmd_coupling_sweep

    ap = make_common_parser('pinchant coupling-sweep')
    ap.add_argument('--max-length', dest='max_length_mm', type=float, metavar='MM',
                    help='Longest PA length, in mm [scenario [coupling] max_length_mm].')
    ap.add_argument('--points', dest='n_points', type=int, metavar='N',
                    help='Number of PA lengths [scenario [coupling] n_points].')
    settings, scenario = load_settings(ap, args)

    result = cmd_coupling_sweep(scenario, max_length_mm=settings.max_length_mm,
                                n_points=settings.n_points)
    print('kappa = %.6f rad/m' % result['kappa'])
    print('PA pair: complete transfer at L_c = %.4f mm' % result['coupling_length_mm'])
    print('single PA (reference model): complete transfer at %.4f mm' %
          result['single_coupling_length_mm'])


def linksim_cli(args):
    from ..commands import cmd_linksim
    from ..deployment import SCHEMES
    from ..farfield import APERTURES

    ap = make_common_parser('pinchant linksim')
    ap.add_argument('--drops', dest='drops', type=int, metavar='N',
                    help='Override the [simulation] number of drops.')
    ap.add_argument('--aperture', dest='aperture', choices=APERTURES,
                    help='Transverse aperture convention [scenario [pattern] aperture].')
    ap.add_argument('-j', '--parallel', dest='n_cpu', type=int, metavar='NCPU',
                    help='Number of worker processes (default: run serially).')
    ap.add_argument('--trace', dest='trace', action='store_true',
                    help='Also write a per-drop trace table.')
    settings, scenario = load_settings(ap, args)

    if settings.drops is not None:
        scenario.simulation.drops = settings.drops
        scenario.validate()

    parallel = False if settings.n_cpu is None or settings.n_cpu <= 1 else settings.n_cpu
    results, gap = cmd_linksim(scenario, parallel=parallel, trace=settings.trace,
                               aperture=settings.aperture)

    snrs = results[SCHEMES[0]].snr_db
    print('%8s' % 'SNR [dB]' + ''.join(' %22s' % s for s in SCHEMES))
    for i, snr in enumerate(snrs):
        print('%8g' % snr + ''.join(' %22.6f' % results[s].mean_rate[i] for s in SCHEMES))
    print('directional vs. omni placement gap at mid SNR: %.2f dB' % gap)


def init_config_cli(args):
    from ..scenario import ScenarioConfiguration
    ScenarioConfiguration.generate_config_cli('pinchant init-config', args)


def entrypoint(argv):
    if len(argv) == 1:
        fail(ExitCodes.USAGE, 'must supply a subcommand: %s',
             ', '.join('"%s"' % s for s in SUBCOMMANDS))

    rest = argv[2:]

    if argv[1] == 'modes':
        handler = modes_cli
    elif argv[1] == 'pattern':
        handler = pattern_cli
    elif argv[1] == 'coupling-sweep':
        handler = coupling_sweep_cli
    elif argv[1] == 'linksim':
        handler = linksim_cli
    elif argv[1] == 'init-config':
        handler = init_config_cli
    else:
        fail(ExitCodes.USAGE, 'unrecognized subcommand %r', argv[1])

    try:
        handler(rest)
    except (ConfigurationError, PhaseMismatchError, DomainError) as e:
        fail(ExitCodes.CONFIG, 'configuration error: %s', e)
    except ModeSolverError as e:
        fail(ExitCodes.SOLVER, 'mode solver error: %s', e)
    except DegeneratePatternError as e:
        fail(ExitCodes.DEGENERATE, 'numerical degeneracy: %s', e)


def main():
    cli.unicode_stdio()
    cli.propagate_sigint()
    cli.backtrace_on_usr1()
    entrypoint(sys.argv)
