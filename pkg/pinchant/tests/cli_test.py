# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""End-to-end tests of the command-line tools.

"""
from __future__ import absolute_import, division, print_function

import json
import os.path

import numpy as np
from numpy.testing import assert_allclose
import pytest

from .. import commands
from ..bases import DegeneratePatternError
from ..cli import ExitCodes, entrypoint
from ..export import read_table

SMALL_LINKSIM = '''
[simulation]
L_m = 4.0
drops = 30
seed = 2
snr_db = [20, 50, 80]
'''


def run(*args):
    entrypoint(['pinchant'] + [str(a) for a in args])


def exit_code(*args):
    with pytest.raises(SystemExit) as info:
        run(*args)
    return info.value.code


def data_section(path):
    with open(str(path), 'rt') as f:
        return [line for line in f if not line.startswith('#')]


def small_config(tmp_path):
    path = tmp_path / 'small.toml'
    path.write_text(SMALL_LINKSIM)
    return path


def test_modes(tmp_path, capsys):
    run('modes', '-q', '--out', tmp_path)
    out = capsys.readouterr().out
    assert 'single-mode PASS' in out
    assert 'coupling length' in out

    cols, data, prov = read_table(tmp_path / 'modes.csv')
    assert list(data['slab']) == ['main', 'pa']
    assert_allclose(data['u'], 0.914856, rtol=1e-5)
    assert_allclose(prov['kappa'], 113.543, rtol=1e-4)
    assert prov['scenario']['waveguide']['f_ghz'] == 60.


def test_pattern_with_oracle(tmp_path, capsys):
    run('pattern', '-q', '--out', tmp_path, '--lengths', '0.75,2', '--angles', 720, '--oracle',
        '--aperture', 'physical')
    assert 'oracle dev' in capsys.readouterr().out

    cols, data, prov = read_table(tmp_path / 'pattern_Ls2lambda.csv')
    assert cols == ['phi_deg', 're_F', 'im_F', 'G', 'D', 're_F_oracle', 'im_F_oracle']
    assert data['phi_deg'].size == 720
    assert data['G'].max() == 1.
    assert prov['summary']['oracle_max_deviation'] < 1e-6

    cols, data, prov = read_table(tmp_path / 'pattern_summary.csv')
    assert_allclose(data['length_lambda'], [0.75, 2.])
    assert np.all(data['oracle_max_deviation'] < 1e-6)
    assert data['main_lobe_deg'][1] < data['main_lobe_deg'][0]
    assert prov['aperture'] == 'physical'

    assert os.path.exists(str(tmp_path / 'pattern_Ls0p75lambda.csv'))


def test_pattern_json(tmp_path):
    run('pattern', '-q', '--out', tmp_path, '--lengths', '1.5', '--angles', 360,
        '--aperture', 'physical', '--format', 'json')

    with open(str(tmp_path / 'pattern_Ls1p5lambda.json'), 'rt') as f:
        doc = json.load(f)

    assert doc['columns'] == ['phi_deg', 're_F', 'im_F', 'G', 'D']
    assert len(doc['data']) == 360
    assert doc['provenance']['summary']['aperture'] == 'physical'
    assert not os.path.exists(str(tmp_path / 'pattern_Ls1p5lambda.csv'))


def test_pattern_json_summary_without_oracle(tmp_path):
    run('pattern', '-q', '--out', tmp_path, '--lengths', '1.5', '--angles', 360, '--format', 'json')

    with open(str(tmp_path / 'pattern_summary.json'), 'rt') as f:
        text = f.read()

    assert 'NaN' not in text
    doc = json.loads(text)
    assert doc['columns'][4] == 'oracle_max_deviation'
    assert doc['data'][0][4] is None
    assert doc['provenance']['aperture'] == 'outer'


def test_coupling_sweep(tmp_path, capsys):
    run('coupling-sweep', '-q', '--out', tmp_path, '--max-length', 20, '--points', 201)
    assert 'L_c = 9.78' in capsys.readouterr().out

    cols, data, prov = read_table(tmp_path / 'coupling_sweep.csv')
    assert data['length_mm'].size == 201
    assert_allclose(data['length_mm'][-1], 20.)
    assert_allclose(data['pair_coupled_percent'] + data['main_percent'], 100., rtol=1e-12)
    assert data['pair_coupled_percent'].max() <= 100.
    assert_allclose(prov['coupling_length_mm'], 9.7824, rtol=1e-4)


def test_coupling_sweep_requires_phase_match(tmp_path, capsys):
    mismatched = tmp_path / 'mismatched.toml'
    mismatched.write_text('[pa]\nv_number = 1.2\n')

    run('modes', '-q', '--config', mismatched, '--out', tmp_path)
    assert 'not phase matched' in capsys.readouterr().out

    assert exit_code('coupling-sweep', '-q', '--config', mismatched,
                     '--out', tmp_path) == ExitCodes.CONFIG
    assert 'phase' in capsys.readouterr().err
    assert not os.path.exists(str(tmp_path / 'coupling_sweep.csv'))


def test_linksim(tmp_path, capsys):
    config = small_config(tmp_path)
    run('linksim', '-q', '--config', config, '--out', tmp_path / 'a', '--trace')
    out = capsys.readouterr().out
    assert 'directional_optimized' in out

    cols, data, prov = read_table(tmp_path / 'a' / 'linksim_results.csv')
    assert cols == ['scheme', 'snr_db', 'mean_rate_bps_hz', 'num_drops', 'seed']
    assert data['scheme'].size == 9
    assert np.all(data['seed'] == 2)
    assert np.all(data['num_drops'] == 30)
    assert prov['seed'] == 2
    assert 'closed-form' in prov['evaluator']

    rates = dict(((s, snr), r) for s, snr, r in zip(data['scheme'], data['snr_db'],
                                                     data['mean_rate_bps_hz']))
    for snr in (20., 50., 80.):
        assert rates['directional_optimized', snr] >= rates['omni_optimized', snr]

    cols, data, prov = read_table(tmp_path / 'a' / 'linksim_trace.csv')
    assert data['drop'].size == 30
    assert np.all(data['gain_directional_optimized'] >= data['gain_omni_optimized'])


def test_linksim_deterministic(tmp_path):
    config = small_config(tmp_path)
    run('linksim', '-q', '--config', config, '--out', tmp_path / 'a')
    run('linksim', '-q', '--config', config, '--out', tmp_path / 'b')

    first = data_section(tmp_path / 'a' / 'linksim_results.csv')
    assert len(first) == 10
    assert first == data_section(tmp_path / 'b' / 'linksim_results.csv')

    run('linksim', '-q', '--config', config, '--out', tmp_path / 'c', '--seed', 11)
    cols, data, prov = read_table(tmp_path / 'c' / 'linksim_results.csv')
    assert np.all(data['seed'] == 11)


def test_linksim_single_drop(tmp_path):
    config = small_config(tmp_path)
    run('linksim', '-q', '--config', config, '--out', tmp_path, '--drops', 1, '--format', 'json')

    with open(str(tmp_path / 'linksim_results.json'), 'rt') as f:
        doc = json.load(f)

    assert all(row[3] == 1 for row in doc['data'])


def test_init_config(tmp_path):
    path = tmp_path / 'new.toml'
    run('init-config', path)
    assert '[waveguide]' in path.read_text()
    run('modes', '-q', '--config', path, '--out', tmp_path)


def test_exit_codes(tmp_path, monkeypatch):
    assert exit_code() == ExitCodes.USAGE
    assert exit_code('frobnicate') == ExitCodes.USAGE
    assert exit_code('modes', '-q', '--config', tmp_path / 'missing.toml') == ExitCodes.CONFIG
    assert exit_code('linksim', '-q', '--out', tmp_path, '--seed', -1) == ExitCodes.CONFIG

    multimode = tmp_path / 'multi.toml'
    multimode.write_text('[waveguide]\nv_number = 1.6\n')
    assert exit_code('modes', '-q', '--config', multimode) == ExitCodes.SOLVER

    def degenerate(scenario):
        raise DegeneratePatternError('pattern is identically zero')

    monkeypatch.setattr(commands, 'cmd_modes', degenerate)
    assert exit_code('modes', '-q', '--out', tmp_path) == ExitCodes.DEGENERATE


def test_error_message(tmp_path, capsys):
    exit_code('pattern', '-q', '--config', tmp_path / 'missing.toml')
    err = capsys.readouterr().err
    assert 'error:' in err
    assert 'missing.toml' in err
