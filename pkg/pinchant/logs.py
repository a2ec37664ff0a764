# -*- mode: python; coding: utf-8 -*-
# Copyright 2015-2026 Peter Williams <peter@newton.cx> and collaborators
# Licensed under the MIT License.

"""Timestamped progress logging. Everything goes to stderr so that reports
printed on stdout can be piped cleanly.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
log
set_quiet
timestamp
warn
'''.split()

import sys, time

_quiet = False


def set_quiet(quiet):
    """Silence (or restore) ``log``; warnings and fatal messages always print."""
    global _quiet
    _quiet = bool(quiet)


def timestamp():
    return time.strftime('%y/%m/%d_%H:%M:%S')


def _log(ident, fmt, args):
    if len(args):
        text = fmt % args
    else:
        text = str(fmt)

    print(timestamp(), ident, text, file=sys.stderr)
    sys.stderr.flush()

def log(fmt, *args):
    if not _quiet:
        _log('--', fmt, args)

def warn(fmt, *args):
    _log('WW', fmt, args)
