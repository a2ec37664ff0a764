# -*- mode: python; coding: utf-8 -*-
# Copyright 2018-2026 Peter Williams and collaborators.
# Licensed under the MIT License.

"""Plot-ready tables on disk.

CSV files open with ``#`` comment lines: a generation timestamp, then one
line of JSON provenance (the full resolved scenario). The data section
follows, floats written with 17 significant digits so values survive a
round trip exactly. JSON files carry the same information as members
"generated", "provenance", "columns" and "data"; non-finite cells are
written as null there.

"""
from __future__ import absolute_import, division, print_function

__all__ = '''
read_table
write_table
write_tables
'''.split()

import csv, io, json, numbers

import numpy as np
from pwkit.io import Path

from .logs import log, timestamp

FLOAT_FORMAT = '%.17g'


def _jsonable(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, (set, tuple)):
        return list(obj)
    raise TypeError('cannot serialize %r to JSON' % (obj,))


def _json_cell(value):
    # JSON has no NaN or infinity; missing values become null
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def _format_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return FLOAT_FORMAT % value
    return str(value)


def write_table(path, columns, rows, provenance, fmt='csv'):
    """Write one table.

    Arguments:

    path
      Destination; the suffix is replaced to match *fmt*.
    columns
      Column names.
    rows
      Iterable of row sequences (or a 2D array).
    provenance
      JSON-serializable dict describing how the data were made.
    fmt
      "csv" or "json".

    Returns the Path written.

    """
    path = Path(path).with_suffix('.' + fmt)
    path.parent.mkdir(parents=True, exist_ok=True)
    prov_text = json.dumps(provenance, sort_keys=True, default=_jsonable)

    if fmt == 'csv':
        with path.open('wt', newline='') as f:
            print('# generated:', timestamp(), file=f)
            print('# provenance:', prov_text, file=f)
            w = csv.writer(f, lineterminator='\n')
            w.writerow(columns)
            for row in rows:
                w.writerow([_format_cell(v) for v in row])
    elif fmt == 'json':
        doc = dict(
            generated = timestamp(),
            provenance = json.loads(prov_text),
            columns = list(columns),
            data = [[_json_cell(v) for v in row] for row in rows],
        )
        with path.open('wt') as f:
            json.dump(doc, f, indent=1, sort_keys=True, default=_jsonable)
            f.write('\n')
    else:
        raise ValueError('unknown output format %r' % fmt)

    log('wrote %s', path)
    return path


def write_tables(path, columns, rows, provenance, formats):
    "Write the same table in each of *formats*; returns the list of paths."
    rows = [list(r) for r in rows]
    return [write_table(path, columns, rows, provenance, fmt) for fmt in formats]


def _parse_cell(text):
    try:
        return float(text)
    except ValueError:
        return text


def read_table(path):
    """Read a table written by `write_table`.

    Returns ``(columns, data, provenance)`` where *data* maps each column
    name to a numpy array (float where every entry parses as a number).

    """
    path = Path(path)
    provenance = None

    if path.suffix == '.json':
        with path.open('rt') as f:
            doc = json.load(f)
        columns = doc['columns']
        rows = doc['data']
        provenance = doc['provenance']
    else:
        body = []
        with path.open('rt') as f:
            for line in f:
                if line.startswith('# provenance:'):
                    provenance = json.loads(line[len('# provenance:'):])
                elif not line.startswith('#'):
                    body.append(line)

        reader = csv.reader(io.StringIO(''.join(body)))
        columns = next(reader)
        rows = [[_parse_cell(c) for c in row] for row in reader]

    data = {}
    for j, name in enumerate(columns):
        values = [row[j] for row in rows]
        if all(isinstance(v, numbers.Real) for v in values):
            data[name] = np.array(values, dtype=float)
        else:
            data[name] = np.array(values, dtype=object)

    return columns, data, provenance
