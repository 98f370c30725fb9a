import io
import csv
import json
from enum import Enum
from fractions import Fraction

import yaml

FORMATS = ('plain', 'csv', 'json', 'yaml')


def serializable(value):
    ''' Converts a value into plain str/int/bool/list/dict data.

    Fractions become 'p/q' strings, enums their value, tuples lists and
    mapping keys strings.
    '''
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): serializable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [serializable(v) for v in value]
    return value


def _csv_cell(value):
    value = serializable(value)
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, list):
        return ' '.join(str(v) for v in value)
    return value


def render(fmt, rows, fields, document, plain, header=True):
    ''' Renders command output.

    Args:
        fmt ('str'): one of FORMATS.
        rows ('list'): dicts, one per CSV row.
        fields ('list'): CSV columns, in order.
        document ('object'): what JSON and YAML serialize.
        plain ('callable'): returns the plain text lines.
        header ('bool'): include the CSV header row.

    Returns:
        str: the rendered text, newline terminated.

    '''
    if fmt == 'plain':
        return ''.join(line + '\n' for line in plain())

    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, quoting=csv.QUOTE_NONNUMERIC,
                            lineterminator='\n')
        if header:
            writer.writerow(fields)
        for row in rows:
            writer.writerow([_csv_cell(row.get(f)) for f in fields])
        return buffer.getvalue()

    if fmt == 'json':
        return json.dumps(serializable(document), indent=2) + '\n'

    if fmt == 'yaml':
        return yaml.safe_dump(serializable(document), sort_keys=False,
                              default_flow_style=False)

    raise ValueError('Unknown output format "{f}"'.format(f=fmt))
