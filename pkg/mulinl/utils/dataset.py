import json
import os
import tempfile
import numpy as np
import pandas as pd

from mulinl.bases.errors import ColumnMismatchError, \
                                InvalidInputError, \
                                UnreadableFileError, \
                                UnwritableFileError


FLOAT_FORMAT = '%.17g'


def write_atomically(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    try:
        (handle, temporary_path) = tempfile.mkstemp(dir=directory,
                                                    prefix='.{}.'.format(os.path.basename(path)))
    except OSError as error:
        raise unwritable(path, error)
    try:
        with os.fdopen(handle, 'w', encoding='utf8') as temporary_file:
            temporary_file.write(text)
        os.replace(temporary_path, path)
    except BaseException as error:
        if os.path.exists(temporary_path):
            os.remove(temporary_path)
        if isinstance(error, OSError):
            raise unwritable(path, error)
        raise


def unreadable(path, reason):
    errors = UnreadableFileError()
    errors.add_error('input', '{}: {}'.format(path, reason))
    return errors


def unwritable(path, reason):
    errors = UnwritableFileError()
    errors.add_error('output', '{}: {}'.format(path, reason))
    return errors


def is_numeric_row(row):
    try:
        [float(value) for value in row]
    except (TypeError, ValueError):
        return False
    return True


def read_csv_table(path, columns):
    try:
        first_row = pd.read_csv(path, header=None, dtype=str, nrows=1)
        header = None if is_numeric_row(first_row.iloc[0]) else 0
        table = pd.read_csv(path, header=header, skip_blank_lines=True, float_precision='round_trip')
    except pd.errors.EmptyDataError:
        return np.empty((0, columns))
    except (pd.errors.ParserError, UnicodeDecodeError, OSError) as error:
        raise unreadable(path, error)

    if table.shape[1] != columns:
        errors = ColumnMismatchError()
        errors.add_error('input', 'expected {} columns, found {}.'.format(columns, table.shape[1]))
        raise errors

    return table.apply(pd.to_numeric, errors='coerce').to_numpy(dtype=float)


def read_json_table(path, columns):
    try:
        with open(path, encoding='utf8') as json_file:
            datum = json.load(json_file)
    except (ValueError, UnicodeDecodeError, OSError) as error:
        raise unreadable(path, error)

    if not datum:
        return np.empty((0, columns))

    try:
        points = np.asarray(datum, dtype=float)
    except (TypeError, ValueError):
        errors = InvalidInputError()
        errors.add_error('input', 'expected a JSON array of {}-vectors.'.format(columns))
        raise errors

    if points.ndim != 2 or points.shape[1] != columns:
        errors = ColumnMismatchError()
        errors.check_columns('input', points, columns)
        raise errors
    return points


def read_points(path, columns):
    if not os.path.isfile(path):
        raise unreadable(path, 'no such file.')
    if path.lower().endswith('.json'):
        points = read_json_table(path, columns)
    else:
        points = read_csv_table(path, columns)

    errors = InvalidInputError()
    if not errors.check_finite('input', points):
        rows = np.flatnonzero(~np.isfinite(points).all(axis=1))
        errors.add_error('input', 'first bad row is {}.'.format(int(rows[0])))
    errors.maybe_raise()
    return points


def write_points(path, points, column_names):
    table = pd.DataFrame(np.asarray(points, dtype=float), columns=list(column_names))
    write_atomically(path, table.to_csv(index=False, float_format=FLOAT_FORMAT))


def read_labels(path):
    if not os.path.isfile(path):
        raise unreadable(path, 'no such file.')
    try:
        table = pd.read_csv(path, header=None, dtype=int)
    except pd.errors.EmptyDataError:
        return np.empty(0, dtype=int)
    except (pd.errors.ParserError, ValueError, OSError) as error:
        raise unreadable(path, error)
    return table[0].to_numpy()


def write_labels(path, labels):
    table = pd.DataFrame({'label': np.asarray(labels, dtype=int)})
    write_atomically(path, table.to_csv(index=False, header=False))
