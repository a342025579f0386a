import json
import numpy as np


class EstimationErrors(Exception):
    def __init__(self, errors: dict = None):
        super().__init__()
        self.errors = errors if errors else {}

    def add_error(self, field, error):
        if field in self.errors:
            self.errors[field].append(error)
        else:
            self.errors[field] = [error]
        return self

    def check_columns(self, field, array, columns):
        if array.ndim != 2 or array.shape[1] != columns:
            found = array.shape[1] if array.ndim == 2 else array.ndim
            self.add_error(field, 'expected {} columns, found {}.'.format(columns, found))
            return False
        return True

    def check_finite(self, field, value):
        if not np.all(np.isfinite(value)):
            self.add_error(field, 'values must be finite.')
            return False
        return True

    def check_positive(self, field, value):
        if not value > 0:
            self.add_error(field, 'value must be positive, got {}.'.format(value))
            return False
        return True

    def check_range(self, field, value, lower, upper):
        if not lower < value < upper:
            self.add_error(field,
                           'value must be in ({}, {}), got {}.'.format(lower, upper, value))
            return False
        return True

    def maybe_raise(self):
        if len(self.errors) > 0:
            raise self

    def __str__(self):
        if self.errors:
            return json.dumps(self.errors, indent=2)
        return self.__class__.__name__

    exit_code = 2
