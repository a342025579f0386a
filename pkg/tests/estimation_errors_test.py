import json
import numpy as np
import pytest

from mulinl import ColumnMismatchError, \
                   ConfigError, \
                   EstimationErrors, \
                   TooFewPointsError


class EstimationErrorsTest:
    def test_add_error_groups_by_field(self):
        # When
        errors = EstimationErrors().add_error('trials', 'too small.').add_error('trials', 'not an integer.')

        # Then
        assert errors.errors == {'trials': ['too small.', 'not an integer.']}

    def test_maybe_raise_only_with_errors(self):
        # Given
        errors = ConfigError()

        # When
        errors.maybe_raise()
        errors.check_range('epsilon', 70, 0, 50)

        # Then
        with pytest.raises(ConfigError):
            errors.maybe_raise()

    def test_checks(self):
        # Given
        errors = EstimationErrors()

        # When
        errors.check_columns('points', np.zeros((3, 4)), 2)
        errors.check_finite('points', np.array([1.0, np.nan]))
        errors.check_positive('sigma', 0)

        # Then
        assert errors.errors['points'] == ['expected 2 columns, found 4.', 'values must be finite.']
        assert 'sigma' in errors.errors

    def test_str_is_the_json_of_errors(self):
        # Given
        errors = TooFewPointsError().add_error('points', 'needs at least 10 points, got 4.')

        # Then
        assert json.loads(str(errors)) == {'points': ['needs at least 10 points, got 4.']}

    def test_exit_codes(self):
        assert ConfigError.exit_code == 1
        assert ColumnMismatchError.exit_code == 2
        assert TooFewPointsError.exit_code == 2
