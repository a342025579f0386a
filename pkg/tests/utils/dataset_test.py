import json
import numpy as np
import pytest

from mulinl.bases.errors import ColumnMismatchError, \
                                InvalidInputError, \
                                UnreadableFileError, \
                                UnwritableFileError
from mulinl.utils.dataset import read_labels, \
                                 read_points, \
                                 write_atomically, \
                                 write_labels, \
                                 write_points
from tests.conftest import write_text


class ReadPointsTest:
    def test_reads_csv_with_header(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'points.csv', 'x,y\n1,2\n3.5,-4\n')

        # When
        points = read_points(path, 2)

        # Then
        assert np.array_equal(points, [[1, 2], [3.5, -4]])

    def test_reads_csv_without_header(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'points.csv', '1,2\n3,4\n5,6\n')

        # When
        points = read_points(path, 2)

        # Then
        assert points.shape == (3, 2)
        assert points[2, 1] == 6

    def test_reads_json_arrays(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'points.json', json.dumps([[1, 2, 3], [4, 5, 6]]))

        # When
        points = read_points(path, 3)

        # Then
        assert np.array_equal(points, [[1, 2, 3], [4, 5, 6]])

    def test_empty_file_gives_no_points(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'points.csv', '')

        # When
        points = read_points(path, 2)

        # Then
        assert points.shape == (0, 2)

    def test_wrong_column_count_raises(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'points.csv', '1,2,3\n4,5,6\n')

        # When
        with pytest.raises(ColumnMismatchError) as errors:
            read_points(path, 2)

        # Then
        assert 'expected 2 columns, found 3.' in errors.value.errors['input']

    def test_non_finite_value_raises(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'points.csv', '1,2\nnan,4\n')

        # When
        with pytest.raises(InvalidInputError) as errors:
            read_points(path, 2)

        # Then
        assert 'first bad row is 1.' in errors.value.errors['input']

    def test_missing_file_raises(self, tmp_path):
        # When
        with pytest.raises(UnreadableFileError):
            read_points(str(tmp_path / 'missing.csv'), 2)

    def test_written_points_read_back_exactly(self, tmp_path):
        # Given
        path = str(tmp_path / 'points.csv')
        points = np.array([[0.1, 1 / 3], [1e-20, 12345.678901234567]])

        # When
        write_points(path, points, ('x', 'y'))

        # Then
        assert np.array_equal(read_points(path, 2), points)


class LabelsTest:
    def test_labels_round_trip(self, tmp_path):
        # Given
        path = str(tmp_path / 'points.labels.csv')

        # When
        write_labels(path, [0, 0, 1, -1])

        # Then
        assert read_labels(path).tolist() == [0, 0, 1, -1]


class WriteAtomicallyTest:
    def test_replaces_previous_content(self, tmp_path):
        # Given
        path = write_text(tmp_path / 'result.json', 'old')

        # When
        write_atomically(path, 'new')

        # Then
        with open(path, encoding='utf8') as result_file:
            assert result_file.read() == 'new'
        assert [entry.name for entry in tmp_path.iterdir()] == ['result.json']

    def test_missing_directory_raises_an_unwritable_file_error(self, tmp_path):
        # Given
        path = str(tmp_path / 'missing-dir' / 'result.json')

        # When
        with pytest.raises(UnwritableFileError) as errors:
            write_atomically(path, 'new')

        # Then
        assert errors.value.exit_code == 2
        assert 'output' in errors.value.errors
