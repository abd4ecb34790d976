"""Tests for group, B-matrix and rational matrix files"""
import json
from fractions import Fraction
from pathlib import Path

import pytest

from src.models.encoder import build_b
from src.models.errors import InvalidGroupError, LayoutMismatchError, MalformedFileError
from src.utils.file_handlers import (
    BMatrixFile, GroupFileLoader, MatrixTextFile, parse_group, serialize_group,
)
from src.utils.rational_matrix import RatMatrix


class TestGroupFiles:
    """Test group-file JSON"""

    def test_parse_group(self):
        """Test a minimal group file"""
        group = parse_group('{"n": 2, "table": [[1, 2], [2, 1]]}')
        assert group.n == 2
        assert group.names == ('g1', 'g2')

    def test_parse_group_with_names(self):
        """Test names are kept"""
        group = parse_group('{"n": 2, "names": ["e", "a"], "table": [[1, 2], [2, 1]]}')
        assert group.names == ('e', 'a')

    def test_serialize_round_trip(self, s3):
        """Test serialize then parse"""
        assert parse_group(serialize_group(s3)) == s3

    @pytest.mark.parametrize('text,message', [
        ('not json', 'Invalid JSON'),
        ('[1, 2]', "fields 'n' and 'table'"),
        ('{"n": 0, "table": []}', 'positive integer'),
        ('{"n": true, "table": [[1]]}', 'positive integer'),
        ('{"n": 2, "table": [[1, 2]]}', '2 rows of 2'),
        ('{"n": 1, "table": [["1"]]}', 'integers'),
        ('{"n": 1, "names": ["e", "f"], "table": [[1]]}', 'list of 1 strings'),
    ])
    def test_malformed(self, text, message):
        """Test syntax and shape errors"""
        with pytest.raises(MalformedFileError, match=message):
            parse_group(text)

    def test_invalid_group(self):
        """Test a well-formed table that is not a group"""
        with pytest.raises(InvalidGroupError):
            parse_group(json.dumps({'n': 2, 'table': [[1, 2], [2, 2]]}))

    def test_load_and_save(self, tmp_path, z4):
        """Test file round trip"""
        path = tmp_path / 'z4.json'
        GroupFileLoader.save(z4, path)
        assert GroupFileLoader.load(path) == z4
        assert GroupFileLoader.load(str(path)).names == z4.names

    def test_load_missing(self, tmp_path):
        """Test missing file"""
        with pytest.raises(FileNotFoundError, match="File not found"):
            GroupFileLoader.load(tmp_path / 'missing.json')

    def test_save_into_missing_directory(self, tmp_path, z4):
        """Test write failures are reported as ValueError"""
        with pytest.raises(ValueError, match="Error saving file"):
            GroupFileLoader.save(z4, tmp_path / 'nope' / 'z4.json')


class TestBMatrixFile:
    """Test B-matrix files on disk"""

    def test_round_trip(self, tmp_path, v4):
        """Test save then load"""
        b = build_b(v4)
        path = tmp_path / 'v4.b'
        BMatrixFile.save(b, path)
        assert BMatrixFile.load(path) == b

    def test_layout_mismatch(self, tmp_path):
        """Test a grid with too many rows"""
        path = tmp_path / 'bad.b'
        path.write_text("# n=1\n# mode=strict\n# rows=3 cols=1\n1\n1\n1\n1\n", encoding='utf-8')
        with pytest.raises(LayoutMismatchError):
            BMatrixFile.load(path)

    def test_load_missing(self, tmp_path):
        """Test missing file"""
        with pytest.raises(FileNotFoundError):
            BMatrixFile.load(tmp_path / 'missing.b')


class TestMatrixTextFile:
    """Test the rational matrix text format"""

    def test_round_trip(self, tmp_path):
        """Test save then load with fractions"""
        m = RatMatrix.from_rows([[1, Fraction(-2, 3)], [0, 5]])
        path = tmp_path / 'm.txt'
        MatrixTextFile.save(m, path)
        assert MatrixTextFile.load(path) == m

    def test_missing_header(self):
        """Test text without header"""
        with pytest.raises(MalformedFileError, match="must start with"):
            MatrixTextFile.parse("1 2\n")

    def test_bad_entries(self):
        """Test invalid entries are malformed"""
        with pytest.raises(MalformedFileError, match="Invalid matrix text"):
            MatrixTextFile.parse("# rows=1 cols=2\n1 x\n")

    def test_missing_dimension(self):
        """Test header without cols"""
        with pytest.raises(MalformedFileError):
            MatrixTextFile.parse("# rows=1\n1\n")
