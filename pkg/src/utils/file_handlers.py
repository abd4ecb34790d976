"""File handlers for group tables, B-matrices and rational matrices"""
import json
from pathlib import Path
from typing import Union

from ..models.encoder import BMatrix, parse_b, serialize_b
from ..models.errors import GrpMatError, MalformedFileError
from ..models.group import Group, validate
from .rational_matrix import RatMatrix, parse_grid, to_text

PathLike = Union[str, Path]


def parse_group(text: str) -> Group:
    """
    Parse group-file JSON: {"n": ..., "names": [...], "table": [[...], ...]}

    Args:
        text: File content

    Returns:
        Validated Group (names default to g1..gn)

    Raises:
        MalformedFileError: On syntax or shape errors
        InvalidGroupError: If the table violates a group axiom
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedFileError(f"Invalid JSON: {e}")
    if not isinstance(data, dict) or 'n' not in data or 'table' not in data:
        raise MalformedFileError("Group file needs fields 'n' and 'table'")
    n, table, names = data['n'], data['table'], data.get('names')
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise MalformedFileError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(table, list) or len(table) != n or any(
        not isinstance(row, list) or len(row) != n for row in table
    ):
        raise MalformedFileError(f"'table' must be {n} rows of {n} entries")
    if any(isinstance(v, bool) or not isinstance(v, int) for row in table for v in row):
        raise MalformedFileError("'table' entries must be integers")
    if names is not None and (
        not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names)
    ):
        raise MalformedFileError(f"'names' must be a list of {n} strings")
    return validate(table, names)


def serialize_group(group: Group) -> str:
    """Canonical group-file JSON (fields n, names, table)"""
    return json.dumps(
        {'n': group.n, 'names': list(group.names), 'table': [list(row) for row in group.table]},
        indent=None,
    ) + '\n'


class GroupFileLoader:
    """Loads and saves group files"""

    @staticmethod
    def load(file_path: PathLike) -> Group:
        """
        Load a group file

        Raises:
            FileNotFoundError: If file doesn't exist
            GrpMatError: If the content is malformed or not a group
        """
        try:
            text = Path(file_path).read_text(encoding='utf-8')
        except FileNotFoundError:
            raise FileNotFoundError(f"File not found: {file_path}")
        except (OSError, UnicodeDecodeError) as e:
            raise MalformedFileError(f"Error loading group file: {str(e)}")
        return parse_group(text)

    @staticmethod
    def save(group: Group, file_path: PathLike) -> None:
        try:
            Path(file_path).write_text(serialize_group(group), encoding='utf-8')
        except OSError as e:
            raise ValueError(f"Error saving file: {str(e)}")


class BMatrixFile:
    """Loads and saves B-matrix files"""

    @staticmethod
    def load(file_path: PathLike) -> BMatrix:
        """
        Load a B-matrix file

        Raises:
            FileNotFoundError: If file doesn't exist
            MalformedFileError: On syntax errors
            LayoutMismatchError: If the grid disagrees with the declared layout
        """
        try:
            text = Path(file_path).read_text(encoding='utf-8')
        except FileNotFoundError:
            raise FileNotFoundError(f"File not found: {file_path}")
        except (OSError, UnicodeDecodeError) as e:
            raise MalformedFileError(f"Error loading B-matrix file: {str(e)}")
        return parse_b(text)

    @staticmethod
    def save(b: BMatrix, file_path: PathLike) -> None:
        try:
            Path(file_path).write_text(serialize_b(b), encoding='utf-8')
        except OSError as e:
            raise ValueError(f"Error saving file: {str(e)}")


class MatrixTextFile:
    """Rational matrices in the '# rows=r cols=c' text format"""

    @staticmethod
    def parse(text: str) -> RatMatrix:
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines or not lines[0].startswith('#'):
            raise MalformedFileError("Matrix text must start with '# rows=<r> cols=<c>'")
        header = dict(part.partition('=')[::2] for part in lines[0][1:].split())
        try:
            rows, cols = int(header['rows']), int(header['cols'])
            return parse_grid(lines[1:], rows, cols)
        except GrpMatError:
            raise
        except (KeyError, ValueError) as e:
            raise MalformedFileError(f"Invalid matrix text: {e}")

    @staticmethod
    def load(file_path: PathLike) -> RatMatrix:
        try:
            text = Path(file_path).read_text(encoding='utf-8')
        except FileNotFoundError:
            raise FileNotFoundError(f"File not found: {file_path}")
        return MatrixTextFile.parse(text)

    @staticmethod
    def save(matrix: RatMatrix, file_path: PathLike) -> None:
        try:
            Path(file_path).write_text(to_text(matrix), encoding='utf-8')
        except OSError as e:
            raise ValueError(f"Error saving file: {str(e)}")
