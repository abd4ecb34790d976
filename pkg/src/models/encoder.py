"""Encoder - builds the 0/1 matrix B_G of a finite group

Column j of B_G records the degree-120 class of the differential of z_j:

    cube block   w_j^3                        -> Cube(j)
    pair block   w_j w_t x2^4 for each term   -> Pair(j, t) or Diag(j)
    last rows    Y-term and x1^15             -> YTerm, X15 (always 1)

The pair terms of column j < n are t = sigma_{j+1}(1) and
t = sigma_{j+1}(i) for every cycle leader i of sigma_2; the last column
uses t = 1 and t = i directly.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..utils.rational_matrix import RatMatrix
from .errors import DiagonalTermInStrictModeError, LayoutMismatchError, MalformedFileError
from .group import Group, cayley_embed
from .permutation import CycleData, cycle_decompose

STRICT = 'strict'
EXTENDED = 'extended'
AUTO = 'auto'
MODES = (STRICT, EXTENDED)

CUBE = 'cube'
PAIR = 'pair'
DIAG = 'diag'
YTERM = 'yterm'
X15 = 'x15'

Pair = Tuple[int, int]


@dataclass(frozen=True, order=True)
class RowLabel:
    """
    Row of B_G: Cube(i), Pair(i, j) with i < j, Diag(i), YTerm or X15

    Attributes:
        kind: One of cube, pair, diag, yterm, x15
        i: First index (0 for yterm/x15)
        j: Second index (pairs only)
    """
    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind == PAIR and not 1 <= self.i < self.j:
            raise ValueError(f"Pair label needs 1 <= i < j, got ({self.i}, {self.j})")
        if self.kind in (CUBE, DIAG) and self.i < 1:
            raise ValueError(f"{self.kind} label needs a positive index")
        if self.kind not in (CUBE, PAIR, DIAG, YTERM, X15):
            raise ValueError(f"Unknown row kind: {self.kind}")

    @classmethod
    def cube(cls, i: int) -> 'RowLabel':
        return cls(CUBE, i)

    @classmethod
    def pair(cls, i: int, j: int) -> 'RowLabel':
        return cls(PAIR, min(i, j), max(i, j))

    @classmethod
    def diag(cls, i: int) -> 'RowLabel':
        return cls(DIAG, i)

    @classmethod
    def yterm(cls) -> 'RowLabel':
        return cls(YTERM)

    @classmethod
    def x15(cls) -> 'RowLabel':
        return cls(X15)

    @classmethod
    def for_pair(cls, a: int, b: int) -> 'RowLabel':
        """Pair or Diag label for the unordered pair {a, b}"""
        return cls.diag(a) if a == b else cls.pair(a, b)

    @property
    def as_pair(self) -> Optional[Pair]:
        """(i, j) for pair rows, (i, i) for diagonal rows"""
        if self.kind == PAIR:
            return self.i, self.j
        if self.kind == DIAG:
            return self.i, self.i
        return None

    def text(self) -> str:
        if self.kind == PAIR:
            return f"pair:{self.i},{self.j}"
        if self.kind in (CUBE, DIAG):
            return f"{self.kind}:{self.i}"
        return self.kind

    @classmethod
    def parse(cls, text: str) -> 'RowLabel':
        kind, _, rest = text.strip().partition(':')
        try:
            if kind in (YTERM, X15) and not rest:
                return cls(kind)
            if kind in (CUBE, DIAG):
                return cls(kind, int(rest))
            if kind == PAIR:
                i, j = (int(v) for v in rest.split(','))
                return cls(PAIR, i, j)
        except ValueError as e:
            raise MalformedFileError(f"Invalid row label {text!r}: {e}")
        raise MalformedFileError(f"Invalid row label {text!r}")

    def __str__(self) -> str:
        return self.text()


def row_count(n: int, mode: str) -> int:
    """(n^2 + n + 4) / 2 strict, (n^2 + 3n + 4) / 2 extended"""
    if mode == STRICT:
        return (n * n + n + 4) // 2
    return (n * n + 3 * n + 4) // 2


def row_layout(n: int, mode: str = STRICT) -> Tuple[RowLabel, ...]:
    """
    Row labels of B_G in order

    Args:
        n: Group order (>= 1)
        mode: strict or extended (extended inserts Diag(1..n) after the pairs)

    Returns:
        Cube(1..n), Pair lexicographic, [Diag(1..n)], YTerm, X15
    """
    if n < 1:
        raise ValueError("Group order must be positive")
    if mode not in MODES:
        raise ValueError(f"Unknown layout mode: {mode}")
    labels = [RowLabel.cube(i) for i in range(1, n + 1)]
    labels += [RowLabel.pair(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if mode == EXTENDED:
        labels += [RowLabel.diag(i) for i in range(1, n + 1)]
    labels += [RowLabel.yterm(), RowLabel.x15()]
    return tuple(labels)


def pair_layout(n: int, mode: str = STRICT) -> List[Pair]:
    """Pair and Diag rows of the layout as index pairs, in row order"""
    return [label.as_pair for label in row_layout(n, mode) if label.as_pair is not None]


def group_cycle_data(group: Group) -> Optional[CycleData]:
    """Cycle data of sigma_2, or None for the trivial group"""
    if group.n < 2:
        return None
    return cycle_decompose(cayley_embed(group)[1])


def pair_terms(group: Group, column: int, cycle_data: Optional[CycleData] = None) -> List[Pair]:
    """
    Index pairs {j, t} of the w_j w_t x2^4 terms of column j

    Args:
        group: Valid group
        column: j in 1..n
        cycle_data: Precomputed cycle data of sigma_2 (optional)

    Returns:
        k + 1 sorted pairs (a, b) with a <= b; a == b marks a w_j^2 term.
        The trivial group has no pair terms.
    """
    n = group.n
    if not 1 <= column <= n:
        raise ValueError(f"Column {column} outside 1..{n}")
    if n == 1:
        return []
    data = cycle_data or group_cycle_data(group)
    if column < n:
        targets = [group.mul(column + 1, p) for p in data.offsets()]
    else:
        targets = list(data.offsets())
    return [tuple(sorted((column, t))) for t in targets]


def _pair_columns(group: Group) -> List[List[Pair]]:
    data = group_cycle_data(group)
    return [pair_terms(group, j, data) for j in range(1, group.n + 1)]


@dataclass(frozen=True)
class BMatrix:
    """
    B_G with its typed row layout

    Attributes:
        n: Group order (number of columns)
        mode: strict or extended
        entries: 0/1 rows aligned with layout
        layout: Row labels (derived from n and mode)
    """
    n: int
    mode: str
    entries: Tuple[Tuple[int, ...], ...]
    layout: Tuple[RowLabel, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"Unknown layout mode: {self.mode}")
        expected = row_layout(self.n, self.mode)
        if self.layout and tuple(self.layout) != expected:
            raise LayoutMismatchError("Row labels do not match the layout for this order and mode")
        object.__setattr__(self, 'layout', expected)
        entries = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, 'entries', entries)
        if len(entries) != len(expected):
            raise LayoutMismatchError(
                f"n={self.n} {self.mode} layout needs {len(expected)} rows, got {len(entries)}"
            )
        if any(len(row) != self.n for row in entries):
            raise LayoutMismatchError(f"Every row must have {self.n} entries")
        if any(v not in (0, 1) for row in entries for v in row):
            raise MalformedFileError("B-matrix entries must be 0 or 1")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.n

    def row_index(self, label: RowLabel) -> int:
        """0-based row position of a label"""
        return self.layout.index(label)

    def entry(self, label: RowLabel, column: int) -> int:
        """Entry at a labeled row and 1-based column"""
        return self.entries[self.row_index(label)][column - 1]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j - 1] for row in self.entries)

    def column_pairs(self, j: int) -> List[Pair]:
        """Pairs (Pair and Diag rows) carrying a one in column j"""
        return [
            label.as_pair for label, row in zip(self.layout, self.entries)
            if label.as_pair is not None and row[j - 1]
        ]

    def pair_rows(self) -> List[int]:
        """0-based positions of Pair and Diag rows"""
        return [idx for idx, label in enumerate(self.layout) if label.as_pair is not None]

    def flat(self) -> Tuple[int, ...]:
        return tuple(v for row in self.entries for v in row)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Strict matrices order before extended ones, then row-major entries"""
        return MODES.index(self.mode), self.flat()

    def to_rat(self) -> RatMatrix:
        return RatMatrix.from_rows(self.entries, self.n)

    def pretty(self) -> str:
        width = max(len(label.text()) for label in self.layout)
        return '\n'.join(
            f"{label.text():<{width}}  {' '.join(str(v) for v in row)}"
            for label, row in zip(self.layout, self.entries)
        )


def assemble(n: int, columns: Sequence[Sequence[Pair]], mode: str) -> BMatrix:
    """Place per-column pair terms into a BMatrix of the given mode"""
    layout = row_layout(n, mode)
    position = {label: idx for idx, label in enumerate(layout)}
    grid = [[0] * n for _ in layout]
    for j in range(1, n + 1):
        grid[position[RowLabel.cube(j)]][j - 1] = 1
        for a, b in columns[j - 1]:
            grid[position[RowLabel.for_pair(a, b)]][j - 1] = 1
    grid[position[RowLabel.yterm()]] = [1] * n
    grid[position[RowLabel.x15()]] = [1] * n
    return BMatrix(n, mode, tuple(tuple(r) for r in grid))


def build_b(group: Group, mode: str = AUTO) -> BMatrix:
    """
    Build B_G

    Args:
        group: Valid group with g_1 the identity
        mode: strict, extended or auto (strict unless a w_j^2 term occurs)

    Returns:
        BMatrix of shape (rows(n, mode), n)

    Raises:
        DiagonalTermInStrictModeError: mode=strict and some column has a w_j^2 term
    """
    if mode not in (STRICT, EXTENDED, AUTO):
        raise ValueError(f"Unknown mode: {mode}")
    columns = _pair_columns(group)
    diagonal = next(
        (j for j, pairs in enumerate(columns, start=1) if any(a == b for a, b in pairs)),
        None,
    )
    if diagonal is not None and mode == STRICT:
        raise DiagonalTermInStrictModeError(diagonal, group.names[diagonal - 1])
    if mode == AUTO:
        mode = EXTENDED if diagonal is not None else STRICT
    return assemble(group.n, columns, mode)


# Serialization

def serialize_b(b: BMatrix) -> str:
    """B-matrix file text: header, one label line per row, then the 0/1 grid"""
    lines = [f"# n={b.n}", f"# mode={b.mode}", f"# rows={b.rows} cols={b.n}"]
    lines += [f"# row {idx}={label.text()}" for idx, label in enumerate(b.layout, start=1)]
    lines += [' '.join(str(v) for v in row) for row in b.entries]
    return '\n'.join(lines) + '\n'


def parse_b(text: str) -> BMatrix:
    """
    Parse B-matrix file text

    Args:
        text: Content written by serialize_b

    Returns:
        BMatrix

    Raises:
        MalformedFileError: Missing or unreadable headers, bad entries
        LayoutMismatchError: Declared shape or row labels disagree with the layout
    """
    headers: Dict[str, str] = {}
    labels: Dict[int, RowLabel] = {}
    grid: List[List[int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            body = line[1:].strip()
            if body.startswith('row '):
                key, sep, value = body[4:].partition('=')
                if not sep or not key.strip().isdigit():
                    raise MalformedFileError(f"Line {number}: invalid row label line")
                labels[int(key)] = RowLabel.parse(value)
            else:
                for part in body.split():
                    key, sep, value = part.partition('=')
                    if not sep:
                        raise MalformedFileError(f"Line {number}: expected key=value, got {part!r}")
                    headers[key] = value
            continue
        try:
            grid.append([int(token) for token in line.split()])
        except ValueError:
            raise MalformedFileError(f"Line {number}: entries must be integers")

    missing = [key for key in ('n', 'mode', 'rows', 'cols') if key not in headers]
    if missing:
        raise MalformedFileError(f"Missing header field(s): {', '.join(missing)}")
    try:
        n, rows, cols = int(headers['n']), int(headers['rows']), int(headers['cols'])
    except ValueError:
        raise MalformedFileError("Header fields n, rows and cols must be integers")
    mode = headers['mode']
    if mode not in MODES or n < 1:
        raise MalformedFileError(f"Invalid header: n={headers['n']} mode={mode}")

    layout = row_layout(n, mode)
    if cols != n or rows != len(layout):
        raise LayoutMismatchError(
            f"n={n} {mode} layout is {len(layout)}x{n}, header declares {rows}x{cols}"
        )
    if len(grid) != rows:
        raise LayoutMismatchError(f"Header declares {rows} rows, found {len(grid)}")
    if labels:
        declared = tuple(labels.get(idx) for idx in range(1, rows + 1))
        if declared != layout:
            raise LayoutMismatchError("Row labels disagree with the layout")
    return BMatrix(n, mode, tuple(tuple(r) for r in grid))


# Discrepancy ledger for the two worked examples

PRINTED_B_Z4 = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0),
    (1, 1, 1, 1), (1, 1, 1, 1),
)

PRINTED_B_V4 = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 1, 0),
    (1, 1, 1, 1), (1, 1, 1, 1),
)

PRINTED_FIXTURES = {'Z4': PRINTED_B_Z4, 'V4': PRINTED_B_V4}


@dataclass(frozen=True)
class CellDelta:
    """One cell where a derived matrix differs from a printed one"""
    label: RowLabel
    column: int
    derived: int
    printed: int


def matrix_delta(derived: BMatrix, printed: Sequence[Sequence[int]]) -> List[CellDelta]:
    """
    Cells where a derived B differs from a printed matrix of the same layout

    Args:
        derived: Matrix from build_b
        printed: Rows of the printed matrix

    Returns:
        Deltas in row-major order (1-based columns)
    """
    if len(printed) != derived.rows or any(len(r) != derived.n for r in printed):
        raise LayoutMismatchError(f"Printed matrix must be {derived.rows}x{derived.n}")
    return [
        CellDelta(label, j, row[j - 1], int(printed_row[j - 1]))
        for label, row, printed_row in zip(derived.layout, derived.entries, printed)
        for j in range(1, derived.n + 1)
        if row[j - 1] != int(printed_row[j - 1])
    ]
