"""Exact rational dense matrices

Entries are fractions.Fraction (always reduced, positive denominator).
Matrix positions are 0-based in this module; group element indices stay
1-based everywhere else.
"""
import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..models.permutation import Permutation

Number = Union[int, Fraction]
Pair = Tuple[int, int]

_ENTRY = re.compile(r'^-?\d+(/\d+)?$')


class RatMatrix:
    """
    Immutable rows x cols matrix over the rationals

    Attributes:
        rows: Number of rows
        cols: Number of columns
    """

    __slots__ = ('rows', 'cols', '_data')

    def __init__(self, rows: int, cols: int, entries: Iterable[Number]):
        data = tuple(Fraction(v) for v in entries)
        if rows < 0 or cols < 0 or len(data) != rows * cols:
            raise ValueError(f"Expected {rows}x{cols} = {rows * cols} entries, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: Optional[int] = None) -> 'RatMatrix':
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("Rows have different lengths")
        return cls(len(rows), cols, (v for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RatMatrix':
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'RatMatrix':
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Sequence[Number]) -> 'RatMatrix':
        return cls(len(values), 1, values)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[Fraction, ...]:
        """Row-major entries"""
        return self._data

    def __getitem__(self, pos: Tuple[int, int]) -> Fraction:
        i, j = pos
        return self._data[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Tuple[Fraction, ...]:
        return self._data[j::self.cols] if self.cols else ()

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"

    def __add__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, (a + b for a, b in zip(self._data, other._data)))

    def __sub__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._same_shape(other)
        return RatMatrix(self.rows, self.cols, (a - b for a, b in zip(self._data, other._data)))

    def scale(self, factor: Number) -> 'RatMatrix':
        return RatMatrix(self.rows, self.cols, (factor * a for a in self._data))

    def __matmul__(self, other: 'RatMatrix') -> 'RatMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        other_cols = [other.col(j) for j in range(other.cols)]
        result = []
        for i in range(self.rows):
            row = self.row(i)
            nonzero = [(k, a) for k, a in enumerate(row) if a]
            for col in other_cols:
                result.append(sum((a * col[k] for k, a in nonzero), Fraction(0)))
        return RatMatrix(self.rows, other.cols, result)

    def transpose(self) -> 'RatMatrix':
        return RatMatrix(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self._data)

    def is_permutation_matrix(self) -> bool:
        if self.rows != self.cols or any(v not in (0, 1) for v in self._data):
            return False
        return all(sum(self.row(i)) == 1 for i in range(self.rows)) and \
            all(sum(self.col(j)) == 1 for j in range(self.cols))

    def vstack(self, other: 'RatMatrix') -> 'RatMatrix':
        if self.cols != other.cols:
            raise ValueError("Column counts differ")
        return RatMatrix(self.rows + other.rows, self.cols, self._data + other._data)

    def hstack(self, other: 'RatMatrix') -> 'RatMatrix':
        if self.rows != other.rows:
            raise ValueError("Row counts differ")
        return RatMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            self.cols + other.cols,
        )

    def select_rows(self, indices: Sequence[int]) -> 'RatMatrix':
        return RatMatrix(len(indices), self.cols, (v for i in indices for v in self.row(i)))

    def _same_shape(self, other: 'RatMatrix'):
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} vs {other.shape}")


def rref(matrix: RatMatrix) -> Tuple[RatMatrix, List[int], int]:
    """
    Reduced row echelon form by Gauss-Jordan elimination

    Pivot is the first nonzero entry in column order; the result is the
    unique RREF regardless of the elimination path.

    Args:
        matrix: Input matrix

    Returns:
        (R, pivot columns, rank)
    """
    m = matrix.to_rows()
    n_rows, n_cols = matrix.shape
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c] != 0:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
        fp = m[piv_r][piv_c]
        if fp != 1:
            m[piv_r] = [v / fp for v in m[piv_r]]
        pivot_row = m[piv_r]
        support = [c for c in range(piv_c, n_cols) if pivot_row[c]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if fr == 0:
                continue
            row = m[r]
            for c in support:
                row[c] -= fr * pivot_row[c]
        pivots.append(piv_c)
        piv_r += 1
    return RatMatrix.from_rows(m, n_cols), pivots, len(pivots)


def rank(matrix: RatMatrix) -> int:
    return rref(matrix)[2]


def kernel(matrix: RatMatrix) -> Tuple[List[Tuple[Fraction, ...]], List[int]]:
    """
    Nullspace basis together with the free columns that index it

    One vector per free column (ascending), with that free variable set to 1
    and the other free variables set to 0. The coordinates of a kernel
    vector in this basis are therefore its entries at the free columns.

    Args:
        matrix: Input matrix

    Returns:
        (basis vectors of length cols, free column indices)
    """
    reduced, pivots, _ = rref(matrix)
    pivot_set = set(pivots)
    free_columns = [c for c in range(matrix.cols) if c not in pivot_set]
    basis = []
    for free in free_columns:
        vector = [Fraction(0)] * matrix.cols
        vector[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r, free]
        basis.append(tuple(vector))
    return basis, free_columns


def nullspace(matrix: RatMatrix) -> List[Tuple[Fraction, ...]]:
    """Basis of {v : Mv = 0}, see kernel() for the normalization"""
    return kernel(matrix)[0]


def solve(matrix: RatMatrix, rhs: Sequence[Number]) -> Optional[Tuple[Fraction, ...]]:
    """
    One solution of Mv = rhs, free variables set to 0

    Args:
        matrix: Coefficient matrix
        rhs: Right-hand side of length rows

    Returns:
        Solution vector, or None if the system is inconsistent
    """
    if len(rhs) != matrix.rows:
        raise ValueError("Right-hand side length differs from row count")
    augmented = matrix.hstack(RatMatrix.column(list(rhs)))
    reduced, pivots, _ = rref(augmented)
    if pivots and pivots[-1] == matrix.cols:
        return None
    solution = [Fraction(0)] * matrix.cols
    for r, p in enumerate(pivots):
        solution[p] = reduced[r, matrix.cols]
    return tuple(solution)


def perm_matrix(sigma: Permutation) -> RatMatrix:
    """Permutation matrix with P e_j = e_sigma(j)"""
    n = sigma.n
    entries = [0] * (n * n)
    for j in range(1, n + 1):
        entries[(sigma(j) - 1) * n + (j - 1)] = 1
    return RatMatrix(n, n, entries)


def pair_perm_matrix(sigma: Permutation, layout: Sequence[Pair]) -> RatMatrix:
    """
    Matrix of the induced action of sigma on unordered pairs

    Args:
        sigma: Permutation of 1..n
        layout: Pairs (i, j) with i <= j indexing rows and columns; the
            layout must be closed under the action

    Returns:
        Permutation matrix with entry [sorted {sigma(i), sigma(j)}][{i, j}] = 1
    """
    position = {tuple(p): idx for idx, p in enumerate(layout)}
    size = len(layout)
    entries = [0] * (size * size)
    for idx, (i, j) in enumerate(layout):
        image = tuple(sorted((sigma(i), sigma(j))))
        if image not in position:
            raise ValueError(f"Pair layout is not closed under {sigma}: {image} missing")
        entries[position[image] * size + idx] = 1
    return RatMatrix(size, size, entries)


def block_diagonal(*blocks: RatMatrix) -> RatMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                grid[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return RatMatrix.from_rows(grid, cols)


def format_entry(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_text(matrix: RatMatrix) -> str:
    """Serialize as '# rows=r cols=c' followed by one line per row"""
    lines = [f"# rows={matrix.rows} cols={matrix.cols}"]
    for i in range(matrix.rows):
        lines.append(' '.join(format_entry(v) for v in matrix.row(i)))
    return '\n'.join(lines) + '\n'


def parse_entry(token: str) -> Fraction:
    if not _ENTRY.match(token):
        raise ValueError(f"Invalid matrix entry: {token!r}")
    return Fraction(token)


def parse_grid(lines: Sequence[str], rows: int, cols: int) -> RatMatrix:
    """Parse exactly `rows` lines of `cols` whitespace-separated rationals"""
    if len(lines) != rows:
        raise ValueError(f"Expected {rows} rows, got {len(lines)}")
    entries: List[Fraction] = []
    for number, line in enumerate(lines, start=1):
        tokens = line.split()
        if len(tokens) != cols:
            raise ValueError(f"Row {number}: expected {cols} entries, got {len(tokens)}")
        entries.extend(parse_entry(t) for t in tokens)
    return RatMatrix(rows, cols, entries)
