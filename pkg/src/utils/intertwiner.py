"""Linear characterization of {(X, Y) : XB = BY}

Unknowns are vec(X) followed by vec(Y), each stacked column-major, so
XB - BY = 0 becomes (B^T kron I_m) vec(X) - (I_n kron B) vec(Y) = 0.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..models.errors import ScaleLimitError
from .error_logger import get_logger
from .rational_matrix import RatMatrix, kernel

DEFAULT_SIZE_LIMIT = 10000


def vec(matrix: RatMatrix) -> List[Fraction]:
    """Column-major stacking"""
    return [matrix[i, j] for j in range(matrix.cols) for i in range(matrix.rows)]


def unvec(values: Sequence[Fraction], rows: int, cols: int) -> RatMatrix:
    return RatMatrix(rows, cols, (values[j * rows + i] for i in range(rows) for j in range(cols)))


def equation_matrix(b: RatMatrix) -> RatMatrix:
    """
    Coefficients of the m*n scalar equations of XB - BY = 0

    Row j*m + i holds equation (i, j); column k*m + i' is X[i', k] and
    column m^2 + j'*n + l is Y[l, j'].
    """
    m, n = b.shape
    unknowns = m * m + n * n
    entries = [Fraction(0)] * (m * n * unknowns)
    for j in range(n):
        for i in range(m):
            base = (j * m + i) * unknowns
            for k in range(m):
                coeff = b[k, j]
                if coeff:
                    entries[base + k * m + i] += coeff
            for l in range(n):
                coeff = b[i, l]
                if coeff:
                    entries[base + m * m + j * n + l] -= coeff
    return RatMatrix(m * n, unknowns, entries)


@dataclass
class IntertwinerSpace:
    """
    Basis of the pairs (X, Y) with XB = BY

    Attributes:
        b: The matrix B (m x n)
        basis: Basis pairs (X, Y)
        free_columns: Unknown index carrying the coordinate of each basis pair
    """
    b: RatMatrix
    basis: List[Tuple[RatMatrix, RatMatrix]] = field(default_factory=list)
    free_columns: List[int] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, x: RatMatrix, y: RatMatrix) -> Optional[List[Fraction]]:
        """
        Coordinates of (X, Y) in the basis

        Returns:
            Coefficient list, or None when the pair is not in the space
        """
        m, n = self.b.shape
        if x.shape != (m, m) or y.shape != (n, n):
            return None
        values = vec(x) + vec(y)
        coords = [values[c] for c in self.free_columns]
        combined_x = RatMatrix.zeros(m, m)
        combined_y = RatMatrix.zeros(n, n)
        for c, (bx, by) in zip(coords, self.basis):
            if c:
                combined_x = combined_x + bx.scale(c)
                combined_y = combined_y + by.scale(c)
        if combined_x != x or combined_y != y:
            return None
        return coords

    def contains(self, x: RatMatrix, y: RatMatrix) -> bool:
        return self.coordinates(x, y) is not None


def intertwiner_space(b: RatMatrix, size_limit: int = DEFAULT_SIZE_LIMIT) -> IntertwinerSpace:
    """
    Solve XB = BY as a homogeneous linear system

    Args:
        b: m x n matrix
        size_limit: Maximum number of unknowns m^2 + n^2

    Returns:
        IntertwinerSpace whose basis pairs all satisfy XB = BY exactly

    Raises:
        ScaleLimitError: If m^2 + n^2 exceeds size_limit
    """
    m, n = b.shape
    unknowns = m * m + n * n
    if unknowns > size_limit:
        raise ScaleLimitError(f"Intertwiner system has {unknowns} unknowns (limit {size_limit})")

    logger = get_logger()
    logger.log_debug(f"Solving XB = BY for B {m}x{n}: {m * n} equations, {unknowns} unknowns", 'intertwiner')

    vectors, free_columns = kernel(equation_matrix(b))
    basis = [
        (unvec(v[:m * m], m, m), unvec(v[m * m:], n, n))
        for v in vectors
    ]
    logger.log_debug(f"Intertwiner space dimension {len(basis)}", 'intertwiner')
    return IntertwinerSpace(b=b, basis=basis, free_columns=free_columns)
