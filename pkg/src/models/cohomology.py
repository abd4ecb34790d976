"""Degree-120 cohomology slice and the map b(z_j) = [d(z_j)]

Coordinates are taken on the extended row layout (cube, pair, diagonal,
Y-term, x1^15 representatives), which contains every layout build_b can
produce.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..utils.error_logger import get_logger
from ..utils.rational_matrix import RatMatrix, kernel, perm_matrix, rref, solve
from .encoder import CUBE, DIAG, EXTENDED, PAIR, YTERM, BMatrix, RowLabel, build_b, row_layout
from .errors import ScaleLimitError
from .group import Group
from .permutation import Permutation
from .sullivan import (
    DEFAULT_DEGREE_LIMIT, Monomial, Polynomial, cube, d_z, differential,
    monomial_basis, pair_term, substitute_w, to_vector, x1, y_term,
)

DEFAULT_MAX_ORDER = 4


def _check_order(group: Group, max_order: int):
    if group.n > max_order:
        raise ScaleLimitError(f"Cohomology slices are computed for orders up to {max_order}, got {group.n}")


def differential_matrix(source: List[Monomial], target: List[Monomial]) -> RatMatrix:
    """Matrix of d from span(source) to span(target), one column per source monomial"""
    columns = [to_vector(differential(Polynomial.monomial(m)), target) for m in source]
    return RatMatrix(len(target), len(source), (columns[c][r] for r in range(len(target)) for c in range(len(source))))


def sigma_element(label: RowLabel, n: int) -> Polynomial:
    """Representative polynomial of one row label"""
    if label.kind == CUBE:
        return cube(n, label.i)
    if label.kind == PAIR:
        return pair_term(n, label.i, label.j)
    if label.kind == DIAG:
        return pair_term(n, label.i, label.i)
    if label.kind == YTERM:
        return y_term(n)
    return x1(n, 15)


def _columns_matrix(vectors: List[List[Fraction]], rows: int) -> RatMatrix:
    return RatMatrix(rows, len(vectors), (v[r] for r in range(rows) for v in vectors))


@dataclass
class CohomologySlice:
    """
    Chains, cocycles and coboundaries around degree 120

    Attributes:
        n: Number of w generators
        monomial_basis_119, monomial_basis_120, monomial_basis_121: Chain bases
        coboundary_basis: Pivot columns of d on degree 119 (vectors in degree 120)
        cocycle_basis: Kernel of d on degree 120
        quotient_basis: Cocycle basis vectors independent modulo coboundaries
    """
    n: int
    monomial_basis_119: List[Monomial]
    monomial_basis_120: List[Monomial]
    monomial_basis_121: List[Monomial]
    coboundary_basis: List[Tuple[Fraction, ...]] = field(default_factory=list)
    cocycle_basis: List[Tuple[Fraction, ...]] = field(default_factory=list)
    quotient_basis: List[Tuple[Fraction, ...]] = field(default_factory=list)
    degree: int = 120

    @property
    def dimension(self) -> int:
        """dim of the degree-120 cohomology"""
        return len(self.quotient_basis)

    def coboundary_matrix(self) -> RatMatrix:
        return _columns_matrix([list(v) for v in self.coboundary_basis], len(self.monomial_basis_120))

    def vector(self, poly: Polynomial) -> List[Fraction]:
        return to_vector(poly, self.monomial_basis_120)

    def is_cocycle(self, poly: Polynomial) -> bool:
        return differential(poly).is_zero()

    def is_coboundary(self, poly: Polynomial) -> bool:
        if not self.coboundary_basis:
            return poly.is_zero()
        return solve(self.coboundary_matrix(), self.vector(poly)) is not None

    def summary(self) -> Dict[str, int]:
        return {
            'chains_119': len(self.monomial_basis_119),
            'chains_120': len(self.monomial_basis_120),
            'chains_121': len(self.monomial_basis_121),
            'cocycles_120': len(self.cocycle_basis),
            'coboundaries_120': len(self.coboundary_basis),
            'cohomology_120': self.dimension,
        }


def cohomology_slice(n: int, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> CohomologySlice:
    """
    Degree-120 slice for n w generators

    Raises:
        ScaleLimitError: Propagated from monomial_basis
    """
    logger = get_logger()
    basis_119 = monomial_basis(119, n, degree_limit)
    basis_120 = monomial_basis(120, n, degree_limit)
    basis_121 = monomial_basis(121, n, degree_limit)

    d119 = differential_matrix(basis_119, basis_120)
    d120 = differential_matrix(basis_120, basis_121)

    _, cob_pivots, _ = rref(d119)
    coboundaries = [d119.col(c) for c in cob_pivots]
    cocycles, _ = kernel(d120)

    # Cocycles independent modulo the coboundaries: pivots after the coboundary block
    stacked = _columns_matrix([list(v) for v in coboundaries + cocycles], len(basis_120))
    _, pivots, _ = rref(stacked)
    offset = len(coboundaries)
    quotient = [cocycles[p - offset] for p in pivots if p >= offset]

    logger.log_debug(
        f"Slice n={n}: chains {len(basis_119)}/{len(basis_120)}/{len(basis_121)}, "
        f"cocycles {len(cocycles)}, coboundaries {len(coboundaries)}, H^120 {len(quotient)}",
        'cohomology',
    )
    return CohomologySlice(
        n=n,
        monomial_basis_119=basis_119,
        monomial_basis_120=basis_120,
        monomial_basis_121=basis_121,
        coboundary_basis=list(coboundaries),
        cocycle_basis=list(cocycles),
        quotient_basis=list(quotient),
    )


def cohomology_slice_120(group: Group, max_order: int = DEFAULT_MAX_ORDER,
                         degree_limit: int = DEFAULT_DEGREE_LIMIT) -> CohomologySlice:
    """
    Degree-120 slice of the algebra attached to G

    Raises:
        ScaleLimitError: If the group order exceeds max_order
    """
    _check_order(group, max_order)
    return cohomology_slice(group.n, degree_limit)


@dataclass
class SigmaIndependence:
    """
    Whether the row representatives are independent in the degree-120 cohomology

    Attributes:
        independent: True when every representative adds a pivot
        all_cocycles: Every representative is closed
        pivots: Pivot columns of [coboundaries | representatives]
        coboundary_rank: Rank of the coboundary block
        labels: Row labels in coordinate order
    """
    independent: bool
    all_cocycles: bool
    pivots: List[int]
    coboundary_rank: int
    labels: Tuple[RowLabel, ...]


def sigma_independence(group: Group, max_order: int = DEFAULT_MAX_ORDER,
                       slice_: Optional[CohomologySlice] = None) -> SigmaIndependence:
    """
    Rank certificate for the row representatives modulo coboundaries

    Raises:
        ScaleLimitError: If the group order exceeds max_order
    """
    _check_order(group, max_order)
    labels = row_layout(group.n, EXTENDED)
    elements = [sigma_element(label, group.n) for label in labels]
    slice_ = slice_ or cohomology_slice_120(group, max_order)
    coboundaries = [list(v) for v in slice_.coboundary_basis]
    vectors = [slice_.vector(e) for e in elements]
    stacked = _columns_matrix(coboundaries + vectors, len(slice_.monomial_basis_120))
    _, pivots, total = rref(stacked)
    independent = total == len(coboundaries) + len(vectors)
    return SigmaIndependence(
        independent=independent,
        all_cocycles=all(slice_.is_cocycle(e) for e in elements),
        pivots=pivots,
        coboundary_rank=len(coboundaries),
        labels=labels,
    )


def _sigma_coordinates(slice_: CohomologySlice, elements: List[Polynomial],
                       targets: List[Polynomial]) -> List[List[Fraction]]:
    """Coordinates of each target class on the representatives, modulo coboundaries"""
    rows = len(slice_.monomial_basis_120)
    columns = [slice_.vector(e) for e in elements] + [list(v) for v in slice_.coboundary_basis]
    system = _columns_matrix(columns, rows)
    result = []
    for target in targets:
        solution = solve(system, slice_.vector(target))
        if solution is None:
            raise ValueError("Class is not in the span of the row representatives")
        result.append(list(solution[:len(elements)]))
    return result


def b_matrix(group: Group, max_order: int = DEFAULT_MAX_ORDER,
             slice_: Optional[CohomologySlice] = None) -> RatMatrix:
    """
    Matrix of b(z_j) = [d(z_j)] on the extended row layout

    Returns:
        RatMatrix with rows row_layout(n, extended) and n columns

    Raises:
        ScaleLimitError: If the group order exceeds max_order
    """
    _check_order(group, max_order)
    labels = row_layout(group.n, EXTENDED)
    elements = [sigma_element(label, group.n) for label in labels]
    slice_ = slice_ or cohomology_slice_120(group, max_order)
    targets = [d_z(j, group) for j in range(1, group.n + 1)]
    columns = _sigma_coordinates(slice_, elements, targets)
    return _columns_matrix(columns, len(labels))


def restrict(matrix: RatMatrix, labels: Tuple[RowLabel, ...], layout: Tuple[RowLabel, ...],
             square: bool = False) -> RatMatrix:
    """Rows (and for square matrices also columns) of `layout` inside `labels`"""
    position = {label: idx for idx, label in enumerate(labels)}
    rows = [position[label] for label in layout]
    picked = matrix.select_rows(rows)
    if not square:
        return picked
    return picked.transpose().select_rows(rows).transpose()


def b_matches_encoder(group: Group, max_order: int = DEFAULT_MAX_ORDER,
                      slice_: Optional[CohomologySlice] = None) -> bool:
    """b restricted to the encoder layout equals build_b(G, auto) and vanishes elsewhere"""
    full = b_matrix(group, max_order, slice_)
    encoded: BMatrix = build_b(group)
    labels = row_layout(group.n, EXTENDED)
    restricted = restrict(full, labels, encoded.layout)
    outside = [idx for idx, label in enumerate(labels) if label not in encoded.layout]
    return restricted == encoded.to_rat() and all(not any(full.row(i)) for i in outside)


def induced_matrix_120(sigma: Permutation, group: Group) -> RatMatrix:
    """
    Matrix of w_j -> w_sigma(j) on the extended row representatives

    Args:
        sigma: Permutation of 1..n
        group: Group fixing n

    Returns:
        Square matrix, column c holding the coordinates of the image of representative c
    """
    n = group.n
    labels = row_layout(n, EXTENDED)
    elements = [sigma_element(label, n) for label in labels]
    index = {frozenset(e.terms.items()): idx for idx, e in enumerate(elements)}
    size = len(labels)
    entries = [0] * (size * size)
    for c, element in enumerate(elements):
        image = substitute_w(element, sigma.images)
        r = index.get(frozenset(image.terms.items()))
        if r is None:
            raise ValueError(f"Image of {labels[c]} is not a row representative")
        entries[r * size + c] = 1
    return RatMatrix(size, size, entries)


def commutes_with_b(sigma: Permutation, group: Group, b_full: Optional[RatMatrix] = None) -> bool:
    """A_sigma b = b P_sigma on the extended layout"""
    b_full = b_full if b_full is not None else b_matrix(group, max_order=group.n)
    return induced_matrix_120(sigma, group) @ b_full == b_full @ perm_matrix(sigma)
