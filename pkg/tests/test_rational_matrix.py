"""Tests for exact rational matrices"""
from fractions import Fraction

import pytest

from src.models.permutation import Permutation
from src.utils.rational_matrix import (
    RatMatrix, block_diagonal, kernel, nullspace, pair_perm_matrix, parse_entry, parse_grid,
    perm_matrix, rank, rref, solve, to_text,
)


class TestRatMatrix:
    """Test RatMatrix arithmetic"""

    def test_from_rows(self):
        """Test construction from nested lists"""
        m = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert m.shape == (2, 2)
        assert m[1, 0] == 3
        assert m.row(0) == (1, 2)
        assert m.col(1) == (2, 4)

    def test_wrong_entry_count(self):
        """Test that the entry count must match the shape"""
        with pytest.raises(ValueError, match="Expected 2x2"):
            RatMatrix(2, 2, [1, 2, 3])

    def test_entries_are_fractions(self):
        """Test exact storage"""
        m = RatMatrix(1, 2, [Fraction(2, 4), 3])
        assert m[0, 0] == Fraction(1, 2)
        assert isinstance(m[0, 1], Fraction)

    def test_product(self):
        """Test matrix product"""
        a = RatMatrix.from_rows([[1, 2], [0, 1]])
        b = RatMatrix.from_rows([[1, 0], [3, 1]])
        assert a @ b == RatMatrix.from_rows([[7, 2], [3, 1]])

    def test_product_shape_mismatch(self):
        """Test multiplying incompatible shapes"""
        with pytest.raises(ValueError, match="Cannot multiply"):
            RatMatrix.identity(2) @ RatMatrix.identity(3)

    def test_add_sub_scale(self):
        """Test linear operations"""
        a = RatMatrix.identity(2)
        assert (a + a) == a.scale(2)
        assert (a - a).is_zero()

    def test_transpose_and_stacking(self):
        """Test transpose, vstack and hstack"""
        m = RatMatrix.from_rows([[1, 2, 3]])
        assert m.transpose() == RatMatrix.column([1, 2, 3])
        assert m.vstack(m).shape == (2, 3)
        assert m.hstack(m) == RatMatrix.from_rows([[1, 2, 3, 1, 2, 3]])

    def test_select_rows(self):
        """Test row selection"""
        m = RatMatrix.from_rows([[1], [2], [3]])
        assert m.select_rows([2, 0]) == RatMatrix.from_rows([[3], [1]])

    def test_equality_and_hash(self):
        """Test value semantics"""
        assert RatMatrix.identity(2) == RatMatrix.from_rows([[1, 0], [0, 1]])
        assert len({RatMatrix.identity(2), RatMatrix.from_rows([[1, 0], [0, 1]])}) == 1


class TestElimination:
    """Test RREF, kernels and solving"""

    def test_rref_rank_deficient(self):
        """Test RREF of a rank one matrix"""
        reduced, pivots, r = rref(RatMatrix.from_rows([[1, 2], [2, 4]]))
        assert reduced == RatMatrix.from_rows([[1, 2], [0, 0]])
        assert pivots == [0]
        assert r == 1

    def test_rref_with_fractions(self):
        """Test that pivots are normalized exactly"""
        reduced, pivots, _ = rref(RatMatrix.from_rows([[2, 1], [4, 3]]))
        assert reduced == RatMatrix.identity(2)
        assert pivots == [0, 1]

    def test_rank(self):
        """Test rank of the identity and zero"""
        assert rank(RatMatrix.identity(3)) == 3
        assert rank(RatMatrix.zeros(2, 3)) == 0

    def test_kernel(self):
        """Test kernel basis and its free columns"""
        basis, free = kernel(RatMatrix.from_rows([[1, 2], [2, 4]]))
        assert free == [1]
        assert basis == [(Fraction(-2), Fraction(1))]

    def test_nullspace_vectors_are_annihilated(self):
        """Test that every nullspace vector solves Mv = 0"""
        m = RatMatrix.from_rows([[1, 1, 1, 1], [1, 2, 3, 4]])
        vectors = nullspace(m)
        assert len(vectors) == 2
        for v in vectors:
            assert (m @ RatMatrix.column(list(v))).is_zero()

    def test_solve(self):
        """Test solving a consistent system"""
        m = RatMatrix.from_rows([[1, 1], [1, -1]])
        assert solve(m, [2, 0]) == (1, 1)
        assert solve(RatMatrix.from_rows([[2]]), [1]) == (Fraction(1, 2),)

    def test_solve_inconsistent(self):
        """Test that an inconsistent system returns None"""
        assert solve(RatMatrix.from_rows([[1, 1], [2, 2]]), [1, 3]) is None

    def test_solve_length_mismatch(self):
        """Test right-hand side length check"""
        with pytest.raises(ValueError):
            solve(RatMatrix.identity(2), [1])


class TestPermutationMatrices:
    """Test permutation and pair-permutation matrices"""

    def test_perm_matrix_columns(self):
        """Test P e_j = e_sigma(j)"""
        p = perm_matrix(Permutation((2, 3, 1)))
        assert p == RatMatrix.from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
        assert p.is_permutation_matrix()

    def test_perm_matrix_is_multiplicative(self):
        """Test P(s t) = P(s) P(t)"""
        s = Permutation.parse(4, '(1 2)')
        t = Permutation.parse(4, '(2 3 4)')
        assert perm_matrix(s * t) == perm_matrix(s) @ perm_matrix(t)

    def test_pair_perm_matrix(self):
        """Test the action of (1 2) on pairs of 1..3"""
        layout = [(1, 2), (1, 3), (2, 3)]
        m = pair_perm_matrix(Permutation.parse(3, '(1 2)'), layout)
        assert m == RatMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])

    def test_pair_perm_matrix_with_diagonal(self):
        """Test diagonal pairs are permuted among themselves"""
        layout = [(1, 2), (1, 1), (2, 2)]
        m = pair_perm_matrix(Permutation.parse(2, '(1 2)'), layout)
        assert m == RatMatrix.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])

    def test_pair_layout_must_be_closed(self):
        """Test that a layout missing an image pair is rejected"""
        with pytest.raises(ValueError, match="not closed"):
            pair_perm_matrix(Permutation.parse(3, '(1 2)'), [(1, 3)])

    def test_block_diagonal(self):
        """Test block placement"""
        m = block_diagonal(RatMatrix.identity(1), RatMatrix.from_rows([[1, 2], [3, 4]]))
        assert m == RatMatrix.from_rows([[1, 0, 0], [0, 1, 2], [0, 3, 4]])


class TestTextFormat:
    """Test the rows/cols text format"""

    def test_to_text(self):
        """Test serialization of rationals"""
        m = RatMatrix.from_rows([[1, Fraction(1, 2)], [0, -3]])
        assert to_text(m) == "# rows=2 cols=2\n1 1/2\n0 -3\n"

    def test_parse_grid(self):
        """Test parsing rational entries"""
        m = parse_grid(["1 -1/3", "0 2"], 2, 2)
        assert m[0, 1] == Fraction(-1, 3)

    def test_parse_grid_wrong_width(self):
        """Test row width check"""
        with pytest.raises(ValueError, match="expected 2 entries"):
            parse_grid(["1 2 3"], 1, 2)

    def test_parse_entry_rejects_decimals(self):
        """Test that decimals are not accepted"""
        with pytest.raises(ValueError, match="Invalid matrix entry"):
            parse_entry('1.5')
