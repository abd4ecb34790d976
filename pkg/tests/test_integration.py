"""End-to-end scenarios across encoder, files, solver, canonical forms and cohomology"""
import pytest

from src.models.canonical import canonical_b, compare
from src.models.catalog import catalog
from src.models.cohomology import b_matches_encoder, commutes_with_b
from src.models.encoder import build_b
from src.models.group import cayley_embed
from src.models.isomorphism import brute_iso, identify
from src.models.permutation import Permutation
from src.models.solver import psi_check, solution_group, structured_solutions
from src.utils.file_handlers import BMatrixFile, GroupFileLoader


class TestRecoverGroupFromFiles:
    """Group file -> B-matrix file -> solutions -> group"""

    @pytest.mark.parametrize('name', ['Z2', 'Z3', 'Z4', 'Z5', 'Z6'])
    def test_cyclic_round_trip(self, tmp_path, name):
        """Test cyclic groups are rebuilt through files"""
        group_path = tmp_path / f'{name}.json'
        b_path = tmp_path / f'{name}.b'
        GroupFileLoader.save(catalog(name), group_path)

        group = GroupFileLoader.load(group_path)
        BMatrixFile.save(build_b(group), b_path)
        b = BMatrixFile.load(b_path)

        rebuilt = solution_group(b)
        assert rebuilt.order == group.n
        assert identify(rebuilt.group) == name
        assert brute_iso(rebuilt.group, group) is not None
        assert psi_check(rebuilt, group).bijective


class TestCanonicalPipeline:
    """Relabel -> canonical form -> compare"""

    def test_relabeled_copies_share_canonical_matrix(self, s3):
        """Test canonical matrices ignore the element ordering"""
        shuffled = s3.relabel(Permutation((1, 5, 6, 2, 3, 4)))
        assert canonical_b(s3).matrix == canonical_b(shuffled).matrix
        assert compare(s3, shuffled).agree

    def test_canonical_matrix_is_solvable(self, v4):
        """Test the canonical matrix of V4 still has the identity solution"""
        form = canonical_b(v4)
        solutions = structured_solutions(form.matrix)
        assert solutions[0].is_identity()
        assert all(pair.solves() for pair in solutions)


class TestCohomologyMatchesEncoder:
    """Sullivan model against the combinatorial encoder"""

    @pytest.mark.parametrize('name', ['Z2', 'Z3', 'V4'])
    def test_b_matrix_agrees(self, name):
        """Test the cohomology B restricts to the encoded B"""
        assert b_matches_encoder(catalog(name))

    def test_left_translations_commute(self, z4):
        """Test every left translation of Z4 commutes with B on degree 120"""
        for sigma in cayley_embed(z4):
            assert commutes_with_b(sigma, z4)
