"""Tests for the structured solver of XB = BY"""
import pytest

from src.models.catalog import catalog, catalog_names
from src.models.encoder import EXTENDED, STRICT, build_b
from src.models.errors import MixedContextError, NotBijectiveError, NotClosedError
from src.models.group import cayley_embed
from src.models.permutation import Permutation
from src.models.solver import (
    SolutionPair, compose, cross_check_linear, invert, psi_check, satisfies_reduced,
    solution_group, structured_solutions, structured_x, translation_audit, verify_group,
)
from src.models.isomorphism import identify

V4_SOLUTIONS = {
    '()', '(1 2 3 4)', '(1 3)(2 4)', '(1 4 3 2)', '(1 3)', '(2 4)', '(1 2)(3 4)', '(1 4)(2 3)',
}


class TestStructuredSolutions:
    """Test the solution search"""

    def test_cyclic_group_rotations(self, z4):
        """Test Z4 has exactly its four rotations"""
        solutions = structured_solutions(build_b(z4))
        assert [p.sigma.cycle_notation() for p in solutions] == [
            '()', '(1 2 3 4)', '(1 3)(2 4)', '(1 4 3 2)',
        ]

    def test_klein_group_has_eight(self, v4):
        """Test V4 admits a dihedral set of eight solutions"""
        solutions = structured_solutions(build_b(v4))
        assert len(solutions) == 8
        assert {p.sigma.cycle_notation() for p in solutions} == V4_SOLUTIONS
        assert solutions[0].is_identity()

    def test_every_solution_verifies_exactly(self, v4):
        """Test XB = BY by exact multiplication"""
        for pair in structured_solutions(build_b(v4)):
            assert pair.solves()
            assert pair.x.is_permutation_matrix()

    def test_trivial_group(self):
        """Test the order one matrix"""
        solutions = structured_solutions(build_b(catalog('Z1')))
        assert len(solutions) == 1
        assert solutions[0].is_identity()

    def test_extended_layout(self, s3):
        """Test solutions over an extended matrix verify"""
        b = build_b(s3)
        assert b.mode == EXTENDED
        solutions = structured_solutions(b)
        assert solutions[0].is_identity()
        assert all(p.solves() for p in solutions)

    def test_reduced_condition(self, z4):
        """Test the column pair-set condition"""
        b = build_b(z4)
        assert satisfies_reduced(b, Permutation((2, 3, 4, 1)))
        assert not satisfies_reduced(b, Permutation.parse(4, '(2 4)'))

    def test_structured_x_shape(self, z4):
        """Test X is block diagonal over the rows of B"""
        b = build_b(z4)
        x = structured_x(b, Permutation((2, 3, 4, 1)))
        assert x.shape == (12, 12)
        assert x[10, 10] == 1 and x[11, 11] == 1


class TestGroupLaw:
    """Test composition, inversion and the solution group"""

    @pytest.fixture
    def z4_solutions(self, z4):
        return structured_solutions(build_b(z4))

    def test_compose(self, z4_solutions):
        """Test composing two rotations"""
        r = z4_solutions[1]
        rr = compose(r, r)
        assert rr.sigma == Permutation((3, 4, 1, 2))
        assert rr.solves()

    def test_invert(self, z4_solutions):
        """Test inverse pair"""
        r = z4_solutions[1]
        inverse = invert(r)
        assert inverse.solves()
        assert compose(r, inverse).is_identity()

    def test_mixed_context(self, z4_solutions, v4):
        """Test composing pairs of different matrices"""
        other = structured_solutions(build_b(v4))[1]
        with pytest.raises(MixedContextError):
            compose(z4_solutions[1], other)

    def test_solution_group_table(self, z4, z4_solutions):
        """Test the solution group of Z4 is cyclic"""
        group = solution_group(build_b(z4), z4_solutions)
        assert group.order == 4
        assert group.labeling == (1, 2, 3, 4)
        assert 4 in group.group.element_orders()
        assert identify(group.group) == 'Z4'

    def test_klein_solution_group_is_dihedral(self, v4):
        """Test the eight V4 solutions form D4"""
        group = solution_group(build_b(v4))
        assert identify(group.group) == 'D4'

    def test_not_closed(self, z4, z4_solutions):
        """Test an incomplete solution list"""
        with pytest.raises(NotClosedError):
            solution_group(build_b(z4), z4_solutions[:2])
        with pytest.raises(NotClosedError, match="identity"):
            solution_group(build_b(z4), z4_solutions[1:])

    def test_psi_cyclic(self, z4, z4_solutions):
        """Test the labeling of an abelian group works both ways"""
        report = psi_check(solution_group(build_b(z4), z4_solutions), z4)
        assert report.bijective
        assert report.direction == 'both'

    def test_psi_not_bijective(self, v4):
        """Test eight solutions cannot label four elements"""
        with pytest.raises(NotBijectiveError):
            psi_check(solution_group(build_b(v4)), v4)


class TestCrossChecks:
    """Test linear cross-check and the translation audit"""

    def test_linear_cross_check(self, z4):
        """Test rotations lie in the 112-dimensional intertwiner space"""
        report = cross_check_linear(build_b(z4))
        assert report.dimension == 112
        assert report.structured_count == 4
        assert report.all_contained

    def test_translation_audit_cyclic(self, z4):
        """Test every left translation of Z4 solves"""
        audit = translation_audit(z4, build_b(z4))
        assert [a.solves for a in audit] == [True] * 4
        assert audit[1].sigma == cayley_embed(z4)[1]
        assert audit[1].name == 'a'

    def test_translation_audit_klein(self, v4):
        """Test left translations of V4 are among its solutions"""
        assert all(a.solves for a in translation_audit(v4, build_b(v4)))


class TestVerify:
    """Test end-to-end verification"""

    @pytest.mark.parametrize('n', range(1, 9))
    def test_cyclic_groups_pass(self, n):
        """Test Zn is rebuilt from its rotations"""
        report = verify_group(catalog(f"Z{n}"))
        assert len(report.solutions) == n
        assert report.isomorphic
        assert report.passed

    def test_klein_group_fails(self, v4):
        """Test V4 yields a group of order 8"""
        report = verify_group(v4)
        assert len(report.solutions) == 8
        assert not report.isomorphic
        assert report.psi is None
        assert report.translations_solve
        assert 'bijection' in report.error
        assert not report.passed

    def test_solution_pair_equality_uses_sigma(self, z4):
        """Test pairs compare by permutation"""
        b = build_b(z4)
        sigma = Permutation((2, 3, 4, 1))
        assert SolutionPair.build(b, sigma) == SolutionPair.build(b, sigma)


# Measured on the catalog orderings: (solutions, mode, verify passes)
CATALOG_SOLUTIONS = {
    'Z1': (1, STRICT, True),
    'Z2': (2, STRICT, True),
    'Z3': (3, STRICT, True),
    'Z4': (4, STRICT, True),
    'V4': (8, STRICT, False),
    'Z5': (5, STRICT, True),
    'Z6': (6, STRICT, True),
    'S3': (1, EXTENDED, False),
    'Z7': (7, STRICT, True),
    'Z8': (8, STRICT, True),
    'Z2xZ4': (64, STRICT, False),
    'Z2^3': (1152, STRICT, False),
    'D4': (8, STRICT, True),
    'Q8': (1, EXTENDED, False),
}


def _catalog_params():
    return [
        pytest.param(name, marks=pytest.mark.slow) if name == 'Z2^3' else name
        for name in catalog_names()
    ]


class TestCatalogSolutions:
    """Test solution sets of every catalog group"""

    def test_table_covers_catalog(self):
        """Test every catalog group has a recorded count"""
        assert set(CATALOG_SOLUTIONS) == set(catalog_names())

    @pytest.mark.parametrize('name', _catalog_params())
    def test_solution_set_is_a_group(self, name):
        """Test count, mode, identity, exact XB = BY and closure"""
        count, mode, _ = CATALOG_SOLUTIONS[name]
        b = build_b(catalog(name))
        solutions = structured_solutions(b)
        assert b.mode == mode
        assert len(solutions) == count
        assert solutions[0].is_identity()
        assert all(pair.solves() for pair in solutions)
        assert solution_group(b, solutions).order == count

    @pytest.mark.parametrize('name', _catalog_params())
    def test_verify_outcome(self, name):
        """Test which catalog groups are rebuilt from their matrix"""
        count, _, passes = CATALOG_SOLUTIONS[name]
        report = verify_group(catalog(name))
        assert len(report.solutions) == count
        assert report.passed is passes

    @pytest.mark.parametrize('name', ['S3', 'Q8'])
    def test_only_identity_translation_solves(self, name):
        """Test extended matrices reject every non-trivial left translation"""
        group = catalog(name)
        audit = translation_audit(group, build_b(group))
        assert [a.solves for a in audit] == [True] + [False] * (group.n - 1)

    def test_dihedral_group_passes(self):
        """Test D4 is rebuilt with every left translation solving"""
        d4 = catalog('D4')
        report = verify_group(d4)
        assert report.translations_solve
        assert identify(report.group.group) == 'D4'

    @pytest.mark.slow
    def test_large_solution_group_completes(self):
        """Test Z2^3 with 1152 solutions runs through validation"""
        report = verify_group(catalog('Z2^3'))
        assert len(report.solutions) == 1152
        assert report.group is not None
        assert report.group.order == 1152
        assert not report.isomorphic
        assert report.psi is None
        assert 'bijection' in report.error
        assert not report.passed
