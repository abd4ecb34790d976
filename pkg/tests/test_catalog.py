"""Tests for the group catalog"""
import pytest

from src.models.catalog import (
    GROUPS_BY_ORDER, QUATERNION_UNITS, catalog, catalog_names, quaternion_group, quaternion_product,
)
from src.models.errors import UnknownGroupError
from src.models.group import find_violations


class TestCatalog:
    """Test named groups"""

    def test_catalog_names(self):
        """Test the fourteen groups of order at most 8"""
        names = catalog_names()
        assert len(names) == 14
        assert names[:5] == ['Z1', 'Z2', 'Z3', 'Z4', 'V4']
        assert names[-5:] == ['Z8', 'Z2xZ4', 'Z2^3', 'D4', 'Q8']

    @pytest.mark.parametrize('name', catalog_names())
    def test_every_group_is_valid(self, name):
        """Test that each catalog table passes validation"""
        group = catalog(name)
        assert find_violations(group.table) == []
        assert group.names[0] in ('e', '1', '(e,e)', '((e,e),e)')

    def test_groups_per_order(self):
        """Test number of groups per order"""
        counts = [len(GROUPS_BY_ORDER[n]) for n in range(1, 9)]
        assert counts == [1, 1, 1, 2, 1, 2, 1, 5]

    def test_cyclic_power_ordering(self):
        """Test g_k = a^(k-1) in Z4"""
        z4 = catalog('Z4')
        assert z4.table[1][1] == 3
        assert z4.names == ('e', 'a', 'a^2', 'a^3')

    def test_aliases(self):
        """Test alternative names"""
        assert catalog('K4') == catalog('V4')
        assert catalog('Z2xZ2xZ2') == catalog('Z2^3')
        assert catalog(' D3 ') == catalog('S3')

    def test_unknown_name(self):
        """Test that unknown names raise UnknownGroupError"""
        with pytest.raises(UnknownGroupError, match="Unknown group name") as exc_info:
            catalog('A5')
        assert exc_info.value.exit_code == 2

    def test_symmetric_group_ordering(self):
        """Test S3 names and non-commutativity"""
        s3 = catalog('S3')
        assert s3.names == ('e', '(12)', '(13)', '(23)', '(123)', '(132)')
        # (12)(13) = (132) when the right factor acts first
        assert s3.mul(2, 3) == 6
        assert s3.mul(3, 2) == 5

    def test_dihedral_relation(self):
        """Test s r s = r^-1 in D4"""
        d4 = catalog('D4')
        r, s, r3 = 2, 5, 4
        assert d4.mul(d4.mul(s, r), s) == r3
        assert d4.element_orders().count(2) == 5

    def test_quaternion_units(self):
        """Test Hamilton products"""
        i, j, k = QUATERNION_UNITS['i'], QUATERNION_UNITS['j'], QUATERNION_UNITS['k']
        assert quaternion_product(i, j) == k
        assert quaternion_product(j, i) == QUATERNION_UNITS['-k']
        assert quaternion_product(i, i) == QUATERNION_UNITS['-1']

    def test_quaternion_group(self):
        """Test Q8 has a single element of order 2"""
        q8 = catalog('Q8')
        assert q8.names == ('1', '-1', 'i', '-i', 'j', '-j', 'k', '-k')
        assert q8.element_orders().count(2) == 1
        assert not q8.is_abelian()

    def test_quaternion_group_custom_order(self):
        """Test Q8 in another enumeration"""
        q8 = quaternion_group(('1', 'i', '-1', '-i', 'j', '-k', 'k', '-j'))
        assert q8.mul(2, 2) == 3
        assert find_violations(q8.table) == []
