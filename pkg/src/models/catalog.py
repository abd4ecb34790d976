"""Catalog - named groups of order at most 8 with documented element orderings

Orderings (identity always first):
    Zn      powers of a generator: g_k = a^(k-1)
    V4      Z2 x Z2, lexicographic: (0,0), (0,1), (1,0), (1,1)
    Z2xZ4   lexicographic on (a, b), a in Z2, b in Z4
    Z2^3    lexicographic on (a, b, c)
    S3      e, (12), (13), (23), (123), (132); product p*q applies q first
    D4      e, r, r^2, r^3, s, sr, sr^2, sr^3 with srs = r^-1
    Q8      1, -1, i, -i, j, -j, k, -k
"""
from typing import Dict, List, Tuple

from .errors import UnknownGroupError
from .group import Group, direct_product, from_elements

Quaternion = Tuple[int, int, int, int]


def cyclic_group(n: int) -> Group:
    """Z_n with g_k = a^(k-1)"""
    names = ['e'] + ['a' if k == 1 else f"a^{k}" for k in range(1, n)]
    return from_elements(list(range(n)), lambda x, y: (x + y) % n, names)


def symmetric_group_3() -> Group:
    # image tuples on {1, 2, 3}
    elements = [(1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2), (2, 3, 1), (3, 1, 2)]
    names = ['e', '(12)', '(13)', '(23)', '(123)', '(132)']
    return from_elements(elements, lambda p, q: tuple(p[q[x] - 1] for x in range(3)), names)


def dihedral_group_4() -> Group:
    # (a, b) stands for s^a r^b
    elements = [(0, b) for b in range(4)] + [(1, b) for b in range(4)]
    names = ['e', 'r', 'r^2', 'r^3', 's', 'sr', 'sr^2', 'sr^3']

    def multiply(x, y):
        sign = -1 if y[0] else 1
        return ((x[0] + y[0]) % 2, (sign * x[1] + y[1]) % 4)

    return from_elements(elements, multiply, names)


def quaternion_product(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product on integer quaternions (a + bi + cj + dk)"""
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


QUATERNION_UNITS: Dict[str, Quaternion] = {
    '1': (1, 0, 0, 0), '-1': (-1, 0, 0, 0),
    'i': (0, 1, 0, 0), '-i': (0, -1, 0, 0),
    'j': (0, 0, 1, 0), '-j': (0, 0, -1, 0),
    'k': (0, 0, 0, 1), '-k': (0, 0, 0, -1),
}


def quaternion_group(order: Tuple[str, ...] = ('1', '-1', 'i', '-i', 'j', '-j', 'k', '-k')) -> Group:
    """
    Q8 in a chosen enumeration

    Args:
        order: Names of the eight units, '1' first
    """
    elements = [QUATERNION_UNITS[name] for name in order]
    return from_elements(elements, quaternion_product, list(order))


def _product(*orders: int) -> Group:
    group = cyclic_group(orders[0])
    for n in orders[1:]:
        group = direct_product(group, cyclic_group(n))
    return group


_BUILDERS = {
    **{f"Z{n}": (lambda n=n: cyclic_group(n)) for n in range(1, 9)},
    'V4': lambda: _product(2, 2),
    'S3': symmetric_group_3,
    'D4': dihedral_group_4,
    'Q8': quaternion_group,
    'Z2xZ4': lambda: _product(2, 4),
    'Z2^3': lambda: _product(2, 2, 2),
}

_ALIASES = {
    'Z2xZ2': 'V4',
    'K4': 'V4',
    'Z2xZ2xZ2': 'Z2^3',
    'D3': 'S3',
}

# Groups of each order up to isomorphism, in catalog names
GROUPS_BY_ORDER: Dict[int, List[str]] = {
    1: ['Z1'],
    2: ['Z2'],
    3: ['Z3'],
    4: ['Z4', 'V4'],
    5: ['Z5'],
    6: ['Z6', 'S3'],
    7: ['Z7'],
    8: ['Z8', 'Z2xZ4', 'Z2^3', 'D4', 'Q8'],
}


def catalog_names() -> List[str]:
    """All primary catalog names, ordered by group order"""
    return [name for order in sorted(GROUPS_BY_ORDER) for name in GROUPS_BY_ORDER[order]]


def catalog(name: str) -> Group:
    """
    Look up a named group

    Args:
        name: Catalog name or alias (e.g. 'Z4', 'V4', 'D4', 'Z2xZ4')

    Returns:
        The group in its documented ordering

    Raises:
        UnknownGroupError: If the name is not in the catalog
    """
    key = _ALIASES.get(name.strip(), name.strip())
    if key not in _BUILDERS:
        raise UnknownGroupError(f"Unknown group name: {name!r}. Known: {', '.join(catalog_names())}")
    return _BUILDERS[key]()
