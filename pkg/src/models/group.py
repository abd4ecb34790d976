"""Group - finite groups given by 1-based Cayley tables with the identity first"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import GroupViolation, InvalidGroupError, MalformedFileError
from .permutation import Permutation


@dataclass(frozen=True)
class Group:
    """
    Finite group g_1..g_n with g_1 the identity

    Attributes:
        n: Group order
        table: table[j-1][k-1] is the index of g_j * g_k (1-based)
        names: Display names, one per element

    Use validate() to build a Group from untrusted data; the constructor
    only checks shapes.
    """
    n: int
    table: Tuple[Tuple[int, ...], ...]
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, 'table', table)
        if not self.names:
            object.__setattr__(self, 'names', default_names(self.n))
        else:
            object.__setattr__(self, 'names', tuple(str(s) for s in self.names))
        if len(table) != self.n or any(len(row) != self.n for row in table):
            raise MalformedFileError(f"Table must be {self.n}x{self.n}")
        if len(self.names) != self.n:
            raise MalformedFileError(f"Expected {self.n} names, got {len(self.names)}")

    def mul(self, a: int, b: int) -> int:
        """Index of g_a * g_b"""
        return self.table[a - 1][b - 1]

    def inverse(self, a: int) -> int:
        return self.table[a - 1].index(1) + 1

    def element_order(self, a: int) -> int:
        order, power = 1, a
        while power != 1:
            power = self.mul(power, a)
            order += 1
        return order

    def element_orders(self) -> List[int]:
        return [self.element_order(a) for a in range(1, self.n + 1)]

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.n) for b in range(a + 1, self.n)
        )

    def relabel(self, ordering: Permutation, names: Optional[Sequence[str]] = None) -> 'Group':
        """
        Re-enumerate the elements

        Args:
            ordering: New element i is old element ordering(i); must fix 1
            names: Optional new names (defaults to the permuted old names)

        Returns:
            Group with the relabeled table
        """
        if ordering.n != self.n or ordering(1) != 1:
            raise ValueError("Ordering must be a permutation of 1..n fixing 1")
        position = ordering.inverse()
        table = tuple(
            tuple(position(self.mul(ordering(i), ordering(k))) for k in range(1, self.n + 1))
            for i in range(1, self.n + 1)
        )
        if names is None:
            names = tuple(self.names[ordering(i) - 1] for i in range(1, self.n + 1))
        return Group(self.n, table, tuple(names))


def default_names(n: int) -> Tuple[str, ...]:
    return tuple(f"g{i}" for i in range(1, n + 1))


def _check_shape(table: Sequence[Sequence[int]]) -> np.ndarray:
    n = len(table)
    if n == 0:
        raise MalformedFileError("Table is empty")
    if any(len(row) != n for row in table):
        raise MalformedFileError(f"Table must be square ({n}x{n})")
    arr = np.asarray(table, dtype=np.int64)
    if arr.min() < 1 or arr.max() > n:
        raise MalformedFileError(f"Table entries must lie in 1..{n}")
    return arr - 1


def find_violations(table: Sequence[Sequence[int]]) -> List[GroupViolation]:
    """
    Check the four group axioms on a 1-based table

    Args:
        table: n x n table with entries in 1..n

    Returns:
        Every violated axiom with a witness (empty list for a valid group)

    Raises:
        MalformedFileError: If the table is not square or entries are out of range
    """
    t = _check_shape(table)
    n = t.shape[0]
    expected = np.arange(n)
    violations: List[GroupViolation] = []

    # Identity: first row and first column are the identity map
    bad_row = np.nonzero(t[0] != expected)[0]
    bad_col = np.nonzero(t[:, 0] != expected)[0]
    if bad_row.size or bad_col.size:
        if bad_row.size:
            k = int(bad_row[0]) + 1
            witness, where = (1, k), f"table[1][{k}] = {t[0, k - 1] + 1}"
        else:
            k = int(bad_col[0]) + 1
            witness, where = (k, 1), f"table[{k}][1] = {t[k - 1, 0] + 1}"
        violations.append(GroupViolation('IdentityViolated', f"g1 is not the identity: {where}", witness))

    latin = _latin_violation(t)
    if latin:
        violations.append(latin)

    # Associativity, one left factor at a time: (ab)c = t[t[a]][b, c], a(bc) = t[a][t][b, c]
    failing = 0
    first: Optional[Tuple[int, int, int]] = None
    for a in range(n):
        mismatches = np.argwhere(t[t[a]] != t[a][t])
        if mismatches.size:
            failing += len(mismatches)
            if first is None:
                b, c = (int(v) + 1 for v in mismatches[0])
                first = (a + 1, b, c)
    if first is not None:
        a, b, c = first
        violations.append(GroupViolation(
            'NotAssociative',
            f"(g{a}g{b})g{c} != g{a}(g{b}g{c}) ({failing} failing triples)",
            first,
        ))

    has_inverse = (t == 0).any(axis=1)
    if not has_inverse.all():
        a = int(np.nonzero(~has_inverse)[0][0]) + 1
        violations.append(GroupViolation('NoInverse', f"g{a} has no right inverse", (a,)))

    return violations


def _latin_violation(t: np.ndarray) -> Optional[GroupViolation]:
    n = t.shape[0]
    for axis, label in ((1, 'row'), (0, 'column')):
        lines = t if axis == 1 else t.T
        for idx, line in enumerate(lines, start=1):
            seen: Dict[int, int] = {}
            for pos, value in enumerate(line, start=1):
                if int(value) in seen:
                    first = seen[int(value)]
                    if label == 'row':
                        witness = (idx, first, pos)
                    else:
                        witness = (first, pos, idx)
                    return GroupViolation(
                        'NotLatinSquare',
                        f"{label} {idx} repeats g{int(value) + 1} at positions {first} and {pos}",
                        witness,
                    )
                seen[int(value)] = pos
    return None


def validate(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None) -> Group:
    """
    Build a Group after checking every axiom

    Args:
        table: 1-based n x n Cayley table
        names: Optional element names

    Returns:
        Validated Group

    Raises:
        InvalidGroupError: Carrying the complete violation list
        MalformedFileError: If shape or entry range is wrong
    """
    violations = find_violations(table)
    if violations:
        raise InvalidGroupError(violations)
    return Group(len(table), tuple(tuple(row) for row in table), tuple(names or ()))


def from_elements(elements: Sequence[Hashable], multiply: Callable, names: Optional[Sequence[str]] = None) -> Group:
    """
    Tabulate a group given concrete elements

    Args:
        elements: Elements in the desired order, identity first
        multiply: Binary operation on elements
        names: Optional display names

    Returns:
        Validated Group
    """
    index = {e: i for i, e in enumerate(elements, start=1)}
    table = [[index[multiply(a, b)] for b in elements] for a in elements]
    return validate(table, names)


def direct_product(g: Group, h: Group) -> Group:
    """G x H with elements ordered lexicographically on (g, h)"""
    elements = [(a, b) for a in range(1, g.n + 1) for b in range(1, h.n + 1)]
    names = [f"({g.names[a - 1]},{h.names[b - 1]})" for a, b in elements]
    return from_elements(
        elements,
        lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])),
        names,
    )


def cayley_embed(group: Group) -> List[Permutation]:
    """
    Left-regular representation

    Returns:
        [sigma_1, ..., sigma_n] with sigma_j(k) = index of g_j * g_k
    """
    return [Permutation(row) for row in group.table]
