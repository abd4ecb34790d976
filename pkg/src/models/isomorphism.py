"""Isomorphism oracle and enumeration of groups of small order"""
from typing import Dict, Iterator, List, Optional

from ..utils.error_logger import get_logger
from .catalog import GROUPS_BY_ORDER, catalog
from .errors import UnsupportedOrderError
from .group import Group, find_violations
from .permutation import Permutation

MAX_ENUMERATION_ORDER = 8
MAX_EXHAUSTIVE_ORDER = 6


def brute_iso(g: Group, h: Group) -> Optional[Permutation]:
    """
    Search for an isomorphism by backtracking

    Elements of G are assigned images in index order, candidate images tried
    in ascending order. Element orders must match and every product whose
    three indices are already assigned must be respected.

    Args:
        g: Source group
        h: Target group

    Returns:
        phi with phi(a) = image index of g_a, or None if G and H are not isomorphic
    """
    if g.n != h.n:
        return None
    n = g.n
    g_orders = g.element_orders()
    h_orders = h.element_orders()
    if sorted(g_orders) != sorted(h_orders):
        return None

    phi: Dict[int, int] = {1: 1}
    used = {1}

    def consistent(a: int) -> bool:
        for b in phi:
            for x, y in ((a, b), (b, a)):
                product = g.mul(x, y)
                if product in phi and phi[product] != h.mul(phi[x], phi[y]):
                    return False
        return True

    def extend(a: int) -> bool:
        if a > n:
            return True
        for image in range(2, n + 1):
            if image in used or h_orders[image - 1] != g_orders[a - 1]:
                continue
            phi[a] = image
            used.add(image)
            if consistent(a) and extend(a + 1):
                return True
            del phi[a]
            used.discard(image)
        return False

    if not extend(2):
        return None
    return Permutation(tuple(phi[a] for a in range(1, n + 1)))


def is_isomorphic(g: Group, h: Group) -> bool:
    return brute_iso(g, h) is not None


def _reduced_latin_squares(n: int) -> Iterator[List[List[int]]]:
    """Latin squares with first row and column equal to 1..n"""
    grid = [[0] * n for _ in range(n)]
    for k in range(n):
        grid[0][k] = k + 1
        grid[k][0] = k + 1
    cells = [(r, c) for r in range(1, n) for c in range(1, n)]

    def fill(pos: int) -> Iterator[List[List[int]]]:
        if pos == len(cells):
            yield [row[:] for row in grid]
            return
        r, c = cells[pos]
        row_values = set(grid[r][:c])
        col_values = {grid[i][c] for i in range(r)}
        for value in range(1, n + 1):
            if value in row_values or value in col_values:
                continue
            grid[r][c] = value
            yield from fill(pos + 1)
        grid[r][c] = 0

    yield from fill(0)


def exhaustive_groups(n: int) -> List[Group]:
    """
    All groups of order n up to isomorphism, found by searching Cayley tables

    Args:
        n: Order, at most 6

    Returns:
        Pairwise non-isomorphic groups in discovery order

    Raises:
        UnsupportedOrderError: If n is outside 1..6
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise UnsupportedOrderError(f"Exhaustive table search supports orders 1..{MAX_EXHAUSTIVE_ORDER}, got {n}")

    logger = get_logger()
    found: List[Group] = []
    candidates = 0
    for table in _reduced_latin_squares(n):
        candidates += 1
        if find_violations(table):
            continue
        group = Group(n, tuple(tuple(row) for row in table))
        if not any(is_isomorphic(group, known) for known in found):
            found.append(group)
    logger.log_debug(f"Order {n}: {candidates} reduced Latin squares, {len(found)} groups", 'enumerate')
    return found


def enumerate_groups(n: int, exhaustive: bool = False) -> List[Group]:
    """
    Groups of order n up to isomorphism

    Args:
        n: Order in 1..8
        exhaustive: Derive the list by Cayley-table search instead of the
            catalog (orders up to 6 only)

    Returns:
        Pairwise non-isomorphic groups

    Raises:
        UnsupportedOrderError: If n is outside the supported range
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise UnsupportedOrderError(f"Groups are enumerated for orders 1..{MAX_ENUMERATION_ORDER}, got {n}")
    if exhaustive:
        return exhaustive_groups(n)
    return [catalog(name) for name in GROUPS_BY_ORDER[n]]


def identify(group: Group) -> Optional[str]:
    """Catalog name of the group isomorphic to the given one (orders up to 8)"""
    if group.n > MAX_ENUMERATION_ORDER:
        return None
    for name in GROUPS_BY_ORDER[group.n]:
        if is_isomorphic(group, catalog(name)):
            return name
    return None
