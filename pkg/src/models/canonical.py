"""Canonical B-matrices, the isomorphism test by matrix equality, and the census"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import List, Optional, Tuple

from ..utils.error_logger import get_logger
from .encoder import AUTO, BMatrix, STRICT, build_b
from .errors import ScaleLimitError
from .group import Group
from .isomorphism import brute_iso, enumerate_groups, identify
from .permutation import Permutation

DEFAULT_MAX_ORDER = 8


@dataclass(frozen=True)
class CanonicalForm:
    """
    Least B-matrix over the identity-fixing orderings of a group

    Attributes:
        matrix: The canonical B-matrix
        ordering: New element i is old element ordering(i)
    """
    matrix: BMatrix
    ordering: Permutation

    @property
    def diagonal_free(self) -> bool:
        return self.matrix.mode == STRICT


Candidate = Tuple[Tuple[int, Tuple[int, ...]], Tuple[int, ...], BMatrix]


def _best_with_prefix(group: Group, first: Optional[int]) -> Optional[Candidate]:
    """Minimum over orderings whose second element is `first` (all orderings if None)"""
    n = group.n
    rest = [x for x in range(2, n + 1) if x != first]
    best: Optional[Candidate] = None
    for tail in permutations(rest):
        images = (1,) + ((first,) if first is not None else ()) + tail
        matrix = build_b(group.relabel(Permutation(images)), AUTO)
        key = matrix.sort_key()
        if best is None or key < best[0]:
            best = (key, images, matrix)
    return best


def canonical_b(group: Group, threads: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> CanonicalForm:
    """
    Lexicographically least B over all element orderings with g_1 first

    Strict (diagonal-free) matrices rank before extended ones; within a
    mode matrices compare row-major. Ties go to the lexicographically
    least ordering.

    Args:
        group: Valid group
        threads: Worker threads, split over the choice of the second element
        max_order: Largest order accepted

    Returns:
        CanonicalForm with the minimizing ordering

    Raises:
        ScaleLimitError: If the order exceeds max_order
    """
    n = group.n
    if n > max_order:
        raise ScaleLimitError(f"Canonical search supports orders up to {max_order}, got {n}")
    if n <= 2:
        best = _best_with_prefix(group, None)
    else:
        prefixes = list(range(2, n + 1))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                candidates = list(pool.map(lambda p: _best_with_prefix(group, p), prefixes))
        else:
            candidates = [_best_with_prefix(group, p) for p in prefixes]
        best = min(candidates, key=lambda c: (c[0], c[1]))
    key, images, matrix = best
    get_logger().log_debug(f"Canonical form of order {n}: mode {matrix.mode}, ordering {images}", 'canonical')
    return CanonicalForm(matrix=matrix, ordering=Permutation(images))


@dataclass(frozen=True)
class IsoComparison:
    """Verdicts of the matrix test and the backtracking oracle"""
    canonical_equal: bool
    isomorphism: Optional[Permutation]

    @property
    def isomorphic(self) -> bool:
        return self.isomorphism is not None

    @property
    def agree(self) -> bool:
        return self.canonical_equal == self.isomorphic


def compare(g: Group, h: Group, threads: int = 1, max_order: int = DEFAULT_MAX_ORDER) -> IsoComparison:
    """
    Decide isomorphism by canonical matrix equality and cross-check with brute_iso

    Raises:
        ScaleLimitError: If either order exceeds max_order
    """
    equal = g.n == h.n and (
        canonical_b(g, threads, max_order).matrix == canonical_b(h, threads, max_order).matrix
    )
    result = IsoComparison(canonical_equal=equal, isomorphism=brute_iso(g, h))
    if not result.agree:
        get_logger().log_warning(
            f"Canonical matrices {'agree' if equal else 'differ'} but groups are "
            f"{'' if result.isomorphic else 'not '}isomorphic",
            'canonical',
        )
    return result


@dataclass
class CensusEntry:
    name: str
    group: Group
    form: CanonicalForm
    class_id: int = 0


@dataclass
class CensusResult:
    """
    Distinct canonical matrices among the groups of one order

    Attributes:
        order: Group order n
        entries: One entry per group, class_id numbering distinct matrices
        matrices: Distinct canonical matrices in order of first appearance
        collisions: Names of non-isomorphic groups sharing a canonical matrix
        extended: Names of groups without a diagonal-free ordering
    """
    order: int
    entries: List[CensusEntry] = field(default_factory=list)
    matrices: List[BMatrix] = field(default_factory=list)
    collisions: List[Tuple[str, str]] = field(default_factory=list)
    extended: List[str] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.matrices)

    @property
    def group_count(self) -> int:
        return len(self.entries)

    @property
    def matches_group_count(self) -> bool:
        return self.count == self.group_count


def census(n: int, exhaustive: bool = False, threads: int = 1,
           max_order: int = DEFAULT_MAX_ORDER) -> CensusResult:
    """
    Count distinct canonical B-matrices over the groups of order n

    Args:
        n: Order in 1..8
        exhaustive: Enumerate groups by table search (orders up to 6)
        threads: Worker threads for each canonical search
        max_order: Largest order for canonical search

    Returns:
        CensusResult; a count different from the number of groups is logged

    Raises:
        UnsupportedOrderError: If n is outside 1..8
    """
    logger = get_logger()
    groups = enumerate_groups(n, exhaustive=exhaustive)
    result = CensusResult(order=n)
    for idx, group in enumerate(groups, start=1):
        name = identify(group) or f"G{n}_{idx}"
        form = canonical_b(group, threads, max_order)
        if form.matrix in result.matrices:
            class_id = result.matrices.index(form.matrix) + 1
            for other in result.entries:
                if other.class_id == class_id:
                    result.collisions.append((other.name, name))
        else:
            result.matrices.append(form.matrix)
            class_id = len(result.matrices)
        if not form.diagonal_free:
            result.extended.append(name)
        result.entries.append(CensusEntry(name=name, group=group, form=form, class_id=class_id))

    logger.log_info(f"Census order {n}: {result.count} matrices for {result.group_count} groups", 'census')
    if not result.matches_group_count:
        logger.log_warning(
            f"Order {n}: {result.count} canonical matrices for {result.group_count} groups; "
            f"shared by {result.collisions}",
            'census',
        )
    return result


def shared_classes(result: CensusResult) -> List[List[str]]:
    """Group names per canonical class, in class order"""
    classes: List[List[str]] = [[] for _ in result.matrices]
    for entry in result.entries:
        classes[entry.class_id - 1].append(entry.name)
    return classes
