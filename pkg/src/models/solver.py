"""Solver - the structured solutions of XB = BY and their group law

A structured pair built from sigma has Y = P_sigma and X acting as P_sigma
on the cube rows, as the induced pair permutation on the Pair/Diag rows and
as the identity on the last two rows. XB = BY then reduces to: sigma maps
the pair set of every column c onto the pair set of column sigma(c).
Every hit is re-verified by exact multiplication.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from ..utils.error_logger import get_logger
from ..utils.intertwiner import DEFAULT_SIZE_LIMIT, intertwiner_space
from ..utils.rational_matrix import RatMatrix, block_diagonal, pair_perm_matrix, perm_matrix
from .encoder import AUTO, BMatrix, Pair, build_b
from .errors import MixedContextError, NotBijectiveError, NotClosedError
from .group import Group, cayley_embed, validate
from .isomorphism import brute_iso
from .permutation import Permutation


def structured_x(b: BMatrix, sigma: Permutation) -> RatMatrix:
    """X block matrix of sigma over the row layout of B"""
    pairs = [label.as_pair for label in b.layout if label.as_pair is not None]
    blocks = [perm_matrix(sigma)]
    if pairs:
        blocks.append(pair_perm_matrix(sigma, pairs))
    blocks.append(RatMatrix.identity(2))
    return block_diagonal(*blocks)


@dataclass(frozen=True)
class SolutionPair:
    """
    Structured pair (X, Y) with XB = BY

    Attributes:
        sigma: Underlying permutation of 1..n
        x: Square matrix over the rows of B
        y: n x n permutation matrix of sigma
        b: The matrix the pair solves
    """
    sigma: Permutation
    x: RatMatrix = field(compare=False)
    y: RatMatrix = field(compare=False)
    b: BMatrix = field(compare=False, repr=False)

    @classmethod
    def build(cls, b: BMatrix, sigma: Permutation) -> 'SolutionPair':
        return cls(sigma=sigma, x=structured_x(b, sigma), y=perm_matrix(sigma), b=b)

    def solves(self) -> bool:
        """Exact check of X B = B Y"""
        bm = self.b.to_rat()
        return self.x @ bm == bm @ self.y

    def is_identity(self) -> bool:
        return self.sigma.is_identity()


def _check_context(p: SolutionPair, q: SolutionPair):
    if p.b != q.b:
        raise MixedContextError("Solution pairs belong to different B matrices")


def compose(p: SolutionPair, q: SolutionPair) -> SolutionPair:
    """
    (X1 X2, Y1 Y2) with sigma = sigma1 o sigma2

    Raises:
        MixedContextError: If p and q solve different matrices
    """
    _check_context(p, q)
    return SolutionPair(sigma=p.sigma * q.sigma, x=p.x @ q.x, y=p.y @ q.y, b=p.b)


def invert(p: SolutionPair) -> SolutionPair:
    """Inverse pair; X and Y are permutation matrices so the inverses are transposes"""
    return SolutionPair(sigma=p.sigma.inverse(), x=p.x.transpose(), y=p.y.transpose(), b=p.b)


def _column_pair_sets(b: BMatrix) -> List[Set[Pair]]:
    return [set(b.column_pairs(j)) for j in range(1, b.n + 1)]


def satisfies_reduced(b: BMatrix, sigma: Permutation) -> bool:
    """sigma maps each column's pair set onto the pair set of its image column"""
    sets = _column_pair_sets(b)
    for c in range(1, b.n + 1):
        image = {tuple(sorted((sigma(x), sigma(y)))) for x, y in sets[c - 1]}
        if image != sets[sigma(c) - 1]:
            return False
    return True


def _search(b: BMatrix) -> List[Tuple[int, ...]]:
    n = b.n
    sets = _column_pair_sets(b)
    sizes = [len(s) for s in sets]
    images: Dict[int, int] = {}
    used: Set[int] = set()
    found: List[Tuple[int, ...]] = []

    def consistent(c: int) -> bool:
        # every column whose image is known, restricted to pairs fully assigned
        for col, target in images.items():
            for x, y in sets[col - 1]:
                if (c in (x, y, col)) and x in images and y in images:
                    image = tuple(sorted((images[x], images[y])))
                    if image not in sets[target - 1]:
                        return False
        return True

    def extend(c: int):
        if c > n:
            found.append(tuple(images[k] for k in range(1, n + 1)))
            return
        for t in range(1, n + 1):
            if t in used or sizes[t - 1] != sizes[c - 1]:
                continue
            images[c] = t
            used.add(t)
            if consistent(c):
                extend(c + 1)
            del images[c]
            used.discard(t)

    extend(1)
    return found


def structured_solutions(b: BMatrix) -> List[SolutionPair]:
    """
    All sigma whose structured pair solves XB = BY

    Args:
        b: Any well-formed BMatrix

    Returns:
        Solution pairs ordered by sigma(1), then by image sequence
    """
    logger = get_logger()
    candidates = _search(b)
    solutions = []
    for images in sorted(candidates):
        pair = SolutionPair.build(b, Permutation(images))
        if pair.solves():
            solutions.append(pair)
        else:
            logger.log_error(f"Reduced condition accepted {pair.sigma} but XB != BY", 'solver')
    logger.log_debug(f"{len(solutions)} structured solutions for n={b.n} {b.mode}", 'solver')
    return solutions


@dataclass
class SolutionGroup:
    """
    Solution set with its multiplication table

    Attributes:
        elements: Solution pairs, identity first
        table: 1-based table, table[a][b] = index of elements[a] o elements[b]
        labeling: sigma(1) of each element
        group: The table validated as a Group
    """
    elements: List[SolutionPair]
    table: Tuple[Tuple[int, ...], ...]
    labeling: Tuple[int, ...]
    group: Group

    @property
    def order(self) -> int:
        return len(self.elements)


def solution_group(b: BMatrix, solutions: Optional[List[SolutionPair]] = None) -> SolutionGroup:
    """
    Group law of the structured solutions

    Args:
        b: Matrix to solve
        solutions: Precomputed structured_solutions(b)

    Returns:
        SolutionGroup whose table passes group validation

    Raises:
        NotClosedError: If a product of two solutions is not a solution
    """
    elements = solutions if solutions is not None else structured_solutions(b)
    if not elements:
        raise NotClosedError("Solution set is empty")
    index = {p.sigma: i for i, p in enumerate(elements, start=1)}
    if not elements[0].is_identity():
        raise NotClosedError("Solution set does not start with the identity pair")
    table = []
    for p in elements:
        row = []
        for q in elements:
            product = p.sigma * q.sigma
            if product not in index:
                raise NotClosedError(f"{p.sigma} o {q.sigma} = {product} is not a solution")
            row.append(index[product])
        table.append(tuple(row))
    names = [p.sigma.cycle_notation() for p in elements]
    group = validate(table, names)
    return SolutionGroup(
        elements=list(elements),
        table=tuple(table),
        labeling=tuple(p.sigma(1) for p in elements),
        group=group,
    )


@dataclass(frozen=True)
class PsiReport:
    """How the labeling s = sigma(1) relates the solution group to G"""
    bijective: bool
    homomorphism: bool
    anti_homomorphism: bool

    @property
    def direction(self) -> str:
        if self.homomorphism and self.anti_homomorphism:
            return 'both'
        if self.homomorphism:
            return 'homomorphism'
        if self.anti_homomorphism:
            return 'anti-homomorphism'
        return 'neither'


def psi_check(solutions: SolutionGroup, group: Group) -> PsiReport:
    """
    Test whether the labeling is a (anti-)homomorphism onto G

    Raises:
        NotBijectiveError: If the labeling is not a bijection onto 1..n
    """
    labels = solutions.labeling
    if solutions.order != group.n or sorted(labels) != list(range(1, group.n + 1)):
        raise NotBijectiveError(
            f"Labeling {labels} is not a bijection onto 1..{group.n}"
        )
    homo = anti = True
    for a in range(1, solutions.order + 1):
        for b in range(1, solutions.order + 1):
            product = labels[solutions.table[a - 1][b - 1] - 1]
            la, lb = labels[a - 1], labels[b - 1]
            homo = homo and product == group.mul(la, lb)
            anti = anti and product == group.mul(lb, la)
    return PsiReport(bijective=True, homomorphism=homo, anti_homomorphism=anti)


@dataclass
class LinearCrossCheck:
    dimension: int
    structured_count: int
    coordinates: List[Optional[List]] = field(default_factory=list)

    @property
    def all_contained(self) -> bool:
        return all(c is not None for c in self.coordinates)


def cross_check_linear(b: BMatrix, solutions: Optional[List[SolutionPair]] = None,
                       size_limit: int = DEFAULT_SIZE_LIMIT) -> LinearCrossCheck:
    """
    Locate each structured solution in the full intertwiner space

    Raises:
        ScaleLimitError: If the linear system is too large
    """
    solutions = solutions if solutions is not None else structured_solutions(b)
    space = intertwiner_space(b.to_rat(), size_limit)
    coordinates = [space.coordinates(p.x, p.y) for p in solutions]
    report = LinearCrossCheck(space.dimension, len(solutions), coordinates)
    if not report.all_contained:
        get_logger().log_warning("A structured solution lies outside the intertwiner space", 'solver')
    return report


@dataclass(frozen=True)
class TranslationAudit:
    element: int
    name: str
    sigma: Permutation
    solves: bool


def translation_audit(group: Group, b: BMatrix) -> List[TranslationAudit]:
    """Whether the structured pair of each left translation solves XB = BY"""
    return [
        TranslationAudit(s, group.names[s - 1], sigma, SolutionPair.build(b, sigma).solves())
        for s, sigma in enumerate(cayley_embed(group), start=1)
    ]


@dataclass
class VerifyReport:
    """
    End-to-end check that the solutions of B_G rebuild G

    Attributes:
        b: The encoded matrix
        solutions: Structured solutions
        group: Solution group (None if it could not be formed)
        isomorphism: brute_iso(solution group, G)
        psi: Labeling report (None when sizes differ)
        audit: Left-translation audit
        error: Message of a failure raised along the way
    """
    b: BMatrix
    solutions: List[SolutionPair]
    group: Optional[SolutionGroup] = None
    isomorphism: Optional[Permutation] = None
    psi: Optional[PsiReport] = None
    audit: List[TranslationAudit] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def isomorphic(self) -> bool:
        return self.isomorphism is not None

    @property
    def translations_solve(self) -> bool:
        return all(a.solves for a in self.audit)

    @property
    def passed(self) -> bool:
        return (
            len(self.solutions) == self.b.n
            and self.isomorphic
            and self.psi is not None
            and self.translations_solve
        )


def verify_group(group: Group, mode: str = AUTO) -> VerifyReport:
    """
    Build B_G, solve, rebuild the group and compare with G

    Args:
        group: Valid group
        mode: Encoder mode

    Returns:
        VerifyReport; failures are logged as warnings rather than raised
    """
    logger = get_logger()
    b = build_b(group, mode)
    solutions = structured_solutions(b)
    report = VerifyReport(b=b, solutions=solutions, audit=translation_audit(group, b))
    try:
        report.group = solution_group(b, solutions)
        report.isomorphism = brute_iso(report.group.group, group)
        report.psi = psi_check(report.group, group)
    except (NotClosedError, NotBijectiveError) as e:
        report.error = str(e)
    if not report.passed:
        logger.log_warning(
            f"Order {group.n}: {len(solutions)} solutions, isomorphic: {report.isomorphic}"
            + (f" ({report.error})" if report.error else ""),
            'verify',
        )
    return report
