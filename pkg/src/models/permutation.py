"""Permutations of 1..n and the cycle data of sigma_2"""
import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, List, Sequence, Tuple

from .errors import NotDerangedAtOneError


@dataclass(frozen=True)
class Permutation:
    """
    Bijection of 1..n stored as its image sequence

    Composition follows (s * t)(x) = s(t(x)), so perm_matrix(s * t) equals
    perm_matrix(s) @ perm_matrix(t).

    Attributes:
        images: images[k - 1] is the image of k (1-based values)
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, 'images', images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        """
        Build a permutation from disjoint cycles

        Args:
            n: Degree
            cycles: Iterable of cycles, each a sequence of 1-based points

        Returns:
            Permutation fixing every point not mentioned
        """
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for idx, point in enumerate(cycle):
                if point in seen:
                    raise ValueError(f"Point {point} appears in two cycles")
                seen.add(point)
                images[point - 1] = cycle[(idx + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, n: int, text: str) -> 'Permutation':
        """Parse cycle notation such as '(1 2 3 4)(5 6)' or '()'"""
        text = text.strip()
        if text in ('', '()', 'e', 'id'):
            return cls.identity(n)
        groups = re.findall(r'\(([^()]*)\)', text)
        if not groups or re.sub(r'\([^()]*\)', '', text).strip():
            raise ValueError(f"Invalid cycle notation: {text!r}")
        cycles = []
        for body in groups:
            # '(1234)' is accepted for degrees below 10
            tokens = body.replace(',', ' ').split()
            if len(tokens) == 1 and n < 10 and len(tokens[0]) > 1:
                tokens = list(tokens[0])
            cycles.append([int(t) for t in tokens])
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return self.compose(other)

    def compose(self, other: 'Permutation') -> 'Permutation':
        """Return self o other, i.e. apply other first"""
        if other.n != self.n:
            raise ValueError("Cannot compose permutations of different degree")
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    def inverse(self) -> 'Permutation':
        images = [0] * self.n
        for k, image in enumerate(self.images, start=1):
            images[image - 1] = k
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(image == k for k, image in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = True) -> List[Tuple[int, ...]]:
        """
        Disjoint cycles, each starting at its minimum, ordered by minimum

        Args:
            include_fixed: Whether to report fixed points as 1-cycles

        Returns:
            List of cycles as tuples
        """
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if include_fixed or len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycle_notation(self) -> str:
        cycles = self.cycles(include_fixed=False)
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(str(p) for p in c) + ')' for c in cycles)

    def __str__(self) -> str:
        return self.cycle_notation()


@dataclass(frozen=True)
class CycleData:
    """
    Cycle structure of sigma_2 as used by the differential of z_j

    Attributes:
        anchor_cycle: Orbit of 1 in traversal order (1, 2, sigma_2(2), ...)
        leaders: Minimum of every other cycle, ascending (fixed points included)
        cycle_lengths: Length of each remaining cycle, aligned with leaders
    """
    anchor_cycle: Tuple[int, ...]
    leaders: Tuple[int, ...]
    cycle_lengths: Tuple[int, ...] = ()

    @property
    def k(self) -> int:
        """Number of cycles other than the anchor"""
        return len(self.leaders)

    def offsets(self) -> Tuple[int, ...]:
        """Points fed to sigma_{j+1}: 1 followed by the leaders"""
        return (1,) + self.leaders


def cycle_decompose(sigma2: Permutation) -> CycleData:
    """
    Decompose sigma_2 into the anchor cycle through 1 and the leaders of the rest

    Args:
        sigma2: Left translation by g_2

    Returns:
        CycleData with leader = minimal element of each cycle

    Raises:
        NotDerangedAtOneError: If sigma2(1) != 2
    """
    if sigma2.n < 2 or sigma2(1) != 2:
        raise NotDerangedAtOneError(
            f"sigma_2 must send 1 to 2, got {sigma2(1) if sigma2.n else None}"
        )

    cycles = sigma2.cycles(include_fixed=True)
    anchor = next(c for c in cycles if c[0] == 1)
    others = [c for c in cycles if c[0] != 1]
    # cycles() already starts each cycle at its minimum and sorts by it
    return CycleData(
        anchor_cycle=anchor,
        leaders=tuple(c[0] for c in others),
        cycle_lengths=tuple(len(c) for c in others),
    )
