"""Error types shared by the group, encoder, solver and cohomology layers"""
from dataclasses import dataclass
from typing import List, Optional, Tuple


class GrpMatError(ValueError):
    """Base class for all domain errors

    Subclasses ValueError so code that catches ValueError (the convention
    used by the file loaders) keeps working.
    """

    exit_code = 1


class MalformedFileError(GrpMatError):
    """Input text does not follow the expected file format"""

    exit_code = 3


class LayoutMismatchError(MalformedFileError):
    """B-matrix entries disagree with the declared row layout"""


@dataclass(frozen=True)
class GroupViolation:
    """
    One failed group axiom

    Attributes:
        kind: IdentityViolated, NotLatinSquare, NotAssociative or NoInverse
        message: Human readable description
        witness: Indices (1-based) demonstrating the failure
    """
    kind: str
    message: str
    witness: Tuple[int, ...] = ()


class InvalidGroupError(GrpMatError):
    """Table fails one or more group axioms"""

    exit_code = 3

    def __init__(self, violations: List[GroupViolation]):
        self.violations = list(violations)
        kinds = sorted({v.kind for v in self.violations})
        super().__init__(f"Invalid group table: {', '.join(kinds)}")

    @property
    def kinds(self) -> List[str]:
        """Violation kinds in report order"""
        return [v.kind for v in self.violations]


class UnknownGroupError(GrpMatError):
    """Catalog has no group with the requested name"""

    exit_code = 2


class UnsupportedOrderError(GrpMatError):
    """Group order outside the supported range"""

    exit_code = 4


class ScaleLimitError(GrpMatError):
    """Computation would exceed a configured size bound"""

    exit_code = 4


class NotDerangedAtOneError(GrpMatError):
    """sigma_2 does not send 1 to 2"""


class DiagonalTermInStrictModeError(GrpMatError):
    """A w_j^2 term occurred while building a strict-mode matrix"""

    def __init__(self, column: int, element: Optional[str] = None):
        self.column = column
        self.element = element
        label = f" (element {element})" if element else ""
        super().__init__(
            f"Diagonal term w_{column}^2 in column {column}{label}; "
            f"use extended or auto mode"
        )


class MixedContextError(GrpMatError):
    """Solution pairs belong to different B matrices"""


class NotClosedError(GrpMatError):
    """Solution set is not closed under composition"""


class NotBijectiveError(GrpMatError):
    """Labeling of the solution group is not a bijection onto G"""
