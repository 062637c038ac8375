"""
Exhaustive enumeration of the Schubert problems of lines in P^n, and the
per-dimension report of a verification sweep.
"""
from dataclasses import dataclass, field
from typing import Generator, Tuple

from schublines.kostka import SchubertProblem, partitions
from schublines.utils.errors import PreconditionViolation

def enumerate_problems(n: int) -> Generator[SchubertProblem, None, None]:
    """
    All Schubert problems of lines in P^n: the multisets of positive
    integers with sum 2n - 2 and every part at most n - 1, in reverse
    lexicographic order.

    Raises:
    - PreconditionViolation: If n < 2.

    Example:
    [p.conditions for p in enumerate_problems(3)]
    # [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 2:
        raise PreconditionViolation(f"n must be at least 2, got {n}")
    for conditions in partitions(2 * n - 2, n - 1):
        yield SchubertProblem(conditions)

@dataclass(frozen=True)
class SweepReport:
    """
    Outcome of certifying every problem of one ambient dimension.

    Attributes:
    - n (int): the ambient dimension.
    - problems_checked (int): number of problems verified.
    - failures (Tuple[SchubertProblem, ...]): problems left uncertified.
    - elapsed (float): wall time in seconds.
    """
    n: int
    problems_checked: int
    failures: Tuple[SchubertProblem, ...]=field(default_factory=tuple)
    elapsed: float=0.0

    def __post_init__(self):
        object.__setattr__(self, "failures", tuple(self.failures))

    @property
    def all_certified(self) -> bool:
        return not self.failures

    @property
    def certified(self) -> int:
        return self.problems_checked - len(self.failures)

    def same_outcome(self, other: "SweepReport") -> bool:
        """Equality up to the timing field."""
        return (self.n, self.problems_checked, self.failures) \
            == (other.n, other.problems_checked, other.failures)
