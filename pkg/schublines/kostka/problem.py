"""
Schubert problems of lines.

A Schubert problem is a multiset of positive condition codimensions with
even sum. `SchubertProblem` stores it in canonical, weakly decreasing, order
and is the hashable key used by every cache. `Rearrangement` is the ordered
view: it keeps the order in which the conditions were listed, which matters
for tableau labels and for choosing the pair that Schubert's recursion
degenerates (the last two entries).

Functions:
- n_of(p) -> int: Ambient dimension n = (sum + 2) / 2.
- is_valid(p) -> bool: Every condition is at most n - 1.
- is_reduced(p) -> bool: Valid and the two largest conditions sum to at most
n - 1.
- reduce(p) -> SchubertProblem: Equivalent reduced problem.
"""
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

from schublines.utils.errors import \
    InvalidProblem, NonPositiveCondition, ParityError

def _check_conditions(conditions: Tuple[int, ...]) -> None:
    for a in conditions:
        if isinstance(a, bool) or not isinstance(a, int):
            raise InvalidProblem(
                f"non-integer entry: {a!r} in {list(conditions)}"
            )
        if a < 1:
            raise NonPositiveCondition(
                f"non-positive entry: {a} in {list(conditions)}"
            )
    if sum(conditions) % 2:
        raise ParityError(
            f"odd sum: {list(conditions)} sums to {sum(conditions)}"
        )

@dataclass(frozen=True, order=True)
class SchubertProblem:
    """
    Canonical Schubert problem of lines.

    Attributes:
    - conditions (Tuple[int, ...]): condition codimensions, weakly decreasing.

    Raises:
    - NonPositiveCondition: If an entry is smaller than 1.
    - ParityError: If the entries have an odd sum.

    Example:
    SchubertProblem((2, 2, 1, 2, 3)).conditions
    # (3, 2, 2, 2, 1)
    """
    conditions: Tuple[int, ...]

    def __post_init__(self):
        conditions = tuple(self.conditions)
        _check_conditions(conditions)
        object.__setattr__(
            self, "conditions", tuple(sorted(conditions, reverse=True))
        )

    @classmethod
    def of(cls, *conditions: int) -> "SchubertProblem":
        return cls(tuple(conditions))

    def __len__(self) -> int:
        return len(self.conditions)

    def __iter__(self):
        return iter(self.conditions)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.conditions) + ")"

    @property
    def m(self) -> int:
        return len(self.conditions)

    @property
    def ordered(self) -> Tuple[int, ...]:
        return self.conditions

    def canonical(self) -> "SchubertProblem":
        return self

@dataclass(frozen=True)
class Rearrangement:
    """
    Ordered listing of the conditions of a Schubert problem.

    The last two entries are the pair Schubert's recursion acts on; labels
    of tableaux follow this order (condition `i` is written with label
    `i + 1`).

    Example:
    r = Rearrangement((2, 2, 1, 2, 3))
    r.last_pair
    # (2, 3)
    r.canonical()
    # SchubertProblem(conditions=(3, 2, 2, 2, 1))
    """
    conditions: Tuple[int, ...]

    def __post_init__(self):
        conditions = tuple(self.conditions)
        _check_conditions(conditions)
        object.__setattr__(self, "conditions", conditions)

    @classmethod
    def of(cls, *conditions: int) -> "Rearrangement":
        return cls(tuple(conditions))

    @classmethod
    def with_last_pair(
        cls,
        problem: "ProblemLike",
        pair: Tuple[int, int]
    ) -> "Rearrangement":
        """
        List the conditions of `problem` so that `pair` comes last, the
        remaining conditions keeping their (weakly decreasing) order.

        Raises:
        - InvalidProblem: If `pair` is not a sub-multiset of the conditions.
        """
        rest = list(as_conditions(problem))
        for x in pair:
            if x not in rest:
                raise InvalidProblem(
                    f"pair {tuple(pair)} is not contained in {list(rest)}"
                )
            rest.remove(x)
        return cls(tuple(rest) + tuple(pair))

    def __len__(self) -> int:
        return len(self.conditions)

    def __iter__(self):
        return iter(self.conditions)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.conditions) + ")"

    @property
    def m(self) -> int:
        return len(self.conditions)

    @property
    def ordered(self) -> Tuple[int, ...]:
        return self.conditions

    @property
    def prefix(self) -> Tuple[int, ...]:
        return self.conditions[:-2]

    @property
    def last_pair(self) -> Tuple[int, int]:
        if len(self.conditions) < 2:
            raise InvalidProblem(
                f"a rearrangement needs two conditions, got {list(self)}"
            )
        return self.conditions[-2], self.conditions[-1]

    def canonical(self) -> SchubertProblem:
        return SchubertProblem(self.conditions)

ProblemLike = Union[SchubertProblem, Rearrangement, Iterable[int]]

def as_conditions(p: ProblemLike) -> Tuple[int, ...]:
    """
    Return the ordered conditions of a problem, a rearrangement or a plain
    sequence of integers (checked like a problem).
    """
    if isinstance(p, (SchubertProblem, Rearrangement)):
        return p.ordered
    return Rearrangement(tuple(p)).conditions

def as_problem(p: ProblemLike) -> SchubertProblem:
    """Return the canonical problem of `p`."""
    if isinstance(p, SchubertProblem):
        return p
    if isinstance(p, Rearrangement):
        return p.canonical()
    return SchubertProblem(tuple(p))

def n_of(p: ProblemLike) -> int:
    """
    Ambient dimension n(a) = (a_1 + ... + a_m + 2) / 2 of the problem.

    Example:
    n_of((2, 2, 1, 2, 3))
    # 6
    """
    return (sum(as_conditions(p)) + 2) // 2

def is_valid(p: ProblemLike) -> bool:
    """
    True iff every condition is at most n(a) - 1. The empty problem is
    valid.
    """
    conditions = as_conditions(p)
    if not conditions:
        return True
    return max(conditions) <= n_of(conditions) - 1

def _two_largest(conditions: Tuple[int, ...]) -> Tuple[int, int]:
    top = sorted(conditions, reverse=True)
    return top[0], top[1]

def is_reduced(p: ProblemLike) -> bool:
    """
    True iff the problem is valid and its two largest conditions sum to at
    most n(a) - 1, so that every pair does.
    """
    conditions = as_conditions(p)
    if not is_valid(conditions):
        return False
    if len(conditions) < 2:
        return True
    return sum(_two_largest(conditions)) <= n_of(conditions) - 1

def reduce(p: ProblemLike) -> SchubertProblem:
    """
    Equivalent reduced Schubert problem.

    While at least three conditions remain and the two largest conditions sum
    to more than n - 1, both are decremented; conditions reaching 0 are
    dropped. A valid problem with two conditions, (a, a), has a single
    solution and is returned as is.

    Raises:
    - InvalidProblem: If the problem is not valid.

    Example:
    reduce((2, 2, 2))
    # SchubertProblem(conditions=(1, 1))
    """
    conditions = sorted(as_conditions(p), reverse=True)
    if not is_valid(conditions):
        raise InvalidProblem(
            f"invalid problem: {conditions} has an entry larger than "
            f"n - 1 = {n_of(conditions) - 1}"
        )

    while len(conditions) >= 3 \
            and conditions[0] + conditions[1] > n_of(conditions) - 1:
        conditions[0] -= 1
        conditions[1] -= 1
        conditions = sorted((a for a in conditions if a > 0), reverse=True)

    return SchubertProblem(tuple(conditions))
