"""
Exact checks of the count inequalities that feed the rearrangement lemma.

Functions:
- a2_difference(m) -> int: K(2^m, 4) - K(2^m, 1, 1).
- a2_table(max_m) -> List[A2Row]: the rows m = 0..max_m of that comparison.
- equal_case_check(a, m) -> EqualCaseCheck: K(a^m, 2a) against
K(a^m, a-1, a-1).
"""
from typing import List, NamedTuple

from schublines.kostka import kostka
from schublines.utils.errors import PreconditionViolation

class A2Row(NamedTuple):
    m: int
    merged: int
    decremented: int
    difference: int

class EqualCaseCheck(NamedTuple):
    lhs: int
    rhs: int
    holds: bool

def a2_row(m: int) -> A2Row:
    if m < 0:
        raise PreconditionViolation(f"m must be nonnegative, got {m}")
    merged = kostka((2,) * m + (4,))
    decremented = kostka((2,) * m + (1, 1))
    return A2Row(m, merged, decremented, merged - decremented)

def a2_difference(m: int) -> int:
    """
    K(2^m, 4) - K(2^m, 1, 1), the two branches of Schubert's recursion for
    (2^{m+2}). Negative for m < 14, positive from m = 14 on.

    Example:
    a2_difference(14)
    # 207
    """
    return a2_row(m).difference

def a2_table(max_m: int) -> List[A2Row]:
    return [a2_row(m) for m in range(max_m + 1)]

def equal_case_check(a: int, m: int) -> EqualCaseCheck:
    """
    Compare K(a^m, 2a) and K(a^m, a-1, a-1), the two branches of the
    recursion for (a^{m+2}) degenerating a pair of equal conditions.

    Raises:
    - PreconditionViolation: If a < 3 or m < 2.
    - ParityError: If a * m is odd.

    Example:
    equal_case_check(3, 2)
    # EqualCaseCheck(lhs=1, rhs=3, holds=True)
    """
    if a < 3 or m < 2:
        raise PreconditionViolation(
            f"expected a >= 3 and m >= 2, got a={a}, m={m}"
        )
    lhs = kostka((a,) * m + (2 * a,))
    rhs = kostka((a,) * m + (a - 1, a - 1))
    return EqualCaseCheck(lhs, rhs, lhs < rhs)
