"""
Exact two-rowed Kostka numbers.

K(a_1, ..., a_m) is the multiplicity of V_0 in V_{a_1} x ... x V_{a_m},
i.e. the coefficient of e_0 in M_{a_m} ... M_{a_1}(e_0). It counts the
two-rowed tableaux of shape (n-1, n-1) and content a, and the lines meeting
m general linear subspaces of codimensions a_i + 1 in P^n.

Functions:
- kostka(p) -> int
- kostka_vectors(p) -> Generator: intermediate ring elements of the DP.
- hook_kostka(num_ones, b) -> int
- hook_ratio(n) -> Fraction
- recursion_split(p) -> (merged, decremented)
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Generator, Optional, Tuple

import numpy as np

from schublines.kostka.problem import *
from schublines.kostka.repring import *
from schublines.utils.cache import KostkaCache
from schublines.utils.errors import InvalidProblem, ParityError

logger = logging.getLogger(__name__)

@lru_cache(maxsize=1 << 16)
def _kostka_sorted(conditions: Tuple[int, ...]) -> int:
    if not conditions:
        return 1
    if not is_valid(conditions):
        return 0

    # Largest first keeps the truncated vectors short.
    dtype = dp_dtype(conditions)
    vec = np.zeros(1, dtype=dtype)
    vec[0] = 1
    remaining = sum(conditions)
    for a in conditions:
        remaining -= a
        vec = cg_step(vec, a, cap=remaining)
    return int(vec[0])

def kostka(
    p: ProblemLike,
    cache: Optional[KostkaCache]=None
) -> int:
    """
    Exact Kostka number of a Schubert problem.

    Weights above the sum of the conditions still to be multiplied can
    never return to e_0, so every intermediate vector is truncated there.
    Invalid problems give 0; the empty problem gives 1.

    Parameters:
    - p (ProblemLike): the problem, in any order.
    - cache (KostkaCache, optional): persistent memo consulted first and
    filled on a miss.

    Example:
    kostka((2, 2, 1, 2, 3))
    # 5
    """
    key = tuple(sorted(as_conditions(p), reverse=True))
    if cache is not None:
        value = cache.get(key)
        if value is not None:
            return value

    value = _kostka_sorted(key)
    if cache is not None:
        cache.put(key, value)
    return value

def kostka_vectors(p: ProblemLike) -> Generator[RepRingVector, None, None]:
    """
    Yield the exact ring elements e_0, M_{a_1}(e_0), M_{a_2}M_{a_1}(e_0),
    ... in the listed order of the conditions, without truncation.
    """
    v = RepRingVector.basis(0)
    yield v
    for a in as_conditions(p):
        v = cg_apply(v, a)
        yield v

def hook_kostka(num_ones: int, b: int) -> int:
    """
    Closed form of K(1^k, b): with c = (k + b) / 2,

        K(1^k, b) = k! (b + 1) / ((c - b)! (c + 1)!),

    the number of standard tableaux of shape (c, c - b). A value b = 0 stands
    for the problem (1^k); b > c gives 0.

    Raises:
    - ParityError: If k + b is odd.
    - ValueError: If k or b is negative.

    Example:
    hook_kostka(4, 2)
    # 3
    """
    if num_ones < 0 or b < 0:
        raise ValueError(f"negative argument: k={num_ones}, b={b}")
    if (num_ones + b) % 2:
        raise ParityError(f"odd sum: {num_ones} + {b}")

    c = (num_ones + b) // 2
    if b > c:
        return 0
    return factorial(num_ones) * (b + 1) \
        // (factorial(c - b) * factorial(c + 1))

def hook_ratio(n: int) -> Fraction:
    """
    Exact ratio K(1^{2n-2}, 2) / K(1^{2n-2}), equal to 3(n-1)/(n+1).
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return Fraction(hook_kostka(2 * n - 2, 2), hook_kostka(2 * n - 2, 0))

def recursion_split(
    p: ProblemLike
) -> Tuple[Rearrangement, Rearrangement]:
    """
    Schubert's recursion on the last two listed conditions x, y:

        K(..., x, y) = K(..., x + y) + K(..., x - 1, y - 1),

    zero entries being dropped from the decremented branch. Both branches
    keep the order of the remaining conditions. When `p` is reduced, both
    branches are valid.

    Raises:
    - InvalidProblem: If `p` is invalid or has fewer than two conditions.

    Example:
    merged, decremented = recursion_split(Rearrangement((2, 2, 1, 2, 3)))
    merged.conditions, decremented.conditions
    # ((2, 2, 1, 5), (2, 2, 1, 1, 2))
    """
    if not isinstance(p, Rearrangement):
        p = Rearrangement(as_conditions(p))
    if not is_valid(p):
        raise InvalidProblem(
            f"invalid problem: {list(p)} has an entry larger than "
            f"n - 1 = {n_of(p) - 1}"
        )

    x, y = p.last_pair
    merged = Rearrangement(p.prefix + (x + y,))
    decremented = Rearrangement(
        p.prefix + tuple(a for a in (x - 1, y - 1) if a > 0)
    )
    return merged, decremented
