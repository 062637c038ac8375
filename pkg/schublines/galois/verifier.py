"""
Recursive verifier of Vakil's criterion over Schubert's recursion.

Every valid problem is first reduced. A reduced problem with a single
solution is a leaf. Otherwise a pair of conditions is degenerated, chosen
so that the two branches of Schubert's recursion either have distinct
nonzero counts or both have one solution, and both branches are certified
in turn. From a reduced problem each branch strictly decreases
(sum of conditions, number of conditions) lexicographically, so the
recursion terminates.
"""
import logging
from collections import Counter
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

from schublines.galois.certificate import AlternatingCertificate, Clause
from schublines.kostka import \
    SchubertProblem, Rearrangement, ProblemLike, \
    as_conditions, as_problem, is_reduced, is_valid, n_of, \
    kostka, recursion_split, reduce
from schublines.utils.cache import KostkaCache
from schublines.utils.errors import InvalidProblem, LemmaFailure

logger = logging.getLogger(__name__)

class DiscriminatingSplit(NamedTuple):
    pair: Tuple[int, int]
    branch_values: Tuple[int, int]
    clause: Clause

def candidate_pairs(p: ProblemLike) -> List[Tuple[int, int]]:
    """
    Distinct unordered pairs (x, y), x <= y, of entries of `p`, largest sum
    first and, among equal sums, largest y first.

    Example:
    candidate_pairs((2, 2, 1, 2, 3))
    # [(2, 3), (1, 3), (2, 2), (1, 2)]
    """
    counts = Counter(as_conditions(p))
    values = sorted(counts)
    pairs = [(x, y) for i, x in enumerate(values) for y in values[i:]
             if x != y or counts[x] >= 2]
    return sorted(pairs, key=lambda xy: (-(xy[0] + xy[1]), -xy[1]))

def find_discriminating_rearrangement(
    p: ProblemLike,
    kostka_fn: Callable[[ProblemLike], int]=kostka
) -> DiscriminatingSplit:
    """
    First pair of `p`, in `candidate_pairs` order, whose degeneration
    satisfies Vakil's criterion.

    Parameters:
    - p (ProblemLike): a reduced problem with at least two conditions.
    - kostka_fn (Callable): the counting function, e.g. a cached one.

    Returns:
    DiscriminatingSplit: the pair, the counts of the merged and the
    decremented branch, and the clause.

    Raises:
    - InvalidProblem: If `p` is not reduced or has fewer than two
    conditions.
    - LemmaFailure: If no pair qualifies.

    Example:
    find_discriminating_rearrangement((1, 1, 1, 1))
    # DiscriminatingSplit(pair=(1, 1), branch_values=(1, 1),
    #                     clause=<Clause.BOTH_BRANCHES_ONE: ...>)
    """
    problem = as_problem(p)
    if len(problem) < 2:
        raise InvalidProblem(
            f"a split needs two conditions, got {problem}"
        )
    if not is_reduced(problem):
        raise InvalidProblem(
            f"not reduced: two largest entries of {problem} exceed "
            f"n - 1 = {n_of(problem) - 1}"
        )

    for pair in candidate_pairs(problem):
        merged, decremented = recursion_split(
            Rearrangement.with_last_pair(problem, pair)
        )
        k1, k2 = kostka_fn(merged), kostka_fn(decremented)
        if k1 == 1 and k2 == 1:
            return DiscriminatingSplit(pair, (k1, k2),
                                       Clause.BOTH_BRANCHES_ONE)
        if k1 != k2 and k1 > 0 and k2 > 0:
            return DiscriminatingSplit(pair, (k1, k2),
                                       Clause.UNEQUAL_BRANCHES)

    raise LemmaFailure(f"no pair of {problem} has a discriminating split")

class Verifier:
    """
    Certificate-producing verifier with a memo of certified problems.

    Parameters:
    - use_memo (bool): Reuse the certificate of a problem met before.
    - cache (KostkaCache, optional): Persistent memo of counts.

    Example:
    verifier = Verifier()
    cert = verifier.verify((2, 2, 1, 2, 3))
    cert.clause, cert.branch_values
    # (<Clause.UNEQUAL_BRANCHES: 'unequal-branches'>, (1, 4))
    """
    def __init__(
        self,
        use_memo: bool=True,
        cache: Optional[KostkaCache]=None
    ):
        self.use_memo = use_memo
        self.cache = cache
        self._memo: Dict[SchubertProblem, AlternatingCertificate] = {}

    def __len__(self) -> int:
        return len(self._memo)

    def clear(self) -> None:
        self._memo.clear()

    def count(self, p: ProblemLike) -> int:
        return kostka(p, cache=self.cache)

    def verify(self, p: ProblemLike) -> AlternatingCertificate:
        """
        Certify that the Galois group of `p` is at least alternating.

        Raises:
        - InvalidProblem: If `p` is empty, malformed or not valid.
        - LemmaFailure: If some reduced problem admits no split.
        """
        problem = as_problem(p)
        if not problem.conditions:
            raise InvalidProblem("empty problem: no condition given")
        if not is_valid(problem):
            raise InvalidProblem(
                f"invalid problem: {problem} has an entry larger than "
                f"n - 1 = {n_of(problem) - 1}"
            )
        return self._certify(problem)

    def _certify(self, problem: SchubertProblem) -> AlternatingCertificate:
        if self.use_memo and problem in self._memo:
            return self._memo[problem]

        reduced = reduce(problem)
        value = self.count(reduced)
        if value <= 1:
            cert = AlternatingCertificate(
                problem, reduced, value, Clause.BASE_SMALL_K
            )
        else:
            split = find_discriminating_rearrangement(
                reduced, kostka_fn=self.count
            )
            rearrangement = Rearrangement.with_last_pair(reduced, split.pair)
            merged, decremented = recursion_split(rearrangement)
            cert = AlternatingCertificate(
                problem, reduced, value, split.clause, rearrangement,
                self._certify(merged.canonical()),
                self._certify(decremented.canonical())
            )
            logger.debug("%s: split %s -> %s (%s)", reduced, split.pair,
                         split.branch_values, split.clause.value)

        if self.use_memo:
            self._memo[problem] = cert
        return cert

_shared_verifier = Verifier()

def verify_at_least_alternating(
    p: ProblemLike,
    memo: bool=True
) -> AlternatingCertificate:
    """
    Certify `p` with the process-wide memoizing verifier, or with a fresh
    verifier without memo when `memo` is False. Both give equal trees.

    Example:
    verify_at_least_alternating((1, 1, 1, 1)).clause.value
    # 'both-branches-one'
    """
    if memo:
        return _shared_verifier.verify(p)
    return Verifier(use_memo=False).verify(p)
