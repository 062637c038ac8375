"""
Certificates that a Schubert problem has at least alternating Galois group.

A certificate is a tree. Each node records the problem, its reduction, the
count of the reduced problem and the clause of Vakil's criterion that
applies:

- base-small-k: the count is at most 2, and a transitive group on at most
two points contains the alternating group;
- both-branches-one: the chosen degeneration has two branches with a single
solution each;
- unequal-branches: the two branches have distinct nonzero counts.

`validate_certificate` re-checks a tree bottom-up from scratch: every count
is recomputed, every split is redone and every clause condition re-tested.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Generator, Optional, Set

from schublines.kostka import \
    SchubertProblem, Rearrangement, \
    is_valid, kostka, recursion_split, reduce
from schublines.utils.errors import CertificateError, InvalidProblem

logger = logging.getLogger(__name__)

class Clause(str, Enum):
    """Clause of Vakil's criterion applied at a certificate node."""
    BASE_SMALL_K = "base-small-k"
    BOTH_BRANCHES_ONE = "both-branches-one"
    UNEQUAL_BRANCHES = "unequal-branches"

JUSTIFICATIONS = {
    Clause.BASE_SMALL_K:
        "transitive group on at most two solutions contains the "
        "alternating group",
    Clause.BOTH_BRANCHES_ONE:
        "both branches have a single solution",
    Clause.UNEQUAL_BRANCHES:
        "branches have distinct nonzero counts and at least alternating "
        "Galois groups",
}

@dataclass(frozen=True)
class AlternatingCertificate:
    """
    Node of a certificate tree.

    Attributes:
    - problem (SchubertProblem): the problem certified at this node.
    - reduced (SchubertProblem): its reduction, the problem actually split.
    - kostka_value (int): K(reduced), equal to K(problem).
    - clause (Clause): the clause of Vakil's criterion used.
    - rearrangement (Rearrangement, optional): `reduced` listed with the
    split pair last; absent for base-small-k leaves.
    - merged_child, decremented_child (AlternatingCertificate, optional):
    certificates of the two branches of Schubert's recursion.
    """
    problem: SchubertProblem
    reduced: SchubertProblem
    kostka_value: int
    clause: Clause
    rearrangement: Optional[Rearrangement]=None
    merged_child: Optional["AlternatingCertificate"]=None
    decremented_child: Optional["AlternatingCertificate"]=None

    @property
    def justification(self) -> str:
        return JUSTIFICATIONS[self.clause]

    @property
    def is_leaf(self) -> bool:
        return self.clause is Clause.BASE_SMALL_K

    @property
    def branch_values(self):
        if self.is_leaf:
            return None
        return self.merged_child.kostka_value, \
            self.decremented_child.kostka_value

    def nodes(self) -> Generator["AlternatingCertificate", None, None]:
        """Pre-order traversal, shared subtrees listed at every occurrence."""
        yield self
        if not self.is_leaf:
            yield from self.merged_child.nodes()
            yield from self.decremented_child.nodes()

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(self.merged_child.depth(),
                       self.decremented_child.depth())

def _fail(node: AlternatingCertificate, reason: str):
    raise CertificateError(f"node {node.problem}: {reason}")

def _validate_node(node: AlternatingCertificate, seen: Set[int]) -> None:
    if id(node) in seen:
        return

    if not is_valid(node.problem) or not node.problem.conditions:
        _fail(node, "problem is not a valid Schubert problem")
    try:
        reduced = reduce(node.problem)
    except InvalidProblem as e:
        _fail(node, str(e))
    if reduced != node.reduced:
        _fail(node, f"reduction is {reduced}, not {node.reduced}")
    value = kostka(reduced)
    if value != node.kostka_value:
        _fail(node, f"count is {value}, not {node.kostka_value}")

    if node.clause is Clause.BASE_SMALL_K:
        if value > 2:
            _fail(node, f"base-small-k with count {value} > 2")
        if node.merged_child is not None \
                or node.decremented_child is not None \
                or node.rearrangement is not None:
            _fail(node, "base-small-k node carries a split")
        seen.add(id(node))
        return

    if node.rearrangement is None \
            or node.merged_child is None \
            or node.decremented_child is None:
        _fail(node, f"{node.clause.value} node without a complete split")
    if node.rearrangement.canonical() != reduced:
        _fail(node, f"rearrangement {node.rearrangement} does not list "
                    f"{reduced}")

    merged, decremented = recursion_split(node.rearrangement)
    if node.merged_child.problem != merged.canonical():
        _fail(node, f"merged branch is {merged.canonical()}, "
                    f"not {node.merged_child.problem}")
    if node.decremented_child.problem != decremented.canonical():
        _fail(node, f"decremented branch is {decremented.canonical()}, "
                    f"not {node.decremented_child.problem}")

    _validate_node(node.merged_child, seen)
    _validate_node(node.decremented_child, seen)
    k1, k2 = node.merged_child.kostka_value, \
        node.decremented_child.kostka_value
    if k1 + k2 != value:
        _fail(node, f"branch counts {k1} + {k2} do not sum to {value}")

    if node.clause is Clause.BOTH_BRANCHES_ONE:
        if (k1, k2) != (1, 1):
            _fail(node, f"both-branches-one with branch counts {k1}, {k2}")
    elif node.clause is Clause.UNEQUAL_BRANCHES:
        if k1 == k2 or k1 == 0 or k2 == 0:
            _fail(node, f"unequal-branches with branch counts {k1}, {k2}")
    else:
        _fail(node, f"unknown clause {node.clause!r}")

    seen.add(id(node))

def validate_certificate(cert: AlternatingCertificate) -> bool:
    """
    Re-check a certificate tree bottom-up, independently of the code that
    produced it.

    Returns:
    bool: True when every node checks out.

    Raises:
    - CertificateError: naming the first node that fails and why.
    """
    _validate_node(cert, set())
    logger.debug("certificate of %s validated", cert.problem)
    return True
