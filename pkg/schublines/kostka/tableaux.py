"""
Two-rowed semistandard Young tableaux.

The tableaux of shape (n-1, n-1) and content (a_1, ..., a_m) are an
independent oracle for the Kostka numbers computed by the Clebsch-Gordan
DP, and the objects on which the injection behind the unequal-conditions
inequality acts.

A tableau is built label by label: label i puts x_i copies in the first
row and a_i - x_i in the second. Writing r1(i), r2(i) for the row lengths
once labels 1..i are placed, columns strictly increase exactly when
r2(i) <= r1(i-1) for every i. Trying x_i from its largest admissible value
down lists the tableaux in lexicographic order of their first row.

Functions:
- iter_tableaux(content) -> Generator[TwoRowTableau]
- enumerate_tableaux(p, cap) -> List[TwoRowTableau]
- iota_injection(t, b, alpha, beta, gamma) -> TwoRowTableau
- witness_tableau(t, b, alpha, beta, gamma) -> TwoRowTableau
- injection_report(b, alpha, beta, gamma) -> InjectionReport
- unequal_instances(max_sum) -> Generator
"""
import logging
from dataclasses import dataclass
from typing import Generator, List, Optional, Sequence, Tuple

from schublines.kostka.kostka import kostka
from schublines.kostka.partitions import partitions
from schublines.kostka.problem import *
from schublines.utils.constants import DEFAULT_TABLEAU_CAP
from schublines.utils.errors import PreconditionViolation, ResourceLimit

logger = logging.getLogger(__name__)

@dataclass
class TableauConfig:
    """
    Tableau Enumeration Configuration Class

    Attributes:
    - tab_cap (int): Largest number of tableaux an enumeration may return
    before it gives up with `ResourceLimit`.

    Example:
    config = TableauConfig(tab_cap=1000)
    enumerate_tableaux((2, 2, 1, 2, 3), cap=config.tab_cap)
    """
    tab_cap: int=DEFAULT_TABLEAU_CAP

    def __post_init__(self):
        self.tab_cap = int(self.tab_cap)
        if self.tab_cap < 1:
            raise ValueError(f"tab_cap must be positive, got {self.tab_cap}")

@dataclass(frozen=True, order=True)
class TwoRowTableau:
    """
    Two-rowed tableau with labels 1..m.

    Attributes:
    - row1 (Tuple[int, ...]): first row, weakly increasing.
    - row2 (Tuple[int, ...]): second row, same length, weakly increasing
    and strictly larger than the entry above.
    """
    row1: Tuple[int, ...]
    row2: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row1", tuple(self.row1))
        object.__setattr__(self, "row2", tuple(self.row2))

    @classmethod
    def parse(cls, text: str) -> "TwoRowTableau":
        """Inverse of `str`: `"1,2/3,4"`."""
        top, bottom = text.split("/")
        return cls(
            tuple(int(x) for x in top.split(",") if x),
            tuple(int(x) for x in bottom.split(",") if x)
        )

    def __str__(self) -> str:
        return ",".join(map(str, self.row1)) + "/" \
            + ",".join(map(str, self.row2))

    @property
    def length(self) -> int:
        return len(self.row1)

    def content(self, m: int) -> Tuple[int, ...]:
        counts = [0] * m
        for label in self.row1 + self.row2:
            if 1 <= label <= m:
                counts[label - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        if len(self.row1) != len(self.row2):
            return False
        for row in (self.row1, self.row2):
            if any(x > y for x, y in zip(row, row[1:])):
                return False
        return all(x < y for x, y in zip(self.row1, self.row2))

    def is_valid_for(self, content: Sequence[int]) -> bool:
        """
        True iff the tableau is semistandard, every label lies in 1..m and
        label i occurs content[i-1] times.
        """
        m = len(content)
        labels = self.row1 + self.row2
        if any(label < 1 or label > m for label in labels):
            return False
        if 2 * len(self.row1) != sum(content):
            return False
        return self.is_semistandard() and self.content(m) == tuple(content)

def iter_tableaux(
    content: Sequence[int]
) -> Generator[TwoRowTableau, None, None]:
    """
    Generate the tableaux of shape (L, L), 2L = sum(content), with the given
    content, in lexicographic order of the first row. Zero entries of
    `content` are allowed: the corresponding label does not occur.
    """
    content = tuple(content)
    total = sum(content)
    if total % 2 or any(a < 0 for a in content):
        return
    length = total // 2
    m = len(content)
    row1: List[int] = []
    row2: List[int] = []

    def fill(i: int, r1: int, r2: int):
        if i == m:
            if r1 == length and r2 == length:
                yield TwoRowTableau(tuple(row1), tuple(row2))
            return

        a = content[i]
        label = i + 1
        high = min(a, length - r1)
        low = max(0, a - (r1 - r2), a - (length - r2))
        for x in range(high, low - 1, -1):
            row1.extend([label] * x)
            row2.extend([label] * (a - x))
            yield from fill(i + 1, r1 + x, r2 + a - x)
            del row1[len(row1) - x:]
            del row2[len(row2) - (a - x):]

    yield from fill(0, 0, 0)

def enumerate_tableaux(
    p: ProblemLike,
    cap: Optional[int]=None
) -> List[TwoRowTableau]:
    """
    All tableaux of shape (n-1, n-1) and content p, labels following the
    listed order of `p`. Invalid problems have none.

    Parameters:
    - p (ProblemLike): the content; a `SchubertProblem` is read in its
    canonical, weakly decreasing, order.
    - cap (int, optional): defaults to `TableauConfig().tab_cap`.

    Raises:
    - ResourceLimit: If more than `cap` tableaux exist.

    Example:
    [str(t) for t in enumerate_tableaux(Rearrangement((1, 1, 1, 1)))]
    # ['1,2/3,4', '1,3/2,4']
    """
    if cap is None:
        cap = TableauConfig().tab_cap
    conditions = as_conditions(p)
    if not is_valid(conditions):
        return []

    tableaux = []
    for t in iter_tableaux(conditions):
        tableaux.append(t)
        if len(tableaux) > cap:
            raise ResourceLimit(
                f"more than {cap} tableaux for {list(conditions)}"
            )
    return tableaux

def _check_unequal_hypotheses(
    b: Sequence[int],
    alpha: int,
    beta: int,
    gamma: int
) -> None:
    if min(alpha, beta, gamma) < 1 or any(x < 1 for x in b):
        raise PreconditionViolation(
            f"non-positive entry in b={list(b)}, "
            f"alpha={alpha}, beta={beta}, gamma={gamma}"
        )
    if not alpha <= beta <= gamma:
        raise PreconditionViolation(
            f"expected alpha <= beta <= gamma, got {alpha}, {beta}, {gamma}"
        )
    if alpha >= gamma:
        raise PreconditionViolation(
            f"expected alpha < gamma, got alpha={alpha}, gamma={gamma}"
        )
    full = tuple(b) + (alpha, beta, gamma)
    if sum(full) % 2 or not is_reduced(full):
        raise PreconditionViolation(
            f"{list(full)} is not a reduced Schubert problem"
        )

def injection_source(b: Sequence[int], alpha: int, beta: int, gamma: int):
    """Content (b..., alpha, beta + gamma) of the injection's domain."""
    return tuple(b) + (alpha, beta + gamma)

def injection_target(b: Sequence[int], alpha: int, beta: int, gamma: int):
    """Content (b..., gamma, beta + alpha) of the injection's codomain."""
    return tuple(b) + (gamma, beta + alpha)

def iota_injection(
    t: TwoRowTableau,
    b: Sequence[int],
    alpha: int,
    beta: int,
    gamma: int
) -> TwoRowTableau:
    """
    Injection K(b..., alpha, beta+gamma) -> K(b..., gamma, beta+alpha).

    With m = len(b), the labels m+1 and m+2 only occupy the ends of the
    rows: a copies of m+1 close the first row, and the second row ends with
    alpha - a copies of m+1 then beta + gamma copies of m+2. The image keeps
    everything else and rewrites that tail of the second row as gamma - a
    copies of m+1 followed by beta + alpha copies of m+2.

    Raises:
    - PreconditionViolation: If the hypotheses alpha <= beta <= gamma,
    alpha < gamma, (b..., alpha, beta, gamma) reduced fail, or `t` is not a
    tableau of the source content.
    """
    _check_unequal_hypotheses(b, alpha, beta, gamma)
    source = injection_source(b, alpha, beta, gamma)
    if not t.is_valid_for(source):
        raise PreconditionViolation(
            f"{t} is not a tableau of content {list(source)}"
        )

    m = len(b)
    a = t.row1.count(m + 1)
    head = tuple(x for x in t.row2 if x <= m)
    row2 = head + (m + 1,) * (gamma - a) + (m + 2,) * (beta + alpha)
    return TwoRowTableau(t.row1, row2)

def witness_tableau(
    t: TwoRowTableau,
    b: Sequence[int],
    alpha: int,
    beta: int,
    gamma: int
) -> TwoRowTableau:
    """
    Tableau of the target content outside the image of the injection.

    `t` is a tableau of content (b..., gamma - alpha - 1, beta - 1); appending
    alpha + 1 columns with m+1 above m+2 gives a target tableau with more
    than alpha copies of m+1 in its first row.

    Raises:
    - PreconditionViolation: On failed hypotheses or a malformed `t`.
    """
    _check_unequal_hypotheses(b, alpha, beta, gamma)
    content = tuple(b) + (gamma - alpha - 1, beta - 1)
    if not t.is_valid_for(content):
        raise PreconditionViolation(
            f"{t} is not a tableau of content {list(content)}"
        )

    m = len(b)
    return TwoRowTableau(
        t.row1 + (m + 1,) * (alpha + 1),
        t.row2 + (m + 2,) * (alpha + 1)
    )

@dataclass(frozen=True)
class InjectionReport:
    """
    Outcome of the exhaustive check of the injection on one instance.
    """
    b: Tuple[int, ...]
    alpha: int
    beta: int
    gamma: int
    source_count: int
    target_count: int
    image_size: int
    injective: bool
    image_in_target: bool
    witness_count: int
    witnesses_outside_image: bool

    @property
    def strict(self) -> bool:
        return self.source_count < self.target_count

    @property
    def holds(self) -> bool:
        return self.injective and self.image_in_target \
            and self.witness_count > 0 and self.witnesses_outside_image \
            and self.strict

def injection_report(
    b: Sequence[int],
    alpha: int,
    beta: int,
    gamma: int
) -> InjectionReport:
    """
    Enumerate both sides of the injection and check injectivity, that the
    image lies in the target, that witnesses exist and avoid the image, and
    that the exact counts are strictly ordered.
    """
    b = tuple(b)
    _check_unequal_hypotheses(b, alpha, beta, gamma)
    source = injection_source(b, alpha, beta, gamma)
    target = injection_target(b, alpha, beta, gamma)

    image = [iota_injection(t, b, alpha, beta, gamma)
             for t in iter_tableaux(source)]
    image_set = set(image)
    target_set = set(iter_tableaux(target))
    witnesses = [witness_tableau(t, b, alpha, beta, gamma)
                 for t in iter_tableaux(b + (gamma - alpha - 1, beta - 1))]

    report = InjectionReport(
        b=b, alpha=alpha, beta=beta, gamma=gamma,
        source_count=kostka(source),
        target_count=kostka(target),
        image_size=len(image_set),
        injective=len(image_set) == len(image),
        image_in_target=image_set <= target_set,
        witness_count=len(witnesses),
        witnesses_outside_image=all(
            w in target_set and w not in image_set for w in witnesses
        )
    )
    logger.debug("injection %s: %s -> %s", b + (alpha, beta, gamma),
                 report.source_count, report.target_count)
    return report

def unequal_instances(
    max_sum: int
) -> Generator[Tuple[Tuple[int, ...], int, int, int], None, None]:
    """
    All (b, alpha, beta, gamma) with b weakly decreasing, alpha <= beta <=
    gamma, alpha < gamma, even total at most `max_sum` and
    (b..., alpha, beta, gamma) reduced.
    """
    for total in range(4, max_sum + 1, 2):
        for gamma in range(2, total):
            for alpha in range(1, gamma):
                for beta in range(alpha, gamma + 1):
                    rest = total - alpha - beta - gamma
                    if rest < 0:
                        continue
                    for b in partitions(rest):
                        if is_reduced(b + (alpha, beta, gamma)):
                            yield b, alpha, beta, gamma

def two_expressions(
    b: Sequence[int],
    alpha: int,
    beta: int,
    gamma: int
) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    The two applications of Schubert's recursion to K(b..., alpha, beta,
    gamma), splitting (beta, gamma) and (beta, alpha):

        K(b, alpha, beta+gamma) + K(b, alpha, beta-1, gamma-1)
        = K(b, gamma, beta+alpha) + K(b, gamma, beta-1, alpha-1).

    Returns the pairs of branch counts, the first pair being the one with
    the smaller merged count when the injection inequality holds.
    """
    b = tuple(b)

    def drop_zeros(conditions):
        return tuple(a for a in conditions if a > 0)

    first = (kostka(b + (alpha, beta + gamma)),
             kostka(drop_zeros(b + (alpha, beta - 1, gamma - 1))))
    second = (kostka(b + (gamma, beta + alpha)),
              kostka(drop_zeros(b + (gamma, beta - 1, alpha - 1))))
    return first, second
