"""Restricted integer partitions, as weakly decreasing tuples."""
from typing import Generator, Optional, Tuple

def partitions(
    total: int,
    max_part: Optional[int]=None
) -> Generator[Tuple[int, ...], None, None]:
    """
    Enumerate the partitions of `total` with every part at most `max_part`,
    in reverse lexicographic order (largest first part first).

    Example:
    list(partitions(4, 2))
    # [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if max_part is None or max_part > total:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest
