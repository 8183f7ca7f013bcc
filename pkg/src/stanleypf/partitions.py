"""Integer partitions and their hook / odd-part statistics.

A partition of n is a nonincreasing sequence of positive parts summing to
n; the empty partition is the unique partition of 0. Everything downstream
rests on two statistics of a partition and its conjugate: the odd-part
counts O(lambda) and O(lambda'), and the number of cells of the Young
diagram whose hook length is even.

Row and column indices are 1-based throughout, matching the usual (i, j)
cell convention for Young diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A partition as a tuple of nonincreasing positive parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        t = tuple(parts)
        prev = None
        for p in t:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be nonincreasing, got {t}")
            prev = p
        return tuple.__new__(cls, t)

    @classmethod
    def _wrap(cls, parts: tuple[int, ...]) -> "Partition":
        # fast path for parts already known to be valid
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        """The number being partitioned."""
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


@dataclass(frozen=True)
class PartitionStats:
    """Per-partition record of the statistics studied here.

    is_t_type is True when O(lambda) == O(lambda') mod 4; the complementary
    partitions (difference 2 mod 4) are called u-type.
    """

    odd_parts: int
    odd_parts_conjugate: int
    even_hooks: int
    is_t_type: bool


def _parts_stream(n: int) -> Iterator[list[int]]:
    # Yields a LIVE list in decreasing lexicographic order; each yielded
    # value must be consumed before the generator is advanced. Hot loops
    # (millions of partitions at n ~ 60) use this directly to avoid one
    # tuple allocation per partition.
    if n == 0:
        yield []
        return
    parts = [n]
    yield parts
    while True:
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        # decrement the rightmost part > 1, then redistribute the freed
        # weight greedily under the new cap
        rem = len(parts) - i
        parts[i] -= 1
        del parts[i + 1 :]
        cap = parts[i]
        while rem >= cap:
            parts.append(cap)
            rem -= cap
        if rem:
            parts.append(rem)
        yield parts


def partitions_of(n: int) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in decreasing lex order.

    The stream never materializes all p(n) partitions at once.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer {n}")
    for parts in _parts_stream(n):
        yield Partition._wrap(tuple(parts))


def _conjugate_parts(parts: Sequence[int]) -> tuple[int, ...]:
    if not parts:
        return ()
    out = []
    rows = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[rows - 1] < j:
            rows -= 1
        out.append(rows)
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    """The conjugate partition: column lengths of the Young diagram."""
    return Partition._wrap(_conjugate_parts(lam))


def odd_parts_count(lam: Sequence[int]) -> int:
    """O(lambda), the number of odd parts."""
    return sum(1 for p in lam if p & 1)


def hook_length(lam: Sequence[int], i: int, j: int) -> int:
    """Hook length of cell (i, j): lam_i - j + lam'_j - i + 1.

    (i, j) must lie in the Young diagram.
    """
    if not 1 <= i <= len(lam) or not 1 <= j <= lam[i - 1]:
        raise ValueError(f"cell ({i}, {j}) is outside the diagram of {tuple(lam)}")
    col = sum(1 for p in lam if p >= j)
    return lam[i - 1] - j + col - i + 1


def even_hook_count(lam: Sequence[int]) -> int:
    """Number of cells whose hook length is even."""
    conj = _conjugate_parts(lam)
    count = 0
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            if (row - j + conj[j - 1] - i + 1) % 2 == 0:
                count += 1
    return count


def classify(lam: Sequence[int]) -> PartitionStats:
    """Full statistics record for one partition."""
    conj = _conjugate_parts(lam)
    odd = sum(1 for p in lam if p & 1)
    odd_conj = sum(1 for p in conj if p & 1)
    even_hooks = 0
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            if (row - j + conj[j - 1] - i + 1) % 2 == 0:
                even_hooks += 1
    return PartitionStats(odd, odd_conj, even_hooks, (odd - odd_conj) % 4 == 0)


def inner_corners(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Cells (i, lam_i) whose removal leaves a valid Young diagram."""
    if not lam:
        raise ValueError("the empty partition has no inner corners")
    corners = []
    for i, row in enumerate(lam, 1):
        if i == len(lam) or lam[i] < row:
            corners.append((i, row))
    return corners


def corner_parity_check(lam: Sequence[int], v: tuple[int, int]) -> bool:
    """Whether the corner-removal parity claim holds at inner corner v.

    With lam- the partition after removing v = (i, j), the claim is the
    biconditional: H_e(lam) == H_e(lam-) mod 2 exactly when
    lam_i == lam'_j mod 2 (both read off the original lam).
    """
    if v not in inner_corners(lam):
        raise ValueError(f"{v} is not an inner corner of {tuple(lam)}")
    i, j = v
    removed = list(lam)
    removed[i - 1] -= 1
    if removed[i - 1] == 0:
        removed.pop()
    same_hook_parity = (even_hook_count(lam) - even_hook_count(removed)) % 2 == 0
    col = sum(1 for p in lam if p >= j)
    same_cell_parity = (lam[i - 1] - col) % 2 == 0
    return same_hook_parity == same_cell_parity
