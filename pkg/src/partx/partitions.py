"""Integer partitions and the brute-force statistics oracle.

A partition of n is a nonincreasing sequence of positive integers summing
to n.  Everything in this module is computed by direct enumeration, which
makes it the ground truth that the closed-form and series layers are
tested against.

The statistics, for a positive integer n:

* P(n)    number of partitions of n
* S(n)    total count of distinct part values, summed over all partitions
* Q_k(n)  total number of occurrences of the part k over all partitions
* R_k(n)  number of partitions containing at least one part equal to k

Enumeration is exponential in n, so it is capped (default n <= 80); the
closed forms in :mod:`partx.counting` have no such cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

DEFAULT_ENUMERATION_LIMIT = 80


class Partition:
    """A partition stored as a nonincreasing tuple of positive parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be nonincreasing, got {parts!r}")
        self.parts = parts

    @classmethod
    def _wrap(cls, parts: tuple[int, ...]) -> "Partition":
        # Fast path for the enumerator, which only produces valid tuples.
        self = object.__new__(cls)
        self.parts = parts
        return self

    @property
    def n(self) -> int:
        """The integer being partitioned."""
        return sum(self.parts)

    def multiplicity(self, value: int) -> int:
        """How many times ``value`` occurs as a part."""
        return self.parts.count(value)

    def distinct_count(self) -> int:
        """Number of distinct part values."""
        return len(set(self.parts))

    def runs(self) -> list[tuple[int, int]]:
        """(value, multiplicity) pairs in descending part order."""
        out = []
        parts = self.parts
        i, size = 0, len(parts)
        while i < size:
            v = parts[i]
            j = i + 1
            while j < size and parts[j] == v:
                j += 1
            out.append((v, j - i))
            i = j
        return out

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __str__(self):
        # additive form, e.g. "2+2+1"
        return "+".join(str(p) for p in self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)!r})"


@dataclass
class PartitionStats:
    """Every enumeration statistic of one n, gathered in a single pass.

    The count maps are sparse: only part values that actually occur are
    stored, and the accessors return 0 for anything absent.
    """

    n: int
    partition_count: int
    distinct_member_total: int
    occurrence_counts: dict[int, int]
    containing_counts: dict[int, int]

    def occurrences(self, k: int) -> int:
        """Q_k(n): total occurrences of the part k."""
        return self.occurrence_counts.get(k, 0)

    def containing(self, k: int) -> int:
        """R_k(n): partitions with at least one part equal to k."""
        return self.containing_counts.get(k, 0)


def _check_enumerable(n: int, limit: int) -> None:
    if n < 1:
        raise ValueError(f"partitions are enumerated for n >= 1, got n={n}")
    if n > limit:
        raise ValueError(
            f"enumeration of n={n} exceeds the limit of {limit}; "
            "use the closed forms in partx.counting instead"
        )


def _part_tuples(n: int) -> Iterator[tuple[int, ...]]:
    # Descending lexicographic successor rule: decrement the rightmost
    # part that exceeds 1, then repack the freed amount greedily.
    parts = (n,)
    while True:
        yield parts
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return
        free = len(parts) - i  # the decremented unit plus all trailing 1's
        parts = parts[:i] + (parts[i] - 1,)
        while free:
            chunk = min(parts[-1], free)
            parts += (chunk,)
            free -= chunk


def enumerate_partitions(
    n: int, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[Partition]:
    """Yield every partition of n exactly once, in descending lex order.

    The number of partitions yielded is P(n).  Raises ValueError for
    n < 1 or n beyond ``limit``.
    """
    _check_enumerable(n, limit)
    for parts in _part_tuples(n):
        yield Partition._wrap(parts)


_stats_cache: dict[int, PartitionStats] = {}
_elder_cache: dict[int, dict[int, int]] = {}


def oracle_stats(n: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> PartitionStats:
    """Compute P(n), S(n) and all Q_k(n), R_k(n) by one enumeration pass.

    Results are memoized per n, since the verification sweeps revisit the
    same n many times.  Treat the returned object as read-only.
    """
    _check_enumerable(n, limit)
    cached = _stats_cache.get(n)
    if cached is not None:
        return cached

    count = 0
    distinct_total = 0
    occurrences: dict[int, int] = {}
    containing: dict[int, int] = {}
    mult_hist: dict[int, int] = {}  # multiplicity -> number of (partition, value) runs
    for parts in _part_tuples(n):
        count += 1
        i, size = 0, len(parts)
        while i < size:
            v = parts[i]
            j = i + 1
            while j < size and parts[j] == v:
                j += 1
            m = j - i
            distinct_total += 1
            occurrences[v] = occurrences.get(v, 0) + m
            containing[v] = containing.get(v, 0) + 1
            mult_hist[m] = mult_hist.get(m, 0) + 1
            i = j

    stats = PartitionStats(
        n=n,
        partition_count=count,
        distinct_member_total=distinct_total,
        occurrence_counts=occurrences,
        containing_counts=containing,
    )
    # Elder tallies share the same pass: a run of multiplicity m counts one
    # occasion for every threshold k <= m, hence a suffix sum over the
    # multiplicity histogram.
    elder: dict[int, int] = {}
    running = 0
    for m in range(max(mult_hist, default=0), 0, -1):
        running += mult_hist.get(m, 0)
        elder[m] = running
    _stats_cache[n] = stats
    _elder_cache[n] = elder
    return stats


def elder_count(n: int, k: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> int:
    """Occasions on which a part occurs k or more times, over all partitions of n.

    A partition with r part values each occurring at least k times
    contributes r.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got k={k}")
    oracle_stats(n, limit)
    return _elder_cache[n].get(k, 0)
