"""Exact closed forms for the partition statistics.

P(n) is computed with the Euler pentagonal-number recurrence

    P(m) = sum_{j>=1} (-1)^(j-1) * [ P(m - j(3j-1)/2) + P(m - j(3j+1)/2) ]

over an append-only memo table of arbitrary-precision integers.  The other
statistics are finite sums of table entries:

    R_k(n) = P(n - k)
    Q_k(n) = sum_{j>=1} P(n - j*k)
    S(n)   = sum_{i=0}^{n-1} P(i)

All functions are total: P(0) = 1 and every statistic is 0 for arguments
below its support, so identity checks near the boundary need no special
cases.  A parallel table of residues carries the same recurrence mod m for
congruence sweeps at large n.
"""

from __future__ import annotations

TABLE_HEADER = "#partition-table v1"


class TableFormatError(ValueError):
    """A partition-table file failed structural validation."""


class CountTable:
    """Append-only memo of P(0..max_n).

    Entries never change once computed; extension only appends.  Concurrent
    readers of existing entries are safe, extension is not synchronized.
    """

    __slots__ = ("_values",)

    def __init__(self):
        self._values = [1]  # P(0) = 1

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    @property
    def values(self) -> list[int]:
        """A copy of the stored values, values[i] = P(i)."""
        return list(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> int:
        return self._values[n]

    def extend(self, new_max: int) -> "CountTable":
        """Grow the table to cover 0..new_max.  Never shrinks; idempotent."""
        vals = self._values
        for m in range(len(vals), new_max + 1):
            total = 0
            j = 1
            while True:
                g = (j * (3 * j - 1)) >> 1
                if g > m:
                    break
                term = vals[m - g]
                g2 = g + j
                if g2 <= m:
                    term += vals[m - g2]
                if j & 1:
                    total += term
                else:
                    total -= term
                j += 1
            vals.append(total)
        return self


class ModCountTable:
    """The same recurrence carried out entirely in residues mod ``modulus``."""

    __slots__ = ("modulus", "_values")

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        self._values = [1 % modulus]

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    def __getitem__(self, n: int) -> int:
        return self._values[n]

    def extend(self, new_max: int) -> "ModCountTable":
        vals = self._values
        mod = self.modulus
        for m in range(len(vals), new_max + 1):
            total = 0
            j = 1
            while True:
                g = (j * (3 * j - 1)) >> 1
                if g > m:
                    break
                term = vals[m - g]
                g2 = g + j
                if g2 <= m:
                    term += vals[m - g2]
                if j & 1:
                    total += term
                else:
                    total -= term
                j += 1
            vals.append(total % mod)
        return self


def extend_table(table: CountTable, new_max: int) -> CountTable:
    """Extend ``table`` to cover 0..new_max (no-op if already covered)."""
    return table.extend(new_max)


_TABLE = CountTable()
_MOD_TABLES: dict[int, ModCountTable] = {}


def partition_count(n: int, table: CountTable | None = None) -> int:
    """P(n), with P(0) = 1 and P(n) = 0 for n < 0."""
    if n < 0:
        return 0
    t = _TABLE if table is None else table
    if n > t.max_n:
        t.extend(n)
    return t[n]


def partition_count_mod(n: int, modulus: int) -> int:
    """P(n) mod modulus via the all-residue recurrence."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if n < 0:
        return 0
    t = _MOD_TABLES.get(modulus)
    if t is None:
        t = _MOD_TABLES[modulus] = ModCountTable(modulus)
    if n > t.max_n:
        t.extend(n)
    return t[n]


def count_containing(k: int, n: int, table: CountTable | None = None) -> int:
    """R_k(n): partitions of n containing at least one part k.  Equals P(n-k)."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got k={k}")
    return partition_count(n - k, table)


def occurrence_count(k: int, n: int, table: CountTable | None = None) -> int:
    """Q_k(n): total occurrences of the part k over all partitions of n."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got k={k}")
    if n >= k:
        partition_count(n - k, table)  # one extension instead of many
    total = 0
    j = 1
    while n - j * k >= 0:
        total += partition_count(n - j * k, table)
        j += 1
    return total


def occurrence_count_mod(k: int, n: int, modulus: int) -> int:
    """Q_k(n) mod modulus, summed entirely in residues."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got k={k}")
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    total = 0
    j = 1
    while n - j * k >= 0:
        total += partition_count_mod(n - j * k, modulus)
        j += 1
    return total % modulus


def distinct_members(n: int, table: CountTable | None = None) -> int:
    """S(n): distinct part values summed over all partitions of n."""
    if n < 1:
        return 0
    partition_count(n - 1, table)
    return sum(partition_count(i, table) for i in range(n))


def consistency_check(table: CountTable) -> list[int]:
    """Recompute the table from scratch; return the n whose entries differ."""
    fresh = CountTable().extend(table.max_n)
    return [n for n in range(table.max_n + 1) if table[n] != fresh[n]]


def save_table(table: CountTable, path) -> None:
    """Write ``table`` in the partition-table v1 format (one ``n,P(n)`` per line)."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(TABLE_HEADER + "\n")
        for n, value in enumerate(table._values):
            fh.write(f"{n},{value}\n")


def load_table(path) -> CountTable:
    """Read a partition-table v1 file, validating structure only.

    The header, the leading ``0,1`` line, gap-free increasing n and decimal
    values are enforced; the values themselves are trusted (run
    :func:`consistency_check` to re-derive them).
    """
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != TABLE_HEADER:
        raise TableFormatError(f"line 1: expected header {TABLE_HEADER!r}")
    if len(lines) < 2:
        raise TableFormatError("line 2: missing mandatory entry '0,1'")
    values: list[int] = []
    for lineno, line in enumerate(lines[1:], start=2):
        n_str, sep, v_str = line.partition(",")
        if not sep or not n_str.isdigit() or not v_str.isdigit():
            raise TableFormatError(f"line {lineno}: expected 'n,value', got {line!r}")
        n = int(n_str)
        if n != lineno - 2:
            raise TableFormatError(
                f"line {lineno}: expected n={lineno - 2} (gap-free ascending), got n={n}"
            )
        values.append(int(v_str))
    if values[0] != 1:
        raise TableFormatError("line 2: first entry must be '0,1'")
    table = CountTable()
    table._values = values
    return table
