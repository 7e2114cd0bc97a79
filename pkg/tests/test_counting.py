import pytest

from partx import counting, partitions
from partx.counting import (
    CountTable,
    TableFormatError,
    consistency_check,
    count_containing,
    distinct_members,
    extend_table,
    load_table,
    occurrence_count,
    occurrence_count_mod,
    partition_count,
    partition_count_mod,
    save_table,
)

# frozen from the enumeration oracle (asserted below in test_oracle_equivalence)
P_PREFIX = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_count_basics():
    assert partition_count(4) == 5
    assert partition_count(-3) == 0
    assert partition_count(0) == 1
    assert partition_count(10) == 42
    assert [partition_count(n) for n in range(11)] == P_PREFIX


def test_partition_count_against_enumeration():
    for n in range(1, 31):
        assert partition_count(n) == sum(1 for _ in partitions.enumerate_partitions(n))


def test_partition_count_classical_anchor():
    assert partition_count(100) == 190569292


def test_count_containing():
    assert count_containing(1, 5) == 5
    assert count_containing(7, 3) == 0
    # brute force: partitions of 6 with at least one part 2
    direct = sum(1 for p in partitions.enumerate_partitions(6) if 2 in p.parts)
    assert count_containing(2, 6) == direct == 5
    with pytest.raises(ValueError):
        count_containing(0, 5)


def test_occurrence_count():
    assert occurrence_count(3, 6) == 4
    assert occurrence_count(5, 4) == 0
    direct = sum(p.multiplicity(2) for p in partitions.enumerate_partitions(11))
    assert occurrence_count(2, 11) == direct
    with pytest.raises(ValueError):
        occurrence_count(-1, 4)


def test_distinct_members():
    assert distinct_members(4) == 7
    assert distinct_members(1) == 1
    assert distinct_members(5) == 12  # 1+1+2+3+5
    assert distinct_members(0) == 0
    assert distinct_members(-2) == 0


def test_oracle_equivalence():
    for n in range(1, 41):
        st = partitions.oracle_stats(n)
        assert partition_count(n) == st.partition_count
        assert distinct_members(n) == st.distinct_member_total
        for k in range(1, n + 1):
            assert occurrence_count(k, n) == st.occurrences(k), (n, k)
            assert count_containing(k, n) == st.containing(k), (n, k)


def test_occurrence_recurrence_property():
    # Q_k(n+k) = Q_k(n) + R_k(n+k) holds for the closed forms
    for n in range(1, 51):
        for k in range(1, 13):
            assert occurrence_count(k, n + k) == occurrence_count(k, n) + count_containing(k, n + k)


def test_distinct_members_telescopes():
    for n in range(1, 201):
        assert distinct_members(n + 1) - distinct_members(n) == partition_count(n)


@pytest.mark.parametrize("modulus", [5, 7, 11, 25, 125])
def test_modular_consistency(modulus):
    for n in range(501):
        assert partition_count_mod(n, modulus) == partition_count(n) % modulus


def test_partition_count_mod_examples():
    assert partition_count_mod(4, 5) == 0
    assert partition_count_mod(0, 7) == 1
    assert partition_count_mod(100, 11) == partition_count(100) % 11
    assert partition_count_mod(-5, 9) == 0


@pytest.mark.parametrize("modulus", [1, 0, -3])
def test_partition_count_mod_rejects_small_modulus(modulus):
    with pytest.raises(ValueError):
        partition_count_mod(10, modulus)


def test_occurrence_count_mod():
    for n in (14, 24, 49):
        assert occurrence_count_mod(5, n, 25) == occurrence_count(5, n) % 25
    with pytest.raises(ValueError):
        occurrence_count_mod(5, 10, 1)


def test_extend_table():
    table = CountTable()
    assert table.max_n == 0
    extend_table(table, 4)
    assert table.values == [1, 1, 2, 3, 5]
    snapshot = table.values
    extend_table(table, 4)  # idempotent
    assert table.values == snapshot
    extend_table(table, 2)  # never shrinks
    assert table.values == snapshot
    extend_table(table, 10)
    assert table.values[:5] == snapshot  # old entries unchanged
    assert table[10] == 42
    assert len(table) == 11


def test_table_monotone():
    table = CountTable().extend(200)
    vals = table.values
    assert vals[0] == 1
    for i in range(2, 201):
        assert vals[i] >= vals[i - 1]


def test_explicit_table_is_independent():
    mine = CountTable()
    assert partition_count(12, mine) == 77
    assert mine.max_n == 12


def test_save_load_round_trip(tmp_path):
    path = tmp_path / "table.txt"
    table = CountTable().extend(10)
    save_table(table, path)
    text = path.read_text()
    assert text.startswith("#partition-table v1\n0,1\n")
    assert len(text.splitlines()) == 12
    loaded = load_table(path)
    assert loaded.values == table.values
    # bit-exact: saving the loaded table reproduces the file
    again = tmp_path / "again.txt"
    save_table(loaded, again)
    assert again.read_text() == text


def _write(tmp_path, body):
    path = tmp_path / "bad.txt"
    path.write_text(body)
    return path


def test_load_rejects_bad_header(tmp_path):
    with pytest.raises(TableFormatError, match="line 1"):
        load_table(_write(tmp_path, "#partition-table v2\n0,1\n"))


def test_load_rejects_missing_first_entry(tmp_path):
    with pytest.raises(TableFormatError, match="line 2"):
        load_table(_write(tmp_path, "#partition-table v1\n"))
    with pytest.raises(TableFormatError, match="0,1"):
        load_table(_write(tmp_path, "#partition-table v1\n0,2\n"))


def test_load_rejects_gap(tmp_path):
    body = "#partition-table v1\n0,1\n1,1\n3,3\n"
    with pytest.raises(TableFormatError, match="line 4"):
        load_table(_write(tmp_path, body))


def test_load_rejects_non_decimal(tmp_path):
    body = "#partition-table v1\n0,1\n1,one\n"
    with pytest.raises(TableFormatError, match="line 3"):
        load_table(_write(tmp_path, body))
    body = "#partition-table v1\n0,1\n1,-4\n"
    with pytest.raises(TableFormatError, match="line 3"):
        load_table(_write(tmp_path, body))


def test_load_accepts_tampered_value_but_check_catches_it(tmp_path):
    body = "#partition-table v1\n0,1\n1,1\n2,2\n3,3\n4,6\n"
    table = load_table(_write(tmp_path, body))
    assert table[4] == 6
    assert consistency_check(table) == [4]


def test_consistency_check_clean():
    assert consistency_check(CountTable().extend(50)) == []
