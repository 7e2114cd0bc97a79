import pytest

from partx import counting, identities, partitions
from partx.identities import (
    BOTH,
    CLOSED_FORM,
    ORACLE,
    sweep,
    verify_difference_identity,
    verify_elder,
    verify_extended_stanley,
    verify_lemma1,
    verify_lemma2,
    verify_qk_congruence,
    verify_ramanujan_p,
    verify_result1,
    verify_result2,
    verify_stanley,
)


def test_stanley_table_example():
    report = verify_stanley(4, backend=ORACLE)
    assert (report.lhs, report.rhs, report.passed) == (7, 7, True)
    assert report.identity == "stanley"
    assert report.params == {"n": 4}


def test_stanley_base_case():
    report = verify_stanley(1)
    assert (report.lhs, report.rhs, report.passed) == (1, 1, True)


def test_stanley_backends_agree():
    oracle = verify_stanley(30, backend=ORACLE)
    closed = verify_stanley(30, backend=CLOSED_FORM)
    assert (oracle.lhs, oracle.rhs) == (closed.lhs, closed.rhs)
    assert oracle.passed and closed.passed


def test_extended_stanley_examples():
    report = verify_extended_stanley(4, 3)
    # column k=3: Q_3(4)+Q_3(5)+Q_3(6) = 1+2+4
    assert (report.lhs, report.rhs, report.passed) == (7, 7, True)
    report = verify_extended_stanley(4, 4)
    assert (report.lhs, report.rhs, report.passed) == (7, 7, True)
    k1 = verify_extended_stanley(4, 1)
    plain = verify_stanley(4)
    assert (k1.lhs, k1.rhs) == (plain.lhs, plain.rhs)


def test_lemma1_examples():
    report = verify_lemma1(4, 5)
    assert (report.lhs, report.rhs, report.passed) == (5, 5, True)
    report = verify_lemma1(1, 1, backend=ORACLE)
    assert (report.lhs, report.rhs, report.passed) == (2, 2, True)
    report = verify_lemma1(3, 2, backend=ORACLE)
    assert report.passed


def test_lemma2_examples():
    report = verify_lemma2(4, 1, backend=ORACLE)
    assert (report.lhs, report.rhs, report.passed) == (5, 5, True)
    report = verify_lemma2(4, 4, backend=ORACLE)
    direct = sum(1 for p in partitions.enumerate_partitions(8) if 4 in p.parts)
    assert report.lhs == 5 and report.rhs == direct == 5
    report = verify_lemma2(1, 1)
    assert (report.lhs, report.rhs) == (1, 1)


def test_result1_example():
    report = verify_result1(4)
    assert (report.lhs, report.rhs, report.passed) == (7, 7, True)


def test_result2_examples():
    report = verify_result2(6, 3)
    assert (report.lhs, report.rhs, report.passed) == (4, 4, True)
    report = verify_result2(3, 5)
    assert (report.lhs, report.rhs, report.passed) == (0, 0, True)


def test_result2_oracle_matches_direct_sum():
    report = verify_result2(11, 4, backend=ORACLE)
    assert report.passed
    expected = sum(counting.partition_count(i) for i in range(11) if i % 4 == 11 % 4)
    assert report.rhs == expected


def test_elder_examples():
    assert (verify_elder(4, 2).lhs, verify_elder(4, 2).rhs) == (3, 3)
    assert verify_elder(4, 1).passed
    report = verify_elder(12, 3)
    assert report.passed and report.backend == ORACLE


def test_ramanujan_p_first_cases():
    for family in (5, 7, 11):
        report = verify_ramanujan_p(family, 0)
        assert report.passed, family
        assert report.lhs == report.rhs == 0
        assert report.params["argument"] == {5: 4, 7: 5, 11: 6}[family]


def test_ramanujan_p_rejects():
    with pytest.raises(ValueError):
        verify_ramanujan_p(13, 0)
    with pytest.raises(ValueError):
        verify_ramanujan_p(5, -1)


def test_qk_congruence_mod5():
    report = verify_qk_congruence(5, 5, 1)  # Q_5(9) = 5
    assert report.passed and report.lhs == 0
    report = verify_qk_congruence(5, 5, 0)  # Q_5(4) = 0
    assert report.passed


def test_qk_congruence_higher_power_is_refuted():
    # Q_5(24) = P(19)+P(14)+P(9)+P(4) = 660 = 26*25 + 10, so the mod-25
    # pattern fails already at n=0; the verifier must report that honestly.
    report = verify_qk_congruence(5, 25, 0)
    assert report.lhs == 10
    assert report.passed is False
    oracle_q = partitions.oracle_stats(24).occurrences(5)
    assert oracle_q == 660 and oracle_q % 25 == 10


def test_qk_congruence_rejects_unsupported():
    with pytest.raises(ValueError, match="supported"):
        verify_qk_congruence(5, 7, 0)
    with pytest.raises(ValueError):
        verify_qk_congruence(3, 5, 0)


def test_difference_identity():
    report = verify_difference_identity(0)
    assert (report.lhs, report.rhs, report.passed) == (5, 5, True)
    report = verify_difference_identity(1, backend=ORACLE)
    assert (report.lhs, report.rhs) == (30, 30)
    assert verify_difference_identity(3).passed


def test_backend_agreement_sample():
    for n, k in ((2, 1), (7, 3), (12, 5), (20, 8)):
        for verifier in (verify_extended_stanley, verify_lemma1, verify_lemma2, verify_result2):
            a = verifier(n, k, backend=ORACLE)
            b = verifier(n, k, backend=CLOSED_FORM)
            assert (a.lhs, a.rhs) == (b.lhs, b.rhs), (verifier.__name__, n, k)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError, match="backend"):
        verify_stanley(4, backend="series")


def test_report_as_dict():
    report = verify_extended_stanley(4, 3)
    assert report.as_dict() == {
        "identity": "extended_stanley",
        "params": {"n": 4, "k": 3},
        "lhs": 7,
        "rhs": 7,
        "passed": True,
        "backend": CLOSED_FORM,
    }


def test_reports_are_deterministic():
    assert verify_lemma1(6, 2).as_dict() == verify_lemma1(6, 2).as_dict()


def test_sweep_extended_stanley_closed():
    result = sweep("extended_stanley", (1, 30), (1, 10))
    assert result.total_checked == 300
    assert result.failures == []
    assert result.ok
    assert result.range_description == "n=1..30, k=1..10"


def test_sweep_single_instance_oracle():
    result = sweep("stanley", (4, 4), backend=ORACLE)
    assert result.total_checked == 1
    assert result.ok


def test_sweep_qk_congruence():
    result = sweep("qk_congruence", (0, 400), family=5)
    assert result.total_checked == 401
    assert result.ok
    assert "mod=5" in result.range_description


def test_sweep_qk_higher_power_collects_failures():
    result = sweep("qk_congruence", (0, 3), family=5, modulus=25)
    assert result.total_checked == 4
    assert not result.ok
    # residues 10, 20, 20 at n=0..2; n=3 (argument 99) happens to land on 0
    assert [(f.params["n"], f.lhs) for f in result.failures] == [(0, 10), (1, 20), (2, 20)]
    payload = result.as_dict()
    assert set(payload) == {"identity", "range", "total", "failures"}
    assert payload["total"] == 4


def test_sweep_both_backend_cross_checks():
    result = sweep("lemma1", (1, 6), (1, 4), backend=BOTH)
    assert result.total_checked == 24
    assert result.ok


def test_sweep_elder():
    result = sweep("elder", (1, 10), (1, 6), backend=ORACLE)
    assert result.total_checked == 60
    assert result.ok


def test_sweep_errors():
    with pytest.raises(ValueError, match="unknown identity"):
        sweep("nonsense", (1, 5))
    with pytest.raises(ValueError, match="empty"):
        sweep("stanley", (5, 1))
    with pytest.raises(ValueError, match="k range"):
        sweep("lemma1", (1, 5))
    with pytest.raises(ValueError, match="does not take a k range"):
        sweep("stanley", (1, 5), (1, 2))
    with pytest.raises(ValueError, match="family"):
        sweep("ramanujan_p", (0, 5))
    with pytest.raises(ValueError, match="family or modulus"):
        sweep("lemma1", (1, 5), (1, 2), family=5)
    with pytest.raises(ValueError, match="enumeration"):
        sweep("stanley", (1, 200), backend=ORACLE)
    with pytest.raises(ValueError, match="closed form"):
        sweep("elder", (1, 10), (1, 5), backend=CLOSED_FORM)


def test_sweep_oracle_limit_respects_custom_limit():
    with pytest.raises(ValueError, match="limit"):
        sweep("lemma1", (1, 30), (1, 10), backend=ORACLE, limit=30)
