import math

import pytest
from hypothesis import given, strategies as st

from superasm.qsim import (
    HIGH,
    LOW,
    NoiseConfig,
    QSim,
    QueryLedger,
    is_substring_cost,
)
from superasm.strings import SEPARATOR, compute_prefix_suffix_hashes, hash_eq_suffix_prefix


def test_first_one_search_overlap_example():
    p = 1_000_003
    a, b = compute_prefix_suffix_hashes(b"abc", p), compute_prefix_suffix_hashes(b"bcd", p)
    q = QSim()
    assert q.first_one_search(lambda r: hash_eq_suffix_prefix(a, b, r), 3, "descending") == 2
    assert q.ledger.cost("first_one_search") == pytest.approx(math.sqrt(3))


def test_first_one_search_edges():
    q = QSim()
    assert q.first_one_search(lambda k: False, 5, "ascending") is None
    assert q.first_one_search(lambda k: k == 0, 5, "descending") == 0
    assert q.first_one_search(lambda k: True, 0) is None
    assert q.first_one_search(lambda k: k in (2, 4), 6, "ascending") == 2
    with pytest.raises(ValueError):
        q.first_one_search(lambda k: True, 3, "sideways")


def test_all_ones_search():
    q = QSim()
    assert q.all_ones_search([1, 2, 3], lambda j: j in (1, 3)) == [1, 3]
    assert q.ledger.cost("all_ones_search") == pytest.approx(math.sqrt(3 * 2))
    before = q.ledger.total
    assert q.all_ones_search([], lambda j: True) == []
    assert q.ledger.total == before


def test_all_ones_search_symbol_example():
    S = [b"ab", b"ba", b"bb"]
    i, r = 0, 1
    # last symbol of s_i against the first symbol of each candidate
    got = QSim().all_ones_search([1, 2], lambda j: S[i][len(S[i]) - r] == S[j][r - 1])
    assert got == [1, 2]


def test_qmax_examples_and_ties():
    q = QSim()
    assert q.qmax(lambda k: (3, 1, 2)[k], 3) == (0, 3)
    assert q.qmax(lambda k: 5, 3) == (0, 5)
    inf = float("-inf")
    assert q.qmax(lambda k: (inf, 4, inf)[k], 3) == (1, 4)
    with pytest.raises(ValueError):
        q.qmax(lambda k: 0, 0)


def test_qmax_nested_cost_and_muting():
    q = QSim()

    def inner(k):
        q.qcompare(b"aa", b"ab")  # would charge if not muted
        return k

    q.qmax(inner, 16, element_cost=2.5)
    assert q.ledger.cost("qmax") == pytest.approx(4 * 2.5)
    assert q.ledger.calls("qcompare") == 0


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=30), st.integers(-100, 100))
def test_qmax_shift_invariant(vals, c):
    q = QSim()
    assert q.qmax(lambda k: vals[k], len(vals))[0] == q.qmax(lambda k: vals[k] + c, len(vals))[0]


def test_qcompare_examples_and_sentinels():
    q = QSim()
    assert q.qcompare(b"abc", b"abd") == -1
    assert q.qcompare(b"ab", b"ab") == 0
    assert q.qcompare(b"b", b"abc") == 1
    assert q.qcompare(b"ab", b"abc") == -1
    charged = q.ledger.cost("qcompare")
    assert q.qcompare(LOW, b"a") == -1 and q.qcompare(HIGH, b"a") == 1 and q.qcompare(b"a", HIGH) == -1
    assert q.ledger.cost("qcompare") == charged


def test_qcompare_charge_formula():
    q = QSim()
    for _ in range(7):
        q.qcompare(b"abcd", b"abcdef")
    assert q.ledger.cost("qcompare") == pytest.approx(7 * 2.0)


def test_is_substring_examples():
    q = QSim()
    assert q.is_substring(b"ab", b"cabd")
    text = [ord("a"), ord("b"), SEPARATOR, ord("b"), ord("a")]
    assert not q.is_substring(b"aa", text)
    assert not q.is_substring(b"ba", [ord("b"), SEPARATOR, ord("a")])
    assert q.is_substring(b"xyz", b"xyz")
    with pytest.raises(ValueError):
        q.is_substring(b"", b"abc")


def test_is_substring_cost_positive_on_tiny_inputs():
    assert is_substring_cost(1, 1, 1) > 0
    assert is_substring_cost(3, 0, 2) == 0


@given(st.binary(min_size=1, max_size=4), st.binary(max_size=20))
def test_is_substring_exact(p, t):
    assert QSim().is_substring(p, t) == (p in t)


def test_ledger_stages_and_json():
    led = QueryLedger()
    q = QSim(led)
    with led.stage("a"):
        q.qcompare(b"x", b"y")
    with led.stage("b"):
        q.qcompare(b"x", b"y")
        led.charge("work", classical=10)
    assert led.cost("qcompare", "a") == 1 and led.cost(stage="b") == 1
    assert led.classical_total == 10
    d = led.to_dict()
    assert d["total_charged_cost"] == 2 and len(d["rows"]) == 3
    with pytest.raises(ValueError):
        led.charge("x", cost=-1)


def test_noise_config_bounds():
    with pytest.raises(ValueError):
        NoiseConfig(True, 0.2)
    with pytest.raises(ValueError):
        QSim(repetitions=0)


def test_noise_repetition_charges_each_run():
    q = QSim(noise=NoiseConfig(True, 0.1, 5), repetitions=5)
    q.qcompare(b"ab", b"ab")
    assert q.ledger.calls("qcompare") == 5


def test_majority_reduces_errors():
    def error_rate(k):
        q = QSim(noise=NoiseConfig(True, 0.1, 11), repetitions=k)
        return sum(q.qcompare(b"ab", b"ac") != -1 for _ in range(3000)) / 3000

    assert error_rate(1) > error_rate(3) > error_rate(7)
