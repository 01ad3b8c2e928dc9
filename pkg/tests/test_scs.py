import json
import math
import random
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from superasm.qsim import QSim, QueryLedger
from superasm.scs import (
    DPTable,
    ScsConfig,
    SplitSchedule,
    brute_force_scs,
    cascade_costs,
    construct_graph_allones,
    construct_graph_hash,
    construct_superstring_by_path,
    get_l,
    held_karp_max,
    naive_reduce,
    nested_max_solve,
    path_weight,
    plan_cascade,
    remove_duplicates_and_substrings,
    solve_scs,
    step1,
    validate_superstring,
)
from superasm.strings import SCSInstance, naive_overlap_matrix

CAT = [b"CAT", b"ATG", b"TGA"]
word = st.binary(min_size=1, max_size=7).map(lambda b: bytes(97 + x % 2 for x in b))


def best_by_permutation(w):
    n = w.shape[0]
    return max(path_weight(w, p) for p in permutations(range(n)))


# -- reduction -------------------------------------------------------------------------


def test_reduce_examples():
    assert remove_duplicates_and_substrings(SCSInstance.of(["ab", "ab", "b"])).strings == (b"ab",)
    assert set(remove_duplicates_and_substrings(SCSInstance.of(["abc", "bcd"])).strings) == {b"abc", b"bcd"}
    assert remove_duplicates_and_substrings(SCSInstance.of(["a"])).strings == (b"a",)


def test_reduce_does_not_match_across_separators():
    assert set(remove_duplicates_and_substrings(SCSInstance.of(["ba", "xb", "ay"])).strings) == {b"ba", b"xb", b"ay"}


def test_reduce_charges_substring_searches():
    led = QueryLedger()
    remove_duplicates_and_substrings(SCSInstance.of(["ab", "abc", "bcd"]), QSim(led))
    assert led.calls("is_substring") == 2 and led.cost("is_substring") > 0


@settings(max_examples=200, deadline=None)
@given(st.lists(word, min_size=1, max_size=8))
def test_reduce_matches_pairwise_oracle_and_is_sound(strings):
    kept = remove_duplicates_and_substrings(SCSInstance(tuple(strings))).strings
    assert sorted(kept) == sorted(naive_reduce(strings))
    assert all(any(s in k for k in kept) for s in strings)


# -- graph ---------------------------------------------------------------------------------


@pytest.mark.parametrize("build", [lambda S: construct_graph_hash(S, seed=3), construct_graph_allones])
def test_graph_examples(build):
    assert build([b"ab", b"ba"]).w.tolist() == [[0, 1], [1, 0]]
    assert build([b"abc", b"xyz"]).w.tolist() == [[0, 0], [0, 0]]
    w = build(CAT).w
    assert (w[0, 1], w[1, 2], w[2, 0], w[0, 2], w[1, 0], w[2, 1]) == (2, 2, 0, 1, 0, 1)


def test_literal_symbol_matching_misses_overlaps():
    literal = construct_graph_allones(CAT, literal=True).w
    assert not np.array_equal(literal, naive_overlap_matrix(CAT))


@settings(max_examples=150, deadline=None)
@given(st.lists(word, min_size=2, max_size=8), st.integers(0, 1000))
def test_graph_backends_match_naive(strings, seed):
    strings = naive_reduce(strings)
    if len(strings) < 2:
        return
    ref = naive_overlap_matrix(strings)
    assert np.array_equal(construct_graph_hash(strings, seed=seed).w, ref)
    assert np.array_equal(construct_graph_allones(strings).w, ref)


def test_hash_graph_counts_collisions_with_a_tiny_prime():
    from superasm.strings import PrimePool

    pool = PrimePool(1, np.array([2]), 2)
    g = construct_graph_hash([b"aaab", b"bbba", b"abab"], pool=pool)
    assert g.prime == 2 and g.collisions > 0
    assert np.array_equal(g.w, naive_overlap_matrix(g.strings))


def test_hash_graph_charges_search_per_pair():
    led = QueryLedger()
    construct_graph_hash(CAT, qsim=QSim(led))
    assert led.calls("first_one_search") == 6
    assert led.cost("first_one_search") == pytest.approx(6 * math.sqrt(3))


# -- subset DP -----------------------------------------------------------------------------


def test_schedule_thresholds():
    s = SplitSchedule(16)
    assert (s.k1, s.k4, s.k2, s.fallback) == (3, 4, 8, False)
    assert SplitSchedule(4).k1 == 0 and SplitSchedule(4).fallback
    assert SplitSchedule(15).fallback


def test_cascade_plan_sixteen():
    splits, plain = plan_cascade(SplitSchedule(16))
    assert splits == {16: 8, 8: 4, 9: 4, 4: 3, 5: 3, 6: 3}
    assert plain == [1, 2, 3]


def test_cascade_costs_compose():
    c = cascade_costs(SplitSchedule(16))
    q1 = math.sqrt(math.comb(4, 3) * 16)
    assert c["level1"] == pytest.approx(q1)
    assert c["level3"] == pytest.approx(math.sqrt(math.comb(16, 8) * 16) * math.sqrt(math.comb(8, 4) * 16) * q1)


def test_get_l_examples():
    t = DPTable.create(np.zeros((3, 3)), dense=False)
    assert get_l(t, 0b010, 1, 1) == 0
    w = naive_overlap_matrix([b"ab", b"ba"])
    assert get_l(DPTable.create(w, dense=False), 0b11, 0, 1) == 1
    w = naive_overlap_matrix(CAT)
    assert get_l(DPTable.create(w, dense=False), 0b111, 0, 2) == 4
    assert get_l(DPTable.create(w, dense=False), 0b111, 0, 0) == float("-inf")
    with pytest.raises(ValueError):
        get_l(DPTable.create(w, dense=False), 0b011, 0, 2)


def test_get_l_dense_and_memo_agree():
    rng = np.random.default_rng(3)
    w = rng.integers(0, 5, (6, 6))
    dense = DPTable.create(w)
    for s in range(1, 7):
        dense.fill_plain(s)
    sparse = DPTable.create(w, dense=False)
    for Y in range(1, 64):
        for v in range(6):
            for u in range(6):
                if (Y >> v) & 1 and (Y >> u) & 1:
                    assert get_l(dense, Y, v, u) == get_l(sparse, Y, v, u)


def test_step1_counts_subsets():
    led = QueryLedger()
    t = step1(DPTable.create(np.zeros((16, 16))), SplitSchedule(16), QSim(led))
    assert sorted(t.layers) == [1, 2, 3]
    assert sum(len(t.masks[s]) for s in t.layers) == 696
    assert led.classical("subset_dp") == 16**3 * 696
    assert all(t.lookup(1 << v, v, v) == 0 for v in range(16))


@pytest.mark.parametrize("n", [2, 3, 5, 8, 12])
def test_split_invariance_small(n):
    rng = np.random.default_rng(n)
    w = rng.integers(0, 7, (n, n))
    np.fill_diagonal(w, 0)
    sched = SplitSchedule(n)
    val, path = nested_max_solve(step1(DPTable.create(w), sched), sched, cascade=True)
    assert val == held_karp_max(w) == path_weight(w, path)
    assert sorted(path) == list(range(n))
    if n <= 8:
        assert val == best_by_permutation(w)


def test_nested_max_examples():
    w = naive_overlap_matrix([b"ab", b"ba"])
    s = SplitSchedule(2)
    val, path = nested_max_solve(DPTable.create(w), s)
    assert val == 1 and path in ([0, 1], [1, 0])
    w = naive_overlap_matrix(CAT)
    assert nested_max_solve(DPTable.create(w), SplitSchedule(3)) == (4, [0, 1, 2])


def test_dense_size_guard():
    with pytest.raises(ValueError):
        DPTable.create(np.zeros((21, 21)))


# -- superstring ---------------------------------------------------------------------------


def test_superstring_by_path_examples():
    w = naive_overlap_matrix([b"ab", b"ba"])
    assert construct_superstring_by_path([b"ab", b"ba"], w, [0, 1]) == b"aba"
    assert construct_superstring_by_path([b"xy"], np.zeros((1, 1)), [0]) == b"xy"
    assert construct_superstring_by_path(CAT, naive_overlap_matrix(CAT), [0, 1, 2]) == b"CATGA"
    with pytest.raises(ValueError):
        construct_superstring_by_path(CAT, naive_overlap_matrix(CAT), [0, 0])


def test_solve_examples():
    assert solve_scs([b"ab", b"ba"]).length == 3
    assert solve_scs([b"abc"]).superstring == b"abc"
    sol = solve_scs(CAT)
    assert sol.length == 5 and sol.weight == 4


def test_solution_json_fields():
    d = json.loads(solve_scs(CAT).to_json())
    assert set(d) == {"superstring", "length", "path", "weight", "reduced_n", "ledger", "collisions"}
    stages = {r["stage"] for r in d["ledger"]["rows"]}
    assert {"reduce", "graph", "step1", "step2", "path"} <= stages


def test_solve_with_allones_backend_and_cascade():
    rng = random.Random(2)
    S = list(dict.fromkeys(bytes(rng.choice(b"ab") for _ in range(9)) for _ in range(16)))
    S = naive_reduce(S)
    a = solve_scs(S, ScsConfig(graph_backend="allones"))
    b = solve_scs(S, ScsConfig(cascade=True))
    assert a.length == b.length and validate_superstring(S, b.superstring)
    assert b.weight == held_karp_max(naive_overlap_matrix(b.reduced))


def test_config_rejects_unknown_backend():
    with pytest.raises(ValueError):
        ScsConfig(graph_backend="fft")


def test_brute_force_examples():
    assert brute_force_scs([b"ab", b"ba"])[0] == 3
    assert brute_force_scs([b"a", b"b"])[0] == 2
    assert brute_force_scs([b"aa", b"ab", b"ba"]) == (4, b"aaba")
    with pytest.raises(ValueError):
        brute_force_scs([bytes([65 + i]) * 2 for i in range(10)])


def test_validate_superstring_examples():
    assert validate_superstring([b"ab", b"ba"], b"aba")
    assert not validate_superstring([b"ab", b"ba"], b"ab")
    assert validate_superstring([b"q"], b"q")


@settings(max_examples=60, deadline=None)
@given(st.lists(word, min_size=1, max_size=6), st.integers(0, 99))
def test_solver_matches_brute_force(strings, seed):
    sol = solve_scs(strings, ScsConfig(seed=seed))
    assert validate_superstring(strings, sol.superstring)
    assert sol.length == brute_force_scs(strings)[0]
    assert sol.length == sum(map(len, sol.reduced)) - sol.weight
