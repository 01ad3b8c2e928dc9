"""Named verification suites, one per exit criterion, shared by the CLI and the tests."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import stats

from ..scs import (
    DPTable,
    ScsConfig,
    SplitSchedule,
    brute_force_scs,
    construct_graph_allones,
    construct_graph_hash,
    construct_superstring_by_path,
    held_karp_max,
    naive_reduce,
    nested_max_solve,
    path_weight,
    solve_scs,
    step1,
    validate_superstring,
)
from ..segtree import NaiveAssignMax, SegTree
from ..strings import (
    PrimePool,
    choose_prime,
    compute_prefix_suffix_hashes,
    naive_overlap_matrix,
)
from ..suffix_array import construct as build_sa, naive_suffix_sort
from ..tao import assemble, feasibility_oracle, validate_assembly
from .bench import bench_graph, bench_tao
from .gen import GenSpec, gen_tao, random_string


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        info = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"[{status}] {self.name} ({self.seconds:.1f}s) {info}"


def _timed(name: str, fn: Callable[[], tuple[bool, dict]]) -> SuiteResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return SuiteResult(name, bool(ok), detail, time.perf_counter() - t0)


def _reduced_instance(rng: random.Random, n: int, min_len: int, max_len: int, alphabet: int) -> list[bytes]:
    """Exactly ``n`` substring-free strings, drawn until enough survive."""
    pool: list[bytes] = []
    while len(pool) < n:
        pool.append(random_string(rng, rng.randint(min_len, max_len), alphabet))
        pool = naive_reduce(pool)
    return pool


# -- suites -----------------------------------------------------------------------------


def scs_small(seed: int = 0, count: int = 200) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        bad = []
        for k in range(count):
            alphabet = 2 if k % 2 else 4
            strings = _reduced_instance(rng, rng.randint(1, 7), 1, 6, alphabet)
            # re-add a few contained strings so reduction has work to do
            strings += [s[: rng.randint(1, len(s))] for s in rng.sample(strings, rng.randint(0, len(strings)))]
            sol = solve_scs(strings, ScsConfig(seed=seed + k))
            best, _ = brute_force_scs(strings)
            if not validate_superstring(strings, sol.superstring) or sol.length != best:
                bad.append(k)
        return not bad, {"instances": count, "mismatches": len(bad)}

    return _timed("scs-small", run)


def path_identity(seed: int = 0, count: int = 1000) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        bad = ham = 0
        for _ in range(count):
            strings = _reduced_instance(rng, rng.randint(2, 8), 2, 8, rng.choice([2, 4]))
            w = naive_overlap_matrix(strings)
            n = len(strings)
            if rng.random() < 0.5:
                path = rng.sample(range(n), n)
                ham += 1
            else:
                path = [rng.randrange(n)]
                for _ in range(rng.randint(0, 2 * n)):
                    path.append(rng.choice([v for v in range(n) if v != path[-1]]))
            t = construct_superstring_by_path(strings, w, path)
            expect = sum(len(strings[v]) for v in path) - path_weight(w, path)
            if len(t) != expect:
                bad += 1
            if len(path) == n and sorted(path) == list(range(n)):
                if len(t) != sum(map(len, strings)) - path_weight(w, path):
                    bad += 1
        return bad == 0, {"paths": count, "hamiltonian": ham, "violations": bad}

    return _timed("path-identity", run)


def split_invariance(seed: int = 0, count: int = 50) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        bad = 0
        sizes = (8, 12, 16)
        for k in range(count):
            n = sizes[k % 3]
            strings = _reduced_instance(rng, n, 6, 12, rng.choice([2, 4]))
            w = naive_overlap_matrix(strings)
            sched = SplitSchedule(n)
            table = step1(DPTable.create(w), sched)
            val, path = nested_max_solve(table, sched, cascade=True)
            ok = val == held_karp_max(w) and sorted(path) == list(range(n)) and path_weight(w, path) == val
            bad += not ok
        return bad == 0, {"instances": count, "mismatches": bad}

    return _timed("split-invariance", run)


def graph_agreement(seed: int = 0, count: int = 500) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        bad = collisions = hit = 0
        for k in range(count):
            n = rng.randint(2, 32)
            hi = max(2, min(60, 2000 // n))
            strings = _reduced_instance(rng, n, max(1, hi // 2), hi, rng.choice([2, 4]))
            ref = naive_overlap_matrix(strings)
            g1 = construct_graph_hash(strings, seed=seed + k)
            g2 = construct_graph_allones(strings)
            collisions += g1.collisions
            hit += g1.collisions > 0
            if not (np.array_equal(g1.w, ref) and np.array_equal(g2.w, ref)):
                bad += 1
        return bad == 0 and collisions < 5, {
            "instances": count,
            "mismatches": bad,
            "collisions": collisions,
            "instances_with_collision": hit,
        }

    return _timed("graph-agreement", run)


def tao_correctness(seed: int = 0, count: int = 500) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        invalid = disagree = feasible_random = 0
        for k in range(count):
            inst = gen_tao(GenSpec("tao", rng.randint(1, 8), 2, 8, rng.choice([2, 4]), seed * 100003 + k, True, rng.randint(4, 80)))
            res = assemble(inst)
            if not validate_assembly(inst, res.assembly):
                invalid += 1
        for k in range(count):
            spec = GenSpec("tao", rng.randint(1, 8), 1, 5, rng.choice([2, 3]), seed * 100003 + k, False, rng.randint(1, 40))
            inst = gen_tao(spec)
            res = assemble(inst)
            feasible, _ = feasibility_oracle(inst)
            feasible_random += feasible
            if feasible != res.feasible or (res.feasible and not validate_assembly(inst, res.assembly)):
                disagree += 1
        detail = {"planted_invalid": invalid, "random_disagreements": disagree, "random_feasible": feasible_random}
        return invalid == 0 and disagree == 0, detail

    return _timed("tao", run)


def segtree_suite(seed: int = 0, ops: int = 10_000) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        bad = done = 0
        while done < ops:
            size = rng.randint(1, 64)
            init = [(rng.randint(0, 5), -1) for _ in range(size)]
            tree, model = SegTree(init), NaiveAssignMax(init)
            for _ in range(rng.randint(1, 200)):
                done += 1
                if rng.random() < 0.2:
                    # a query round: flush pendings, then read every position
                    tree.push()
                    bad += any(tree.request(q) != model.request(q) for q in range(size))
                    continue
                i = rng.randrange(size)
                j = rng.randrange(i, size)
                x, y = rng.randint(0, 10), done
                tree.update(i, j, x, y)
                model.update(i, j, x, y)
            tree.push()
            bad += any(tree.request(q) != model.request(q) for q in range(size))
        return bad == 0, {"operations": done, "mismatched_reads": bad}

    return _timed("segtree", run)


def suffix_array_suite(seed: int = 0, count: int = 100) -> SuiteResult:
    def run():
        rng = random.Random(seed)
        bad = 0
        for k in range(count):
            alphabet = (2, 4, 26)[k % 3]
            t = random_string(rng, rng.randint(1, 2000), alphabet)
            if list(build_sa(t).suf) != naive_suffix_sort(t):
                bad += 1
        return bad == 0, {"texts": count, "mismatches": bad}

    return _timed("suffix-array", run)


def data_structures(seed: int = 0) -> SuiteResult:
    a, b = segtree_suite(seed), suffix_array_suite(seed)
    detail = {"segtree_ops": a.detail["operations"], "segtree_bad": a.detail["mismatched_reads"], "sa_bad": b.detail["mismatches"]}
    return SuiteResult("data-structures", a.passed and b.passed, detail, a.seconds + b.seconds)


def fingerprint(seed: int = 0, pairs: int = 100_000, length: int = 32, eps: float = 0.05) -> SuiteResult:
    """False-equality rate of fingerprints over random unequal equal-length pairs."""

    def run():
        rng = random.Random(seed)
        pool = PrimePool.first(int(pairs * length / eps))
        p = choose_prime(pool, seed)
        false_eq = 0
        for _ in range(pairs):
            u = random_string(rng, length, 4)
            v = random_string(rng, length, 4)
            while v == u:
                v = random_string(rng, length, 4)
            hu = compute_prefix_suffix_hashes(u, p).prefix[-1]
            hv = compute_prefix_suffix_hashes(v, p).prefix[-1]
            false_eq += hu == hv
        rate = false_eq / pairs
        return rate <= eps, {"pairs": pairs, "prime": p, "false_equalities": false_eq, "rate": rate}

    return _timed("fingerprint", run)


def ledger_fidelity(seed: int = 0) -> SuiteResult:
    def run():
        rep = bench_graph(seed=seed)
        bench_tao(seed=seed, report=rep)
        fit = rep.fits["graph"]
        a, b = fit.exponents
        shape = rep.checks["tao_shape"]
        ok = 1.4 <= a <= 1.6 and 0.4 <= b <= 0.6 and shape["within_factor_2"]
        return ok, {"n_exp": round(a, 4), "L_exp": round(b, 4), "tao_ratio_span": (round(shape["min_ratio"], 3), round(shape["max_ratio"], 3))}

    return _timed("ledger", run)


def noise_trend(seed: int = 0, trials: int = 10_000, p: float = 0.1, ks=(1, 3, 5, 7), alpha: float = 0.01) -> SuiteResult:
    """End-to-end failure rate under per-call corruption, paired across ``k`` by trial."""

    def run():
        fails = {k: np.zeros(trials, dtype=bool) for k in ks}
        for trial in range(trials):
            rng = random.Random(seed * 1_000_003 + trial)
            strings = _reduced_instance(rng, rng.randint(3, 4), 3, 6, 2)
            best, _ = brute_force_scs(strings)
            for k in ks:
                try:
                    sol = solve_scs(strings, ScsConfig(seed=trial, noise_p=p, repetitions=k))
                    ok = validate_superstring(strings, sol.superstring) and sol.length == best
                except Exception:
                    ok = False
                fails[k][trial] = not ok
        rates = {k: float(fails[k].mean()) for k in ks}
        pvals = []
        for a, b in zip(ks, ks[1:]):
            better = int((fails[a] & ~fails[b]).sum())
            worse = int((~fails[a] & fails[b]).sum())
            pvals.append(stats.binomtest(better, better + worse, 0.5, alternative="greater").pvalue if better + worse else 1.0)
        monotone = all(rates[a] >= rates[b] for a, b in zip(ks, ks[1:]))
        ok = monotone and all(pv < alpha for pv in pvals)
        return ok, {"rates": rates, "sign_test_p": [float(f"{pv:.3g}") for pv in pvals]}

    return _timed("noise", run)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "scs-small": scs_small,
    "path-identity": path_identity,
    "split-invariance": split_invariance,
    "graph-agreement": graph_agreement,
    "tao": tao_correctness,
    "data-structures": data_structures,
    "segtree": segtree_suite,
    "suffix-array": suffix_array_suite,
    "fingerprint": fingerprint,
    "ledger": ledger_fidelity,
    "noise": noise_trend,
}

# criterion number -> suite name
CRITERIA = {
    1: "scs-small",
    2: "path-identity",
    3: "split-invariance",
    4: "graph-agreement",
    5: "tao",
    6: "data-structures",
    7: "fingerprint",
    8: "ledger",
    9: "noise",
}


def run_suite(name: str, seed: int = 0) -> list[SuiteResult]:
    if name == "all":
        return [SUITES[CRITERIA[c]](seed=seed) for c in sorted(CRITERIA)]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](seed=seed)]
