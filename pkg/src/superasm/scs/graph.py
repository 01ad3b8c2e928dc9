"""Overlap graph construction: fingerprint search and shrinking candidate sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..qsim import QSim
from ..strings import (
    PrimePool,
    choose_prime,
    compute_prefix_suffix_hashes,
    hash_eq_suffix_prefix,
    naive_overlap,
)


@dataclass
class OverlapGraph:
    """Complete digraph on the dictionary; ``w[i, j]`` is the overlap of ``i`` onto ``j``."""

    strings: tuple[bytes, ...]
    w: np.ndarray = field(repr=False)
    collisions: int = 0
    prime: int | None = None

    @property
    def n(self) -> int:
        return len(self.strings)

    def weight(self, path: Sequence[int]) -> int:
        return int(sum(self.w[a, b] for a, b in zip(path, path[1:])))


@lru_cache(maxsize=8)
def prime_pool(r: int) -> PrimePool:
    return PrimePool.first(r)


def pool_size(n: int, L: int) -> int:
    return 20 * n * L


def construct_graph_hash(
    strings: Sequence[bytes], seed: int = 0, qsim: QSim | None = None, pool: PrimePool | None = None
) -> OverlapGraph:
    """Each overlap is the largest ``r`` whose suffix and prefix fingerprints agree.

    A single direct comparison confirms the winning ``r``. A mismatch is a fingerprint
    collision: it is counted and the pair falls back to a plain descending scan.
    """
    qsim = qsim or QSim()
    strings = tuple(bytes(s) for s in strings)
    n = len(strings)
    L = sum(map(len, strings))
    pool = pool or prime_pool(pool_size(n, L))
    p = choose_prime(pool, seed)
    ctx = [compute_prefix_suffix_hashes(s, p) for s in strings]
    w = np.zeros((n, n), dtype=np.int64)
    collisions = 0
    for i in range(n):
        si = strings[i]
        for j in range(n):
            if i == j:
                continue
            sj = strings[j]
            top = min(len(si), len(sj))
            ci, cj = ctx[i], ctx[j]
            r = qsim.first_one_search(lambda k: hash_eq_suffix_prefix(ci, cj, k), top, "descending") or 0
            qsim.ledger.charge("confirm", classical=r, calls=1)
            if r and si[len(si) - r :] != sj[:r]:
                collisions += 1
                r = naive_overlap(si, sj)
            w[i, j] = r
    return OverlapGraph(strings, w, collisions, p)


def construct_graph_allones(strings: Sequence[bytes], qsim: QSim | None = None, literal: bool = False) -> OverlapGraph:
    """Overlaps by repeatedly filtering the set of strings still consistent with an alignment.

    For each alignment start ``a`` in ``s_i`` (longest overlap first) the candidates
    are narrowed one symbol at a time, comparing ``s_i[a + t]`` with ``s_j[t]``. A
    candidate surviving to the end of ``s_i`` overlaps by ``|s_i| - a`` and leaves the
    pool. ``literal=True`` runs the single-pass symbol matching exactly as first
    described instead; it does not compute maximal overlaps in general.
    """
    qsim = qsim or QSim()
    strings = tuple(bytes(s) for s in strings)
    if literal:
        return _allones_literal(strings, qsim)
    n = len(strings)
    w = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        si = strings[i]
        li = len(si)
        remaining = [j for j in range(n) if j != i]
        for r in range(li, 0, -1):
            if not remaining:
                break
            a = li - r
            cand = [j for j in remaining if len(strings[j]) >= r]
            t = 0
            while cand and t < r:
                sym = si[a + t]
                cand = qsim.all_ones_search(cand, lambda j, t=t, sym=sym: strings[j][t] == sym)
                t += 1
            for j in cand:
                w[i, j] = r
            if cand:
                found = set(cand)
                remaining = [j for j in remaining if j not in found]
    return OverlapGraph(strings, w)


def _allones_literal(strings: tuple[bytes, ...], qsim: QSim) -> OverlapGraph:
    n = len(strings)
    w = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        si = strings[i]
        cand = [j for j in range(n) if j != i]
        r = 1
        while cand and r <= len(si):
            cand = [j for j in cand if r <= len(strings[j])]
            cand = qsim.all_ones_search(cand, lambda j, r=r: si[len(si) - r] == strings[j][r - 1])
            for j in cand:
                w[i, j] += 1
            r += 1
    return OverlapGraph(strings, w)
