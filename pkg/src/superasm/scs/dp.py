"""Subset dynamic program over best path weights, with the nested split cascade.

``L(Y, v, u)`` is the largest total overlap of a path that starts at ``v``, ends at
``u`` and visits exactly the nodes of ``Y`` (a bitmask). Layers of equal ``|Y|`` are
stored densely; see :mod:`superasm.kernels` for the layout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .. import kernels
from ..qsim import QSim
from .graph import OverlapGraph

NEG = kernels.NEG
NEG_INF = float("-inf")

# dense layers cost C(n, s) * n^2 int32 cells each; 20 keeps the widest layer near 300 MB
MAX_DENSE_N = 20
# keeping every corollary layer for path recovery is 2^n * n^2 cells
MAX_HELD_KARP_N = 16


@dataclass(frozen=True)
class SplitSchedule:
    """Subset-size thresholds of the two-step solver."""

    n: int
    alpha: float = 0.055
    fallback_below: int = 16

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("schedule needs n >= 1")
        if not 0.0 <= self.alpha < 1.0:
            raise ValueError("alpha must lie in [0, 1)")

    @property
    def k1(self) -> int:
        return math.floor((1 - self.alpha) * self.n / 4)

    @property
    def k4(self) -> int:
        return self.n // 4

    @property
    def k2(self) -> int:
        return self.n // 2

    @property
    def fallback(self) -> bool:
        return self.n < self.fallback_below


def plan_cascade(schedule: SplitSchedule) -> tuple[dict[int, int], list[int]]:
    """Which layer sizes are split (size -> first block size) and which are plain.

    Starting from the full size, each level splits every pending size ``s`` with the
    level's block size ``k`` when ``2 <= k < s``; both parts (sizes ``k`` and
    ``s - k + 1``) go to the next level. Sizes left over, and every smaller size,
    are filled by the one-edge recurrence.
    """
    n = schedule.n
    splits: dict[int, int] = {}
    pending = {n}
    for k in (schedule.k2, schedule.k4, schedule.k1):
        nxt = set()
        for s in pending:
            if s in splits:
                continue
            if 2 <= k < s:
                splits[s] = k
                nxt.update((k, s - k + 1))
            else:
                nxt.add(s)
        pending = nxt
    leaves = [s for s in pending if s not in splits]
    top = max(leaves, default=1)
    plain = [s for s in range(1, top + 1) if s not in splits]
    return splits, plain


def _popcounts(n: int) -> np.ndarray:
    ar = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        pop += ((ar >> b) & 1).astype(np.int8)
    return pop


def _members(mask: int, n: int) -> list[int]:
    return [b for b in range(n) if (mask >> b) & 1]


@dataclass
class DPTable:
    """Dense layers keyed by subset size, plus a sparse memo for other queries.

    ``rank[mask]`` is the row of ``mask`` within its size layer (masks of one size
    in increasing numeric order). Predecessor links are not stored; they are
    recovered from the layers when a path is reconstructed.
    """

    n: int
    w: np.ndarray = field(repr=False)
    rank: np.ndarray | None = field(default=None, repr=False)
    masks: dict[int, np.ndarray] = field(default_factory=dict, repr=False)
    layers: dict[int, np.ndarray] = field(default_factory=dict, repr=False)
    method: dict[int, object] = field(default_factory=dict)
    memo: dict[tuple[int, int, int], float] = field(default_factory=dict, repr=False)
    backend: str | None = None

    @classmethod
    def create(cls, graph: OverlapGraph | np.ndarray, dense: bool = True, backend: str | None = None) -> "DPTable":
        w = graph.w if isinstance(graph, OverlapGraph) else np.asarray(graph)
        n = w.shape[0]
        table = cls(n, np.ascontiguousarray(w, dtype=np.int32), backend=backend)
        if dense:
            if n > MAX_DENSE_N:
                raise ValueError(f"dense subset tables support n <= {MAX_DENSE_N}, got {n}")
            pop = _popcounts(n)
            rank = np.zeros(1 << n, dtype=np.int32)
            for s in range(1, n + 1):
                m = np.flatnonzero(pop == s).astype(np.int64)
                rank[m] = np.arange(len(m), dtype=np.int32)
                table.masks[s] = m
            table.rank = rank
        return table

    @property
    def kernels(self):
        return kernels.get_backend(self.backend)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def fill_plain(self, s: int) -> None:
        """Layer ``s`` from layer ``s - 1`` by the one-edge recurrence."""
        if s in self.layers:
            return
        k = self.kernels
        if s == 1:
            self.layers[1] = k.singleton_layer(self.n)
        else:
            self.fill_plain(s - 1)
            self.layers[s] = k.corollary_layer(self.layers[s - 1], self.rank, self.masks[s], self.w, self.n, s)
        self.method[s] = "corollary"

    def fill_split(self, s: int, k: int) -> None:
        a, b = self.layers[k], self.layers[s - k + 1]
        self.layers[s] = self.kernels.split_layer(a, b, self.rank, self.masks[s], self.n, s, k)
        self.method[s] = ("split", k)

    def lookup(self, Y: int, v: int, u: int) -> int:
        """Raw dense entry; ``NEG`` marks an impossible path."""
        return int(self.layers[bin(Y).count("1")][self.rank[Y], v, u])


def get_l(table: DPTable, Y: int, v: int, u: int) -> float:
    """``L(Y, v, u)``, or ``-inf`` when no path from ``v`` to ``u`` covers ``Y``."""
    if not ((Y >> v) & 1 and (Y >> u) & 1):
        raise ValueError(f"nodes {v}, {u} must belong to the subset {Y:#b}")
    s = bin(Y).count("1")
    layer = table.layers.get(s)
    if layer is not None:
        val = int(layer[table.rank[Y], v, u])
        return NEG_INF if val <= NEG // 2 else val
    key = (Y, v, u)
    hit = table.memo.get(key)
    if hit is not None:
        return hit
    if s == 1:
        best = 0
    elif v == u:
        best = NEG_INF
    else:
        rest = Y ^ (1 << u)
        best = NEG_INF
        for y in _members(rest, table.n):
            val = get_l(table, rest, v, y)
            if val != NEG_INF:
                best = max(best, val + int(table.w[y, u]))
    table.memo[key] = best
    return best


def step1(table: DPTable, schedule: SplitSchedule, qsim: QSim | None = None, upto: int | None = None) -> DPTable:
    """Classically fill every layer of size at most ``upto`` (default ``k1``, at least 1)."""
    qsim = qsim or QSim()
    n = table.n
    top = max(1, schedule.k1 if upto is None else upto)
    for s in range(1, top + 1):
        table.fill_plain(s)
    subsets = sum(math.comb(n, i) for i in range(1, top + 1))
    qsim.ledger.charge("subset_dp", classical=n**3 * subsets, calls=subsets)
    return table


def cascade_costs(schedule: SplitSchedule) -> dict[str, float]:
    """Query cost of one element at each nested maximum-finding level."""
    n, k1, k4, k2 = schedule.n, schedule.k1, schedule.k4, schedule.k2
    q1 = math.sqrt(math.comb(k4, k1) * n)
    q2 = math.sqrt(math.comb(k2, k4) * n) * q1
    q3 = math.sqrt(math.comb(n, k2) * n) * q2
    return {"level1": q1, "level2": q2, "level3": q3}


def _reconstruct(table: DPTable, Y: int, v: int, u: int) -> list[int]:
    s = bin(Y).count("1")
    if s == 1:
        return [v]
    target = table.lookup(Y, v, u)
    method = table.method[s]
    n = table.n
    if method == "corollary":
        rest = Y ^ (1 << u)
        for y in _members(rest, n):
            val = table.lookup(rest, v, y)
            if val > NEG // 2 and val + int(table.w[y, u]) == target:
                return _reconstruct(table, rest, v, y) + [u]
    else:
        k = method[1]
        for comb in combinations(_members(Y, n), k):
            if v not in comb or u in comb:
                continue
            sub = sum(1 << c for c in comb)
            for y in comb:
                a = table.lookup(sub, v, y)
                if a <= NEG // 2:
                    continue
                part = (Y ^ sub) | (1 << y)
                b = table.lookup(part, y, u)
                if b > NEG // 2 and a + b == target:
                    return _reconstruct(table, sub, v, y) + _reconstruct(table, part, y, u)[1:]
    raise AssertionError(f"no predecessor reproduces L({Y:#b}, {v}, {u}) = {target}")


def nested_max_solve(
    table: DPTable, schedule: SplitSchedule, qsim: QSim | None = None, cascade: bool | None = None
) -> tuple[int, list[int]]:
    """Best Hamiltonian path weight and one path attaining it.

    With the cascade, the full-set layer is assembled from nested splits whose
    innermost blocks come from the classical layers. Otherwise (small ``n`` by
    default) every layer is built by the one-edge recurrence.
    """
    qsim = qsim or QSim()
    n = table.n
    if n == 1:
        return 0, [0]
    use_cascade = (not schedule.fallback) if cascade is None else cascade
    full = table.full_mask()
    led = qsim.ledger
    if use_cascade:
        splits, plain = plan_cascade(schedule)
        top_plain = max(plain)
        if top_plain > max(1, schedule.k1):
            # the split left blocks larger than the classical step covered
            extra = [s for s in plain if s > max(1, schedule.k1)]
            led.charge("cascade_miss", classical=sum(n**3 * math.comb(n, s) for s in extra), calls=len(extra))
        for s in plain:
            table.fill_plain(s)
        for s in sorted(splits):
            table.fill_split(s, splits[s])
        costs = cascade_costs(schedule)
        element_cost = costs["level3"]
        led.charge("unrank", classical=element_cost * n, calls=0)
    else:
        if n > MAX_HELD_KARP_N:
            raise ValueError(f"plain subset DP keeps every layer; use the cascade for n > {MAX_HELD_KARP_N}")
        for s in range(1, n + 1):
            table.fill_plain(s)
        element_cost = 1.0
    top = table.layers[n][0]
    pairs = [(v, u) for v in range(n) for u in range(n) if v != u]
    idx, val = qsim.qmax(lambda k: int(top[pairs[k]]), len(pairs), element_cost=element_cost)
    v, u = pairs[idx]
    if val <= NEG // 2:
        raise RuntimeError("maximum search returned an unreachable endpoint pair")
    return int(val), _reconstruct(table, full, v, u)


def held_karp_max(w: np.ndarray) -> int:
    """Best Hamiltonian path weight by the plain recurrence on the numpy kernels."""
    w = np.ascontiguousarray(w, dtype=np.int32)
    n = w.shape[0]
    if n == 1:
        return 0
    table = DPTable.create(w, backend="python")
    k = kernels.get_backend("python")
    prev = k.singleton_layer(n)
    for s in range(2, n + 1):
        prev = k.corollary_layer(prev, table.rank, table.masks[s], w, n, s)
    return int(prev[0].max())


def path_weight(w: np.ndarray, path: Sequence[int]) -> int:
    return int(sum(w[a, b] for a, b in zip(path, path[1:])))
