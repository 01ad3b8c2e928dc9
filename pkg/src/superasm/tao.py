"""Assembling a text from overlapping dictionary strings.

The pipeline locates every dictionary string in the suffix array, records the longest
string starting at each text position (the ``long`` array) with one range update per
string, and then walks the text greedily. Positions and dictionary indexes are 0-based.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import segtree
from .qsim import HIGH, LOW, QSim, QueryLedger
from .strings import as_symbols
from .suffix_array import SuffixArrayIndex, construct as build_suffix_array

ORACLE_BUDGET = 10**7


@dataclass(frozen=True)
class TAOInstance:
    t: bytes
    strings: tuple[bytes, ...]

    def __post_init__(self):
        if len(self.t) == 0:
            raise ValueError("text must be non-empty")
        if not self.strings:
            raise ValueError("dictionary must be non-empty")
        if any(len(s) == 0 for s in self.strings):
            raise ValueError("dictionary strings must be non-empty")

    @classmethod
    def of(cls, t, strings) -> "TAOInstance":
        return cls(as_symbols(t), tuple(as_symbols(s) for s in strings))

    @property
    def m(self) -> int:
        return len(self.t)

    @property
    def n(self) -> int:
        return len(self.strings)

    @property
    def L(self) -> int:
        return sum(map(len, self.strings))


@dataclass(frozen=True)
class Assembly:
    """Start positions ``Q`` and dictionary indexes ``I`` of a covering."""

    Q: tuple[int, ...]
    I: tuple[int, ...]

    def __len__(self):
        return len(self.Q)


@dataclass
class AssemblyResult:
    assembly: Assembly | None
    ledger: QueryLedger = field(repr=False)
    long: list[int] = field(default_factory=list, repr=False)

    @property
    def feasible(self) -> bool:
        return self.assembly is not None

    def to_dict(self) -> dict[str, Any]:
        a = self.assembly
        return {
            "feasible": a is not None,
            "Q": list(a.Q) if a else None,
            "I": list(a.I) if a else None,
            "ledger": self.ledger.to_dict(),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def search_segment(sa: SuffixArrayIndex, u: bytes, qsim: QSim | None = None) -> tuple[int, int] | None:
    """Inclusive range of suffix-array ranks whose suffixes start with ``u``.

    Two binary searches, each stopping at the boundary rank where the neighbour's
    clamped prefix compares below (resp. above) ``u``. Ranks outside the array act
    as sentinels ordered below and above every string.
    """
    qsim = qsim or QSim()
    m, k = len(sa), len(u)

    def pref(i):
        if i < 0:
            return LOW
        if i >= m:
            return HIGH
        return sa.prefix(i, k)

    low = None
    lo, hi = 0, m - 1
    while low is None and lo <= hi:
        mid = (lo + hi) // 2
        c = qsim.qcompare(pref(mid), u)
        c1 = qsim.qcompare(pref(mid - 1), u)
        if c == 0 and c1 == -1:
            low = mid
        if c < 0:
            lo = mid + 1
        else:
            hi = mid - 1
    if low is None:
        return None
    high = None
    lo, hi = 0, m - 1
    while high is None and lo <= hi:
        mid = (lo + hi) // 2
        c = qsim.qcompare(pref(mid), u)
        c1 = qsim.qcompare(pref(mid + 1), u)
        if c == 0 and c1 == 1:
            high = mid
        if c <= 0:
            lo = mid + 1
        else:
            hi = mid - 1
    if high is None:
        return None
    return low, high


def build_long(inst: TAOInstance, qsim: QSim | None = None, sa: SuffixArrayIndex | None = None) -> list[int]:
    """Index of the longest dictionary string starting at each position, or -1."""
    qsim = qsim or QSim()
    sa = sa or build_suffix_array(inst.t)
    tree = segtree.construct([(0, -1)] * inst.m)
    for j, s in enumerate(inst.strings):
        seg = search_segment(sa, s, qsim)
        if seg is not None:
            tree.update(seg[0], seg[1], len(s), j)
    leaves = tree.push()
    long = [-1] * inst.m
    for rank, (_, d) in enumerate(leaves):
        long[int(sa.suf[rank])] = d
    return long


def construct_qi(long: Sequence[int], inst: TAOInstance) -> Assembly | None:
    """Greedy cover: from each reached end, jump to the start reaching furthest."""
    m, S = inst.m, inst.strings
    if long[0] < 0:
        return None
    Q, I = [0], [long[0]]
    left, right = 1, len(S[long[0]])
    # stop once the last chosen string reaches the end of the text
    while Q[-1] + len(S[I[-1]]) < m:
        best_i, best_q = left, -1
        for j in range(left, min(right, m - 1) + 1):
            if long[j] >= 0 and j + len(S[long[j]]) - 1 > best_q:
                best_i, best_q = j, j + len(S[long[j]]) - 1
        if best_q == -1 or best_q < right:
            return None
        Q.append(best_i)
        I.append(long[best_i])
        left, right = right + 1, best_q + 1
    return Assembly(tuple(Q), tuple(I))


def assemble(inst: TAOInstance, qsim: QSim | None = None) -> AssemblyResult:
    qsim = qsim or QSim()
    led = qsim.ledger
    with led.stage("suffix_array"):
        sa = build_suffix_array(inst.t)
        led.charge("construct", classical=inst.m)
    with led.stage("long"):
        long = build_long(inst, qsim, sa)
    with led.stage("qi"):
        asm = construct_qi(long, inst)
        led.charge("scan", classical=inst.m)
    return AssemblyResult(asm, led, long)


def naive_long(inst: TAOInstance) -> list[int]:
    out = []
    for i in range(inst.m):
        best, arg = 0, -1
        for j, s in enumerate(inst.strings):
            if len(s) > best and inst.t.startswith(s, i):
                best, arg = len(s), j
        out.append(arg)
    return out


def feasibility_oracle(inst: TAOInstance) -> tuple[bool, Assembly | None]:
    """Exact decision by a left-to-right scan over placements.

    A placement of ``s_j`` at ``q`` can continue a chain when ``q == 0`` or some
    valid placement starting before ``q`` ends at or after ``q``. The instance is
    feasible iff a valid placement ends exactly at ``m``. Each placement keeps the
    furthest-reaching earlier placement as its predecessor, giving a witness.
    """
    t, S, m = inst.t, inst.strings, inst.m
    if m * inst.L > ORACLE_BUDGET:
        raise ValueError("instance exceeds the oracle's comparison budget")
    at: list[list[int]] = [[] for _ in range(m)]
    for j, s in enumerate(S):
        q = t.find(s)
        while q != -1:
            at[q].append(j)
            q = t.find(s, q + 1)
    # best = (end, q, j) of the furthest-reaching valid placement seen so far
    best: tuple[int, int, int] | None = None
    pred: dict[tuple[int, int], tuple[int, int] | None] = {}
    final = None
    for q in range(m):
        if q > 0 and (best is None or best[0] < q):
            break
        before = None if q == 0 else (best[1], best[2])
        for j in at[q]:
            pred[(q, j)] = before
            e = q + len(S[j])
            if e == m and final is None:
                final = (q, j)
        for j in at[q]:
            e = q + len(S[j])
            if best is None or e > best[0]:
                best = (e, q, j)
    if final is None:
        return False, None
    Q, I = [], []
    node = final
    while node is not None:
        Q.append(node[0])
        I.append(node[1])
        node = pred[node]
    return True, Assembly(tuple(reversed(Q)), tuple(reversed(I)))


def validate_assembly(inst: TAOInstance, asm: Assembly | None) -> bool:
    if asm is None or len(asm.Q) == 0 or len(asm.Q) != len(asm.I):
        return False
    S, t, m = inst.strings, inst.t, inst.m
    for i in asm.I:
        if not 0 <= i < len(S):
            return False
    if asm.Q[0] != 0 or asm.Q[-1] != m - len(S[asm.I[-1]]):
        return False
    for k in range(1, len(asm.Q)):
        if asm.Q[k] > asm.Q[k - 1] + len(S[asm.I[k - 1]]):
            return False
    return all(t[q : q + len(S[i])] == S[i] for q, i in zip(asm.Q, asm.I))
