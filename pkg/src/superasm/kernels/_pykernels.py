"""Pure numpy kernels; the reference backend and the fallback when the extension is absent.

Layer arrays have shape ``(C(n, s), n, n)``: row ``rank[mask]`` holds the best path
weights ``L(mask, v, u)`` for subsets of size ``s``. Unreachable entries hold ``NEG``.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

NEG = -(1 << 29)
_CHUNK = 4096

BACKEND = "python"


def members(masks: np.ndarray, n: int, s: int) -> np.ndarray:
    """Ascending node ids of each mask, shape ``(len(masks), s)``."""
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return np.nonzero(bits)[1].reshape(len(masks), s)


def singleton_layer(n: int) -> np.ndarray:
    out = np.full((n, n, n), NEG, dtype=np.int32)
    for v in range(n):
        out[v, v, v] = 0
    return out


def corollary_layer(prev, rank, masks, w, n, s):
    """Size-``s`` layer from the size-``s-1`` layer: extend by one final edge."""
    out = np.full((len(masks), n, n), NEG, dtype=np.int32)
    for lo in range(0, len(masks), _CHUNK):
        m = masks[lo : lo + _CHUNK]
        mem = members(m, n, s)
        rows = np.arange(len(m))
        for pos in range(s):
            u = mem[:, pos]
            prior = prev[rank[m ^ (np.int64(1) << u)]]
            wy = w[:, u].T
            best = (prior + wy[:, None, :]).max(axis=2)
            out[lo + rows, :, u] = best
    out[out < NEG // 2] = NEG
    return out


def split_layer(A, B, rank, masks, n, s, k):
    """Size-``s`` layer by splitting each set into a first block of size ``k``.

    ``L(Y, v, u) = max over Y' (|Y'| = k, v in Y', u not in Y'), y in Y' of
    L(Y', v, y) + L((Y - Y') + {y}, y, u)``; ``A`` is the size-``k`` layer and ``B``
    the size-``s-k+1`` layer.
    """
    out = np.full((len(masks), n, n), NEG, dtype=np.int32)
    one = np.int64(1)
    for lo in range(0, len(masks), _CHUNK):
        m = masks[lo : lo + _CHUNK]
        o = out[lo : lo + _CHUNK]
        mem = members(m, n, s)
        for comb in combinations(range(s), k):
            sub = np.zeros(len(m), dtype=np.int64)
            for c in comb:
                sub |= one << mem[:, c]
            ra = rank[sub]
            rest = m ^ sub
            for c in comb:
                y = mem[:, c]
                first = A[ra, :, y]
                second = B[rank[rest | (one << y)], y, :]
                np.maximum(o, first[:, :, None] + second[:, None, :], out=o)
    out[out < NEG // 2] = NEG
    return out


def suffix_array(text: bytes) -> np.ndarray:
    """Prefix doubling with lexsort; O(m log^2 m)."""
    m = len(text)
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    rank = np.frombuffer(bytes(text), dtype=np.uint8).astype(np.int64)
    k = 1
    while True:
        second = np.full(m, -1, dtype=np.int64)
        if k < m:
            second[: m - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1, r2 = rank[sa], second[sa]
        new = np.empty(m, dtype=np.int64)
        new[sa] = np.concatenate(([0], np.cumsum((r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1]))))
        rank = new
        if rank.max() == m - 1 or k >= m:
            return sa.astype(np.int64)
        k *= 2
