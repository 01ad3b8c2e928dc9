"""Segment tree over (g, d) pairs with range assign-if-greater updates and a bulk push."""
from __future__ import annotations

from typing import Sequence

NEG_INF = float("-inf")


class SegTree:
    """Implicit full binary tree over ``b``; node ``v`` has children ``2v`` and ``2v+1``.

    Each node keeps a pending pair ``(g, d)`` plus the update sequence number that
    installed it. A position's value after :meth:`push` is the best pending pair on its
    root path: larger ``g`` wins, and on equal ``g`` the earlier update wins, which is
    exactly "assign only if strictly greater" applied in update order.

    Positions are 0-based; ranges are inclusive.
    """

    def __init__(self, b: Sequence[tuple[float, int]]):
        if len(b) == 0:
            raise ValueError("segment tree needs at least one element")
        self.l = len(b)
        size = 1
        while size < self.l:
            size *= 2
        self.size = size
        nodes = 2 * size
        self.g = [NEG_INF] * nodes
        self.d = [-1] * nodes
        self.stamp = [-1] * nodes
        self.lo = [0] * nodes
        self.hi = [0] * nodes
        for k in range(size):
            v = size + k
            self.lo[v] = self.hi[v] = k
            if k < self.l:
                self.g[v], self.d[v] = b[k]
        for v in range(size - 1, 0, -1):
            self.lo[v] = self.lo[2 * v]
            self.hi[v] = self.hi[2 * v + 1]
        self._clock = 0
        self._dirty = False

    def update(self, i: int, j: int, x: float, y: int) -> None:
        """Give every position in ``[i, j]`` the pair ``(x, y)`` where its ``g < x``."""
        if not 0 <= i <= j < self.l:
            raise ValueError(f"bad update range [{i}, {j}] for {self.l} elements")
        self._clock += 1
        self._dirty = True
        self._update(1, i, j, x, y, self._clock)

    def _update(self, v, i, j, x, y, t):
        if i > j:
            return
        if self.lo[v] == i and self.hi[v] == j:
            if self.g[v] < x:
                self.g[v], self.d[v], self.stamp[v] = x, y, t
            # a covering pending with g >= x dominates every position below v
            return
        m = self.hi[2 * v]
        if m >= j:
            self._update(2 * v, i, j, x, y, t)
        elif m < i:
            self._update(2 * v + 1, i, j, x, y, t)
        else:
            self._update(2 * v, i, m, x, y, t)
            self._update(2 * v + 1, m + 1, j, x, y, t)

    def push(self) -> list[tuple[float, int]]:
        """Move pending pairs down to the leaves; internal pendings are cleared."""
        g, d, st = self.g, self.d, self.stamp
        for v in range(2, 2 * self.size):
            p = v >> 1
            if g[p] > g[v] or (g[p] == g[v] and st[p] < st[v]):
                g[v], d[v], st[v] = g[p], d[p], st[p]
        for v in range(1, self.size):
            g[v], d[v], st[v] = NEG_INF, -1, -1
        self._dirty = False
        return self.leaves()

    def leaves(self) -> list[tuple[float, int]]:
        s = self.size
        return [(self.g[s + k], self.d[s + k]) for k in range(self.l)]

    def request(self, i: int) -> tuple[float, int]:
        if __debug__ and self._dirty:
            raise RuntimeError("request before push: pending updates not applied")
        if not 0 <= i < self.l:
            raise IndexError(i)
        v = self.size + i
        return self.g[v], self.d[v]


def construct(b: Sequence[tuple[float, int]]) -> SegTree:
    return SegTree(b)


class NaiveAssignMax:
    """Reference model: a plain array with per-element assign-if-strictly-greater."""

    def __init__(self, b: Sequence[tuple[float, int]]):
        self.b = list(b)

    def update(self, i: int, j: int, x: float, y: int) -> None:
        for q in range(i, j + 1):
            if self.b[q][0] < x:
                self.b[q] = (x, y)

    def request(self, i: int) -> tuple[float, int]:
        return self.b[i]
