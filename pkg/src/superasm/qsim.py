"""Classical stand-ins for the quantum search primitives, with query-cost accounting.

Every primitive returns the exact classical answer and charges its quantum query
cost to a :class:`QueryLedger`. An optional noise mode corrupts answers with a fixed
per-call probability so that majority-of-k repetition can be studied.
"""
from __future__ import annotations

import json
import math
import random
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence


@dataclass
class LedgerEntry:
    stage: str
    subroutine: str
    calls: int = 0
    charged_cost: float = 0.0
    classical_cost: float = 0.0


class QueryLedger:
    """Per-(stage, subroutine) call counts and charged costs for one solver run.

    ``charged_cost`` is in query units; ``classical_cost`` collects classical work the
    cost model mentions but does not count as queries (hash tables, subset unranking).
    """

    def __init__(self):
        self._entries: dict[tuple[str, str], LedgerEntry] = {}
        self._stage = ""
        self._muted = 0

    @contextmanager
    def stage(self, name: str):
        prev, self._stage = self._stage, name
        try:
            yield self
        finally:
            self._stage = prev

    @contextmanager
    def muted(self):
        """Suppress charges; used while evaluating elements of an enclosing search."""
        self._muted += 1
        try:
            yield self
        finally:
            self._muted -= 1

    def charge(self, subroutine: str, cost: float = 0.0, classical: float = 0.0, calls: int = 1) -> None:
        if cost < 0 or classical < 0 or calls < 0:
            raise ValueError("ledger charges must be non-negative")
        if self._muted:
            return
        key = (self._stage, subroutine)
        e = self._entries.get(key)
        if e is None:
            e = self._entries[key] = LedgerEntry(self._stage, subroutine)
        e.calls += calls
        e.charged_cost += cost
        e.classical_cost += classical

    def entries(self) -> list[LedgerEntry]:
        return list(self._entries.values())

    def calls(self, subroutine: str, stage: str | None = None) -> int:
        return sum(e.calls for e in self._select(subroutine, stage))

    def cost(self, subroutine: str | None = None, stage: str | None = None) -> float:
        return sum(e.charged_cost for e in self._select(subroutine, stage))

    def classical(self, subroutine: str | None = None, stage: str | None = None) -> float:
        return sum(e.classical_cost for e in self._select(subroutine, stage))

    def _select(self, subroutine, stage):
        for e in self._entries.values():
            if subroutine is not None and e.subroutine != subroutine:
                continue
            if stage is not None and e.stage != stage:
                continue
            yield e

    @property
    def total(self) -> float:
        return sum(e.charged_cost for e in self._entries.values())

    @property
    def classical_total(self) -> float:
        return sum(e.classical_cost for e in self._entries.values())

    def to_dict(self) -> dict[str, Any]:
        rows = [
            {
                "stage": e.stage,
                "subroutine": e.subroutine,
                "calls": e.calls,
                "charged_cost": e.charged_cost,
                "classical_cost": e.classical_cost,
            }
            for e in self._entries.values()
        ]
        return {"rows": rows, "total_charged_cost": self.total, "total_classical_cost": self.classical_total}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


@dataclass(frozen=True)
class NoiseConfig:
    enabled: bool = False
    per_call_failure_probability: float = 0.0
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.per_call_failure_probability <= 0.1:
            raise ValueError("per-call failure probability must lie in [0, 0.1]")


class _Sentinel:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


LOW = _Sentinel("LOW")
HIGH = _Sentinel("HIGH")


def log_floor(x: float) -> float:
    """Natural log floored at 1, so tiny arguments never zero out a cost term."""
    return max(1.0, math.log(x)) if x > 0 else 1.0


def is_substring_cost(pattern_len: int, text_len: int, n: int) -> float:
    if text_len == 0:
        return 0.0
    lt = math.sqrt(text_len) * log_floor(math.sqrt(text_len / pattern_len)) * log_floor(pattern_len) * log_floor(n)
    return lt + math.sqrt(pattern_len) * log_floor(pattern_len) ** 2


def _majority(answers: list):
    return Counter(answers).most_common(1)[0][0]


def _kmp_table(pattern: Sequence[int]) -> list[int]:
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def find_in_accessor(pattern: Sequence[int], text, length: int) -> bool:
    """Knuth-Morris-Pratt scan over an indexable symbol accessor."""
    if len(pattern) > length:
        return False
    fail = _kmp_table(pattern)
    k = 0
    for i in range(length):
        c = text[i]
        while k and c != pattern[k]:
            k = fail[k - 1]
        if c == pattern[k]:
            k += 1
            if k == len(pattern):
                return True
    return False


class QSim:
    """Emulator bound to one ledger, with optional noise and majority repetition."""

    def __init__(self, ledger: QueryLedger | None = None, noise: NoiseConfig | None = None, repetitions: int = 1):
        if repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        self.ledger = ledger if ledger is not None else QueryLedger()
        self.noise = noise or NoiseConfig()
        self.repetitions = repetitions
        self._rng = random.Random(self.noise.rng_seed)

    def _run(self, name: str, exact, corrupt: Callable[[Any, random.Random], Any], cost: float):
        noisy = self.noise.enabled and self.noise.per_call_failure_probability > 0
        if not noisy:
            self.ledger.charge(name, cost * self.repetitions, calls=self.repetitions)
            return exact
        answers = []
        q = self.noise.per_call_failure_probability
        for _ in range(self.repetitions):
            ans = exact
            if self._rng.random() < q:
                ans = corrupt(exact, self._rng)
            answers.append(ans)
            self.ledger.charge(name, cost)
        return _majority(answers)

    # -- primitives -------------------------------------------------------------------

    def first_one_search(self, predicate: Callable[[int], bool], N: int, direction: str = "descending") -> int | None:
        """Extremal index in ``0..N`` where ``predicate`` holds (max when descending)."""
        if direction not in ("ascending", "descending"):
            raise ValueError(f"unknown direction {direction!r}")
        if N <= 0:
            return None
        order = range(N, -1, -1) if direction == "descending" else range(N + 1)
        exact = next((k for k in order if predicate(k)), None)

        def corrupt(ans, rng):
            choices = [k for k in range(-1, N + 1) if k != (-1 if ans is None else ans)]
            k = rng.choice(choices)
            return None if k == -1 else k

        return self._run("first_one_search", exact, corrupt, math.sqrt(N))

    def all_ones_search(self, candidates: Iterable[Hashable], predicate: Callable[[Any], bool]) -> list:
        """Every candidate satisfying ``predicate``, in input order."""
        cand = list(candidates)
        if not cand:
            return []
        exact = tuple(c for c in cand if predicate(c))

        def corrupt(ans, rng):
            flip = rng.choice(cand)
            return tuple(c for c in cand if (c in ans) != (c == flip))

        cost = math.sqrt(len(cand) * max(len(exact), 1))
        return list(self._run("all_ones_search", exact, corrupt, cost))

    def qmax(self, value_accessor: Callable[[int], Any], N: int, element_cost: float = 1.0) -> tuple[int, Any]:
        """Maximum over ``value_accessor(0..N-1)``; ties go to the smallest index.

        Charges ``sqrt(N) * element_cost``. Charges made while evaluating elements are
        suppressed, since ``element_cost`` already accounts for them.
        """
        if N < 1:
            raise ValueError("qmax needs a non-empty domain")
        with self.ledger.muted():
            values = [value_accessor(k) for k in range(N)]
        best = 0
        for k in range(1, N):
            if values[k] > values[best]:
                best = k

        def corrupt(ans, rng):
            if N == 1:
                return ans
            k = rng.randrange(N - 1)
            return k + (k >= ans)

        idx = self._run("qmax", best, corrupt, math.sqrt(N) * element_cost)
        return idx, values[idx]

    def qcompare(self, u, v) -> int:
        """Three-way lexicographic comparison; shorter is smaller on a common prefix.

        Either operand may be :data:`LOW` or :data:`HIGH`, sentinels ordered below and
        above every string. Sentinel comparisons are free.
        """
        if u is LOW or v is HIGH:
            return 0 if u is v else -1
        if u is HIGH or v is LOW:
            return 0 if u is v else 1
        exact = (u > v) - (u < v)

        def corrupt(ans, rng):
            return rng.choice([x for x in (-1, 0, 1) if x != ans])

        return self._run("qcompare", exact, corrupt, math.sqrt(min(len(u), len(v))))

    def is_substring(self, pattern: Sequence[int], text, text_len: int | None = None, n: int = 1) -> bool:
        """Whether ``pattern`` occurs in the accessor ``text`` (length ``text_len``)."""
        if len(pattern) == 0:
            raise ValueError("pattern must be non-empty")
        length = len(text) if text_len is None else text_len
        exact = find_in_accessor(pattern, text, length)
        return self._run(
            "is_substring", exact, lambda ans, rng: not ans, is_substring_cost(len(pattern), length, n)
        )


# module-level exact helpers, each charging a fresh or supplied ledger


def first_one_search(predicate, N, direction="descending", ledger: QueryLedger | None = None):
    return QSim(ledger).first_one_search(predicate, N, direction)


def all_ones_search(candidates, predicate, ledger: QueryLedger | None = None):
    return QSim(ledger).all_ones_search(candidates, predicate)


def qmax(value_accessor, N, element_cost=1.0, ledger: QueryLedger | None = None):
    return QSim(ledger).qmax(value_accessor, N, element_cost)


def qcompare(u, v, ledger: QueryLedger | None = None):
    return QSim(ledger).qcompare(u, v)


def is_substring(pattern, text, text_len=None, n=1, ledger: QueryLedger | None = None):
    return QSim(ledger).is_substring(pattern, text, text_len, n)
