"""End-to-end shortest common superstring solving, plus an exhaustive oracle."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Iterable, Sequence

import numpy as np

from ..qsim import NoiseConfig, QSim, QueryLedger
from ..strings import SCSInstance, naive_overlap_matrix
from .dp import DPTable, MAX_DENSE_N, SplitSchedule, nested_max_solve, step1
from .graph import OverlapGraph, construct_graph_allones, construct_graph_hash
from .reduce import naive_reduce, remove_duplicates_and_substrings

BRUTE_FORCE_MAX_N = 9


@dataclass(frozen=True)
class ScsConfig:
    graph_backend: str = "hash"
    alpha: float = 0.055
    seed: int = 0
    noise_p: float = 0.0
    repetitions: int = 1
    cascade: bool | None = None
    fallback_below: int = 16
    kernel_backend: str | None = None

    def __post_init__(self):
        if self.graph_backend not in ("hash", "allones"):
            raise ValueError(f"unknown graph backend {self.graph_backend!r}")


@dataclass
class ScsSolution:
    superstring: bytes
    path: list[int]
    weight: int
    reduced: tuple[bytes, ...]
    ledger: QueryLedger = field(repr=False)
    collisions: int = 0

    @property
    def length(self) -> int:
        return len(self.superstring)

    @property
    def reduced_n(self) -> int:
        return len(self.reduced)

    def to_dict(self) -> dict[str, Any]:
        return {
            "superstring": self.superstring.decode("latin-1"),
            "length": self.length,
            "path": list(self.path),
            "weight": self.weight,
            "reduced_n": self.reduced_n,
            "ledger": self.ledger.to_dict(),
            "collisions": self.collisions,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def construct_superstring_by_path(strings: Sequence[bytes], w: np.ndarray, path: Sequence[int]) -> bytes:
    """Glue the path's strings, dropping each one's overlap with its predecessor."""
    if not path:
        raise ValueError("path must be non-empty")
    out = bytearray(strings[path[0]])
    for prev, cur in zip(path, path[1:]):
        if prev == cur:
            raise ValueError("consecutive path nodes must differ")
        out += strings[cur][int(w[prev, cur]) :]
    return bytes(out)


def validate_superstring(strings: Iterable[bytes], t: bytes) -> bool:
    return all(bytes(s) in t for s in strings)


def solve_scs(inst: SCSInstance | Sequence[bytes], config: ScsConfig | None = None) -> ScsSolution:
    config = config or ScsConfig()
    if not isinstance(inst, SCSInstance):
        inst = SCSInstance.of(inst)
    ledger = QueryLedger()
    noise = NoiseConfig(config.noise_p > 0, config.noise_p, config.seed)
    qsim = QSim(ledger, noise, config.repetitions)

    with ledger.stage("reduce"):
        reduced = remove_duplicates_and_substrings(inst, qsim)
    strings = reduced.strings
    n = len(strings)
    if n > MAX_DENSE_N:
        raise ValueError(f"exact solving supports at most {MAX_DENSE_N} strings after reduction, got {n}")

    with ledger.stage("graph"):
        if config.graph_backend == "hash":
            graph = construct_graph_hash(strings, seed=config.seed, qsim=qsim)
        else:
            graph = construct_graph_allones(strings, qsim=qsim)

    schedule = SplitSchedule(n, config.alpha, config.fallback_below)
    table = DPTable.create(graph, backend=config.kernel_backend)
    use_cascade = (not schedule.fallback) if config.cascade is None else config.cascade
    with ledger.stage("step1"):
        step1(table, schedule, qsim, upto=None if use_cascade else n)
    with ledger.stage("step2"):
        weight, path = nested_max_solve(table, schedule, qsim, cascade=use_cascade)
    with ledger.stage("path"):
        t = construct_superstring_by_path(strings, graph.w, path)
        ledger.charge("concat", classical=len(t))
    return ScsSolution(t, path, weight, strings, ledger, graph.collisions)


def brute_force_scs(strings: Iterable[bytes]) -> tuple[int, bytes]:
    """Shortest superstring by trying every order of the reduced strings."""
    reduced = naive_reduce([bytes(s) for s in strings])
    n = len(reduced)
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force refuses n = {n} > {BRUTE_FORCE_MAX_N}")
    w = naive_overlap_matrix(reduced)
    best: bytes | None = None
    for perm in permutations(range(n)):
        t = construct_superstring_by_path(reduced, w, perm)
        if best is None or len(t) < len(best):
            best = t
    assert best is not None
    return len(best), best


def overlap_graph_naive(strings: Sequence[bytes]) -> OverlapGraph:
    return OverlapGraph(tuple(strings), naive_overlap_matrix(strings))
