"""Seeded instance generators for both problems."""
from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from ..strings import write_instance
from ..tao import TAOInstance

ALPHABET = b"ACGTBDEFHIJKLMNOPQRSUVWXYZ"


@dataclass(frozen=True)
class GenSpec:
    """``min_len..max_len`` bounds dictionary string lengths; ``m`` is the tao text length."""

    problem: str = "scs"
    n: int = 8
    min_len: int = 4
    max_len: int = 8
    alphabet: int = 4
    seed: int = 0
    planted: bool = True
    m: int = 64

    def __post_init__(self):
        if self.problem not in ("scs", "tao"):
            raise ValueError(f"unknown problem {self.problem!r}")
        if min(self.n, self.min_len, self.alphabet, self.m) < 1:
            raise ValueError("sizes must be positive")
        if self.min_len > self.max_len:
            raise ValueError("min_len exceeds max_len")
        if self.alphabet > len(ALPHABET):
            raise ValueError(f"alphabet size is at most {len(ALPHABET)}")


def random_string(rng: random.Random, length: int, alphabet: int) -> bytes:
    return bytes(rng.choice(ALPHABET[:alphabet]) for _ in range(length))


def gen_scs(spec: GenSpec) -> list[bytes]:
    rng = random.Random(spec.seed)
    return [random_string(rng, rng.randint(spec.min_len, spec.max_len), spec.alphabet) for _ in range(spec.n)]


def gen_tao(spec: GenSpec) -> TAOInstance:
    """Planted: ``t`` is tiled by overlapping pieces that all enter the dictionary,
    topped up with random distractors to ``n`` strings. Otherwise ``t`` is random and
    each dictionary string is a slice of ``t`` or random, with equal odds.
    """
    rng = random.Random(spec.seed)
    if not spec.planted:
        t = random_string(rng, spec.m, spec.alphabet)
        strings = []
        for _ in range(spec.n):
            k = min(rng.randint(spec.min_len, spec.max_len), spec.m)
            if rng.random() < 0.5:
                q = rng.randrange(spec.m - k + 1)
                strings.append(t[q : q + k])
            else:
                strings.append(random_string(rng, k, spec.alphabet))
        return TAOInstance(t, tuple(strings))
    spans = []
    end = 0
    while end < spec.m or not spans:
        k = rng.randint(spec.min_len, spec.max_len)
        if spans:
            q0, e0 = spans[-1]
            # start inside or right after the previous piece, strictly after its start
            q = rng.randint(q0 + 1, e0)
        else:
            q = 0
        spans.append((q, q + k))
        end = max(end, q + k)
    # every piece starts no later than its predecessor ends, so the piece reaching
    # furthest closes a valid chain
    m = max(e for _, e in spans)
    t = random_string(rng, m, spec.alphabet)
    pieces = list(dict.fromkeys(t[q:e] for q, e in spans))
    while len(pieces) < spec.n:
        pieces.append(random_string(rng, rng.randint(spec.min_len, spec.max_len), spec.alphabet))
    rng.shuffle(pieces)
    return TAOInstance(t, tuple(pieces))


def write_tao(inst: TAOInstance, text_path: str | Path, dict_path: str | Path) -> None:
    Path(text_path).write_text(inst.t.decode("ascii") + "\n", encoding="utf-8")
    write_instance(dict_path, inst.strings)


def gen(spec: GenSpec, out: str | Path) -> list[Path]:
    """Write the instance under ``out`` and return the written paths."""
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    if spec.problem == "scs":
        path = out / "dict.txt"
        write_instance(path, gen_scs(spec))
        return [path]
    tp, dp = out / "text.txt", out / "dict.txt"
    write_tao(gen_tao(spec), tp, dp)
    return [tp, dp]
