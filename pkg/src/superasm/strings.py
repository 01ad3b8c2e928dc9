"""Symbol strings, dictionary instances, positional fingerprints and naive string oracles.

Strings are ``bytes``; a symbol is an ``int`` in ``0..255``. The separator used
by virtual concatenations is :data:`SEPARATOR` (256), which no byte can equal.
All positions and indices are 0-based.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

SEPARATOR = 256
HASH_BASE = 257

# sieve limit for materialized pools; above this the pool is sampled
_SIEVE_LIMIT = 50_000_000
_PRIME_CAP = 2**31


@dataclass(frozen=True)
class AlphabetSpec:
    size: int = 256
    separator: int = SEPARATOR

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("alphabet size must be >= 1")
        if 0 <= self.separator < self.size:
            raise ValueError("separator must lie outside the alphabet")


BYTES = AlphabetSpec()


def as_symbols(s: str | bytes) -> bytes:
    """Coerce ``s`` to a byte string, rejecting multi-byte characters."""
    if isinstance(s, (bytes, bytearray)):
        return bytes(s)
    try:
        return s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise ValueError(f"non single-byte symbol in {s!r}") from exc


@dataclass(frozen=True)
class SCSInstance:
    """An ordered dictionary ``s^1..s^n`` of non-empty strings."""

    strings: tuple[bytes, ...]

    def __post_init__(self):
        if not self.strings:
            raise ValueError("instance needs at least one string")
        if any(len(s) == 0 for s in self.strings):
            raise ValueError("dictionary strings must be non-empty")

    @classmethod
    def of(cls, strings: Iterable[str | bytes]) -> "SCSInstance":
        return cls(tuple(as_symbols(s) for s in strings))

    @property
    def n(self) -> int:
        return len(self.strings)

    @property
    def L(self) -> int:
        return sum(len(s) for s in self.strings)

    def __len__(self):
        return len(self.strings)

    def __getitem__(self, i):
        return self.strings[i]

    def __iter__(self):
        return iter(self.strings)


def parse_lines(text: str) -> list[bytes]:
    """Parse the one-string-per-line format; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(as_symbols(line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


def read_instance(path: str | Path) -> SCSInstance:
    return SCSInstance.of(parse_lines(Path(path).read_text(encoding="utf-8")))


def write_instance(path: str | Path, strings: Iterable[bytes]) -> None:
    Path(path).write_text("".join(s.decode("ascii") + "\n" for s in strings), encoding="utf-8")


# -- primes ---------------------------------------------------------------------------


def nth_prime_upper_bound(r: int) -> int:
    """Upper bound on the r-th prime (Rosser: r(ln r + ln ln r) for r >= 6)."""
    if r < 6:
        return 13
    return int(math.ceil(r * (math.log(r) + math.log(math.log(r))))) + 1


def sieve(limit: int) -> np.ndarray:
    """All primes <= limit, ascending."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for k in range(3, int(limit**0.5) + 1, 2):
        if is_p[k]:
            is_p[k * k :: 2 * k] = False
    return np.flatnonzero(is_p).astype(np.int64)


_sieve_cache = np.zeros(0, dtype=np.int64)
_sieve_limit = 0


def primes_upto(limit: int) -> np.ndarray:
    """Primes <= limit, served from one cached sieve that grows on demand."""
    global _sieve_cache, _sieve_limit
    if limit > _sieve_limit:
        _sieve_limit = max(limit, min(2 * _sieve_limit, _SIEVE_LIMIT))
        _sieve_cache = sieve(_sieve_limit)
    return _sieve_cache[: np.searchsorted(_sieve_cache, limit, side="right")]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(x: int) -> bool:
    """Deterministic Miller-Rabin, exact for x < 3.3e24."""
    if x < 2:
        return False
    for b in _MR_BASES:
        if x % b == 0:
            return x == b
    d, s = x - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        y = pow(b, d, x)
        if y in (1, x - 1):
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimePool:
    """The first ``r`` primes, either materialized or represented by a value bound.

    A sampled pool stands for every prime below ``bound``; since ``bound`` is at least
    the r-th prime this is a superset of the first ``r`` primes. ``capped`` is set when
    the bound was clipped to 2**31.
    """

    r: int
    primes: np.ndarray | None = field(repr=False, compare=False)
    bound: int
    capped: bool = False

    @classmethod
    def first(cls, r: int) -> "PrimePool":
        if r < 1:
            raise ValueError("prime pool must be non-empty")
        bound = nth_prime_upper_bound(r)
        capped = bound > _PRIME_CAP
        if capped:
            bound = _PRIME_CAP
        if bound <= _SIEVE_LIMIT:
            primes = primes_upto(bound)[:r]
            return cls(r, primes, int(primes[-1]), capped)
        return cls(r, None, bound, capped)

    @property
    def materialized(self) -> bool:
        return self.primes is not None

    @property
    def size(self) -> int:
        if self.primes is not None:
            return len(self.primes)
        return self.r

    @property
    def largest(self) -> int:
        return self.bound


def choose_prime(pool: PrimePool, rng_seed: int) -> int:
    """Pick a prime uniformly from ``pool``; deterministic for a fixed seed."""
    if pool.size == 0:
        raise ValueError("empty prime pool")
    rng = random.Random(rng_seed)
    if pool.primes is not None:
        return int(pool.primes[rng.randrange(len(pool.primes))])
    while True:
        x = rng.randrange(2, pool.bound + 1)
        if is_prime(x):
            return x


# -- rolling hashes -------------------------------------------------------------------


@dataclass(frozen=True)
class HashContext:
    """Prefix and suffix fingerprints of one string modulo ``p``.

    ``powers[k] = base**k mod p``; ``prefix[i]`` fingerprints ``u[:i]`` with weight
    ``base**k`` on ``u[k]``; ``suffix[j]`` fingerprints ``u[j:]`` with its own
    weights starting at ``base**0``.
    """

    text: bytes
    p: int
    base: int
    powers: tuple[int, ...] = field(repr=False)
    prefix: tuple[int, ...] = field(repr=False)
    suffix: tuple[int, ...] = field(repr=False)


def compute_prefix_suffix_hashes(u: bytes, p: int, base: int = HASH_BASE) -> HashContext:
    if base < 2:
        raise ValueError("hash base must be >= 2")
    n = len(u)
    powers = [1] * (n + 1)
    prefix = [0] * (n + 1)
    for i in range(1, n + 1):
        powers[i] = powers[i - 1] * base % p
        prefix[i] = (prefix[i - 1] + powers[i - 1] * u[i - 1]) % p
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = (u[j] + base * suffix[j + 1]) % p
    return HashContext(bytes(u), p, base, tuple(powers), tuple(prefix), tuple(suffix))


def hash_eq_suffix_prefix(ctx_i: HashContext, ctx_j: HashContext, r: int) -> bool:
    """Fingerprint test for ``s_i[-r:] == s_j[:r]``.

    The suffix starting at ``a = |s_i| - r`` carries weights from ``base**a``; it is
    compared with the prefix scaled by the same power, so no modular inverse is needed.
    """
    if ctx_i.p != ctx_j.p or ctx_i.base != ctx_j.base:
        raise ValueError("hash contexts use different moduli")
    if r == 0:
        return True
    ni = len(ctx_i.text)
    if not 0 < r <= min(ni, len(ctx_j.text)):
        raise ValueError(f"overlap length {r} out of range")
    a = ni - r
    p = ctx_i.p
    lhs = (ctx_i.prefix[ni] - ctx_i.prefix[a]) % p
    return lhs == ctx_j.prefix[r] * ctx_i.powers[a] % p


# -- virtual concatenation ------------------------------------------------------------


def start_offsets(strings: Sequence[bytes]) -> list[int]:
    """``start[k]`` = total length of ``strings[:k]`` (separators excluded)."""
    start = [0] * len(strings)
    for k in range(1, len(strings)):
        start[k] = start[k - 1] + len(strings[k - 1])
    return start


def virtual_length(strings: Sequence[bytes], start: Sequence[int], i: int) -> int:
    n = len(strings)
    if i >= n - 1:
        return 0
    return start[n - 1] + len(strings[n - 1]) - start[i + 1] + (n - i - 2)


def get_symbol(strings: Sequence[bytes], start: Sequence[int], i: int, j: int) -> int:
    """The j-th symbol of ``strings[i+1] $ strings[i+2] $ ... $ strings[-1]``.

    Binary search over the start offsets; nothing is concatenated.
    """
    if not 0 <= j < virtual_length(strings, start, i):
        raise IndexError(f"symbol {j} outside the concatenation after string {i}")
    # position within the full separated concatenation of every string
    pos = start[i + 1] + (i + 1) + j
    left, right = i + 1, len(strings) - 1
    while left <= right:
        mid = (left + right) // 2
        jm = start[mid] + mid
        if jm <= pos < jm + len(strings[mid]):
            return strings[mid][pos - jm]
        if pos == jm + len(strings[mid]):
            return SEPARATOR
        if pos < jm:
            right = mid - 1
        else:
            left = mid + 1
    raise AssertionError("unreachable: position inside range but not located")


class VirtualConcat:
    """Read-only symbol accessor over the strings following ``i``."""

    def __init__(self, strings: Sequence[bytes], start: Sequence[int], i: int):
        self.strings = strings
        self.start = start
        self.i = i
        self._len = virtual_length(strings, start, i)

    def __len__(self):
        return self._len

    def __getitem__(self, j: int) -> int:
        return get_symbol(self.strings, self.start, self.i, j)

    def materialize(self) -> list[int]:
        out: list[int] = []
        for k, s in enumerate(self.strings[self.i + 1 :]):
            if k:
                out.append(SEPARATOR)
            out.extend(s)
        return out


# -- naive oracles --------------------------------------------------------------------


def naive_overlap(u: bytes, v: bytes) -> int:
    """Longest suffix of ``u`` that is a prefix of ``v``, by descending exhaustive scan."""
    for r in range(min(len(u), len(v)), 0, -1):
        if u[len(u) - r :] == v[:r]:
            return r
    return 0


def naive_overlap_matrix(strings: Sequence[bytes]) -> np.ndarray:
    n = len(strings)
    w = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j:
                w[i, j] = naive_overlap(strings[i], strings[j])
    return w
