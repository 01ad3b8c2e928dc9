"""Suffix arrays over byte strings, with a naive sorting oracle."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels


@dataclass(frozen=True)
class SuffixArrayIndex:
    """``suf[k]`` is the 0-based start of the k-th smallest suffix of ``text``."""

    text: bytes
    suf: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.suf)

    def suffix(self, k: int) -> bytes:
        return self.text[int(self.suf[k]) :]

    def prefix(self, k: int, length: int) -> bytes:
        """The first ``length`` symbols of the k-th suffix, clamped at the text end."""
        start = int(self.suf[k])
        return self.text[start : start + length]


def construct(text: bytes, backend: str | None = None) -> SuffixArrayIndex:
    if len(text) == 0:
        raise ValueError("cannot index an empty text")
    sa = kernels.get_backend(backend).suffix_array(bytes(text))
    return SuffixArrayIndex(bytes(text), np.asarray(sa, dtype=np.int64))


def naive_suffix_sort(text: bytes) -> list[int]:
    return sorted(range(len(text)), key=lambda i: text[i:])
