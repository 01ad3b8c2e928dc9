"""Dropping duplicates and strings contained in other dictionary strings."""
from __future__ import annotations

from ..qsim import QSim
from ..strings import SCSInstance, VirtualConcat, start_offsets


def remove_duplicates_and_substrings(inst: SCSInstance, qsim: QSim | None = None) -> SCSInstance:
    """Keep only strings that are not a substring of (or equal to) another one.

    Strings are sorted by length, shortest first; each is tested against the
    separator-joined concatenation of everything after it, read one symbol at a time.
    The result keeps that length order.
    """
    qsim = qsim or QSim()
    ordered = sorted(inst.strings, key=len)
    n = len(ordered)
    if n == 1:
        return SCSInstance(tuple(ordered))
    start = start_offsets(ordered)
    drop = set()
    for i in range(n - 1):
        text = VirtualConcat(ordered, start, i)
        if qsim.is_substring(ordered[i], text, len(text), n=n):
            drop.add(i)
    return SCSInstance(tuple(s for i, s in enumerate(ordered) if i not in drop))


def naive_reduce(strings) -> list[bytes]:
    """Pairwise oracle: distinct strings not contained in any other distinct string."""
    uniq = list(dict.fromkeys(strings))
    return [s for s in uniq if not any(s != t and s in t for t in uniq)]
