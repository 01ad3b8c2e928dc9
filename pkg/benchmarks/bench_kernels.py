"""Wall-clock comparison of the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--n 14] [--text 200000] [--repeat 3]

Each kernel runs on identical inputs under both backends; outputs are checked for
equality before timings are reported.
"""
from __future__ import annotations

import argparse
import random
import sys
import time

import numpy as np

from superasm import kernels
from superasm.scs.dp import DPTable


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(n: int, text_len: int, repeat: int, seed: int = 0) -> list[tuple[str, dict[str, float]]]:
    rng = np.random.default_rng(seed)
    w = rng.integers(0, 12, size=(n, n)).astype(np.int32)
    np.fill_diagonal(w, 0)
    table = DPTable.create(w, backend="python")
    rank, masks = table.rank, table.masks
    k2 = n // 2
    py = kernels.get_backend("python")
    prev = py.singleton_layer(n)
    layers = {1: prev}
    for s in range(2, n + 1):
        layers[s] = py.corollary_layer(layers[s - 1], rank, masks[s], w, n, s)
    text = bytes(random.Random(seed).choice(b"ACGT") for _ in range(text_len))

    cases = {
        f"corollary_layer(n={n}, s={k2})": lambda k: k.corollary_layer(layers[k2 - 1], rank, masks[k2], w, n, k2),
        f"split_layer(n={n}, s={n}, k={k2})": lambda k: k.split_layer(
            layers[k2], layers[n - k2 + 1], rank, masks[n], n, n, k2
        ),
        f"suffix_array(m={text_len})": lambda k: k.suffix_array(text),
    }
    rows = []
    for name, fn in cases.items():
        times, outs = {}, {}
        for backend in kernels.available_backends():
            mod = kernels.get_backend(backend)
            times[backend], outs[backend] = _best(lambda: fn(mod), repeat)
        ref = outs["python"]
        for b, o in outs.items():
            if not np.array_equal(np.asarray(o), np.asarray(ref)):
                raise AssertionError(f"{name}: backend {b} disagrees with python")
        rows.append((name, times))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=14)
    ap.add_argument("--text", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the numpy backend is timed", file=sys.stderr)
    print(f"{'kernel':42s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    for name, times in run(args.n, args.text, args.repeat):
        cells = " ".join(f"{times[b]:9.4f}s" for b in backends)
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{name:42s} {cells}   {speed:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
