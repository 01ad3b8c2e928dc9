"""Ledger benchmarks and log-log exponent fits."""
from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np
from scipy import stats

from ..qsim import QSim, QueryLedger
from ..scs.dp import SplitSchedule, cascade_costs
from ..scs.graph import construct_graph_hash
from ..tao import assemble
from .gen import GenSpec, gen_tao, random_string

MIN_FIT_POINTS = 4


@dataclass
class BenchRow:
    problem: str
    n: int
    L: int
    m: int
    stage: str
    charged_cost: float
    wall_time: float


@dataclass
class Fit:
    """``log y = intercept + sum_k exponents[k] * log x_k`` by least squares."""

    variables: list[str]
    exponents: list[float]
    ci_low: list[float]
    ci_high: list[float]
    intercept: float
    points: int
    r2: float


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    fits: dict[str, Fit] = field(default_factory=dict)
    checks: dict[str, dict] = field(default_factory=dict)

    def add(self, row: BenchRow) -> None:
        self.rows.append(row)

    def select(self, problem: str, stage: str) -> list[BenchRow]:
        return [r for r in self.rows if r.problem == problem and r.stage == stage]

    def to_dict(self) -> dict:
        return {
            "rows": [asdict(r) for r in self.rows],
            "fits": {k: asdict(v) for k, v in self.fits.items()},
            "checks": self.checks,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["problem", "n", "L", "m", "stage", "charged_cost", "wall_time"]
        wr = csv.DictWriter(buf, fieldnames=cols)
        wr.writeheader()
        for r in self.rows:
            wr.writerow(asdict(r))
        return buf.getvalue()


def fit_power_law(
    xs: dict[str, Sequence[float]], y: Sequence[float], drop_smallest: str | None = None, level: float = 0.95
) -> Fit:
    """Multivariate log-log OLS with t-based confidence intervals.

    ``drop_smallest`` names a variable whose smallest value is discarded before
    fitting (start-up constants dominate there). Every variable needs at least
    four distinct values left.
    """
    names = list(xs)
    X = np.array([xs[k] for k in names], dtype=float).T
    Y = np.asarray(y, dtype=float)
    if drop_smallest is not None:
        col = names.index(drop_smallest)
        keep = X[:, col] > X[:, col].min()
        X, Y = X[keep], Y[keep]
    for k, name in enumerate(names):
        if len(np.unique(X[:, k])) < MIN_FIT_POINTS:
            raise ValueError(f"fit needs >= {MIN_FIT_POINTS} distinct sizes of {name}")
    if np.any(X <= 0) or np.any(Y <= 0):
        raise ValueError("log-log fit needs positive sizes and costs")
    A = np.column_stack([np.ones(len(Y)), np.log(X)])
    ly = np.log(Y)
    coef, *_ = np.linalg.lstsq(A, ly, rcond=None)
    resid = ly - A @ coef
    dof = len(Y) - A.shape[1]
    sigma2 = float(resid @ resid) / dof if dof > 0 else 0.0
    cov = sigma2 * np.linalg.pinv(A.T @ A)
    se = np.sqrt(np.diag(cov))
    tq = stats.t.ppf(0.5 + level / 2, dof) if dof > 0 else float("inf")
    ss_tot = float(((ly - ly.mean()) ** 2).sum())
    r2 = 1.0 - float(resid @ resid) / ss_tot if ss_tot > 0 else 1.0
    return Fit(
        names,
        [float(c) for c in coef[1:]],
        [float(c - tq * s) for c, s in zip(coef[1:], se[1:])],
        [float(c + tq * s) for c, s in zip(coef[1:], se[1:])],
        float(coef[0]),
        int(len(Y)),
        r2,
    )


def bench_graph(
    ns: Sequence[int] = (16, 32, 64, 128, 256),
    lens: Sequence[int] = (8, 16, 32, 64),
    alphabet: int = 4,
    seed: int = 0,
    report: BenchReport | None = None,
) -> BenchReport:
    """Charged search cost of fingerprint graph construction on random equal-length strings.

    Distinct equal-length strings are already substring-free, so reduction is skipped.
    """
    report = report or BenchReport()
    rng = random.Random(seed)
    for n in ns:
        for ell in lens:
            seen: set[bytes] = set()
            while len(seen) < n:
                seen.add(random_string(rng, ell, alphabet))
            strings = sorted(seen)
            led = QueryLedger()
            t0 = time.perf_counter()
            construct_graph_hash(strings, seed=rng.randrange(2**31), qsim=QSim(led))
            dt = time.perf_counter() - t0
            report.add(BenchRow("scs", n, n * ell, 0, "graph", led.cost("first_one_search"), dt))
    rows = report.select("scs", "graph")
    report.fits["graph"] = fit_power_law(
        {"n": [r.n for r in rows], "L": [r.L for r in rows]}, [r.charged_cost for r in rows], drop_smallest="n"
    )
    return report


def bench_tao(
    ms: Sequence[int] = (2**8, 2**10, 2**12, 2**14, 2**16),
    ns: Sequence[int] = (4, 16, 64, 256),
    min_len: int = 8,
    max_len: int = 32,
    seed: int = 0,
    report: BenchReport | None = None,
) -> BenchReport:
    """Comparison charge of the long-array stage against ``log2(m) * sqrt(n L)``."""
    report = report or BenchReport()
    ratios = []
    for m in ms:
        for n in ns:
            inst = gen_tao(GenSpec("tao", n, min_len, max_len, 4, seed + m + n, planted=False, m=m))
            led = QueryLedger()
            t0 = time.perf_counter()
            assemble(inst, QSim(led))
            dt = time.perf_counter() - t0
            cost = led.cost("qcompare")
            report.add(BenchRow("tao", n, inst.L, m, "long", cost, dt))
            ratios.append(cost / (math.log2(m) * math.sqrt(n * inst.L)))
    c = float(np.median(ratios))
    report.checks["tao_shape"] = {
        "c": c,
        "min_ratio": min(ratios) / c,
        "max_ratio": max(ratios) / c,
        "within_factor_2": bool(all(c / 2 <= r <= 2 * c for r in ratios)),
    }
    return report


def bench_cascade(ns: Sequence[int] = (16, 20, 24, 28, 32, 40), alpha: float = 0.055, report: BenchReport | None = None):
    """Per-element cost of the outermost maximum search, from the schedule alone."""
    report = report or BenchReport()
    for n in ns:
        q3 = cascade_costs(SplitSchedule(n, alpha))["level3"]
        report.add(BenchRow("scs", n, 0, 0, "step2", math.sqrt(n * (n - 1)) * q3, 0.0))
    rows = report.select("scs", "step2")
    x = np.array([r.n for r in rows], dtype=float)
    slope, _ = np.polyfit(x, np.log([r.charged_cost for r in rows]), 1)
    report.checks["step2_growth_base"] = {"base": float(math.exp(slope))}
    return report
