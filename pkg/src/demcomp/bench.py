"""Synthetic reconstruction benchmark and runtime scaling harness.

Ground truth is a random weight vector; the observed matrix is
``(w_i / w_j) * exp(eps_ij)`` with ``eps ~ Normal(0, sigma^2)`` on the upper
triangle and reciprocals below, with a symmetric random mask of missing
pairs redrawn until the comparison graph is connected. Randomness comes from
numpy's PCG64 seeded through ``SeedSequence``; each trial gets its own child
stream so results do not depend on execution order.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np
from scipy import stats

from .completion import CompletionOptions, Mode, complete
from .errors import MaskError
from .pcm import IncompletePCM, components, priorities, validate

MAX_MASK_RETRIES = 1000


@dataclass(frozen=True)
class BenchSpec:
    n: int = 10
    missing_fraction: float = 0.3
    noise_sigma: float = 0.0
    trials: int = 20
    seed: int = 0
    weight_low: float = 0.1
    weight_high: float = 10.0
    mode: Mode = Mode.PRESERVE_KNOWN

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if not 0.0 <= self.missing_fraction < 1.0:
            raise ValueError("missing_fraction must lie in [0, 1)")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be non-negative")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 < self.weight_low <= self.weight_high:
            raise ValueError("need 0 < weight_low <= weight_high")


@dataclass(frozen=True)
class TrialResult:
    trial: int
    n: int
    missing_pairs: int
    max_log_error: float
    kendall_tau: float
    cr_after: float
    wall_time: float


@dataclass(frozen=True)
class BenchResult:
    spec: BenchSpec
    trials: tuple[TrialResult, ...]

    def aggregate(self) -> dict[str, dict[str, float]]:
        out = {}
        for metric in ("max_log_error", "kendall_tau", "cr_after", "wall_time"):
            xs = [getattr(t, metric) for t in self.trials]
            out[metric] = {"mean": statistics.fmean(xs), "median": statistics.median(xs)}
        return out


def kendall_tau_b(x, y) -> float:
    """Tie-aware rank correlation; 1.0 when both inputs are constant."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    if np.ptp(x) == 0 and np.ptp(y) == 0:
        return 1.0
    tau = stats.kendalltau(x, y, variant="b").statistic
    return float(tau) if np.isfinite(tau) else 0.0


def random_mask(rng: np.random.Generator, n: int, missing_fraction: float) -> np.ndarray:
    """Boolean known-mask with round(f * n(n-1)/2) missing pairs, connected."""
    iu, ju = np.triu_indices(n, 1)
    n_missing = int(round(missing_fraction * len(iu)))
    for _ in range(MAX_MASK_RETRIES):
        known = np.ones((n, n), dtype=bool)
        drop = rng.choice(len(iu), size=n_missing, replace=False)
        known[iu[drop], ju[drop]] = False
        known[ju[drop], iu[drop]] = False
        probe = IncompletePCM(labels=tuple(map(str, range(n))), values=np.ones((n, n)), known=known)
        if len(components(probe)) == 1:
            return known
    raise MaskError(f"no connected mask with {n_missing} of {len(iu)} pairs missing after {MAX_MASK_RETRIES} draws")


def synthetic_problem(rng: np.random.Generator, n: int, missing_fraction: float, sigma: float,
                      low: float = 0.1, high: float = 10.0) -> tuple[np.ndarray, IncompletePCM]:
    """Ground-truth weights and a masked, optionally perturbed, comparison matrix."""
    w = rng.uniform(low, high, size=n)
    m = w[:, None] / w[None, :]
    if sigma > 0:
        eps = np.triu(rng.normal(0.0, sigma, size=(n, n)), 1)
        m = m * np.exp(eps - eps.T)
    np.fill_diagonal(m, 1.0)
    known = random_mask(rng, n, missing_fraction)
    return w, validate(np.where(known, m, np.nan))


def run_trial(spec: BenchSpec, trial: int, seq: np.random.SeedSequence, missing_fraction: float | None = None) -> TrialResult:
    rng = np.random.default_rng(seq)
    f = spec.missing_fraction if missing_fraction is None else missing_fraction
    w, pcm = synthetic_problem(rng, spec.n, f, spec.noise_sigma, spec.weight_low, spec.weight_high)
    start = time.perf_counter()
    report = complete(pcm, CompletionOptions(mode=spec.mode))
    elapsed = time.perf_counter() - start
    truth = np.log(w[:, None]) - np.log(w[None, :])
    err = float(np.abs(np.log(report.completed.values) - truth).max())
    tau = kendall_tau_b(priorities(report.completed).weights, w)
    return TrialResult(trial, spec.n, len(pcm.missing_pairs), err, tau, report.consistency.cr, elapsed)


def run_bench(spec: BenchSpec, jobs: int = 1) -> BenchResult:
    seqs = np.random.SeedSequence(spec.seed).spawn(spec.trials)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda k: run_trial(spec, k, seqs[k]), range(spec.trials)))
    else:
        results = [run_trial(spec, k, seqs[k]) for k in range(spec.trials)]
    return BenchResult(spec, tuple(results))


def bench_csv(result: BenchResult, timing: bool = False) -> str:
    """Per-trial rows followed by mean/median rows.

    Wall times are left out unless ``timing`` is set, so the default output
    is byte-identical for a given spec and seed.
    """
    cols = ["trial", "n", "missing_pairs", "max_log_error", "kendall_tau", "cr_after"]
    if timing:
        cols.append("wall_time")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for t in result.trials:
        row = [t.trial, t.n, t.missing_pairs, f"{t.max_log_error:.6e}", f"{t.kendall_tau:.6f}", f"{t.cr_after:.6e}"]
        if timing:
            row.append(f"{t.wall_time:.6e}")
        w.writerow(row)
    agg = result.aggregate()
    for stat in ("mean", "median"):
        row = [stat, result.spec.n, ""] + [f"{agg[m][stat]:.6e}" for m in ("max_log_error", "kendall_tau", "cr_after")]
        if timing:
            row.append(f"{agg['wall_time'][stat]:.6e}")
        w.writerow(row)
    return buf.getvalue()


def scaling_ladder(sizes, spec: BenchSpec) -> list[tuple[int, float]]:
    """Median completion wall time for each matrix size."""
    out = []
    for n in sizes:
        res = run_bench(replace(spec, n=n))
        out.append((n, statistics.median(t.wall_time for t in res.trials)))
    return out


def loglog_slope(points) -> float:
    x = np.log([p[0] for p in points])
    y = np.log([p[1] for p in points])
    return float(np.polyfit(x, y, 1)[0])


def scaling_csv(points) -> str:
    lines = ["n,median_wall_time"] + [f"{n},{t:.6e}" for n, t in points]
    if len(points) >= 2:
        lines.append(f"# log-log slope {loglog_slope(points):.3f}")
    return "\n".join(lines) + "\n"

