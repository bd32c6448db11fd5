"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

The lines are also collected in ``conftest.ACCEPTANCE`` and repeated in the
terminal summary, so they show up without ``-s``.
"""

import time

import numpy as np
import pytest

import conftest
from demcomp import bench, datasets, dematel, pcm
from demcomp.cli import main
from demcomp.completion import CompletionOptions, Mode, complete, to_direct_relation
from demcomp.io import parse_pcm_csv
from demcomp.linalg import inf_norm, spectral_radius_estimate

from conftest import EXAMPLE_CSV


def verdict(number: int, ok: bool, detail: str) -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    print(line)
    conftest.ACCEPTANCE.append(line)
    return ok


def test_1_worked_example():
    start = time.perf_counter()
    m = parse_pcm_csv(EXAMPLE_CSV)
    n_mat = dematel.normalize(to_direct_relation(m))
    t = dematel.total_relation(n_mat)
    rep = complete(m)
    elapsed = time.perf_counter() - start
    c = rep.completed.values
    checks = {
        "n13": (n_mat[0, 2], 0.2667, 5e-4),
        "n14": (n_mat[0, 3], 0.5333, 5e-4),
        "t12": (t.values[0, 1], 0.0241, 5e-4),
        "t21": (t.values[1, 0], 0.0060, 5e-4),
        "t14": (t.values[0, 3], 0.6742, 5e-4),
        "c12": (c[0, 1], 2.0, 1e-3),
        "c21": (c[1, 0], 0.5, 1e-3),
    }
    errs = {k: abs(got - want) for k, (got, want, _) in checks.items()}
    ok = all(errs[k] <= tol for k, (_, _, tol) in checks.items()) and elapsed < 0.010
    worst = max(errs, key=errs.get)
    assert verdict(1, ok, f"worked example, worst {worst} off by {errs[worst]:.1e}, {elapsed * 1e3:.2f} ms (< 10 ms)")


def test_2_consistency_of_completed_example(example_pcm):
    rep = complete(example_pcm).consistency
    ok = abs(rep.lambda_max - 4) <= 1e-6 and abs(rep.ci) <= 1e-6 and abs(rep.cr) <= 1e-6
    assert verdict(2, ok, f"lambda_max={rep.lambda_max:.9f} CI={rep.ci:.1e} CR={rep.cr:.1e}")


def test_3_random_index_table():
    expected = [0, 0, 0.52, 0.89, 1.12, 1.26, 1.36, 1.41, 1.46, 1.49]
    used = []
    for n in range(1, 11):
        used.append(pcm.random_index(n)[0])
        if n >= 2:
            assert pcm.consistency(pcm.from_weights(np.arange(1.0, n + 1))).ri == expected[n - 1]
    assert verdict(3, used == expected, f"RI(1..10) = {used}")


def test_4_exact_recovery():
    rng = np.random.default_rng(2024)
    seqs = np.random.SeedSequence(4).spawn(200)
    worst_err, worst_tau = 0.0, 1.0
    start = time.perf_counter()
    for k, seq in enumerate(seqs):
        n = int(rng.integers(4, 13))
        f = float(rng.uniform(0.0, 0.4))
        spec = bench.BenchSpec(n=n, missing_fraction=f, noise_sigma=0.0, trials=1, seed=4)
        t = bench.run_trial(spec, k, seq)
        worst_err = max(worst_err, t.max_log_error)
        worst_tau = min(worst_tau, t.kendall_tau)
    elapsed = time.perf_counter() - start
    # tau comes from a floating-point ratio; 1 - 1e-12 is "1.0" at double precision
    ok = worst_err <= 1e-8 and worst_tau >= 1 - 1e-12 and elapsed < 5.0
    assert verdict(4, ok, f"200 trials, max_log_error {worst_err:.1e}, min tau {worst_tau:.15f}, {elapsed:.2f} s (< 5 s)")


def _random_normalized(rng, n, max_rho=0.85):
    """DEMATEL-scale D (integers 0..4, zero diagonal), normalized, redrawn until rho(N) <= max_rho."""
    while True:
        d = rng.integers(0, 5, size=(n, n)).astype(float)
        np.fill_diagonal(d, 0.0)
        if d.any():
            n_mat = dematel.normalize(d)
            if spectral_radius_estimate(n_mat) <= max_rho:
                return n_mat


def test_5_series_equals_closed_form():
    rng = np.random.default_rng(5)
    gaps, tails = [], []
    for _ in range(50):
        n_mat = _random_normalized(rng, int(rng.integers(2, 9)))
        gaps.append(inf_norm(dematel.total_relation(n_mat).values - dematel.truncated_series(n_mat, 200)))
        tails.append(inf_norm(np.linalg.matrix_power(n_mat, 200)))
    ok = max(gaps) <= 1e-9 and max(tails) <= 1e-9
    assert verdict(5, ok, f"50 matrices with rho(N) <= 0.85, max gap {max(gaps):.1e}, max ||N^200|| {max(tails):.1e}")


@pytest.mark.xfail(strict=True, reason="||N^200|| <= 1e-9 needs rho(N) below about 0.88; unrestricted draws exceed it")
def test_5_unrestricted_draws_are_unattainable():
    rng = np.random.default_rng(5)
    tails = [inf_norm(np.linalg.matrix_power(_random_normalized(rng, int(rng.integers(2, 9)), 1.0), 200))
             for _ in range(50)]
    verdict(5, max(tails) <= 1e-9,
            f"as stated with rho(N) unrestricted, max ||N^200|| {max(tails):.1e}; unattainable for rho(N) > 0.88, see notes")
    assert max(tails) <= 1e-9


def test_6_tennis():
    labels, published = datasets.tennis_completed()
    table6 = datasets.tennis_ranking()
    start = time.perf_counter()
    m = datasets.tennis_pcm()
    rep = complete(m, CompletionOptions(mode=Mode.PRESERVE_KNOWN))
    pv = pcm.priorities(rep.completed)
    elapsed = time.perf_counter() - start

    filled = ~m.known
    cell_err = float(np.abs(rep.completed.values - published)[filled].max())
    index = {name: i for i, name in enumerate(labels)}
    want = np.array([p for _, p in table6])
    got = np.array([pv.weights[index[name]] for name, _ in table6])
    weight_err = float(np.abs(got - want).max())
    top3 = {labels[i] for i in pv.ranking[:3]}
    tau = bench.kendall_tau_b(got, want)
    ok = (cell_err <= 0.02 and weight_err <= 0.005 and top3 == {"Nadal", "Federer", "Sampras"}
          and tau >= 0.90 and elapsed < 0.100)
    assert verdict(6, ok, f"tennis, cells off by {cell_err:.4f}, weights off by {weight_err:.1e}, "
                          f"top-3 {sorted(top3)}, tau-b {tau:.3f}, {elapsed * 1e3:.1f} ms (< 100 ms)")


def test_7_reciprocity_everywhere(completed_log):
    worst = max(m.reciprocity_error() for m in completed_log)
    diag = all(np.all(np.diag(m.values) == 1.0) for m in completed_log)
    assert verdict(7, worst <= 1e-9 and diag,
                   f"{len(completed_log)} completed matrices, max |c_ij c_ji - 1| {worst:.1e}, unit diagonal {diag}")


def test_8_determinism(tmp_path, capsys):
    args = ["bench", "--seed", "42", "--trials", "10", "--sigma", "0.1"]
    outputs = []
    for _ in range(2):
        assert main(args) == 0
        outputs.append(capsys.readouterr().out.encode())
    src = tmp_path / "in.csv"
    src.write_text(EXAMPLE_CSV)
    files = []
    for k in range(2):
        out = tmp_path / f"out{k}.csv"
        assert main(["complete", str(src), "--out", str(out)]) == 0
        files.append((out.read_bytes(), capsys.readouterr().out.encode()))
    ok = outputs[0] == outputs[1] and files[0] == files[1]
    assert verdict(8, ok, f"bench seed 42 ({len(outputs[0])} bytes) and complete ({len(files[0][0])} bytes) byte-identical")


def test_9_scaling_ladder():
    points = bench.scaling_ladder([10, 20, 40, 80], bench.BenchSpec(trials=30, seed=9))
    medians = [t for _, t in points]
    ok = all(a < b for a, b in zip(medians, medians[1:]))
    timings = ", ".join(f"n={n}: {t * 1e3:.2f} ms" for n, t in points)
    assert verdict(9, ok, f"{timings}; log-log slope {bench.loglog_slope(points):.2f} (reported, not asserted)")
