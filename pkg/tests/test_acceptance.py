"""Exit criteria. Each test records one PASS/FAIL line shown in the pytest summary."""

import json
import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from fogndt.cli import main
from fogndt.core import NetworkConfig, best_pipelined_at_cache_one_over_m, regime_thresholds
from fogndt.envelope import achievable_ndt, achievable_plan
from fogndt.multicast import run_delivery
from fogndt.sweep import frange, standard_grid
from oracles import eq10_value


def record(n, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] C{n} {title}: {detail}")
    assert ok, detail


def rel(a, b):
    return abs(a - b) / abs(b) if b else abs(a - b)


def grid_mk_mu():
    return [(M, K, mu) for M in range(2, 7) for K in range(2, 7) for mu in frange(0, 1, 0.05)]


def test_c1_coded_multicast_load():
    t0 = time.perf_counter()
    bad, worst, n = [], 0.0, 0
    for M in range(2, 7):
        for K in range(1, 7):
            for r in (0.5, 1.0, 2.0):
                L = 60
                rep = run_delivery(NetworkConfig(M, K, K + 2, 1 / M, r), L, seed=M * 100 + K)
                n += 1
                if rep.fronthaul_bits * M != K * (M - 1) * L:
                    bad.append((M, K, r, rep.fronthaul_bits))
                exact = Fraction(rep.fronthaul_bits, L) / Fraction(r)
                if exact != Fraction(K * (M - 1), M) / Fraction(r):
                    bad.append((M, K, r, exact))
                worst = max(worst, rel(rep.implied_delta_f, K * (M - 1) / (M * r)))
    dt = time.perf_counter() - t0
    ok = not bad and worst <= 1e-12 and dt < 5
    record(1, "fronthaul NDT of simulated coded multicast", ok,
           f"{n} runs, mismatches={bad}, max rel err={worst:.1e}, {dt:.2f}s (<5s)")


def test_c2_best_pipelined_branches():
    rng = random.Random(20261016)
    worst = 0.0
    for _ in range(1000):
        M, K = rng.randint(2, 8), rng.randint(1, 8)
        r = rng.uniform(0, 2 * min(M, K))
        while r == 0:
            r = rng.uniform(0, 2 * min(M, K))
        _, _, value = best_pipelined_at_cache_one_over_m(NetworkConfig(M, K, K, 1 / M, r))
        worst = max(worst, rel(value, float(eq10_value(M, K, r))))
    record(2, "best pipelined NDT at mu=1/M vs branch formula", worst <= 1e-12,
           f"1000 random points, max rel err={worst:.1e} (<=1e-12)")


def test_c3_closed_form_vs_time_sharing():
    t0 = time.perf_counter()
    worst, n = 0.0, 0
    for cfg in standard_grid().points():
        worst = max(worst, rel(achievable_plan(cfg).value, achievable_ndt(cfg)))
        n += 1
    dt = time.perf_counter() - t0
    record(3, "closed-form achievable NDT vs constructive time sharing", worst <= 1e-9 and dt < 10,
           f"{n} grid points, max rel err={worst:.1e} (<=1e-9), {dt:.2f}s (<10s)")


def test_c4_gap_audit(capsys):
    code = main(["audit"])
    report = json.loads(capsys.readouterr().out)
    ok = code == 0 and report["max_ratio"] <= 3 and not report["violations"]
    record(4, "achievable within factor 3 of the lower bound", ok,
           f"exit={code}, {report['n_points']} points, max_ratio={report['max_ratio']:.6f}, "
           f"violations={len(report['violations'])}")


def test_c5_figure1_shape():
    M, rs = 3, frange(0.25, 4.0, 0.25)
    series = {K: [achievable_ndt(NetworkConfig(M, K, K, 1 / M, r)) for r in rs] for K in (2, 3, 4)}
    problems = []
    for K, vals in series.items():
        if any(b > a * (1 + 1e-12) for a, b in zip(vals, vals[1:])):
            problems.append(f"K={K} increases in r")
        floor = K / min(M, K)
        if any(rel(v, floor) > 1e-12 for r, v in zip(rs, vals) if r >= min(M, K)):
            problems.append(f"K={K} not flat above r3")
    for lo, hi in ((2, 3), (3, 4)):
        if any(b < a * (1 - 1e-12) for a, b in zip(series[lo], series[hi])):
            problems.append(f"K={hi} below K={lo}")
    spot = achievable_ndt(NetworkConfig(3, 3, 3, 1 / 3, 1.0))
    if abs(spot - 5 / 3) > 1e-9:
        problems.append(f"spot {spot}")
    record(5, "NDT vs r at M=3, mu=1/3", not problems,
           f"spot(K=3,r=1)={spot:.12f}; problems={problems}")


def test_c6_figure2_shape():
    M, r, mus = 2, 1.0, frange(0.0, 1.0, 0.05)
    problems, knees = [], {}
    for K in (2, 3, 4):
        vals = [achievable_ndt(NetworkConfig(M, K, K, mu, r)) for mu in mus]
        if any(b > a * (1 + 1e-12) for a, b in zip(vals, vals[1:])):
            problems.append(f"K={K} increases in mu")
        floor = K / min(M, K)
        knee = next(i for i, v in enumerate(vals) if rel(v, floor) <= 1e-9)
        if any(rel(v, floor) > 1e-9 for v in vals[knee:]):
            problems.append(f"K={K} not constant past mu={mus[knee]}")
        if knee == 0:
            problems.append(f"K={K} flat everywhere")
        knees[K] = mus[knee]
    spot = achievable_ndt(NetworkConfig(2, 2, 2, 1.0, 1.0))
    if abs(spot - 1) > 1e-9:
        problems.append(f"spot {spot}")
    record(6, "NDT vs mu at M=2, r=1", not problems,
           f"flat from mu={knees}; spot(K=2,mu=1)={spot}; problems={problems}")


def test_c7_protocol_correctness():
    failures = []
    for seed in range(200):
        rng = random.Random(seed)
        M, K = rng.randint(2, 6), rng.randint(1, 6)
        rep = run_delivery(NetworkConfig(M, K, K + 2, 1 / M, 1.0), 24 * M, seed=seed)
        if not all(rep.per_en_reconstruction):
            failures.append((seed, M, K))
    record(7, "bit-exact reconstruction at every EN", not failures,
           f"200 seeded trials, failures={failures}")


def test_c8_continuity():
    worst, n = 0.0, 0
    for M, K, mu in grid_mk_mu():
        th = regime_thresholds(NetworkConfig(M, K, K, mu, 0.0))
        for b in (th.r1, th.r2, th.r3):
            h = b * 1e-12
            left = achievable_ndt(NetworkConfig(M, K, K, mu, b - h))
            right = achievable_ndt(NetworkConfig(M, K, K, mu, b + h))
            worst = max(worst, rel(left, right))
            n += 1
    for M in range(2, 7):
        for K in range(2, 7):
            for r in frange(0.1, 2 * min(M, K), 0.1):
                h = 1e-13
                left = achievable_ndt(NetworkConfig(M, K, K, 1 / M - h, r))
                right = achievable_ndt(NetworkConfig(M, K, K, 1 / M + h, r))
                worst = max(worst, rel(left, right))
                n += 1
    record(8, "continuity at r1, r2, r3 and mu=1/M", worst <= 1e-9,
           f"{n} breakpoints, max rel jump={worst:.1e} (<=1e-9)")


@pytest.fixture(autouse=True, scope="module")
def _header():
    ACCEPTANCE_LINES.clear()
    yield
