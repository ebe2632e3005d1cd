"""Acceptance gate: ten end-to-end criteria, one printed verdict line each.

Every criterion checks a frozen numeric contract of the package against an
independent oracle (quadrature, brute-force grid, analytic reduction, or a
closed form derived by hand), with pinned tolerances and, where stated,
wall-clock limits.  Run with ``pytest -rA`` to see the verdict lines.
"""

import json
import math
import time

import numpy as np

import stickygap.disk as disk
from stickygap import (BallSpec, ManifoldSpec, NeedleSpec, PartialDiskSpec,
                       alpha_grid, ball_bound, ball_constants, bessel_j, cli,
                       disk_exact_gap, inf_max_affine, interpolation_bound,
                       manifold_constants, manifold_m1, manifold_m2,
                       needle_bound, needle_constants, needle_gamma,
                       partial_disk_bound, partial_disk_constants,
                       rectangle_limit)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------- oracles

def _simpson_weights(n_panels):
    w = np.ones(n_panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def quad_j(m, xs, n_panels=1024):
    """Simpson quadrature of (1/pi) int_0^pi cos(m t - x sin t) dt, vectorized."""
    t = np.linspace(0.0, math.pi, n_panels + 1)
    w = _simpson_weights(n_panels) * (math.pi / n_panels) / 3.0
    phase = m * t[None, :] - np.asarray(xs, dtype=float)[:, None] * np.sin(t)[None, :]
    return (np.cos(phase) @ w) / math.pi


def quad_j1_prime(x, n_panels=1024):
    """Simpson quadrature of J_1'(x) = (1/pi) int_0^pi sin(t - x sin t) sin t dt."""
    t = np.linspace(0.0, math.pi, n_panels + 1)
    w = _simpson_weights(n_panels) * (math.pi / n_panels) / 3.0
    return float(np.dot(np.sin(t - x * np.sin(t)) * np.sin(t), w)) / math.pi


def bisect(f, lo, hi, width):
    f_lo = f(lo)
    assert f_lo * f(hi) < 0.0
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if f_lo * f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
            f_lo = f(lo)
    return 0.5 * (lo + hi)


# -------------------------------------------------------------- criteria

def test_criterion_01_neumann_disk_gap(tmp_path):
    disk._neumann_detail.cache_clear()
    out = tmp_path / "neumann.json"
    t0 = time.perf_counter()
    code = cli.main(["solve", "neumann-gap", "--json", "--out", str(out)])
    dt = time.perf_counter() - t0
    assert code == 0
    sigma = json.loads(out.read_text())["results"]["sigma_omega"]
    assert 3.385 <= sigma <= 3.395
    assert dt < 1.0
    # oracle: bracket the first extremum of J_1 with pure quadrature
    x_star = bisect(quad_j1_prime, 1.8, 1.9, 1e-11)
    err = abs(sigma - x_star**2)
    assert err <= 1e-8
    print(f"ACCEPTANCE 1 PASS: sigma_omega={sigma:.10f} in [3.385, 3.395], "
          f"|sigma - x*^2|={err:.2e} <= 1e-8, runtime {dt:.2f}s < 1s")


def test_criterion_02_figure1_dominance_and_endpoints():
    t0 = time.perf_counter()
    curve = disk.exact_curve(99)
    lam0, _ = disk_exact_gap(1e-6)
    lam1, _ = disk_exact_gap(1.0 - 1e-6)
    dt = time.perf_counter() - t0
    slack = float(np.min(curve.upper_bounds - curve.exact))
    assert slack >= -1e-9
    err0 = abs(1.0 / lam0 - 1.0)
    err1 = abs(1.0 / lam1 - 1.0 / disk.neumann_disk_gap())
    assert err0 <= 1e-3
    assert err1 <= 1e-3
    assert dt < 10.0
    print(f"ACCEPTANCE 2 PASS: 99-point slack min={slack:.2e} >= -1e-9, "
          f"endpoint errors {err0:.1e}/{err1:.1e} <= 1e-3, runtime {dt:.2f}s < 10s")


def test_criterion_03_needle_eigenvalue():
    gamma = needle_gamma(NeedleSpec(length=TWO_PI, beta=1.0))
    closed = (math.acos(-1.0 / 3.0) / TWO_PI) ** 2
    assert 0.0920 <= gamma <= 0.0930
    err = abs(gamma - closed)
    assert err <= 1e-10
    # analytic reduction oracle: at L = 2pi the secular equation collapses to
    # -3 u^2 + 2 u + 1 = 0 with u = cos(2 pi sqrt(gamma))
    u = math.cos(TWO_PI * math.sqrt(gamma))
    assert abs(-3.0 * u * u + 2.0 * u + 1.0) <= 1e-9
    caps = {length: needle_gamma(NeedleSpec(length=length, beta=1.0))
            for length in (0.5, 1.0, TWO_PI, 20.0)}
    assert all(g <= 1.0 + 1e-9 for g in caps.values())
    print(f"ACCEPTANCE 3 PASS: gamma_2pi={gamma:.10f} in [0.0920, 0.0930], "
          f"|gamma - closed form|={err:.1e} <= 1e-10, gamma_L <= 1 for "
          f"L in {{0.5, 1, 2pi, 20}}")


def test_criterion_04_partial_disk_threshold(tmp_path):
    out = tmp_path / "threshold.json"
    assert cli.main(["solve", "partial-threshold", "--json", "--out", str(out)]) == 0
    delta_star = json.loads(out.read_text())["results"]["delta_star"]
    assert 0.861 <= delta_star <= 0.863
    print(f"ACCEPTANCE 4 PASS: continuity threshold delta*={delta_star:.6f} "
          f"in [0.861, 0.863]")


def test_criterion_05_infmax_brute_force():
    from numba import njit

    @njit(cache=False)
    def brute(params, n_grid):
        out = np.empty(params.shape[0])
        for i in range(params.shape[0]):
            a, b, c, d = params[i]
            best = np.inf
            for k in range(n_grid + 1):
                t = k / n_grid
                rising = a + b * t
                falling = c - d * t
                v = rising if rising > falling else falling
                if v < best:
                    best = v
                elif rising >= falling:
                    break  # past the crossing the max only grows
            out[i] = best
        return out

    rng = np.random.default_rng(20240805)
    params = rng.uniform(0.05, 3.0, size=(10**4, 4))
    grid_min = brute(params, 10**6)
    closed = np.array([inf_max_affine(*row) for row in params])
    worst = float(np.max(np.abs(grid_min - closed)))
    assert worst <= 1e-5
    print(f"ACCEPTANCE 5 PASS: inf-max closed form vs 1e6-point grid on 1e4 "
          f"random tuples, worst |diff|={worst:.2e} <= 1e-5")


def test_criterion_06_two_path_equality():
    grid = alpha_grid(99)
    worst = {}

    ball_consts = ball_constants(BallSpec(d=2, beta=1.0, gamma=1.0))

    def ball_diff(a):
        spec = BallSpec(d=2, beta=1.0, gamma=2.0 * a / (1.0 - a))
        return abs(ball_bound(spec) - interpolation_bound(ball_consts, spec.alpha))

    worst["ball"] = max(ball_diff(float(a)) for a in grid)

    mani = ManifoldSpec(d=3, k_r=0.8, k_2=1.5, c_omega=0.7, c_sigma=1.2,
                        vol_ratio=0.9)
    mani_consts = manifold_constants(mani)
    worst["manifold"] = max(abs(manifold_m1(mani, float(a))
                                - interpolation_bound(mani_consts, float(a)))
                            for a in grid)

    arc = PartialDiskSpec(delta=0.7)
    arc_consts = partial_disk_constants(arc)
    worst["partial-disk"] = max(abs(partial_disk_bound(arc, float(a))
                                    - interpolation_bound(arc_consts, float(a)))
                                for a in grid)

    needle = NeedleSpec(length=TWO_PI, beta=1.0)
    needle_consts = needle_constants(needle)
    worst["needle"] = max(abs(needle_bound(needle, float(a))
                              - interpolation_bound(needle_consts, float(a)))
                          for a in grid)

    assert all(v <= 1e-12 for v in worst.values()), worst
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    print(f"ACCEPTANCE 6 PASS: specialized vs generic bound on 99-point grid, "
          f"worst per model: {detail} (all <= 1e-12)")


def test_criterion_07_variance_decomposition():
    rng = np.random.default_rng(20240812)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 21))
        f = rng.uniform(-1.0, 1.0, size=n)
        mu = rng.uniform(0.0, 1.0, size=n) + 1e-12
        nu = rng.uniform(0.0, 1.0, size=n) + 1e-12
        mu /= mu.sum()
        nu /= nu.sum()
        a = rng.uniform(0.0, 1.0)

        def var(p):
            mean = float(np.dot(p, f))
            return float(np.dot(p, (f - mean) ** 2))

        lhs = var(a * mu + (1.0 - a) * nu)
        gap = float(np.dot(mu, f) - np.dot(nu, f))
        rhs = a * var(mu) + (1.0 - a) * var(nu) + a * (1.0 - a) * gap**2
        worst = max(worst, abs(lhs - rhs))
    assert worst <= 1e-12
    print(f"ACCEPTANCE 7 PASS: variance decomposition identity on 1000 random "
          f"instances of size <= 20, worst |defect|={worst:.2e} <= 1e-12")


def test_criterion_08_manifold_limits():
    spec = ManifoldSpec(d=3, k_r=1.2, k_2=0.9, c_omega=0.9, c_sigma=1.1,
                        vol_ratio=1.3)
    m1_err = abs(manifold_m1(spec, 1.0 - 1e-9) - spec.c_omega)
    m2_err = abs(manifold_m2(spec, 1.0 - 1e-9)
                 - (spec.d - 1) / (spec.d * spec.k_r))
    m2_div = manifold_m2(spec, 1e-9)
    assert m1_err <= 1e-6
    assert m2_err <= 1e-6
    assert m2_div > 1e6
    print(f"ACCEPTANCE 8 PASS: M1 -> C_Omega ({m1_err:.1e} <= 1e-6), "
          f"M2 -> (d-1)/(d k_R) ({m2_err:.1e} <= 1e-6), "
          f"M2 diverges at alpha -> 0 ({m2_div:.1e} > 1e6)")


def test_criterion_09_rectangle_discontinuity():
    verdicts = {b: rectangle_limit(b)[1] for b in (0.5, 1.9, 2.0, 2.1, 3.0)}
    assert all(flag == (b < 2.0) for b, flag in verdicts.items()), verdicts
    print(f"ACCEPTANCE 9 PASS: rectangle limit discontinuous exactly for "
          f"b < 2 at b in {sorted(verdicts)}")


def test_criterion_10_bessel_vs_quadrature():
    xs = np.arange(0.0, 30.0 + 1e-9, 0.1)
    t0 = time.perf_counter()
    worst = 0.0
    for m in range(11):
        diff = np.abs(bessel_j(m, xs) - quad_j(m, xs, 1024))
        worst = max(worst, float(np.max(diff)))
    dt = time.perf_counter() - t0
    assert worst <= 1e-10
    assert dt < 5.0
    print(f"ACCEPTANCE 10 PASS: J_m vs 1024-panel quadrature for m <= 10, "
          f"x in [0, 30] step 0.1, worst |diff|={worst:.2e} <= 1e-10, "
          f"runtime {dt:.2f}s < 5s")
