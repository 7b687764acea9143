"""Acceptance run: one test and one printed PASS/FAIL line per criterion.

Run with `pytest -v -s tests/test_acceptance.py` to see the lines as
they happen.  Every tolerance and sample budget is stated inline; all
randomness is seeded, so each criterion is a deterministic replay.

Criterion 11's 5% clause fails by construction, not by bug: the exact
H_32 norm of 1 + 2^{-s} is binom(32,16)^(1/32) = 1.88080, which sits
5.96% below the sup norm 2, so no sound estimator can land within 5%.
The test reports the honest FAIL; see the README for the analysis.
"""

import math

import numpy as np
import pytest

from bohrlift import (
    BOUNDED_SO_FAR,
    DIVERGENT_TREND,
    DirichletPoly,
    RadiusVector,
    SamplerConfig,
    TwistPoint,
    abel_identity_check,
    bohr_lift,
    bohr_transform,
    c0_style_family,
    cayley,
    cayley_inv,
    contraction_check,
    eps_gap_bound_h2,
    eps_norm_profile,
    factorize,
    gallery,
    hilbert_criterion,
    index_of,
    log_bound_experiment,
    max_coeff_gap,
    norm_h2_exact,
    norm_hinf_grid,
    norm_hp_mc,
    norm_p_limit_check,
    normalize_for_schwarz,
    pointwise_eval_bound_h2,
    poisson_convolve_exact,
    poisson_convolve_numeric,
    schwarz_bound_check,
    stolz_ratio,
    translate,
    twist,
    unit_direction_family,
    vertical_mean,
)
from bohrlift.series import PowerPoly
from bohrlift.multiindex import MultiIndex


def _report(num, name, ok, detail=""):
    tag = "PASS" if ok else "FAIL"
    print(f"[{tag}] criterion {num:2d} ({name}): {detail}", flush=True)
    return ok


def test_criterion_01_bohr_roundtrip():
    # exhaustive inverse to 1e6
    for n in range(1, 1000001):
        if index_of(factorize(n)) != n:
            assert _report(1, "bohr roundtrip", False, f"inverse broke at n={n}")
    # 1e4 random polynomials, indices <= 1e4, dim <= 4, exact equality
    rng = np.random.default_rng(1)
    for _ in range(10000):
        d = int(rng.integers(1, 5))
        terms = int(rng.integers(1, 9))
        idx = rng.choice(np.arange(1, 10001), size=terms, replace=False)
        vals = rng.standard_normal((terms, d)) + 1j * rng.standard_normal((terms, d))
        D = DirichletPoly({int(n): vals[i] for i, n in enumerate(idx)})
        if bohr_transform(bohr_lift(D)) != D:
            assert _report(1, "bohr roundtrip", False, "random polynomial mismatch")
    assert _report(1, "bohr roundtrip", True, "exhaustive to 1e6 and 1e4 random polynomials, exact")


def test_criterion_02_parseval_oracle():
    rng = np.random.default_rng(2024)
    idx = rng.choice(np.arange(1, 5000), size=30, replace=False)
    D = DirichletPoly({int(n): rng.standard_normal(2) + 1j * rng.standard_normal(2) for n in idx})
    exact = norm_h2_exact(D).value
    hits = 0
    worst = 0.0
    for seed in range(100):
        est = norm_hp_mc(D, 2.0, SamplerConfig(samples=10000, seed=seed))
        z = abs(est.value - exact) / est.std_error
        worst = max(worst, z)
        hits += z <= 3.0
    ok = hits >= 99
    assert _report(2, "parseval oracle", ok, f"{hits}/100 trials within 3 std errors, worst z={worst:.2f}")


def test_criterion_03_two_formula_agreement():
    rng = np.random.default_rng(77)
    worst = 0.0
    for trial in range(20):
        terms = int(rng.integers(3, 12))
        idx = rng.choice(np.arange(1, 21), size=terms, replace=False)
        D = DirichletPoly({int(n): complex(rng.standard_normal(), rng.standard_normal()) for n in idx})
        v2 = vertical_mean(D, 2.0, 1.0e4, 200001)
        e2 = norm_h2_exact(D)
        worst = max(worst, abs(v2.value - e2.value) / e2.value)
        v4 = vertical_mean(D, 4.0, 1.0e4, 400001)
        m4 = norm_hp_mc(D, 4.0, SamplerConfig(samples=200000, seed=1000 + trial))
        worst = max(worst, abs(v4.value - m4.value) / m4.value)
    ok = worst <= 0.02
    assert _report(3, "line vs torus", ok, f"20 polynomials, p in {{2,4}}, worst relative gap {worst:.2e} (tol 2e-2)")


def test_criterion_04_poisson():
    P2 = bohr_lift(DirichletPoly({1: 1.0, 2: 0.5, 3: -0.25, 6: 1.5, 8: 2.0}))
    r2 = RadiusVector([0.5, 0.25])
    gap2 = max_coeff_gap(poisson_convolve_exact(P2, r2), poisson_convolve_numeric(P2, r2, 64))
    D3 = DirichletPoly({1: [1.0, 0.5], 2: [0.0, 1.0], 3: [2.0, 0.0], 5: [1.0, -1.0], 30: [0.5, 0.5]})
    P3 = bohr_lift(D3)
    r3 = RadiusVector([0.4, 0.3, 0.6])
    gap3 = max_coeff_gap(poisson_convolve_exact(P3, r3), poisson_convolve_numeric(P3, r3, 64))
    grids_ok = gap2 < 1e-9 and gap3 < 1e-9

    ra, rb = RadiusVector([0.5, 0.5]), RadiusVector([0.25, 0.5])
    semigroup_ok = (
        poisson_convolve_exact(poisson_convolve_exact(P2, ra), rb)
        == poisson_convolve_exact(P2, ra * rb)
    )

    l2, u2 = contraction_check(P2, r2, 2.0)
    l2_ok = l2.value <= u2.value and l2.std_error == 0.0

    Pc = bohr_lift(DirichletPoly({1: 1.0 + 0.2j, 2: 0.5, 3: -0.25 + 0.4j, 6: 1.5, 8: -2.0j, 9: 0.7}))
    rc = RadiusVector([0.6, 0.5])
    wins = 0
    for seed in range(100):
        lhs, rhs = contraction_check(Pc, rc, 4.0, SamplerConfig(samples=10000, seed=seed))
        wins += lhs.value <= rhs.value
    ok = grids_ok and semigroup_ok and l2_ok and wins == 100
    assert _report(
        4, "poisson smoothing", ok,
        f"grid gaps {gap2:.1e}/{gap3:.1e} (tol 1e-9), semigroup exact={semigroup_ok}, "
        f"L2 exact contraction={l2_ok}, L4 trials {wins}/100",
    )


def test_criterion_05_translation_laws():
    rng = np.random.default_rng(55)
    idx = rng.choice(np.arange(1, 500), size=25, replace=False)
    D = DirichletPoly({int(n): complex(rng.standard_normal(), rng.standard_normal()) for n in idx})
    base = norm_h2_exact(D).value
    twist_gap = abs(norm_h2_exact(twist(D, TwistPoint.random(bohr_lift(D).width, seed=3))).value - base)
    imag_gap = abs(norm_h2_exact(translate(D, 2.7j)).value - base)
    invariance_ok = twist_gap <= 1e-12 and imag_gap <= 1e-12

    rows = eps_norm_profile(D, 2.0)
    eps_grid = [e for e, _ in rows]
    values = [est.value for _, est in rows]
    decreasing_ok = all(v1 < v2 for v1, v2 in zip(values, values[1:]))  # eps descends, norm ascends
    bound_ok = all(
        abs(v - base) <= eps_gap_bound_h2(D, e) + 1e-12 for e, v in zip(eps_grid, values)
    )
    ok = invariance_ok and decreasing_ok and bound_ok
    assert _report(
        5, "translation laws", ok,
        f"twist gap {twist_gap:.1e}, imaginary-shift gap {imag_gap:.1e} (tol 1e-12), "
        f"profile strictly monotone={decreasing_ok}, within analytic bound={bound_ok}",
    )


def test_criterion_06_abel_identity():
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(1000):
        terms = int(rng.integers(2, 25))
        top = int(rng.integers(10, 300))
        idx = set(rng.choice(np.arange(1, top + 1), size=min(terms, top), replace=False).tolist())
        idx.add(top)
        D = DirichletPoly({int(n): complex(rng.standard_normal(), rng.standard_normal()) for n in idx})
        N = int(rng.integers(2, top))
        M = int(rng.integers(N + 1, top + 1))
        eps = float(rng.uniform(0.01, 3.0))
        _, _, gap = abel_identity_check(D, N, M, eps)
        worst = max(worst, gap)
    ok = worst <= 1e-12
    assert _report(6, "abel identity", ok, f"1000 random tuples, worst relative gap {worst:.2e} (tol 1e-12)")


def test_criterion_07_log_bound_stability():
    Ns = [4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096]
    rows = log_bound_experiment(lambda s: gallery("zeta_shift", s), math.inf, Ns, t_samples=8193)
    overall = max(r.ratio_over_log for r in rows)
    final_octave = max(r.ratio_over_log for r in rows if r.N > 2048)
    ok = final_octave <= 1.1 * overall
    assert _report(
        7, "log-bound stability", ok,
        f"sweep to 4096: overall max {overall:.4f}, final octave {final_octave:.4f} (must be <= 1.1x)",
    )


def test_criterion_08_stolz_and_cayley():
    worst_stolz = 0.0
    for eps in np.linspace(0.02, 2.0, 100):
        for t in np.linspace(-10.0, 10.0, 100):
            lhs, rhs = stolz_ratio(float(eps), float(t))
            worst_stolz = max(worst_stolz, abs(lhs - rhs))
    rng = np.random.default_rng(0)
    worst_round = 0.0
    for _ in range(10000):
        z = math.sqrt(rng.uniform()) * 0.999 * np.exp(1j * rng.uniform(0, 2 * np.pi))
        worst_round = max(worst_round, abs(cayley_inv(cayley(complex(z))) - z))
        s = complex(rng.uniform(1e-3, 10.0), rng.uniform(-10.0, 10.0))
        worst_round = max(worst_round, abs(cayley(cayley_inv(s)) - s) / abs(s))
    ok = worst_stolz <= 1e-12 and worst_round <= 1e-12
    assert _report(
        8, "stolz ratio + cayley", ok,
        f"identity gap {worst_stolz:.2e} on the 100x100 grid, round-trip gap {worst_round:.2e} (tol 1e-12)",
    )


def test_criterion_09_pointwise_inequalities():
    rng = np.random.default_rng(9)
    Q = normalize_for_schwarz(bohr_lift(DirichletPoly({2: 0.8, 3: 0.5j, 5: -0.3, 6: 0.4, 12: -0.2j})))
    P = bohr_lift(DirichletPoly({int(n): complex(rng.standard_normal(), rng.standard_normal()) for n in range(1, 17)}))
    violations = 0
    for _ in range(1000):
        z1 = rng.uniform(0, 0.97, Q.width) * np.exp(1j * rng.uniform(0, 2 * np.pi, Q.width))
        v1, b1 = schwarz_bound_check(Q, z1)
        violations += v1 > b1 + 1e-12
        z2 = rng.uniform(0, 0.9, P.width) * np.exp(1j * rng.uniform(0, 2 * np.pi, P.width))
        v2, b2 = pointwise_eval_bound_h2(P, z2)
        violations += v2 > b2 + 1e-12

    # near-sharpness: the truncated product kernel at |z_j| = 0.8, degree 20
    z = np.array([0.8 * np.exp(0.9j), 0.8 * np.exp(-2.0j)])
    T = 20
    K = PowerPoly({
        MultiIndex((a, b)): np.conj(z[0]) ** a * np.conj(z[1]) ** b
        for a in range(T + 1) for b in range(T + 1)
    })
    value, bound = pointwise_eval_bound_h2(K, z)
    rel_gap = (bound - value) / bound
    ok = violations == 0 and rel_gap <= 1e-2
    assert _report(
        9, "pointwise inequalities", ok,
        f"1000/1000 trials clean ({violations} violations), kernel sharpness gap {rel_gap:.2e} (tol 1e-2)",
    )


def test_criterion_10_hilbert_criterion():
    capped = hilbert_criterion(unit_direction_family(5), 2.0, 12)
    uncapped = hilbert_criterion(unit_direction_family(None), 2.0, 12)
    c0 = hilbert_criterion(c0_style_family(8), math.inf, 6, grid_per_dim=8)

    def nondecreasing(report):
        vals = [est.value for _, est in report.per_m]
        return all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))

    capped_ok = (
        capped.verdict == BOUNDED_SO_FAR
        and abs(capped.sup_value - math.sqrt(5.0)) < 1e-12
        and nondecreasing(capped)
    )
    growth_ok = (
        uncapped.verdict == DIVERGENT_TREND
        and all(abs(est.value - math.sqrt(m)) < 1e-12 for m, est in uncapped.per_m)
        and nondecreasing(uncapped)
    )
    c0_ok = (
        c0.verdict == BOUNDED_SO_FAR
        and abs(c0.sup_value - 1.0) < 1e-12
        and nondecreasing(c0)
    )
    ok = capped_ok and growth_ok and c0_ok
    assert _report(
        10, "hilbert criterion", ok,
        f"capped sup={capped.sup_value:.6f} ({capped.verdict}), "
        f"uncapped sqrt(m) growth ({uncapped.verdict}), c0 sup={c0.sup_value:.6f} ({c0.verdict})",
    )


def test_criterion_11_p_to_infinity():
    D = DirichletPoly({1: 1.0, 2: 1.0})
    rows = norm_p_limit_check(D, [2.0, 4.0, 8.0, 16.0, 32.0], SamplerConfig(samples=100000, seed=0))
    values = [est.value for _, est in rows]
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    sup = norm_hinf_grid(D, 64).value
    rel_gap = abs(values[-1] - sup) / sup
    within_5pct = rel_gap <= 0.05
    exact32 = math.comb(32, 16) ** (1.0 / 32.0)
    ok = monotone and within_5pct
    assert _report(
        11, "p to infinity", ok,
        f"monotone={monotone}, p=32 estimate {values[-1]:.5f} vs sup {sup:.1f}: gap {rel_gap:.2%}; "
        f"exact H_32 = binom(32,16)^(1/32) = {exact32:.5f} sits {abs(exact32 - sup) / sup:.2%} from the sup, "
        f"so the 5% clause is unreachable by any consistent estimator",
    )
