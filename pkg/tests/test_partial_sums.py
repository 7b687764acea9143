"""Summation by parts and truncation-growth experiments."""

import math

import numpy as np
import pytest

from bohrlift import (
    DirichletPoly,
    SamplerConfig,
    abel_identity_check,
    gallery,
    log_bound_experiment,
    partial_sum,
    partial_sum_projection_check,
)
from conftest import random_dirichlet


def test_abel_identity_simple():
    D = DirichletPoly({n: 1.0 for n in range(1, 30)})
    lhs, rhs, gap = abel_identity_check(D, 5, 25, 0.7)
    assert gap < 1e-12
    # lhs really is the damped block
    assert lhs[10] == pytest.approx(10.0 ** (-0.7))
    assert 3 not in lhs


def test_abel_identity_random(rng):
    for _ in range(100):
        D = random_dirichlet(rng, max_index=200, max_terms=20)
        if D.max_index < 4:
            continue
        M = int(D.max_index)
        N = int(rng.integers(2, M))
        eps = float(rng.uniform(0.05, 2.0))
        _, _, gap = abel_identity_check(D, N, M, eps)
        assert gap < 1e-12


def test_abel_identity_vector(rng):
    D = DirichletPoly({n: rng.standard_normal(3) + 1j * rng.standard_normal(3) for n in range(1, 80)})
    _, _, gap = abel_identity_check(D, 10, 75, 0.8)
    assert gap < 1e-12


def test_abel_block_missing_support():
    # the block can miss the support entirely; both sides are then ~0
    D = DirichletPoly({1: 1.0, 2: 1.0, 41: 1.0})
    lhs, rhs, gap = abel_identity_check(D, 30, 38, 0.5)
    assert len(lhs) == 0
    assert gap < 1e-12


def test_abel_validation():
    D = DirichletPoly({n: 1.0 for n in range(1, 30)})
    with pytest.raises(ValueError):
        abel_identity_check(D, 1, 10, 0.5)  # need N > 1
    with pytest.raises(ValueError):
        abel_identity_check(D, 10, 10, 0.5)  # need M > N
    with pytest.raises(ValueError):
        abel_identity_check(D, 5, 40, 0.5)  # M past the support
    with pytest.raises(ValueError):
        abel_identity_check(D, 5, 25, 0.0)  # eps must be positive


def test_projection_check(rng):
    for _ in range(20):
        D = random_dirichlet(rng, max_index=500, max_terms=25, dim=2)
        N = int(rng.integers(1, 600))
        assert partial_sum_projection_check(D, N)


def test_log_bound_exact_rows():
    rows = log_bound_experiment(lambda s: gallery("zeta_shift", s), 2.0, [4, 16, 64])
    assert [r.N for r in rows] == [4, 16, 64]
    assert all(r.method == "exact_parseval" for r in rows)
    assert all(r.std_error == 0.0 for r in rows)
    # truncation ratios grow toward 1 and hit it at the full length
    ratios = [r.ratio for r in rows]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] == pytest.approx(1.0)
    # hand-check the first ratio against Parseval sums
    D = gallery("zeta_shift", 64)
    num = math.sqrt(math.fsum(float(n) ** (-2 * 0.51) for n in range(1, 5)))
    den = math.sqrt(math.fsum(float(n) ** (-2 * 0.51) for n in range(1, 65)))
    assert ratios[0] == pytest.approx(num / den, rel=1e-12)


def test_log_bound_sup_rows():
    rows = log_bound_experiment(
        lambda s: gallery("zeta_shift", s), math.inf, [4, 8, 16], t_samples=257
    )
    assert all(r.method == "vertical_sup" for r in rows)
    assert all(r.ratio <= 1.0 + 1e-12 for r in rows)
    assert all(r.ratio_over_log == pytest.approx(r.ratio / math.log(r.N)) for r in rows)


def test_log_bound_mc_rows():
    rows = log_bound_experiment(
        lambda s: gallery("zeta_shift", s), 4.0, [4, 16], SamplerConfig(samples=4000, seed=5)
    )
    assert all(r.method == "torus_mc" for r in rows)
    assert all(r.std_error > 0.0 for r in rows)


def test_log_bound_validation():
    with pytest.raises(ValueError):
        log_bound_experiment(lambda s: gallery("zeta_shift", s), 2.0, [])
    with pytest.raises(ValueError):
        log_bound_experiment(lambda s: gallery("zeta_shift", s), 2.0, [4, 3])
