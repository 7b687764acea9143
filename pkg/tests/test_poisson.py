"""Poisson kernels and radial smoothing of power polynomials."""

import math

import numpy as np
import pytest

from bohrlift import (
    EMPTY_INDEX,
    DirichletPoly,
    PowerPoly,
    RadiusVector,
    SamplerConfig,
    bohr_lift,
    contraction_check,
    kernel_1d,
    kernel_m,
    kernel_m_series,
    max_coeff_gap,
    poisson_convolve_exact,
    poisson_convolve_numeric,
)
from bohrlift.errors import DimensionCapError


def test_kernel_point_values():
    # K(1, r) = (1 + r)/(1 - r) on the positive axis
    assert kernel_1d(1.0, 0.5) == pytest.approx(3.0)
    for r in (0.0, 0.3, 0.9):
        assert kernel_1d(1.0, r) == pytest.approx((1 + r) / (1 - r))
    # rotating both arguments together changes nothing
    w = np.exp(0.7j)
    assert kernel_1d(w, 0.4 * w) == pytest.approx(kernel_1d(1.0, 0.4))


def test_kernel_positive_and_normalized():
    ang = np.linspace(0.0, 2.0 * np.pi, 4096, endpoint=False)
    vals = kernel_1d(np.exp(1j * ang), 0.8 * np.exp(0.3j))
    assert np.all(vals > 0)
    # Riemann sum of the kernel over the circle is 1 (unit mass)
    assert np.mean(vals) == pytest.approx(1.0, abs=1e-12)


def test_kernel_validation():
    with pytest.raises(ValueError):
        kernel_1d(1.1, 0.5)  # omega must be unimodular
    with pytest.raises(ValueError):
        kernel_1d(1.0, 1.0)  # z must be strictly inside


def test_kernel_m_is_product():
    omega = np.exp(1j * np.array([0.4, -1.1, 2.0]))
    z = np.exp(1j * np.array([2.2, 0.7, -0.3]))
    r = RadiusVector([0.5, 0.35, 0.2])
    expected = math.prod(kernel_1d(omega[j], r.radii[j] * z[j]) for j in range(3))
    assert kernel_m(omega, z, r) == pytest.approx(expected)


def test_kernel_series_matches_closed_form():
    omega = np.exp(1j * np.array([0.4, -1.1]))
    z = np.exp(1j * np.array([2.2, 0.7]))
    r = RadiusVector([0.5, 0.35])
    km = kernel_m(omega, z, r)
    ks = kernel_m_series(omega, z, r, terms=80)
    assert abs(km - ks) < 1e-9


def test_radius_vector():
    r = RadiusVector([0.5, 0.25])
    assert (r * r).radii == (0.25, 0.0625)
    assert RadiusVector.uniform(0.3, 4).radii == (0.3, 0.3, 0.3, 0.3)
    with pytest.raises(ValueError):
        RadiusVector([1.0])
    with pytest.raises(ValueError):
        RadiusVector([-0.1])


def test_exact_convolution_scales_coefficients():
    P = bohr_lift(DirichletPoly({1: 1.0, 2: 2.0, 6: 3.0, 8: 4.0}))
    r = RadiusVector([0.5, 0.1])
    E = poisson_convolve_exact(P, r)
    assert E[EMPTY_INDEX] == 1.0
    assert E[bohr_lift(DirichletPoly({2: 1.0})).indices()[0]] == pytest.approx(1.0)  # 2 * 0.5
    assert E.get(P.indices()[-1]) is not None


def test_exact_vs_numeric():
    P = bohr_lift(DirichletPoly({1: 1.0, 2: 0.5, 3: -0.25, 6: 1.5, 8: 2.0}))
    r = RadiusVector([0.5, 0.25])
    E = poisson_convolve_exact(P, r)
    N = poisson_convolve_numeric(P, r, 64)
    assert max_coeff_gap(E, N) < 1e-9


def test_exact_vs_numeric_width_three_vector():
    D = DirichletPoly({1: [1.0, 0.5], 2: [0.0, 1.0], 3: [2.0, 0.0], 5: [1.0, -1.0], 30: [0.5, 0.5]})
    P = bohr_lift(D)
    r = RadiusVector([0.4, 0.3, 0.6])
    E = poisson_convolve_exact(P, r)
    # rectangle-rule aliasing decays like r_max^(grid - deg); 32 points leak
    # ~0.6^31 ~ 1e-7 here, doubling the grid pushes it below double rounding
    assert max_coeff_gap(E, poisson_convolve_numeric(P, r, 32)) > 1e-9
    assert max_coeff_gap(E, poisson_convolve_numeric(P, r, 64)) < 1e-9


def test_constant_preserved():
    C = PowerPoly({EMPTY_INDEX: 2.0 + 1.0j})
    assert poisson_convolve_exact(C, RadiusVector([0.3])) == C


def test_semigroup_dyadic_exact():
    P = bohr_lift(DirichletPoly({1: 1.0, 2: 0.5, 3: -0.25, 6: 1.5, 8: 2.0}))
    ra, rb = RadiusVector([0.5, 0.5]), RadiusVector([0.25, 0.5])
    once = poisson_convolve_exact(poisson_convolve_exact(P, ra), rb)
    both = poisson_convolve_exact(P, ra * rb)
    assert once == both  # bitwise: dyadic radii multiply exactly


def test_numeric_grid_validation():
    P = bohr_lift(DirichletPoly({8: 1.0}))  # degree 3 in one variable
    with pytest.raises(ValueError):
        poisson_convolve_numeric(P, RadiusVector([0.5]), 7)  # grid must exceed 2*deg+1
    wide = bohr_lift(DirichletPoly({2 * 3 * 5 * 7 * 11: 1.0}))
    with pytest.raises(DimensionCapError):
        poisson_convolve_numeric(wide, RadiusVector.uniform(0.5, 5), 8)


def test_coverage_validation():
    P = bohr_lift(DirichletPoly({6: 1.0}))  # width 2
    with pytest.raises(ValueError):
        poisson_convolve_exact(P, RadiusVector([0.5]))


def test_l2_contraction_exact():
    P = bohr_lift(DirichletPoly({1: 1.0, 2: 0.5, 3: -0.25, 6: 1.5}))
    lhs, rhs = contraction_check(P, RadiusVector([0.7, 0.6]), 2.0)
    assert lhs.method == "exact_parseval"
    assert lhs.value <= rhs.value


def test_l4_contraction_mc():
    P = bohr_lift(DirichletPoly({1: 1.0 + 0.2j, 2: 0.5, 3: -0.25 + 0.4j, 6: 1.5, 8: -2.0j}))
    lhs, rhs = contraction_check(P, RadiusVector([0.6, 0.5]), 4.0, SamplerConfig(samples=10000, seed=0))
    assert lhs.value <= rhs.value
    assert lhs.method == "torus_mc"


def test_smoothing_shrinks_high_degrees_most():
    P = bohr_lift(DirichletPoly({2: 1.0, 4: 1.0, 8: 1.0}))
    E = poisson_convolve_exact(P, RadiusVector([0.5]))
    degs = sorted((alpha.degree, abs(complex(E[alpha][0]))) for alpha in E.indices())
    mags = [m for _, m in degs]
    assert mags == sorted(mags, reverse=True)
