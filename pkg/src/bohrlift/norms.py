"""Hardy-norm estimators on the polytorus and on vertical lines.

The H_p norm of a Dirichlet polynomial has two equal faces: the L_p
norm of its Bohr lift over the polytorus under Haar measure, and the
limit of vertical-line averages ((1/2R) int_{-R}^{R} ||D(it)||^p dt)^{1/p}
as R grows, because the line t -> (2^{-it}, 3^{-it}, ...) equidistributes
on the torus.  This module estimates the torus face exactly (p = 2 with
Euclidean coefficients), by seeded Monte Carlo (any finite p >= 1), or
by a lattice scan (p = infinity, a certified lower bound), and the line
face by trapezoid quadrature; the test suite pits the faces against
each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionCapError, NoClosedFormError
from .sampling import (
    KRONECKER_QMC,
    KRONECKER_SPAN,
    SamplerConfig,
    pairwise_mean,
    pairwise_sum,
    torus_angles,
)
from .series import (
    DirichletPoly,
    PowerPoly,
    bohr_lift,
    dirichlet_line_values,
    power_values_at_angles,
)
from .spaces import row_norms, vector_norm

EXACT_PARSEVAL = "exact_parseval"
TORUS_MC = "torus_mc"
TORUS_GRID_SUP = "torus_grid_sup"
VERTICAL_MEAN = "vertical_mean"
VERTICAL_SUP = "vertical_sup"

#: Widest lift the exhaustive lattice scan will accept by default.
DEFAULT_GRID_DIM_CAP = 8


@dataclass(frozen=True)
class NormEstimate:
    """One norm value together with how it was produced.

    ``std_error`` is zero exactly when the method is deterministic
    (exact formula, lattice scan, or line quadrature).  ``R`` records
    the vertical-line half-length for the line estimators and is pure
    metadata, not part of the serialized form.
    """

    value: float
    method: str
    std_error: float = 0.0
    samples: int = 0
    seed: int = 0
    R: float | None = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "std_error": self.std_error,
            "samples": self.samples,
            "seed": self.seed,
        }


def _as_power(poly) -> PowerPoly:
    return bohr_lift(poly) if isinstance(poly, DirichletPoly) else poly


def norm_h2_exact(poly) -> NormEstimate:
    """H_2 norm by orthonormality of the monomials: sqrt(sum_n ||a_n||_2^2).

    Valid only when the coefficient norm is the Euclidean one (l2, or
    any norm in dimension 1); other norms admit no closed form and are
    rejected in favor of the Monte Carlo estimator.  Sums run through
    math.fsum, so dropping terms can never enlarge the value.
    """
    if not poly.space.euclidean:
        raise NoClosedFormError(
            f"no closed form for H_2 with coefficient norm {poly.space.norm!r}; use norm_hp_mc"
        )
    squares = [math.fsum((v.real**2 + v.imag**2).tolist()) for _, v in poly.items()]
    value = math.sqrt(math.fsum(squares))
    return NormEstimate(value, EXACT_PARSEVAL)


def _sample_norms(poly, cfg: SamplerConfig) -> np.ndarray:
    """Coefficient-space norms of the polynomial at cfg.samples torus points."""
    if isinstance(poly, DirichletPoly) and cfg.scheme == KRONECKER_QMC:
        # the flow evaluates D directly: omega^alpha(n) = n^{-it}
        rng = np.random.default_rng(cfg.seed)
        t = rng.uniform(0.0, KRONECKER_SPAN, size=cfg.samples)
        return row_norms(dirichlet_line_values(poly, t), poly.space)
    P = _as_power(poly)
    theta = torus_angles(cfg, P.width)
    return row_norms(power_values_at_angles(P, theta), P.space)


def _constant_value(P: PowerPoly) -> float:
    return vector_norm(P.constant_term, P.space)


def norm_hp_mc(poly, p: float, cfg: SamplerConfig) -> NormEstimate:
    """Monte Carlo H_p estimate: (mean of ||lift(omega)||^p over samples)^{1/p}.

    The standard error follows the delta method,
    se(value) = se(mean of ||.||^p) * value^{1-p} / p.
    A constant polynomial short-circuits to its exact norm (every H_p
    norm of a constant is the coefficient norm), reported with zero
    standard error.  Fixed (samples, seed, scheme) reproduce bit-for-bit.
    """
    if not (p >= 1.0 and math.isfinite(p)):
        raise ValueError(f"p must be a finite real >= 1, got {p!r}")
    P = _as_power(poly)
    if P.width == 0:
        return NormEstimate(_constant_value(P), EXACT_PARSEVAL, 0.0, 0, cfg.seed)
    x = _sample_norms(poly, cfg)
    xp = x**p
    mean = pairwise_mean(xp)
    value = mean ** (1.0 / p)
    if cfg.samples > 1 and value > 0.0:
        var = pairwise_sum((xp - mean) ** 2) / (cfg.samples - 1)
        se_mean = math.sqrt(var / cfg.samples)
        std_error = se_mean * value ** (1.0 - p) / p
    else:
        std_error = 0.0
    return NormEstimate(value, TORUS_MC, std_error, cfg.samples, cfg.seed)


def norm_hinf_grid(poly, grid_per_dim: int, dim_cap: int = DEFAULT_GRID_DIM_CAP) -> NormEstimate:
    """Sup of ||lift|| over the lattice of grid_per_dim-th roots of unity.

    A certified lower bound for the true sup norm (the scan only visits
    lattice points).  Along refining grids (G, 2G, 4G, ...) the value is
    non-decreasing since each lattice contains the previous one.  The
    lift width is capped to keep the G^m lattice enumerable.
    """
    if grid_per_dim < 1:
        raise ValueError("grid_per_dim must be at least 1")
    P = _as_power(poly)
    m = P.width
    if m > dim_cap:
        raise DimensionCapError(
            f"lattice scan over {m} coordinates exceeds the cap {dim_cap}"
        )
    if m == 0:
        return NormEstimate(_constant_value(P), TORUS_GRID_SUP, 0.0, 1)
    total = grid_per_dim**m
    best = 0.0
    step = 2.0 * math.pi / grid_per_dim
    chunk = max(1, 2_000_000 // max(len(P), 1))
    for lo in range(0, total, chunk):
        flat = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        theta = np.empty((flat.size, m), dtype=np.float64)
        for j in range(m):
            theta[:, j] = (flat // grid_per_dim ** (m - 1 - j)) % grid_per_dim
        theta *= step
        vals = row_norms(power_values_at_angles(P, theta), P.space)
        best = max(best, float(vals.max()))
    return NormEstimate(best, TORUS_GRID_SUP, 0.0, total)


def _line_norms(D: DirichletPoly, R: float, t_samples: int) -> tuple[np.ndarray, float]:
    if not isinstance(D, DirichletPoly):
        raise TypeError("vertical-line estimators need a Dirichlet polynomial")
    if not R > 0:
        raise ValueError("R must be positive")
    if t_samples < 2:
        raise ValueError("t_samples must be at least 2")
    t = np.linspace(-R, R, t_samples)
    return row_norms(dirichlet_line_values(D, t), D.space), t[1] - t[0]


def vertical_mean(D: DirichletPoly, p: float, R: float, t_samples: int) -> NormEstimate:
    """Trapezoid value of ((1/2R) int_{-R}^{R} ||D(it)||^p dt)^{1/p}.

    Converges to the H_p norm as R grows; use `vertical_mean_diagnostic`
    to watch the approach along R, 2R, 4R.
    """
    if not (p >= 1.0 and math.isfinite(p)):
        raise ValueError(f"p must be a finite real >= 1, got {p!r}")
    vals, dt = _line_norms(D, R, t_samples)
    vp = vals**p
    integral = (pairwise_sum(vp) - 0.5 * (vp[0] + vp[-1])) * dt
    value = (integral / (2.0 * R)) ** (1.0 / p)
    return NormEstimate(value, VERTICAL_MEAN, 0.0, t_samples, 0, R=R)


def vertical_sup(D: DirichletPoly, R: float, t_samples: int) -> NormEstimate:
    """Max of ||D(it)|| over a uniform grid in [-R, R]; lower bound for the sup.

    An odd t_samples places a node at t = 0.  As R grows the values
    climb toward the sup norm of the lift by equidistribution of the
    line inside the torus.
    """
    vals, _ = _line_norms(D, R, t_samples)
    return NormEstimate(float(vals.max()), VERTICAL_SUP, 0.0, t_samples, 0, R=R)


def vertical_mean_diagnostic(
    D: DirichletPoly, p: float, R: float, t_samples: int
) -> list[NormEstimate]:
    """Line means at R, 2R and 4R (node count scaled to keep resolution)."""
    return [
        vertical_mean(D, p, R * 2**k, (t_samples - 1) * 2**k + 1) for k in range(3)
    ]


def norm_p_limit_check(D, p_grid, cfg: SamplerConfig) -> list[tuple[float, NormEstimate]]:
    """Estimates along a grid of exponents, all from one shared sample set.

    On a shared sample the map p -> (mean ||.||^p)^{1/p} is a power mean
    and therefore non-decreasing in p exactly, so the returned table is
    monotone up to float rounding; as p grows the values approach the
    sup norm.
    """
    ps = [float(p) for p in p_grid]
    for p in ps:
        if not (p >= 1.0 and math.isfinite(p)):
            raise ValueError(f"p grid entries must be finite reals >= 1, got {p!r}")
    P = _as_power(D)
    if P.width == 0:
        c = _constant_value(P)
        return [(p, NormEstimate(c, EXACT_PARSEVAL, 0.0, 0, cfg.seed)) for p in ps]
    x = _sample_norms(D, cfg)
    out = []
    for p in ps:
        xp = x**p
        mean = pairwise_mean(xp)
        value = mean ** (1.0 / p)
        if cfg.samples > 1 and value > 0.0:
            var = pairwise_sum((xp - mean) ** 2) / (cfg.samples - 1)
            se = math.sqrt(var / cfg.samples) * value ** (1.0 - p) / p
        else:
            se = 0.0
        out.append((p, NormEstimate(value, TORUS_MC, se, cfg.samples, cfg.seed)))
    return out
