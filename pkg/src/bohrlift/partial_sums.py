"""Partial-sum experiments: summation by parts and the log-growth of truncation.

Truncating a Dirichlet polynomial at N is a coefficient projection; its
operator norm on the Hardy scale grows no faster than a constant times
log N.  `log_bound_experiment` measures the ratio ||S_N D|| / ||D||
along a sweep of N and reports it against log N, so the stability of
ratio / log N is observable without ever asserting a value for the
constant.  `abel_identity_check` verifies, coefficient by coefficient,
the summation-by-parts identity that converts damped blocks
sum_{n=N}^{M} a_n n^{-eps} n^{-s} into a telescoped combination of the
partial sums S_n D, the mechanism behind the log bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .norms import (
    EXACT_PARSEVAL,
    VERTICAL_SUP,
    NormEstimate,
    norm_h2_exact,
    norm_hp_mc,
    vertical_sup,
)
from .sampling import SamplerConfig, derive_seed
from .series import DirichletPoly, max_coeff_gap, partial_sum
from .spaces import vector_norm


@dataclass(frozen=True)
class LogBoundRow:
    """One sweep point: truncation ratio at N and the same ratio over log N."""

    N: int
    ratio: float
    ratio_over_log: float
    p: float
    method: str
    std_error: float = 0.0


def abel_identity_check(
    D: DirichletPoly, N: int, M: int, eps: float
) -> tuple[DirichletPoly, DirichletPoly, float]:
    """Summation by parts on the block [N, M], both sides as polynomials.

    Left side: sum_{n=N}^{M} a_n n^{-eps} n^{-s}.  Right side:
    sum_{n=N}^{M-1} (S_n D)(n^{-eps} - (n+1)^{-eps})
    + (S_M D) M^{-eps} - (S_{N-1} D) N^{-eps},
    accumulated literally, partial sum by partial sum.  Returns
    (lhs, rhs, gap) where gap is the largest coefficient-wise norm
    difference relative to the largest coefficient norm of D itself
    (the output scale can vanish when the block misses the support, the
    input scale cannot); exact arithmetic makes the two sides equal, so
    the gap is pure float rounding and must stay at the 1e-12 scale.
    """
    if not (1 < N < M):
        raise ValueError(f"need 1 < N < M, got N={N}, M={M}")
    if M > D.max_index:
        raise ValueError(f"M={M} exceeds the largest stored index {D.max_index}")
    if not (eps > 0 and math.isfinite(eps)):
        raise ValueError(f"eps must be positive, got {eps!r}")

    lhs = DirichletPoly(
        {n: v * float(n) ** (-eps) for n, v in D.items() if N <= n <= M}, D.space
    )

    # running S_n D, accumulated against the telescoping weights
    acc: dict[int, np.ndarray] = {}
    running: dict[int, np.ndarray] = {k: v for k, v in D.items() if k <= N - 1}

    def add_scaled(poly_map: dict[int, np.ndarray], w: float) -> None:
        for k, v in poly_map.items():
            acc[k] = acc[k] + v * w if k in acc else v * w

    add_scaled(running, -float(N) ** (-eps))
    for n in range(N, M):
        if n in D:
            running[n] = D[n]
        add_scaled(running, float(n) ** (-eps) - float(n + 1) ** (-eps))
    if M in D:
        running[M] = D[M]
    add_scaled(running, float(M) ** (-eps))
    rhs = DirichletPoly(acc, D.space)

    scale = max((vector_norm(v, D.space) for v in D.coeffs.values()), default=0.0)
    gap = max_coeff_gap(lhs, rhs)
    return lhs, rhs, gap / scale if scale > 0 else gap


def partial_sum_projection_check(D: DirichletPoly, N: int) -> bool:
    """S_N is an idempotent projection that never enlarges the H_2 norm.

    Both facts are checked exactly: the truncation of a truncation is
    itself, and the Parseval sum of a sub-map cannot exceed the full
    one (fsum is correctly rounded, and rounding is monotone).
    """
    S = partial_sum(D, N)
    if partial_sum(S, N) != S:
        return False
    if D.space.euclidean:
        return norm_h2_exact(S).value <= norm_h2_exact(D).value
    return True


def log_bound_experiment(
    family: Callable[[int], DirichletPoly],
    p: float,
    Ns: Sequence[int],
    cfg: SamplerConfig | None = None,
    *,
    t_samples: int = 8193,
    r_per_n: float = 100.0,
) -> list[LogBoundRow]:
    """Truncation-ratio sweep ||S_N D|| / ||D|| for D = family(max(Ns)).

    Estimators by exponent: p = 2 uses the exact Parseval value, p =
    infinity uses the vertical-line sup scan with half-length R =
    r_per_n * N (and R = r_per_n * max index for the denominator), any
    other finite p uses Monte Carlo with the per-row seed derived as
    seed XOR row index.  Rows report ratio and ratio / log N; the log-
    bound principle says the latter stays bounded across the sweep.
    """
    Ns = [int(N) for N in Ns]
    if not Ns or any(N < 2 for N in Ns):
        raise ValueError("Ns must be a non-empty list of integers >= 2")
    if any(a >= b for a, b in zip(Ns, Ns[1:])):
        raise ValueError("Ns must be strictly increasing")
    if cfg is None:
        cfg = SamplerConfig()
    D = family(max(Ns))
    if len(D) == 0:
        raise ValueError("family produced the zero polynomial")

    use_exact = p == 2.0 and D.space.euclidean
    if use_exact:
        denom = norm_h2_exact(D)
    elif math.isinf(p):
        denom = vertical_sup(D, r_per_n * max(D.max_index, 2), t_samples)
    else:
        denom = norm_hp_mc(D, p, cfg)

    rows = []
    for row_idx, N in enumerate(Ns):
        S = partial_sum(D, N)
        if use_exact:
            num = norm_h2_exact(S)
            method = EXACT_PARSEVAL
        elif math.isinf(p):
            num = vertical_sup(S, r_per_n * N, t_samples)
            method = VERTICAL_SUP
        else:
            num = norm_hp_mc(S, p, cfg.with_seed(derive_seed(cfg.seed, row_idx)))
            method = num.method
        ratio = num.value / denom.value
        if num.value > 0 and denom.value > 0:
            rel = math.hypot(num.std_error / num.value, denom.std_error / denom.value)
            se = ratio * rel
        else:
            se = 0.0
        rows.append(LogBoundRow(N, ratio, ratio / math.log(N), float(p), method, se))
    return rows
