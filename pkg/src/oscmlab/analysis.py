"""Growth-rate analysis helpers: entropy balance, crossovers, curve fits."""

from __future__ import annotations

from math import ceil, log2

import numpy as np

GROVER_BASE = 1.728  # growth base of the hybrid DP at the balanced alpha


def binary_entropy(p: float) -> float:
    """H(p) in bits; defined as 0 at the endpoints."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("binary entropy needs p in [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * log2(p) - (1.0 - p) * log2(1.0 - p)


def alpha_balance_residual(alpha: float) -> float:
    """Table-build vs search-phase exponent gap, zero at the optimal alpha.

    The table phase of the hybrid DP grows like 2^{H((1-alpha)/4) n} and the
    nested-search phase like 2^{(3/4 + H(alpha)/8) n}; this returns the
    difference of the two exponents' n-coefficients.
    """
    if not 0.0 < alpha <= 0.5:
        raise ValueError("alpha must lie in (0, 0.5]")
    return binary_entropy((1.0 - alpha) / 4.0) - (0.75 + binary_entropy(alpha) / 8.0)


def balanced_alpha(lo: float = 1e-9, hi: float = 0.25, tol: float = 1e-12) -> float:
    """Root of alpha_balance_residual by bisection (residual is decreasing)."""
    f_lo = alpha_balance_residual(lo)
    f_hi = alpha_balance_residual(hi)
    if f_lo <= 0.0 or f_hi >= 0.0:
        raise ValueError("bracket does not straddle the balance point")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if alpha_balance_residual(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def fpt_crossover_k(n: int, c: float = 1.0) -> int:
    """Parameter threshold above which the 1.728^n solver beats a
    2^{c*sqrt(2k)}-style parameterized one, using the loose log2(n) <= n bound:
    ceil((c + log2 1.728)^2 / 2 * n^2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return ceil((c + log2(GROVER_BASE)) ** 2 / 2.0 * n * n)


def fpt_crossover_k_tight(n: int, c: float = 1.0) -> int:
    """Same threshold without the bound: ceil((c*log2 n + n*log2 1.728)^2 / 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return ceil((c * log2(n) + n * log2(GROVER_BASE)) ** 2 / 2.0)


def fit_exponent_base(ns, costs) -> float:
    """Least-squares base b of cost ~ b^n: 2 ** slope of log2(cost) vs n."""
    ns = np.asarray(ns, dtype=float)
    costs = np.asarray(costs, dtype=float)
    if ns.shape != costs.shape or ns.size < 2:
        raise ValueError("need two equal-length samples at least")
    if np.any(costs <= 0):
        raise ValueError("costs must be positive to fit an exponential")
    slope = np.polyfit(ns, np.log2(costs), 1)[0]
    return float(2.0 ** slope)
