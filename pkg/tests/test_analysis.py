from math import log2

import pytest

from oscmlab import (GROVER_BASE, alpha_balance_residual, balanced_alpha,
                     binary_entropy, fit_exponent_base, fpt_crossover_k,
                     fpt_crossover_k_tight)


def test_grover_base_constant():
    assert GROVER_BASE == 1.728


def test_entropy_endpoints_and_peak():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == 1.0


def test_entropy_near_balanced_alpha():
    assert binary_entropy(0.055362) == pytest.approx(0.3087, abs=1e-3)
    assert binary_entropy(0.055362) == pytest.approx(0.3087517623923327,
                                                     rel=1e-12)


@pytest.mark.parametrize("p", [0.1, 0.25, 0.3, 0.42])
def test_entropy_symmetry_and_formula(p):
    assert binary_entropy(p) == pytest.approx(binary_entropy(1.0 - p))
    direct = -p * log2(p) - (1.0 - p) * log2(1.0 - p)
    assert binary_entropy(p) == pytest.approx(direct, rel=1e-15)


def test_entropy_increases_below_half():
    grid = [i / 40.0 for i in range(21)]
    values = [binary_entropy(p) for p in grid]
    assert all(a < b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("p", [-0.1, 1.1, 2.0])
def test_entropy_rejects_out_of_range(p):
    with pytest.raises(ValueError):
        binary_entropy(p)


def test_residual_nearly_zero_at_published_alpha():
    r = alpha_balance_residual(0.055362)
    assert abs(r) < 1e-3
    assert r == pytest.approx(1.1466623206501936e-06, rel=1e-9)


def test_residual_signs_and_monotonicity():
    assert alpha_balance_residual(0.01) > 0.0
    assert alpha_balance_residual(0.5) < 0.0
    grid = [0.01 + 0.035 * i for i in range(15)]
    values = [alpha_balance_residual(a) for a in grid]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("alpha", [0.0, -0.2, 0.6, 1.0])
def test_residual_rejects_out_of_domain(alpha):
    with pytest.raises(ValueError):
        alpha_balance_residual(alpha)


def test_balanced_alpha_root():
    a = balanced_alpha()
    assert a == pytest.approx(0.05536322640979713, abs=1e-9)
    assert abs(alpha_balance_residual(a)) < 1e-11


def test_balanced_alpha_custom_bracket():
    a = balanced_alpha(0.01, 0.5)
    assert a == pytest.approx(0.055362, abs=1e-4)


def test_balanced_alpha_growth_base():
    a = balanced_alpha()
    base = 2.0 ** binary_entropy((1.0 - a) / 4.0)
    assert base == pytest.approx(GROVER_BASE, abs=2e-3)
    assert base == pytest.approx(1.7273909038034656, rel=1e-9)


@pytest.mark.parametrize("lo,hi", [(0.2, 0.24), (0.001, 0.002)])
def test_balanced_alpha_rejects_bad_bracket(lo, hi):
    with pytest.raises(ValueError):
        balanced_alpha(lo, hi)


@pytest.mark.parametrize("n,expected", [
    (10, 161), (20, 641), (50, 4002), (100, 16005),
])
def test_crossover_pinned_values(n, expected):
    assert fpt_crossover_k(n) == expected


@pytest.mark.parametrize("n,expected", [
    (10, 63), (20, 203), (50, 1017), (100, 3660),
])
def test_crossover_tight_pinned_values(n, expected):
    assert fpt_crossover_k_tight(n) == expected


def test_crossover_zero_constant():
    assert fpt_crossover_k(10, 0.0) == 32
    assert fpt_crossover_k(1, 0.0) == 1


def test_crossover_quadruples_when_n_doubles():
    for n in (50, 64, 100, 128, 200):
        ratio = fpt_crossover_k(2 * n) / fpt_crossover_k(n)
        assert abs(ratio - 4.0) < 0.01


@pytest.mark.parametrize("n", [1, 2, 5, 10, 40, 100])
def test_tight_threshold_below_loose(n):
    assert fpt_crossover_k_tight(n) < fpt_crossover_k(n)


@pytest.mark.parametrize("n", [0, -3])
def test_crossover_rejects_nonpositive_n(n):
    with pytest.raises(ValueError):
        fpt_crossover_k(n)
    with pytest.raises(ValueError):
        fpt_crossover_k_tight(n)


def test_fit_recovers_pure_power():
    assert fit_exponent_base([3, 5, 9], [8, 32, 512]) \
        == pytest.approx(2.0, rel=1e-9)


def test_fit_with_linear_factor():
    # The linear factor adds log2(n)/n to the per-n exponent, so the fitted
    # base sits a bit above 4 on this window.
    ns = list(range(8, 21))
    costs = [n * 4 ** n for n in ns]
    fitted = fit_exponent_base(ns, costs)
    assert fitted == pytest.approx(4.310574486381863, rel=1e-12)
    # Cross-check against the closed-form least-squares slope.
    ys = [log2(c) for c in costs]
    nbar = sum(ns) / len(ns)
    ybar = sum(ys) / len(ys)
    slope = (sum((n - nbar) * (y - ybar) for n, y in zip(ns, ys))
             / sum((n - nbar) ** 2 for n in ns))
    assert fitted == pytest.approx(2.0 ** slope, rel=1e-9)


def test_fit_validation():
    with pytest.raises(ValueError):
        fit_exponent_base([1, 2], [4.0])
    with pytest.raises(ValueError):
        fit_exponent_base([1], [2.0])
    with pytest.raises(ValueError):
        fit_exponent_base([1, 2], [2.0, 0.0])
