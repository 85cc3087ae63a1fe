from math import comb

import pytest

from mapcensus import kernels
from mapcensus.series import Series1, Series2, SeriesError

N = 12


def test_beta_is_scaled_catalan():
    # beta = x + 3 beta^2  =>  [x^n] beta = 3^(n-1) Catalan(n-1)
    b = kernels.solve_kernel_1v("beta", N)
    want = [0] + [3 ** (n - 1) * comb(2 * n - 2, n - 1) // n for n in range(1, N + 1)]
    assert list(b.coeffs) == want


def test_eta_ternary_tree_numbers():
    # eta = y / (1 - eta)^2  =>  [y^n] eta = binomial(3n - 2, n - 1) / n
    e = kernels.solve_kernel_1v("eta", N)
    want = [0] + [comb(3 * n - 2, n - 1) // n for n in range(1, N + 1)]
    assert list(e.coeffs) == want


def test_gamma_is_catalan():
    g = kernels.solve_kernel_1v("gamma", N)
    want = [0] + [comb(2 * n, n) // (n + 1) for n in range(1, N + 1)]
    assert list(g.coeffs) == want


@pytest.mark.parametrize("order", [1, 5, 20])
def test_residuals_vanish(order):
    for name, r in kernels.kernel_residuals_1v(order).items():
        assert r.is_zero(), name
    for name, r in kernels.kernel_residuals_2v(min(order, 10)).items():
        assert r.is_zero(), name


@pytest.mark.parametrize("pair,single", [("beta12", "beta"), ("eta12", "eta"), ("gamma12", "gamma")])
def test_two_variable_kernels_reduce_on_the_diagonal(pair, single):
    a, b = kernels.solve_kernel_2v(pair, 10)
    one = kernels.solve_kernel_1v(single, 10)
    assert (a.diagonal() - one).is_zero()
    assert (a.swap() - b).is_zero()


def test_beta_pair_low_terms():
    b1, _ = kernels.solve_kernel_2v("beta12", 3)
    assert b1[1, 0] == 1 and b1[1, 1] == 2 and b1[2, 0] == 1 and b1[1, 2] == 6


def test_unknown_kernel():
    with pytest.raises(ValueError):
        kernels.solve_kernel_1v("delta", 3)
    with pytest.raises(ValueError):
        kernels.solve_kernel_1v("beta", 0)


@pytest.mark.parametrize("build", [kernels.changevar_beta_to_eta, kernels.changevar_eta_to_gamma])
def test_changes_of_variable(build):
    cv = build(20)
    assert cv.ok


@pytest.mark.parametrize("which", ["beta_eta", "eta_gamma"])
def test_changes_of_variable_2v(which):
    assert kernels.changevar_2v(which, 10).ok


def test_wrong_substitution_is_rejected():
    beta = kernels.solve_kernel_1v("beta", 10)
    not_F = beta * 2
    with pytest.raises(SeriesError):
        kernels.changevar_beta_to_eta(10, F=not_F)
    assert not kernels.changevar_beta_to_eta(10, F=not_F, strict=False).ok


def test_bundle_orders():
    kb = kernels.KernelBundle.solve(8, 5)
    assert kb.eta.order == 8 and kb.eta1.order == 5
