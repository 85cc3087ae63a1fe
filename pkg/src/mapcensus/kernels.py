"""The algebraic tree series underlying all map generating functions.

One variable::

    beta  = x + 3 beta^2
    eta   = y / (1 - eta)^2
    gamma = z (1 + gamma)^2

Two variables (black/white bicoloured versions)::

    beta1 = xb + beta1^2 + 2 beta1 beta2      beta2 = xw + beta2^2 + 2 beta1 beta2
    eta1  = yb / (1 - eta2)^2                 eta2  = yw / (1 - eta1)^2
    gamma1 = zb (1 + gamma2)^2                gamma2 = zw (1 + gamma1)^2

All are solved by plain fixed-point iteration.  Round ``k`` works at order
``k`` and is exact there, so after ``N`` rounds the series is exact to order
``N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple

from .series import Series1, Series2, SeriesError

KERNELS_1V = ("beta", "eta", "gamma")
KERNELS_2V = ("beta12", "eta12", "gamma12")


def _rhs_1v(which: str) -> Callable[[Series1], Series1]:
    if which == "beta":
        return lambda g: Series1.x(g.order) + 3 * g * g
    if which == "eta":
        return lambda g: Series1.x(g.order) / (1 - g) ** 2
    if which == "gamma":
        return lambda g: Series1.x(g.order) * (1 + g) ** 2
    raise ValueError(f"unknown kernel {which!r}")


def _rhs_2v(which: str) -> Callable[[Series2, Series2], Tuple[Series2, Series2]]:
    if which == "beta12":
        def rhs(b1, b2):
            n = b1.order
            cross = 2 * b1 * b2
            return Series2.xb(n) + b1 * b1 + cross, Series2.xw(n) + b2 * b2 + cross
    elif which == "eta12":
        def rhs(e1, e2):
            n = e1.order
            return Series2.xb(n) / (1 - e2) ** 2, Series2.xw(n) / (1 - e1) ** 2
    elif which == "gamma12":
        def rhs(g1, g2):
            n = g1.order
            return Series2.xb(n) * (1 + g2) ** 2, Series2.xw(n) * (1 + g1) ** 2
    else:
        raise ValueError(f"unknown kernel {which!r}")
    return rhs


@lru_cache(maxsize=None)
def solve_kernel_1v(which: str, order: int) -> Series1:
    """Power-series root with zero constant term of a one-variable kernel."""
    if order < 1:
        raise ValueError("kernel order must be >= 1")
    rhs = _rhs_1v(which)
    g = Series1.zero(0)
    for k in range(1, order + 1):
        g = rhs(g.padded(k)).truncate(k)
    return g


@lru_cache(maxsize=None)
def solve_kernel_2v(which: str, order: int) -> Tuple[Series2, Series2]:
    """Simultaneous fixed point of a two-variable kernel system."""
    if order < 1:
        raise ValueError("kernel order must be >= 1")
    rhs = _rhs_2v(which)
    g1 = g2 = Series2.zero(0)
    for k in range(1, order + 1):
        g1, g2 = rhs(g1.padded(k), g2.padded(k))
        g1, g2 = g1.truncate(k), g2.truncate(k)
    return g1, g2


def kernel_residuals_1v(order: int) -> dict:
    """Defining-equation residuals, each expected to be the zero series."""
    x = Series1.x(order)
    b = solve_kernel_1v("beta", order)
    e = solve_kernel_1v("eta", order)
    g = solve_kernel_1v("gamma", order)
    return {
        "beta": b - (x + 3 * b * b),
        "eta": e * (1 - e) ** 2 - x,
        "gamma": g - x * (1 + g) ** 2,
    }


def kernel_residuals_2v(order: int) -> dict:
    xb, xw = Series2.xb(order), Series2.xw(order)
    b1, b2 = solve_kernel_2v("beta12", order)
    e1, e2 = solve_kernel_2v("eta12", order)
    g1, g2 = solve_kernel_2v("gamma12", order)
    return {
        "beta1": b1 - (xb + b1 * b1 + 2 * b1 * b2),
        "beta2": b2 - (xw + b2 * b2 + 2 * b1 * b2),
        "eta1": e1 * (1 - e2) ** 2 - xb,
        "eta2": e2 * (1 - e1) ** 2 - xw,
        "gamma1": g1 - xb * (1 + g2) ** 2,
        "gamma2": g2 - xw * (1 + g1) ** 2,
    }


@dataclass(frozen=True)
class KernelBundle:
    order: int
    beta: Series1
    eta: Series1
    gamma: Series1
    beta1: Series2
    beta2: Series2
    eta1: Series2
    eta2: Series2
    gamma1: Series2
    gamma2: Series2

    @classmethod
    def solve(cls, order: int, order_2v: int | None = None) -> "KernelBundle":
        """Solve all six kernels; bivariate ones at ``order_2v`` (default ``order``)."""
        m = order if order_2v is None else order_2v
        b1, b2 = solve_kernel_2v("beta12", m)
        e1, e2 = solve_kernel_2v("eta12", m)
        g1, g2 = solve_kernel_2v("gamma12", m)
        return cls(order, solve_kernel_1v("beta", order), solve_kernel_1v("eta", order),
                   solve_kernel_1v("gamma", order), b1, b2, e1, e2, g1, g2)


# ---------------------------------------------------------------------------
# changes of variable
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChangeOfVariable:
    """A substitution ``new = phi(old)`` and the residual it must annihilate."""

    name: str
    substitution: Series1 | Tuple[Series2, Series2]
    transported: Series1 | Tuple[Series2, Series2]
    residual: Series1 | Tuple[Series2, Series2]

    @property
    def ok(self) -> bool:
        res = self.residual if isinstance(self.residual, tuple) else (self.residual,)
        return all(r.is_zero() for r in res)


def _check(cv: ChangeOfVariable, strict: bool = True) -> ChangeOfVariable:
    if strict and not cv.ok:
        raise SeriesError(f"change of variable {cv.name} leaves a nonzero residual")
    return cv


def changevar_beta_to_eta(order: int, F: Series1 | None = None, strict: bool = True) -> ChangeOfVariable:
    """``y = x (1 + F(x))^2`` turns ``eta(y) / (1 + 3 eta(y))`` into ``beta(x)``.

    ``F`` is the rooted-map series; it is rebuilt from ``beta`` when omitted.
    """
    beta = solve_kernel_1v("beta", order)
    if F is None:
        F = beta * (2 - 9 * beta) / (1 - 3 * beta) ** 2
    x = Series1.x(order)
    y_of_x = (x * (1 + F) ** 2).truncate(order)
    eta_x = solve_kernel_1v("eta", order).compose(y_of_x)
    beta_as_eta = eta_x / (1 + 3 * eta_x)
    return _check(ChangeOfVariable("beta->eta", y_of_x, beta_as_eta, beta_as_eta - beta), strict)


def changevar_eta_to_gamma(order: int, W: Series1 | None = None, strict: bool = True) -> ChangeOfVariable:
    """``z = W(y) / y`` turns ``gamma(z) / (2 gamma(z) + 1)`` into ``eta(y)``."""
    eta = solve_kernel_1v("eta", order + 1)
    if W is None:
        y = Series1.x(order + 1)
        W = eta * (2 - 3 * eta) - 2 * y
    z_of_y = W.div_x(1).truncate(order)
    gamma_y = solve_kernel_1v("gamma", order).compose(z_of_y)
    eta_as_gamma = gamma_y / (2 * gamma_y + 1)
    return _check(ChangeOfVariable("eta->gamma", z_of_y, eta_as_gamma,
                                   eta_as_gamma - eta.truncate(order)), strict)


def changevar_2v(which: str, order: int, strict: bool = True) -> ChangeOfVariable:
    """Bivariate changes of variable, checked at the series level.

    ``beta_eta``: with ``(yb, yw) = (xb (1+F)^2, xw (1+F)^2)``::

        beta1 = eta1 (1 - eta2) / (1 + eta1 + eta2 - 3 eta1 eta2)
        beta2 = eta2 (1 - eta1) / (1 + eta1 + eta2 - 3 eta1 eta2)

    ``eta_gamma``: with ``(zb, zw) = (W / yw, W / yb)``::

        eta1 = gamma1 / (1 + gamma1 + gamma2)
        eta2 = gamma2 / (1 + gamma1 + gamma2)
    """
    if which == "beta_eta":
        b1, b2 = solve_kernel_2v("beta12", order)
        F = (b1 + b2 - 5 * b1 * b2 - 2 * b1 * b1 - 2 * b2 * b2) / (
            (1 - b1 - 2 * b2) * (1 - b2 - 2 * b1))
        sq = (1 + F) ** 2
        yb = (Series2.xb(order) * sq).truncate(order)
        yw = (Series2.xw(order) * sq).truncate(order)
        e1, e2 = solve_kernel_2v("eta12", order)
        e1x, e2x = e1.compose(yb, yw), e2.compose(yb, yw)
        den = 1 + e1x + e2x - 3 * e1x * e2x
        t1 = e1x * (1 - e2x) / den
        t2 = e2x * (1 - e1x) / den
        return _check(ChangeOfVariable("beta12->eta12", (yb, yw), (t1, t2), (t1 - b1, t2 - b2)), strict)
    if which == "eta_gamma":
        m = order + 1
        e1, e2 = solve_kernel_2v("eta12", m)
        W = e1 + e2 - 3 * e1 * e2 - Series2.xb(m) - Series2.xw(m)
        zb = W.div_monomial(0, 1).truncate(order)
        zw = W.div_monomial(1, 0).truncate(order)
        g1, g2 = solve_kernel_2v("gamma12", order)
        g1y, g2y = g1.compose(zb, zw), g2.compose(zb, zw)
        s = 1 + g1y + g2y
        t1, t2 = g1y / s, g2y / s
        return _check(ChangeOfVariable("eta12->gamma12", (zb, zw), (t1, t2),
                                       (t1 - e1.truncate(order), t2 - e2.truncate(order))), strict)
    raise ValueError(f"unknown change of variable {which!r}")
