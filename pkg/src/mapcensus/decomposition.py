"""Tree-decomposition identities checked as exact truncated-series identities.

Two decompositions tie the three families together:

* splitting multiple edges turns k-rooted quadrangulations into k-rooted
  simple quadrangulations with rooted quadrangulations substituted at the
  edges (argument ``y = x (1 + F(x))^2``);
* splitting separating 4-cycles turns k-rooted simple quadrangulations into
  axis-nodes or irreducible cores with simple quadrangulations substituted
  at the faces (argument ``z = W(y) / y``, two variables
  ``(zb, zw) = (W/yw, W/yb)``).

Every identity is evaluated with the catalog series, the difference of the
two sides is kept as a residual, and a report records whether the residual is
the zero series up to the requested order.  Failures never abort the suite.

For the 2-rooted case the irreducible series are also *solved* from the
upper-triangular system (one new unknown per equation) and compared with the
closed forms pushed through ``z = W/y``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from . import formulas
from .kernels import (changevar_2v, changevar_beta_to_eta, changevar_eta_to_gamma,
                      kernel_residuals_1v, kernel_residuals_2v, solve_kernel_1v, solve_kernel_2v)
from .series import Series1, Series2, SeriesError

MARGIN = 4  # extra working order; divisions by W and y eat a few terms
Series = Union[Series1, Series2]


@dataclass
class IdentityReport:
    identity: str
    variables: int
    order: int
    residual: Optional[Series]
    passed: bool
    first_failure: Optional[int] = None
    note: str = ""

    def as_record(self) -> dict:
        return {"identity": self.identity, "variables": self.variables, "order": self.order,
                "pass": self.passed, "first_failure": self.first_failure, "note": self.note}

    def as_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = "" if self.first_failure is None else f"  first nonzero residual at degree {self.first_failure}"
        extra = f"  ({self.note})" if self.note else ""
        return f"{status}  {self.identity:<34} {self.variables}v  order {self.order}{where}{extra}"


def _first_nonzero(r: Series) -> Optional[int]:
    if isinstance(r, Series1):
        v = r.valuation()
        return None if v > r.order else v
    return r.first_nonzero_degree()


def report(identity: str, residual, order: int, note: str = "") -> IdentityReport:
    """Build a report; ``residual`` is a series (or tuple of series) or an exception."""
    variables = 1
    if isinstance(residual, Exception):
        return IdentityReport(identity, 0, order, None, False, None, f"{type(residual).__name__}: {residual}")
    parts = residual if isinstance(residual, tuple) else (residual,)
    try:
        parts = tuple(p.truncate(order) for p in parts)
    except SeriesError as exc:
        return IdentityReport(identity, 0, order, None, False, None, f"insufficient precision: {exc}")
    if isinstance(parts[0], Series2):
        variables = 2
    fails = [d for d in (_first_nonzero(p) for p in parts) if d is not None]
    first = min(fails) if fails else None
    return IdentityReport(identity, variables, order, parts[0] if len(parts) == 1 else parts,
                          first is None, first, note)


def _guard(identity: str, order: int, thunk) -> IdentityReport:
    try:
        return report(identity, thunk(), order)
    except SeriesError as exc:
        return report(identity, exc, order)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _cat1(N: int):
    return formulas.catalog_1v(N + MARGIN)


@lru_cache(maxsize=None)
def _cat2(N: int, with_J: bool = True):
    return formulas.catalog_2v(N + MARGIN, formulas.FAMILIES, with_J)


def _y1(n: int) -> Series1:
    return Series1.x(n)


def _z1(c) -> Series1:
    """``W(y) / y``."""
    return c.W.div_x(1)


def _z2(c) -> Tuple[Series2, Series2]:
    """``(W / yw, W / yb)``: the argument pair for irreducible series."""
    return c.W.div_monomial(0, 1), c.W.div_monomial(1, 0)


def _over_yb(s: Series2) -> Series2:
    return s.div_monomial(1, 0)


def _over_yw(s: Series2) -> Series2:
    return s.div_monomial(0, 1)


# ---------------------------------------------------------------------------
# kernels and changes of variable
# ---------------------------------------------------------------------------


def check_kernels(N: int = 30, N2: int = 20) -> List[IdentityReport]:
    out = [report(f"kernel.{k}", r, N) for k, r in kernel_residuals_1v(N).items()]
    out += [report(f"kernel.{k}", r, N2) for k, r in kernel_residuals_2v(N2).items()]
    for which, name in (("beta", "beta12"), ("eta", "eta12"), ("gamma", "gamma12")):
        a = solve_kernel_1v(which, N2)
        p, q = solve_kernel_2v(name, N2)
        out.append(report(f"kernel.{name}.diagonal", (p.diagonal() - a, q.diagonal() - a), N2))
        out.append(report(f"kernel.{name}.swap", p.swap() - q, N2))
    return out


def check_changevar(N: int = 30, N2: int = 20) -> List[IdentityReport]:
    out = []
    for name, thunk, n in (
        ("changevar.beta_eta", lambda: changevar_beta_to_eta(N, strict=False), N),
        ("changevar.eta_gamma", lambda: changevar_eta_to_gamma(N, strict=False), N),
        ("changevar.beta12_eta12", lambda: changevar_2v("beta_eta", N2, strict=False), N2),
        ("changevar.eta12_gamma12", lambda: changevar_2v("eta_gamma", N2, strict=False), N2),
    ):
        out.append(_guard(name, n, lambda t=thunk: t().residual))
    return out


# ---------------------------------------------------------------------------
# multiple-edge decomposition: maps <-> 2-connected
# ---------------------------------------------------------------------------


def check_multiple_edge(N: int = 30, N2: int = 20) -> List[IdentityReport]:
    c = _cat1(N)
    n = c.order
    x = _y1(n)
    F, f, E = c.F, c.f, c.E
    y = (x * (1 + F) ** 2).truncate(n)       # the x factor is required for a valid substitution
    out = [
        _guard("rooted_vv.derivative_form", N, lambda: c.F_vv - (
            (x * x * F.derivative().derivative()).scale(Fraction(1, 2))
            + 2 * x * F.derivative() + F)),
        _guard("multiple_edge.vv", N, lambda: c.F_vv - (
            2 * f.euler() / (1 - f) + E / (1 + F) * c.G_vv.compose(y))),
        _guard("multiple_edge.vf", N, lambda: c.F_vf - E * c.G_vf.compose(y)),
        _guard("multiple_edge.ff", N, lambda: c.F_ff - E * (1 + F) * c.G_ff.compose(y)),
        _guard("rooted.simply_rooted", N, lambda: F - f / (1 - f)),
    ]

    d = _cat2(N2, with_J=False)
    m = d.order
    F2, f2, E2 = d.F, d.f, d.E
    sq = (1 + F2) ** 2
    yb = (Series2.xb(m) * sq).truncate(m)
    yw = (Series2.xw(m) * sq).truncate(m)
    pref = E2 / (1 + F2)
    out += [
        _guard("multiple_edge.bw", N2, lambda: d.F_bw - (
            2 * f2.euler() / (1 - f2) + pref * d.G_bw.compose(yb, yw))),
        _guard("multiple_edge.bb", N2, lambda: d.F_bb - pref * d.G_bb.compose(yb, yw)),
        _guard("multiple_edge.ww", N2, lambda: d.F_ww - pref * d.G_ww.compose(yb, yw)),
    ]
    return out


# ---------------------------------------------------------------------------
# separating 4-cycles, k >= 3
# ---------------------------------------------------------------------------


def _axis_term_1v(c, y: Series1) -> Series1:
    Jy = c.J.div_x(1)
    return 2 * c.B.div_x(1) / (1 - Jy)


def _axis_term_2v(d, which: str, j_reading: str = "swapped") -> Series2:
    """``B/yb / (1 - J/yb)`` for the bb pole; for ww the swapped pair.

    ``J`` is not swap-symmetric (its root edge is oriented from a black
    vertex), so the ww pole needs ``tJ`` and ``tB``; ``j_reading="printed"``
    keeps the untransposed pair for comparison.
    """
    if which == "b":
        return _over_yb(d.B) / (1 - _over_yb(d.J))
    B, J = (d.B.swap(), d.J.swap()) if j_reading == "swapped" else (d.B, d.J)
    return _over_yw(B) / (1 - _over_yw(J))


def check_sep4_ge3(N: int = 30, N2: int = 20) -> List[IdentityReport]:
    c = _cat1(N)
    y = _y1(c.order)
    z = _z1(c)
    out = [
        _guard("sep4_ge3.vv", N, lambda: c.G_vv - (
            _axis_term_1v(c, y) + c.C / c.W * c.H_vv_ge3.compose(z))),
        _guard("J.axis_relation", N, lambda: z - c.J.div_x(1) / (1 - c.J.div_x(1))),
    ]
    d = _cat2(N2)
    zb, zw = _z2(d)
    cw = d.C / d.W
    out += [
        _guard("sep4_ge3.bb", N2, lambda: d.G_bb - (
            _axis_term_2v(d, "b") + cw * d.H_bb_ge3.compose(zb, zw))),
        _guard("sep4_ge3.ww", N2, lambda: d.G_ww - (
            _axis_term_2v(d, "w") + cw * d.H_ww_ge3.compose(zb, zw))),
        _guard("sep4_ge3.bw", N2, lambda: d.G_bw - cw * d.H_bw_ge3.compose(zb, zw)),
    ]
    return out


@lru_cache(maxsize=None)
def derive_J_2v(N: int) -> Series2:
    """Two-variable ``J`` to total degree ``N``, solved from the bb-pole identity.

    Writing ``Q = G_bb - (C/W) H_bb_ge3(W/yw, W/yb)``, the identity reads
    ``B = Q (yb - J)`` with ``B = euler(J) - J``.  On the degree-``d`` slice
    this is ``(d - 1 + Q(0)) J_d = [Q yb]_d - [(Q - Q(0)) J_<d]_d``, one
    unknown slice at a time.  ``J`` has no linear part.
    """
    m = N + MARGIN
    base = formulas.build_base_2v(None, m, with_J=False)
    Gbb = formulas.two_connected_2v(None, m)["G_bb"]
    Hbb = formulas.three_connected_2v(None, m, ("H_bb_ge3",))["H_bb_ge3"]
    zb, zw = _z2(base)
    Q = Gbb - base.C / base.W * Hbb.compose(zb, zw)
    top = Q.order + 1
    if top < N:
        raise SeriesError(f"not enough precision to derive J to degree {N}")
    qyb = Q.mul_monomial(1, 0)
    q0 = Q[0, 0]
    qitems = [((a, b), v) for (a, b), v in Q.items() if (a, b) != (0, 0)]
    J: Dict[Tuple[int, int], object] = {}
    for deg in range(2, N + 1):
        scale = deg - 1 + q0
        for i in range(deg + 1):
            j = deg - i
            s = qyb[i, j]
            for (a, b), v in qitems:
                if a <= i and b <= j:
                    t = J.get((i - a, j - b))
                    if t:
                        s -= v * t
            if s:
                if scale == 0:
                    raise SeriesError(f"degree {deg} slice of J is undetermined")
                q = Fraction(s) / scale
                J[(i, j)] = int(q) if q.denominator == 1 else q
    return Series2(J, N)


def check_J_2v(N2: int = 20) -> List[IdentityReport]:
    """The derived ``J`` against the ww-pole identity and the one-variable ``J``."""
    d = _cat2(N2)
    c1 = _cat1(N2)
    zb, zw = _z2(d)
    J = d.J
    out = [
        _guard("J.ww_consistency", N2, lambda: d.G_ww - (
            _axis_term_2v(d, "w") + d.C / d.W * d.H_ww_ge3.compose(zb, zw))),
        _guard("J.diagonal", N2, lambda: J.diagonal() - c1.J),
    ]
    sym = (J.swap() - J).truncate(N2).is_zero()
    integral = all(isinstance(v, int) and v >= 0 for _, v in J.truncate(N2).items())
    out.append(IdentityReport("J.nonnegative_integers", 2, N2, None, integral,
                              None if integral else 0,
                              "swap-symmetric" if sym else "not swap-symmetric"))
    return out


# ---------------------------------------------------------------------------
# 2-rooted system
# ---------------------------------------------------------------------------

# Two readings of the face-vertex identity's axis-node part: as printed,
# 4 (C/y) (1 + K); or summing the two axis-node subcases described alongside
# it, 4 (C/y) K L + 4 (C/y) L = 4 (C/y) L (1 + K).
VF_AXIS_VARIANTS = ("printed", "with_L")


def _vf_axis(c, variant: str) -> Series1:
    cy = c.C.div_x(1)
    if variant == "printed":
        return 4 * cy * (1 + c.K)
    return 4 * cy * c.L * (1 + c.K)


@dataclass
class TwoRootedSolution:
    variables: int
    order: int
    solved: Dict[str, Series] = field(default_factory=dict)
    closed: Dict[str, Series] = field(default_factory=dict)
    reports: List[IdentityReport] = field(default_factory=list)
    vf_variant: str = ""


def _solve_vf(c, z, Xff, variant):
    cw = c.C / c.W
    rhs = c.G_vf_2 - _vf_axis(c, variant) - 2 * cw * Xff * c.G_ff_prime * c.G_vf_prime
    return rhs * c.W / (c.C * c.G_ff_prime)


def solve_two_rooted_1v(N: int = 30) -> TwoRootedSolution:
    """Solve the one-variable triangular system for ``H_*(W/y)`` and compare."""
    c = _cat1(N)
    n = c.order
    y = _y1(n)
    z = _z1(c)
    cy = c.C.div_x(1)
    cw = c.C / c.W
    sol = TwoRootedSolution(1, N)
    closed = {nm: c[nm].compose(z) for nm in
              ("H_ff_prime", "H_vf_prime", "H_ff", "H_vf", "H_vv_2")}
    sol.closed = closed
    Gffp, Gvfp = c.G_ff_prime, c.G_vf_prime

    S = sol.solved
    S["H_ff_prime"] = (c.L - 1 - c.L * z) / Gffp
    S["H_vf_prime"] = c.K - z - c.K * z - S["H_ff_prime"] * Gvfp
    S["H_ff"] = (c.G_ff_2 - 2 * cy * c.L ** 2) * c.W / (c.C * Gffp ** 2)
    # pick the reading of the face-vertex identity that closes the system
    matches = []
    for v in VF_AXIS_VARIANTS:
        try:
            if formulas.agree(_solve_vf(c, z, S["H_ff"], v), closed["H_vf"]):
                matches.append(v)
        except SeriesError:
            pass
    sol.vf_variant = matches[0] if len(matches) == 1 else VF_AXIS_VARIANTS[0]
    S["H_vf"] = _solve_vf(c, z, S["H_ff"], sol.vf_variant)
    r_vv = 2 * c.B.div_x(1) / (1 - c.J.div_x(1)) + 4 * cy * c.K + 2 * cy * c.K ** 2
    rest = c.G_vv - r_vv - cw * S["H_ff"] * Gvfp ** 2 - cw * S["H_vf"] * Gvfp
    S["H_vv_2"] = rest * c.W / c.C

    R = sol.reports
    for nm in ("H_ff_prime", "H_vf_prime", "H_ff", "H_vf", "H_vv_2"):
        R.append(_guard(f"solve.{nm}", N, lambda nm=nm: S[nm] - closed[nm]))
    X = closed
    R += [
        _guard("face_marking.ff", N, lambda: Gffp.euler() + Gffp - c.G_ff),
        _guard("face_marking.ff.integral_form", N,
               lambda: (c.G_ff.antiderivative().div_x(1)) - Gffp),
        _guard("two_rooted.L_definition", N, lambda: Gffp - c.L * (z + 1)),
        _guard("two_rooted.K_definition", N, lambda: Gvfp - (c.K * (z + 1) + z)),
        _guard("two_rooted.L", N, lambda: c.L - (1 + c.L * z + X["H_ff_prime"] * Gffp)),
        _guard("two_rooted.K", N, lambda: c.K - (
            z + c.K * z + X["H_ff_prime"] * Gvfp + X["H_vf_prime"])),
        _guard("two_rooted.ff_axis_part", N, lambda: (2 * cy * c.L ** 2) - (
            c.G_ff_2 - cw * X["H_ff"] * Gffp ** 2)),
        _guard("two_rooted.ff", N, lambda: c.G_ff_2 - (
            2 * cy * c.L ** 2 + cw * X["H_ff"] * Gffp ** 2)),
        IdentityReport("two_rooted.vf", 1, N, None, False),
        _guard("two_rooted.vv", N, lambda: c.G_vv - (
            r_vv + cw * X["H_ff"] * Gvfp ** 2 + cw * X["H_vf"] * Gvfp + cw * X["H_vv_2"])),
        _guard("two_rooted.family_split.ff", N, lambda: c.G_ff - Gffp - c.G_ff_2),
        _guard("two_rooted.family_split.vf", N, lambda: c.G_vf - Gvfp - c.G_vf_2 - 2),
    ]
    vf = _guard("two_rooted.vf", N, lambda: c.G_vf_2 - (
        _vf_axis(c, sol.vf_variant) + cw * X["H_vf"] * Gffp + 2 * cw * X["H_ff"] * Gffp * Gvfp))
    vf.note = f"axis part read as {sol.vf_variant!r}"
    R[[r.identity for r in R].index("two_rooted.vf")] = vf
    return sol


def solve_two_rooted_2v(N2: int = 20) -> TwoRootedSolution:
    """Two-variable triangular system, solved for ``H_*(W/yw, W/yb)``."""
    d = _cat2(N2)
    zb, zw = _z2(d)
    W, C = d.W, d.C
    cw = C / W
    c_b, c_w = _over_yb(C), _over_yw(C)
    w_w = _over_yw(W)                       # W / yw
    L, tL, Kb, Kw, tKb, tKw = d.L, d.tL, d.K_b, d.K_w, d.tK_b, d.tK_w
    Gffp, Gbfp, Gwfp = d.G_ff_prime, d.G_bf_prime, d.G_wf_prime
    sol = TwoRootedSolution(2, N2)
    names = ("H_ff_prime", "H_bf_prime", "H_wf_prime", "H_ff", "H_bf", "H_wf",
             "H_bb_2", "H_ww_2", "H_bw_2")
    X = {nm: d[nm].compose(zb, zw) for nm in names}
    sol.closed = X
    S = sol.solved

    def ratio_bw(s):                        # (yb / yw) * s
        return _over_yw(s.mul_monomial(1, 0))

    S["H_ff_prime"] = (L - 1 - tL * w_w) / Gffp
    S["H_bf_prime"] = Kb - w_w - tKw * w_w - S["H_ff_prime"] * Gbfp
    S["H_wf_prime"] = Kw - tKb * w_w - S["H_ff_prime"] * Gwfp
    r_ff = c_w * tL ** 2 + c_b * L ** 2
    S["H_ff"] = (d.G_ff_2 - r_ff) * W / (C * Gffp ** 2)
    r_bf = 2 * tL * tKw * c_w + 2 * L * Kb * c_b + 2 * tL * c_w
    S["H_bf"] = (d.G_bf_2 - r_bf - 2 * cw * S["H_ff"] * Gffp * Gbfp) * W / (C * Gffp)
    S["H_wf"] = S["H_bf"].swap()   # valid because the argument pair swaps with the variables
    r_ww = (_axis_term_2v(d, "w") + 2 * c_w * Kw + c_w * Kw ** 2
            + _over_yw(_over_yw(C.mul_monomial(1, 0) * tKb ** 2)))
    S["H_ww_2"] = (d.G_ww - r_ww - ratio_bw(cw * S["H_ff"] * Gwfp ** 2)
                   - ratio_bw(cw * S["H_wf"] * Gwfp)) * W / C
    S["H_bb_2"] = S["H_ww_2"].swap()
    r_bw = 2 * c_b * Kb + 2 * c_w * tKb + 2 * c_b * Kb * Kw + 2 * c_w * tKb * tKw
    S["H_bw_2"] = (d.G_bw - r_bw - 2 * cw * S["H_ff"] * Gbfp * Gwfp - cw * S["H_bf"] * Gwfp
                   - cw * S["H_wf"] * Gbfp) * W / C

    R = sol.reports
    for nm in names:
        R.append(_guard(f"solve.{nm}", N2, lambda nm=nm: S[nm] - X[nm]))
    R += [
        _guard("face_marking.ff", N2, lambda: Gffp.euler() + Gffp - d.G_ff),
        _guard("two_rooted.L_definition", N2, lambda: Gffp - (L * _over_yb(W) + L)),
        _guard("two_rooted.K_b_definition", N2, lambda: Gbfp - (Kb * _over_yb(W) + Kb)),
        _guard("two_rooted.K_w_definition", N2, lambda: Gwfp - (Kw * _over_yb(W) + Kw + _over_yb(W))),
        _guard("two_rooted.L", N2, lambda: L - (1 + tL * w_w + X["H_ff_prime"] * Gffp)),
        _guard("two_rooted.K_b", N2, lambda: Kb - (
            w_w + tKw * w_w + X["H_ff_prime"] * Gbfp + X["H_bf_prime"])),
        _guard("two_rooted.K_w", N2, lambda: Kw - (
            tKb * w_w + X["H_ff_prime"] * Gwfp + X["H_wf_prime"])),
        _guard("two_rooted.ff", N2, lambda: d.G_ff_2 - (r_ff + cw * X["H_ff"] * Gffp ** 2)),
        _guard("two_rooted.bf", N2, lambda: d.G_bf_2 - (
            r_bf + cw * X["H_bf"] * Gffp + 2 * cw * X["H_ff"] * Gffp * Gbfp)),
        _guard("two_rooted.ww", N2, lambda: d.G_ww - (
            r_ww + ratio_bw(cw * X["H_ff"] * Gwfp ** 2) + ratio_bw(cw * X["H_wf"] * Gwfp)
            + cw * X["H_ww_2"])),
        _guard("two_rooted.bw", N2, lambda: d.G_bw - (
            r_bw + 2 * cw * X["H_ff"] * Gbfp * Gwfp + cw * X["H_bf"] * Gwfp
            + cw * X["H_wf"] * Gbfp + cw * X["H_bw_2"])),
        _guard("two_rooted.family_split.bf", N2, lambda: d.G_bf - Gbfp - d.G_bf_2 - 1),
    ]
    return sol


def check_2rooted_system(N: int = 30, N2: int = 20) -> List[IdentityReport]:
    return solve_two_rooted_1v(N).reports + solve_two_rooted_2v(N2).reports


# ---------------------------------------------------------------------------
# diagonal reductions and symmetries
# ---------------------------------------------------------------------------

DIAGONAL_PAIRS = (
    ("F", ("F",)), ("f", ("f",)), ("E", ("E",)), ("F_ff", ("F_ff",)),
    ("F_vf", ("F_bf", "F_wf")), ("F_vv", ("F_bb", "F_ww", "F_bw")),
    ("G", ("G",)), ("W", ("W",)), ("J", ("J",)), ("C", ("C",)), ("B", ("B",)),
    ("L", ("L",)), ("K", ("K_b", "K_w")),
    ("G_ff", ("G_ff",)), ("G_ff_prime", ("G_ff_prime",)), ("G_ff_2", ("G_ff_2",)),
    ("G_vf", ("G_bf", "G_wf")), ("G_vf_prime", ("G_bf_prime", "G_wf_prime")),
    ("G_vf_2", ("G_bf_2", "G_wf_2")), ("G_vv", ("G_bb", "G_ww", "G_bw")),
    ("H", ("H",)), ("H_ff", ("H_ff",)), ("H_ff_prime", ("H_ff_prime",)),
    ("H_vf", ("H_bf", "H_wf")), ("H_vf_prime", ("H_bf_prime", "H_wf_prime")),
    ("H_vv_2", ("H_bb_2", "H_ww_2", "H_bw_2")), ("H_vv_ge3", ("H_bb_ge3", "H_ww_ge3", "H_bw_ge3")),
)

SYMMETRIC_2V = ("F", "F_ff", "F_bw", "G", "W", "C", "G_ff", "G_ff_prime", "G_ff_2", "G_bw",
                "H", "H_ff", "H_ff_prime", "H_bw_2", "H_bw_ge3")
SWAP_PAIRS_2V = (("F_bf", "F_wf"), ("F_bb", "F_ww"), ("G_bf", "G_wf"), ("G_bb", "G_ww"),
                 ("G_bf_prime", "G_wf_prime"), ("G_bf_2", "G_wf_2"), ("H_bf", "H_wf"),
                 ("H_bf_prime", "H_wf_prime"), ("H_bb_2", "H_ww_2"), ("H_bb_ge3", "H_ww_ge3"))


def check_diagonals_and_burnside_preconsistency(N2: int = 20) -> List[IdentityReport]:
    d = _cat2(N2)
    c = _cat1(N2)
    out = []
    for one, twos in DIAGONAL_PAIRS:
        def resid(one=one, twos=twos):
            tot = d[twos[0]].diagonal()
            for t in twos[1:]:
                tot = tot + d[t].diagonal()
            return tot - c[one]
        out.append(_guard(f"diagonal.{one}", N2, resid))
    for nm in SYMMETRIC_2V:
        out.append(_guard(f"symmetry.{nm}", N2, lambda nm=nm: d[nm].swap() - d[nm]))
    for a, b in SWAP_PAIRS_2V:
        out.append(_guard(f"swap.{a}.{b}", N2, lambda a=a, b=b: d[a].swap() - d[b]))
    for fam_names, cat, n in ((formulas.COUNTING_1V, c, N2), (formulas.COUNTING_2V, d, N2)):
        for nm in fam_names:
            s = cat[nm].truncate(n)
            coeffs = s.coeffs if isinstance(s, Series1) else [v for _, v in s.items()]
            ok = all(isinstance(v, int) and v >= 0 for v in coeffs)
            out.append(IdentityReport(f"counts.{nm}", cat.variables, n, None, ok,
                                      None if ok else 0, "" if ok else "non-integral or negative"))
    return out


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------


def run_suite(N: int = 30, N2: int = 20) -> List[IdentityReport]:
    out: List[IdentityReport] = []
    out += check_kernels(N, N2)
    out += check_changevar(N, N2)
    out += check_multiple_edge(N, N2)
    out += check_sep4_ge3(N, N2)
    out += check_J_2v(N2)
    out += check_2rooted_system(N, N2)
    out += check_diagonals_and_burnside_preconsistency(N2)
    return out


def format_reports(reports: List[IdentityReport], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([r.as_record() for r in reports], indent=1) + "\n"
    lines = [r.as_text() for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
