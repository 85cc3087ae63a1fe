"""Named generating functions of rooted and k-rooted maps, as truncated series.

Three families are covered, each through its quadrangulation counterpart:

* ``maps`` -- all quadrangulations, rational in the kernel ``beta``;
* ``two_connected`` -- simple quadrangulations, rational in ``eta``;
* ``three_connected`` -- irreducible quadrangulations, rational in ``gamma``.

Naming follows the usual type letters: ``v`` vertex pole, ``f`` face pole,
``b``/``w`` black/white vertex pole, a ``_prime`` suffix for the 2-rooted
families whose 2-root touches an axial face, ``_2`` for 2-rooted and
``_ge3`` for k-rooted with k >= 3.  Auxiliary series of the separating
4-cycle decomposition (``W``, ``J``, ``C``, ``B``, ``L``, ``K`` ...) live in
the same catalogs.

A handful of printed closed forms exist in several inconsistent versions.
``resolve_variants`` evaluates every candidate at a small probe order and
keeps the one that passes the structural checks; the choices are recorded in
``TRANSCRIPTION_NOTES.md`` next to this module.
"""

from __future__ import annotations

import os
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from .kernels import KernelBundle, solve_kernel_1v, solve_kernel_2v
from .series import PowerCache2, Series1, Series2, SeriesError, poly1

FAMILIES = ("maps", "two_connected", "three_connected")
DATA_FILE = os.path.join(os.path.dirname(__file__), "data", "closed_forms.txt")

CATALOG_1V_NAMES = (
    "F", "f", "E", "F_vv", "F_vf", "F_ff",
    "G", "W", "J", "C", "B", "L", "K", "G_vv", "G_vf", "G_ff",
    "G_vf_prime", "G_ff_prime", "G_vf_2", "G_ff_2",
    "H", "H_vf", "H_vf_prime", "H_ff", "H_ff_prime", "H_vv_2", "H_vv_ge3",
)

CATALOG_2V_NAMES = (
    "F", "f", "E", "F_bf", "F_wf", "F_ff", "F_bb", "F_ww", "F_bw",
    "G", "W", "J", "C", "B", "L", "tL", "K_b", "K_w", "tK_b", "tK_w",
    "G_bf", "G_wf", "G_ff", "G_bb", "G_ww", "G_bw",
    "G_bf_prime", "G_wf_prime", "G_ff_prime", "G_bf_2", "G_wf_2", "G_ff_2",
    "H", "H_bf", "H_wf", "H_bf_prime", "H_wf_prime", "H_ff", "H_ff_prime",
    "H_bb_2", "H_ww_2", "H_bw_2", "H_bb_ge3", "H_ww_ge3", "H_bw_ge3",
)

# which catalog entries belong to which family (the rest is shared plumbing)
FAMILY_ENTRIES_1V = {
    "maps": ("F", "f", "E", "F_vv", "F_vf", "F_ff"),
    "two_connected": ("G", "W", "J", "C", "B", "L", "K", "G_vv", "G_vf", "G_ff",
                      "G_vf_prime", "G_ff_prime", "G_vf_2", "G_ff_2"),
    "three_connected": ("H", "H_vf", "H_vf_prime", "H_ff", "H_ff_prime", "H_vv_2", "H_vv_ge3"),
}
FAMILY_ENTRIES_2V = {
    "maps": ("F", "f", "E", "F_bf", "F_wf", "F_ff", "F_bb", "F_ww", "F_bw"),
    "two_connected": ("G", "W", "J", "C", "B", "L", "tL", "K_b", "K_w", "tK_b", "tK_w",
                      "G_bf", "G_wf", "G_ff", "G_bb", "G_ww", "G_bw", "G_bf_prime",
                      "G_wf_prime", "G_ff_prime", "G_bf_2", "G_wf_2", "G_ff_2"),
    "three_connected": ("H", "H_bf", "H_wf", "H_bf_prime", "H_wf_prime", "H_ff", "H_ff_prime",
                        "H_bb_2", "H_ww_2", "H_bw_2", "H_bb_ge3", "H_ww_ge3", "H_bw_ge3"),
}

# entries that count objects and must therefore have nonnegative integer
# coefficients; auxiliary series (W/y divisions, L, K, ...) are exempt
COUNTING_1V = ("F", "f", "F_vv", "F_vf", "F_ff", "G", "W", "J", "G_vv", "G_vf", "G_ff",
               "G_vf_prime", "G_ff_prime", "G_vf_2", "G_ff_2", "H", "H_vf", "H_vf_prime",
               "H_ff", "H_ff_prime", "H_vv_2", "H_vv_ge3")
COUNTING_2V = ("F", "f", "F_bf", "F_wf", "F_ff", "F_bb", "F_ww", "F_bw", "G", "W", "J",
               "G_bf", "G_wf", "G_ff", "G_bb", "G_ww", "G_bw", "G_bf_prime", "G_wf_prime",
               "G_ff_prime", "G_bf_2", "G_wf_2", "G_ff_2", "H", "H_bf", "H_wf", "H_bf_prime",
               "H_wf_prime", "H_ff", "H_ff_prime", "H_bb_2", "H_ww_2", "H_bw_2", "H_bb_ge3",
               "H_ww_ge3", "H_bw_ge3")


class _Catalog(Mapping):
    """Read-only name -> series mapping with attribute access."""

    variables = 0

    def __init__(self, order: int, entries: Optional[Dict[str, object]] = None):
        self.order = order
        self._entries: Dict[str, object] = dict(entries or {})

    def __getitem__(self, name):
        return self._entries[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __getattr__(self, name):
        try:
            return self.__dict__["_entries"][name]
        except KeyError:
            raise AttributeError(name) from None

    def merged(self, more: Mapping[str, object]) -> "_Catalog":
        out = type(self)(self.order, self._entries)
        out._entries.update(more)
        return out

    def __repr__(self):
        return f"{type(self).__name__}(order={self.order}, entries={sorted(self._entries)})"


class SeriesCatalog1v(_Catalog):
    variables = 1


class SeriesCatalog2v(_Catalog):
    variables = 2


def _trunc(entries: Dict[str, object], n: int) -> Dict[str, object]:
    return {k: v.truncate(n) for k, v in entries.items()}


# ---------------------------------------------------------------------------
# closed-form data file
# ---------------------------------------------------------------------------

Poly2 = Dict[Tuple[int, int], object]


@dataclass
class ClosedForm:
    """``prod(numerators) / prod(factor ** k for factor, k in denominators)``."""

    name: str
    numerators: List[Poly2] = field(default_factory=list)
    denominators: List[Tuple[Poly2, int]] = field(default_factory=list)

    def swapped(self, name: Optional[str] = None) -> "ClosedForm":
        def sw(p):
            return {(b, a): c for (a, b), c in p.items()}
        return ClosedForm(name or self.name, [sw(p) for p in self.numerators],
                          [(sw(p), k) for p, k in self.denominators])

    def symmetrized_denominator(self) -> "ClosedForm":
        """Raise each denominator factor and its mirror image to a common power."""
        keyed = [(frozenset(p.items()), p, k) for p, k in self.denominators]
        power = {key: k for key, _, k in keyed}
        out = []
        for key, p, k in keyed:
            mirror = frozenset(((b, a), c) for (a, b), c in p.items())
            out.append((p, max(k, power.get(mirror, 0)) if mirror != key else k))
        return ClosedForm(self.name, list(self.numerators), out)

    def evaluate(self, cache: "_PolyCache") -> Series2:
        num = None
        for p in self.numerators:
            v = cache.poly(p)
            num = v if num is None else num * v
        den = None
        for p, k in self.denominators:
            v = cache.poly(p, k)
            den = v if den is None else den * v
        if num is None:
            num = Series2.const(1, cache.order)
        return num if den is None else num / den


def parse_closed_forms(text: str) -> Dict[str, ClosedForm]:
    forms: Dict[str, ClosedForm] = {}
    cur: Optional[ClosedForm] = None
    block: Optional[Poly2] = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("@"):
            cur = ClosedForm(line[1:].strip())
            forms[cur.name] = cur
            block = None
        elif line == "[numerator]":
            if cur is None:
                raise ValueError(f"line {lineno}: block outside a form")
            block = {}
            cur.numerators.append(block)
        elif line.startswith("[denominator-factor"):
            if cur is None:
                raise ValueError(f"line {lineno}: block outside a form")
            k = int(line[len("[denominator-factor"):].rstrip("]").strip() or 1)
            block = {}
            cur.denominators.append((block, k))
        elif line.startswith("term"):
            parts = line.split()
            if block is None or len(parts) != 4:
                raise ValueError(f"line {lineno}: malformed term record {raw!r}")
            c = Fraction(parts[1])
            key = (int(parts[2]), int(parts[3]))
            block[key] = block.get(key, 0) + (c.numerator if c.denominator == 1 else c)
        else:
            raise ValueError(f"line {lineno}: unrecognized record {raw!r}")
    return forms


@lru_cache(maxsize=None)
def _load_default_forms() -> Tuple[Tuple[str, ClosedForm], ...]:
    with open(DATA_FILE, encoding="utf-8") as fh:
        return tuple(parse_closed_forms(fh.read()).items())


def load_closed_forms(path: Optional[str] = None) -> Dict[str, ClosedForm]:
    if path is None:
        return dict(_load_default_forms())
    with open(path, encoding="utf-8") as fh:
        return parse_closed_forms(fh.read())


class _PolyCache:
    """Polynomials in a pair of kernels, evaluated once and reused."""

    def __init__(self, s1: Series2, s2: Series2):
        self.powers = PowerCache2(s1, s2)
        self.order = self.powers.order
        self._memo: Dict[Tuple, Series2] = {}

    def poly(self, p: Poly2, k: int = 1) -> Series2:
        key = (tuple(sorted(p.items())), k)
        hit = self._memo.get(key)
        if hit is None:
            base = self._memo.get((key[0], 1))
            if base is None:
                base = self.powers.poly(p)
                self._memo[(key[0], 1)] = base
            hit = base ** k
            self._memo[key] = hit
        return hit


# ---------------------------------------------------------------------------
# printed-variant resolution
# ---------------------------------------------------------------------------

PROBE_ORDER = 10


@dataclass(frozen=True)
class VariantChoice:
    name: str
    candidates: Tuple[str, ...]
    chosen: str
    passed: Tuple[str, ...]
    criterion: str


def _nonneg_integral(s) -> bool:
    coeffs = s.coeffs if isinstance(s, Series1) else [c for _, c in s.items()]
    return all(isinstance(c, int) and c >= 0 for c in coeffs)


def agree(a, b) -> bool:
    """Equal as series up to the smaller of the two truncation orders."""
    return (a - b).is_zero()


def _pick(name: str, criterion: str, candidates: Dict[str, Callable[[], bool]]) -> VariantChoice:
    passed = []
    for label, test in candidates.items():
        try:
            ok = test()
        except SeriesError:
            ok = False
        if ok:
            passed.append(label)
    if len(passed) != 1:
        raise SeriesError(f"variant {name}: expected exactly one passing candidate, got {passed}")
    return VariantChoice(name, tuple(candidates), passed[0], tuple(passed), criterion)


def _F2v(variant: str, b1: Series2, b2: Series2) -> Series2:
    if variant == "tabulated":
        num = b1 + b2 - 5 * b1 * b2 - 2 * b1 * b1 - 2 * b2 * b2
    else:  # the sign pattern shown next to the rooted-series derivative identity
        num = b1 + b2 - 5 * b1 * b2 + 2 * b1 * b1 + 2 * b2 * b2
    return num / ((1 - b1 - 2 * b2) * (1 - b2 - 2 * b1))


def _H1v(variant: str, g: Series1) -> Series1:
    # as printed: gamma^6 (2 g^3 - 1 - 4 g - 3 g^2 + g^4) / ((1+g)^4 (1+3g+g^2)^2 (2g+1)^3)
    num = g ** 6 * poly1([-1, -4, -3, 2, 1], g)
    den = (1 + g) ** 4 * poly1([1, 3, 1], g) ** 2 * (2 * g + 1) ** 3
    h = num / den
    return h if variant == "printed" else -h


def _Gbfp2v(variant: str, e1: Series2, e2: Series2) -> Series2:
    # as printed the denominator carries the other kernel; both readings share a diagonal
    return e1 / (1 - e2) if variant == "printed" else e1 / (1 - e1)


def _Kw_from_split(Gwfp: Series2, G: Series2) -> Series2:
    yb, yw = Series2.xb(G.order), Series2.xw(G.order)
    zb = (G - yb - yw).div_monomial(1, 0)
    return (Gwfp - zb) / (1 + zb)


def _Hff2v_form(variant: str) -> ClosedForm:
    form = load_closed_forms()["H_ff"]
    return form if variant == "printed" else form.symmetrized_denominator()


@lru_cache(maxsize=None)
def resolve_variants(probe: int = PROBE_ORDER) -> Dict[str, VariantChoice]:
    """Pick, for each inconsistently printed formula, the version that survives."""
    choices = {}

    beta = solve_kernel_1v("beta", probe)
    F1 = beta * (2 - 9 * beta) / (1 - 3 * beta) ** 2
    b1, b2 = solve_kernel_2v("beta12", probe)
    choices["F_2v_numerator"] = _pick(
        "F_2v_numerator", "diagonal equals the one-variable F",
        {v: (lambda v=v: agree(_F2v(v, b1, b2).diagonal(), F1)) for v in ("tabulated", "alternate")})

    gamma = solve_kernel_1v("gamma", probe)
    g1, g2 = solve_kernel_2v("gamma12", probe)
    cache = _PolyCache(g1, g2)
    H2 = load_closed_forms()["H"].evaluate(cache)
    choices["H_1v_sign"] = _pick(
        "H_1v_sign", "nonnegative integer coefficients and agreement with the diagonal of H(zb, zw)",
        {v: (lambda v=v: _nonneg_integral(_H1v(v, gamma)) and agree(_H1v(v, gamma), H2.diagonal()))
         for v in ("printed", "negated")})

    Hff1 = _H_closed_1v(gamma)["H_ff"]

    def hff_ok(v):
        s = _Hff2v_form(v).evaluate(cache)
        return agree(s.diagonal(), Hff1) and agree(s.swap(), s)
    choices["H_ff_2v_denominator"] = _pick(
        "H_ff_2v_denominator", "diagonal equals the one-variable H_ff and swap symmetry",
        {v: (lambda v=v: hff_ok(v)) for v in ("printed", "symmetrized")})

    e1, e2 = solve_kernel_2v("eta12", probe + 1)
    eta = solve_kernel_1v("eta", probe)
    G2 = -3 * e1 * e2 + e1 + e2

    def gbfp_ok(v):
        b = _Gbfp2v(v, e1, e2)
        w = _Gbfp2v(v, e2, e1)
        Kw = _Kw_from_split(w, G2)
        return (agree((b + w).diagonal(), 2 * eta / (1 - eta))
                and _nonneg_integral(Kw.truncate(probe)))
    choices["G_bf_prime_2v"] = _pick(
        "G_bf_prime_2v", "diagonal equals G_vf' and the derived K_w counts objects",
        {v: (lambda v=v: gbfp_ok(v)) for v in ("printed", "same_kernel")})
    return choices


# ---------------------------------------------------------------------------
# one variable
# ---------------------------------------------------------------------------


def _kernel_1v(kernels: Optional[KernelBundle], which: str, n: int) -> Series1:
    if kernels is not None and kernels.order >= n:
        return getattr(kernels, which).truncate(n)
    return solve_kernel_1v(which, n)


def build_base_1v(kernels: Optional[KernelBundle], N: int) -> SeriesCatalog1v:
    """F, f, E and the auxiliary series G, W, J, C, B, L, K at order ``N``."""
    beta = _kernel_1v(kernels, "beta", N)
    F = beta * (2 - 9 * beta) / (1 - 3 * beta) ** 2
    f = F / (1 + F)
    E = 2 * F.euler() + F + 1

    m = N + 1  # W/y loses one order
    eta = _kernel_1v(kernels, "eta", m)
    y = Series1.x(m)
    G = eta * (2 - 3 * eta)
    W = G - 2 * y
    z = W.div_x(1)
    J = W / (1 + z)
    C = W.euler() - W
    B = J.euler() - J
    Gffp = 1 / (1 - eta) ** 2
    Gvfp = 2 * eta / (1 - eta)
    L = Gffp / (1 + z)
    K = (Gvfp - z) / (1 + z)
    entries = dict(F=F, f=f, E=E, G=G, W=W, J=J, C=C, B=B, L=L, K=K)
    return SeriesCatalog1v(N, _trunc(entries, N))


def build_krooted_maps_1v(catalog, kernels: Optional[KernelBundle], N: int) -> Dict[str, Series1]:
    beta = _kernel_1v(kernels, "beta", N)
    d3, d6 = 1 - 3 * beta, 1 - 6 * beta
    return {
        "F_vv": 6 * beta / d6,
        "F_vf": 2 / (d6 * d3),
        "F_ff": 1 / (d3 ** 2 * d6),
    }


def build_krooted_2c_1v(catalog, kernels: Optional[KernelBundle], N: int) -> Dict[str, Series1]:
    eta = _kernel_1v(kernels, "eta", N)
    d3, d1 = 1 - 3 * eta, 1 - eta
    out = {
        "G_vv": 2 * eta / d3,
        "G_vf": 2 / d3,
        "G_ff": 1 / (d3 * d1),
        "G_ff_prime": 1 / d1 ** 2,
        "G_vf_prime": 2 * eta / d1,
        "G_ff_2": 2 * eta / (d3 * d1 ** 2),
        "G_vf_2": 4 * eta / (d3 * d1),
    }
    return out


def _H_closed_1v(g: Series1, sign_variant: Optional[str] = None) -> Dict[str, Series1]:
    q = poly1([1, 3, 1], g)          # 1 + 3g + g^2
    t = 2 * g + 1
    om = 1 - g
    op = 1 + g
    out = {
        "H_vf": 4 * op * poly1([4, 13, 8], g) * g ** 4 / (om * q ** 2 * t ** 3),
        "H_vf_prime": 2 * g ** 4 / (q * t ** 2),
        "H_ff": 2 * g ** 2 * poly1([1, 5, 10, 9], g) * op ** 2 / (om * q ** 2 * t ** 3),
        "H_ff_prime": poly1([1, 3, 3], g) * g ** 2 / (q * t ** 2),
        "H_vv_2": 2 * poly1([2, 10, 21, 31, 28, 8], g) * g ** 4 / (q ** 2 * op ** 2 * om * t ** 3),
        "H_vv_ge3": 2 * g ** 2 * (3 * g + 2) / (om * q * t),
    }
    if sign_variant is not None:
        out["H"] = _H1v(sign_variant, g)
    return out


def build_krooted_3c_1v(catalog, kernels: Optional[KernelBundle], N: int) -> Dict[str, Series1]:
    gamma = _kernel_1v(kernels, "gamma", N)
    return _H_closed_1v(gamma, resolve_variants()["H_1v_sign"].chosen)


@lru_cache(maxsize=None)
def catalog_1v(N: int) -> SeriesCatalog1v:
    """Every one-variable entry at order ``N``."""
    cat = build_base_1v(None, N)
    for build in (build_krooted_maps_1v, build_krooted_2c_1v, build_krooted_3c_1v):
        cat = cat.merged({k: v.truncate(N) for k, v in build(cat, None, N).items()})
    return cat


def family_catalog_1v(family: str, N: int) -> SeriesCatalog1v:
    """Only the entries one family's census needs (cheaper than ``catalog_1v``)."""
    if family == "maps":
        beta = solve_kernel_1v("beta", N)
        F = beta * (2 - 9 * beta) / (1 - 3 * beta) ** 2
        return SeriesCatalog1v(N, dict(F=F, **build_krooted_maps_1v(None, None, N)))
    if family == "two_connected":
        eta = solve_kernel_1v("eta", N)
        return SeriesCatalog1v(N, dict(G=eta * (2 - 3 * eta), **build_krooted_2c_1v(None, None, N)))
    if family == "three_connected":
        return SeriesCatalog1v(N, build_krooted_3c_1v(None, None, N))
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# two variables
# ---------------------------------------------------------------------------


def _kernel_2v(kernels: Optional[KernelBundle], which: str, n: int) -> Tuple[Series2, Series2]:
    names = {"beta12": ("beta1", "beta2"), "eta12": ("eta1", "eta2"), "gamma12": ("gamma1", "gamma2")}
    if kernels is not None:
        a, b = (getattr(kernels, nm) for nm in names[which])
        if a.order >= n:
            return a.truncate(n), b.truncate(n)
    return solve_kernel_2v(which, n)


def maps_2v(kernels: Optional[KernelBundle], N: int) -> Dict[str, Series2]:
    b1, b2 = _kernel_2v(kernels, "beta12", N)
    F = _F2v(resolve_variants()["F_2v_numerator"].chosen, b1, b2)
    d4 = 4 * b1 * b2 + 1 - 4 * b2 - 4 * b1 + 4 * b2 * b2 + 4 * b1 * b1
    e1 = -1 + b2 + 2 * b1
    e2 = -1 + b1 + 2 * b2
    return {
        "F": F,
        "f": F / (1 + F),
        "E": 2 * F.euler() + F + 1,
        "F_bf": (-1 + 2 * b2) / (d4 * e1),
        "F_wf": (-1 + 2 * b1) / (d4 * e2),
        "F_ff": -(-1 + b1 + b2) / (e2 * e1 * d4),
        "F_bb": b2 / d4,
        "F_ww": b1 / d4,
        "F_bw": -2 * (2 * b1 * b1 - b1 + 2 * b1 * b2 - b2 + 2 * b2 * b2) / d4,
    }


def two_connected_2v(kernels: Optional[KernelBundle], N: int) -> Dict[str, Series2]:
    """G-splits as printed, plus the face-pole families of the 2-rooted partition."""
    e1, e2 = _kernel_2v(kernels, "eta12", N)
    d = 3 * e1 * e2 + e2 - 1 + e1
    out = {
        "G": -3 * e1 * e2 + e1 + e2,
        "G_bf": -(-1 + e2) * (e1 + 1) / ((-1 + e1) * d),
        "G_ff": (e1 * e2 - 1) / ((-1 + e2) * (-1 + e1) * d),
        "G_bb": e2 * (-1 + e1) / d,
        "G_bw": -4 * e1 * e2 / d,
        "G_ff_prime": 1 / ((1 - e1) * (1 - e2)),
        "G_bf_prime": _Gbfp2v(resolve_variants()["G_bf_prime_2v"].chosen, e1, e2),
    }
    out["G_wf"] = out["G_bf"].swap()
    out["G_ww"] = out["G_bb"].swap()
    out["G_wf_prime"] = out["G_bf_prime"].swap()
    out["G_ff_2"] = out["G_ff"] - out["G_ff_prime"]
    # G_bf has constant term 1 which the 2-rooted split leaves out, the same
    # way the one-variable G_vf exceeds G_vf' + G_vf^(2) by 2.
    out["G_bf_2"] = out["G_bf"] - out["G_bf_prime"] - 1
    out["G_wf_2"] = out["G_bf_2"].swap()
    return out


def three_connected_2v(kernels: Optional[KernelBundle], N: int,
                       names: Optional[Tuple[str, ...]] = None) -> Dict[str, Series2]:
    g1, g2 = _kernel_2v(kernels, "gamma12", N)
    cache = _PolyCache(g1, g2)
    forms = load_closed_forms()
    forms["H_ff"] = _Hff2v_form(resolve_variants()["H_ff_2v_denominator"].chosen)
    mirrored = {"H_wf": "H_bf", "H_wf_prime": "H_bf_prime", "H_ww_2": "H_bb_2",
                "H_ww_ge3": "H_bb_ge3"}
    wanted = names or FAMILY_ENTRIES_2V["three_connected"]
    out = {}
    for nm in wanted:
        src = mirrored.get(nm, nm)
        if src not in out:
            out[src] = forms[src].evaluate(cache)
        if nm != src:
            out[nm] = out[src].swap()
    return {nm: out[nm] for nm in wanted}


def build_base_2v(kernels: Optional[KernelBundle], N: int, with_J: bool = True) -> SeriesCatalog2v:
    """F, f, E and the auxiliary two-variable series at total degree ``N``.

    ``W`` is ``G - yb - yw``; ``J`` has no printed closed form and is derived
    degree by degree from the bb-pole k-rooted decomposition identity.
    """
    entries = {k: v for k, v in maps_2v(kernels, N).items() if k in ("F", "f", "E")}
    m = N + 1
    e1, e2 = _kernel_2v(kernels, "eta12", m)
    yb, yw = Series2.xb(m), Series2.xw(m)
    G = -3 * e1 * e2 + e1 + e2
    W = G - yb - yw
    C = W.euler() - W
    zb = W.div_monomial(1, 0)          # W / yb
    Gffp = 1 / ((1 - e1) * (1 - e2))
    gbfp = resolve_variants()["G_bf_prime_2v"].chosen
    Gbfp = _Gbfp2v(gbfp, e1, e2)
    Gwfp = _Gbfp2v(gbfp, e2, e1)
    L = Gffp / (1 + zb)
    K_b = Gbfp / (1 + zb)
    K_w = (Gwfp - zb) / (1 + zb)
    entries.update(G=G, W=W, C=C, L=L, tL=L.swap(), K_b=K_b, K_w=K_w,
                   tK_b=K_b.swap(), tK_w=K_w.swap())
    entries = _trunc(entries, N)
    if with_J:
        from .decomposition import derive_J_2v
        J = derive_J_2v(N)
        entries["J"] = J
        entries["B"] = J.euler() - J
    return SeriesCatalog2v(N, entries)


@lru_cache(maxsize=None)
def catalog_2v(N: int, families: Tuple[str, ...] = FAMILIES, with_J: bool = True) -> SeriesCatalog2v:
    cat = build_base_2v(None, N, with_J=with_J)
    more: Dict[str, Series2] = {}
    if "maps" in families:
        more.update(maps_2v(None, N))
    if "two_connected" in families:
        more.update(two_connected_2v(None, N))
    if "three_connected" in families:
        more.update(three_connected_2v(None, N))
    return cat.merged({k: v.truncate(N) for k, v in more.items()})


def build_krooted_2v(catalog, kernels: Optional[KernelBundle], N: int, family: str) -> Dict[str, Series2]:
    if family == "maps":
        return maps_2v(kernels, N)
    if family == "two_connected":
        return two_connected_2v(kernels, N)
    if family == "three_connected":
        return three_connected_2v(kernels, N)
    raise ValueError(f"unknown family {family!r}")
