"""Truncated formal power series over the rationals, in one and two variables.

Coefficients are exact: Python ``int`` where the value is integral, otherwise
``fractions.Fraction`` in lowest terms.  Every series carries the order up to
which its coefficients are known.  Operations propagate that precision the way
p-adic arithmetic does, so dividing by ``x`` or composing with a series of
high valuation never silently invents coefficients.

Bivariate series are truncated by total degree: the coefficient of
``x^i y^j`` is stored for ``i + j <= order``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple, Union

ExactRational = Union[int, Fraction]


class SeriesError(ArithmeticError):
    """A series operation has no power-series result (malformed formula)."""


def exact(c) -> ExactRational:
    """Normalize a rational to ``int`` when integral."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):  # bool and int subclasses
        return int(c)
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _div_scalar(c, d):
    if d == 1:
        return c
    if d == -1:
        return -c
    q = Fraction(c) / d
    return q.numerator if q.denominator == 1 else q


def _norm_list(cs):
    return tuple(c.numerator if type(c) is Fraction and c.denominator == 1 else c for c in cs)


# ---------------------------------------------------------------------------
# one variable
# ---------------------------------------------------------------------------


class Series1:
    """``sum(coeffs[i] * x**(i + shift))`` known exactly up to ``x**order``."""

    __slots__ = ("order", "coeffs", "shift")

    def __init__(self, coeffs: Iterable, order: int | None = None, shift: int = 0):
        cs = [exact(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("negative truncation order")
        if len(cs) < order + 1:
            cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs[: order + 1])
        self.shift = shift

    @classmethod
    def _raw(cls, coeffs: Sequence, order: int, shift: int = 0) -> "Series1":
        s = object.__new__(cls)
        s.order = order
        s.coeffs = tuple(coeffs)
        s.shift = shift
        return s

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls._raw((0,) * (order + 1), order)

    @classmethod
    def const(cls, c, order: int) -> "Series1":
        return cls._raw((exact(c),) + (0,) * order, order)

    @classmethod
    def x(cls, order: int) -> "Series1":
        cs = [0] * (order + 1)
        if order >= 1:
            cs[1] = 1
        return cls._raw(cs, order)

    # basic queries --------------------------------------------------------
    def __getitem__(self, n: int) -> ExactRational:
        n -= self.shift
        if 0 <= n <= self.order:
            return self.coeffs[n]
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return 0

    def valuation(self) -> int:
        """Index of the first nonzero stored coefficient (``order + 1`` if none)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return (self.order, self.shift, self.coeffs) == (other.order, other.shift, other.coeffs)

    def __hash__(self):
        return hash((self.order, self.shift, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*x^{i + self.shift}" for i, c in enumerate(self.coeffs) if c]
        return f"Series1({' + '.join(terms) or '0'} + O(x^{self.order + self.shift + 1}))"

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise SeriesError(f"cannot raise precision from {self.order} to {order}")
        return Series1._raw(self.coeffs[: order + 1], order, self.shift)

    def padded(self, order: int) -> "Series1":
        """Change the order, filling unknown coefficients with zero.

        Only meaningful inside iterations that overwrite those coefficients.
        """
        cs = self.coeffs[: order + 1] + (0,) * max(0, order - self.order)
        return Series1._raw(cs, order, self.shift)

    def _plain(self):
        if self.shift:
            raise SeriesError("Laurent-shifted series must be normalized before arithmetic")

    # ring operations --------------------------------------------------------
    def _coerce(self, other) -> "Series1":
        if isinstance(other, Series1):
            other._plain()
            return other
        return Series1.const(other, self.order)

    def __add__(self, other):
        self._plain()
        if not isinstance(other, Series1):
            cs = list(self.coeffs)
            cs[0] = exact(cs[0] + other)
            return Series1._raw(cs, self.order)
        other._plain()
        n = min(self.order, other.order)
        return Series1._raw(_norm_list(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    __radd__ = __add__

    def __neg__(self):
        self._plain()
        return Series1._raw([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series1":
        self._plain()
        c = exact(c)
        return Series1._raw(_norm_list(c * a for a in self.coeffs), self.order)

    def __mul__(self, other):
        self._plain()
        if not isinstance(other, Series1):
            return self.scale(other)
        other._plain()
        va, vb = self.valuation(), other.valuation()
        n = min(self.order + vb, other.order + va)
        out = [0] * (n + 1)
        b = other.coeffs
        nb = len(b)
        for i, c in enumerate(self.coeffs):
            if not c or i > n:
                continue
            top = min(nb, n - i + 1)
            for j in range(vb, top):
                d = b[j]
                if d:
                    out[i + j] += c * d
        return Series1._raw(_norm_list(out), n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return Series1.const(1, self.order) / (self ** (-k))
        result = Series1.const(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        self._plain()
        if not isinstance(other, Series1):
            other = exact(other)
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return Series1._raw(_norm_list(_div_scalar(c, other) for c in self.coeffs), self.order)
        other._plain()
        v = other.valuation()
        if v > other.order:
            raise ZeroDivisionError("division by the zero series")
        if any(self.coeffs[:v]):
            raise SeriesError(
                f"numerator valuation {self.valuation()} is below divisor valuation {v}"
            )
        a = self.coeffs[v:]
        b = other.coeffs[v:]
        na = self.order - v
        va = next((i for i, c in enumerate(a) if c), na + 1)
        n = min(na, other.order - v + va)
        if n < 0:
            raise SeriesError("division leaves no known coefficients")
        b0 = b[0]
        out = [0] * (n + 1)
        for i in range(n + 1):
            s = a[i] if i < len(a) else 0
            for j in range(1, min(i, len(b) - 1) + 1):
                bj = b[j]
                if bj:
                    s -= bj * out[i - j]
            out[i] = _div_scalar(s, b0) if s else 0
        return Series1._raw(_norm_list(out), n)

    def __rtruediv__(self, other):
        return Series1.const(other, self.order) / self

    # calculus and substitutions ------------------------------------------------
    def derivative(self) -> "Series1":
        self._plain()
        if self.order == 0:
            return Series1.zero(0)
        return Series1._raw([i * c for i, c in enumerate(self.coeffs)][1:], self.order - 1)

    def antiderivative(self) -> "Series1":
        """Term-wise integral with zero constant of integration."""
        self._plain()
        cs = [0] + [_div_scalar(c, i + 1) if c else 0 for i, c in enumerate(self.coeffs)]
        return Series1._raw(_norm_list(cs), self.order + 1)

    def euler(self) -> "Series1":
        """``x d/dx``."""
        self._plain()
        return Series1._raw([i * c for i, c in enumerate(self.coeffs)], self.order)

    def mul_x(self, k: int = 1) -> "Series1":
        """Multiply by ``x**k`` for ``k >= 0``."""
        self._plain()
        return Series1._raw((0,) * k + self.coeffs, self.order + k)

    def div_x(self, k: int = 1) -> "Series1":
        """Exact division by ``x**k``."""
        self._plain()
        if any(self.coeffs[:k]):
            raise SeriesError(f"series not divisible by x^{k}")
        if self.order < k:
            raise SeriesError("division leaves no known coefficients")
        return Series1._raw(self.coeffs[k:], self.order - k)

    def power_substitute(self, k: int) -> "Series1":
        """``f(x**k)``."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        self._plain()
        if k == 1:
            return self
        n = (self.order + 1) * k - 1
        out = [0] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Series1._raw(out, n)

    def compose(self, g: "Series1") -> "Series1":
        """``f(g(x))`` by Horner's rule; ``g`` must have zero constant term."""
        self._plain()
        g._plain()
        if g.coeffs[0]:
            raise SeriesError("composition needs an argument without constant term")
        v = g.valuation()
        n = g.order if v > g.order else min(g.order, (self.order + 1) * v - 1)
        g = g.truncate(n)
        acc = Series1.const(self.coeffs[-1], n)
        for c in reversed(self.coeffs[:-1]):
            acc = (acc * g).truncate(n) + c
        return acc.truncate(n)

    def __call__(self, g: "Series1") -> "Series1":
        return self.compose(g)

    def laurent_shift(self, offset: int) -> "Series1":
        """Record a multiplication by ``x**offset`` (offset may be negative)."""
        return Series1._raw(self.coeffs, self.order, self.shift + offset)

    def normalized(self) -> "Series1":
        """Fold the Laurent offset into the coefficients."""
        s = self.shift
        if s == 0:
            return self
        if s > 0:
            return Series1._raw((0,) * s + self.coeffs, self.order + s)
        if any(self.coeffs[:-s]):
            raise SeriesError(f"negative exponent survives normalization (shift {s})")
        if self.order + s < 0:
            raise SeriesError("normalization leaves no known coefficients")
        return Series1._raw(self.coeffs[-s:], self.order + s)


# ---------------------------------------------------------------------------
# two variables
# ---------------------------------------------------------------------------


Rows = Tuple[Tuple[ExactRational, ...], ...]


def _zero_rows(n: int):
    return [[0] * (n + 1 - i) for i in range(n + 1)]


class Series2:
    """Bivariate series ``sum c[i][j] x^(i+shift_b) y^(j+shift_w)``, ``i + j <= order``.

    ``x`` is the black variable (vertices / black vertices) and ``y`` the
    white one.
    """

    __slots__ = ("order", "rows", "shift_b", "shift_w")

    def __init__(self, coeffs: Mapping[Tuple[int, int], object] | None, order: int,
                 shift_b: int = 0, shift_w: int = 0):
        if order < 0:
            raise ValueError("negative truncation order")
        rows = _zero_rows(order)
        for (i, j), c in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent in coefficient table")
            if i + j <= order:
                rows[i][j] = exact(c)
        self.order = order
        self.rows = tuple(tuple(r) for r in rows)
        self.shift_b = shift_b
        self.shift_w = shift_w

    @classmethod
    def _raw(cls, rows, order: int, shift_b: int = 0, shift_w: int = 0) -> "Series2":
        s = object.__new__(cls)
        s.order = order
        s.rows = tuple(tuple(r) for r in rows)
        s.shift_b = shift_b
        s.shift_w = shift_w
        return s

    @classmethod
    def zero(cls, order: int) -> "Series2":
        return cls._raw(_zero_rows(order), order)

    @classmethod
    def const(cls, c, order: int) -> "Series2":
        rows = _zero_rows(order)
        rows[0][0] = exact(c)
        return cls._raw(rows, order)

    @classmethod
    def monomial(cls, i: int, j: int, order: int, c=1) -> "Series2":
        rows = _zero_rows(order)
        if i + j <= order:
            rows[i][j] = exact(c)
        return cls._raw(rows, order)

    @classmethod
    def xb(cls, order: int) -> "Series2":
        return cls.monomial(1, 0, order)

    @classmethod
    def xw(cls, order: int) -> "Series2":
        return cls.monomial(0, 1, order)

    @classmethod
    def from_univariate(cls, f: Series1, which: int = 0) -> "Series2":
        """Embed ``f`` as a series in the black (0) or white (1) variable."""
        rows = _zero_rows(f.order)
        for n, c in enumerate(f.coeffs):
            if which == 0:
                rows[n][0] = c
            else:
                rows[0][n] = c
        return cls._raw(rows, f.order)

    # queries ---------------------------------------------------------------
    def __getitem__(self, ij: Tuple[int, int]) -> ExactRational:
        i, j = ij[0] - self.shift_b, ij[1] - self.shift_w
        if i < 0 or j < 0:
            return 0
        if i + j > self.order:
            raise IndexError(f"coefficient {ij} beyond total degree {self.order}")
        return self.rows[i][j]

    def items(self):
        """Nonzero ``((i, j), c)`` pairs (offsets not applied)."""
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    yield (i, j), c

    def to_dict(self) -> dict:
        return dict(self.items())

    def valuation(self) -> int:
        """Lowest total degree carrying a nonzero coefficient (``order+1`` if none)."""
        best = self.order + 1
        for (i, j), _ in self.items():
            best = min(best, i + j)
        return best

    def min_exponents(self) -> Tuple[int, int]:
        p = q = self.order + 1
        for (i, j), _ in self.items():
            p = min(p, i)
            q = min(q, j)
        return p, q

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def first_nonzero_degree(self) -> int | None:
        v = self.valuation()
        return None if v > self.order else v

    def __eq__(self, other):
        if not isinstance(other, Series2):
            return NotImplemented
        return (self.order, self.shift_b, self.shift_w, self.rows) == (
            other.order, other.shift_b, other.shift_w, other.rows)

    def __hash__(self):
        return hash((self.order, self.shift_b, self.shift_w, self.rows))

    def __repr__(self):
        terms = [f"{c}*x^{i}*y^{j}" for (i, j), c in self.items()]
        return f"Series2({' + '.join(terms[:12]) or '0'}{' + ...' if len(terms) > 12 else ''}; order {self.order})"

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise SeriesError(f"cannot raise precision from {self.order} to {order}")
        return Series2._raw([r[: order + 1 - i] for i, r in enumerate(self.rows[: order + 1])],
                            order, self.shift_b, self.shift_w)

    def padded(self, order: int) -> "Series2":
        rows = _zero_rows(order)
        for i, r in enumerate(self.rows[: order + 1]):
            for j, c in enumerate(r[: order + 1 - i]):
                rows[i][j] = c
        return Series2._raw(rows, order, self.shift_b, self.shift_w)

    def _plain(self):
        if self.shift_b or self.shift_w:
            raise SeriesError("Laurent-shifted series must be normalized before arithmetic")

    # ring operations -------------------------------------------------------
    def __add__(self, other):
        self._plain()
        if not isinstance(other, Series2):
            rows = [list(r) for r in self.rows]
            rows[0][0] = exact(rows[0][0] + other)
            return Series2._raw(rows, self.order)
        other._plain()
        n = min(self.order, other.order)
        rows = [_norm_list(a + b for a, b in zip(ra[: n + 1 - i], rb))
                for i, (ra, rb) in enumerate(zip(self.rows[: n + 1], other.rows))]
        return Series2._raw(rows, n)

    __radd__ = __add__

    def __neg__(self):
        self._plain()
        return Series2._raw([[-c for c in r] for r in self.rows], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series2":
        self._plain()
        c = exact(c)
        return Series2._raw([_norm_list(c * a for a in r) for r in self.rows], self.order)

    def __mul__(self, other):
        self._plain()
        if not isinstance(other, Series2):
            return self.scale(other)
        other._plain()
        va, vb = self.valuation(), other.valuation()
        n = min(self.order + vb, other.order + va)
        out = _zero_rows(n)
        brows = other.rows
        bitems = [(i2, [(j2, c2) for j2, c2 in enumerate(r) if c2]) for i2, r in enumerate(brows)]
        bitems = [(i2, r) for i2, r in bitems if r]
        for i1, row1 in enumerate(self.rows):
            for j1, c1 in enumerate(row1):
                if not c1:
                    continue
                rem = n - i1 - j1
                if rem < 0:
                    break
                for i2, r2 in bitems:
                    if i2 > rem:
                        break
                    orow = out[i1 + i2]
                    lim = rem - i2
                    for j2, c2 in r2:
                        if j2 > lim:
                            break
                        orow[j1 + j2] += c1 * c2
        return Series2._raw([_norm_list(r) for r in out], n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return Series2.const(1, self.order) / (self ** (-k))
        result = Series2.const(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def div_monomial(self, p: int, q: int) -> "Series2":
        """Exact division by ``x^p y^q``; raises if the quotient is not a series."""
        self._plain()
        n = self.order - p - q
        if n < 0:
            raise SeriesError("division leaves no known coefficients")
        for (i, j), _ in self.items():
            if i < p or j < q:
                raise SeriesError(f"series not divisible by x^{p} y^{q} (term at {(i, j)})")
        rows = [self.rows[i + p][q: q + n + 1 - i] for i in range(n + 1)]
        return Series2._raw(rows, n)

    def mul_monomial(self, p: int, q: int) -> "Series2":
        self._plain()
        n = self.order + p + q
        rows = _zero_rows(n)
        for (i, j), c in self.items():
            rows[i + p][j + q] = c
        return Series2._raw(rows, n)

    def __truediv__(self, other):
        self._plain()
        if not isinstance(other, Series2):
            other = exact(other)
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return Series2._raw([_norm_list(_div_scalar(c, other) for c in r) for r in self.rows],
                                self.order)
        other._plain()
        if other.is_zero():
            raise ZeroDivisionError("division by the zero series")
        p, q = other.min_exponents()
        unit = other.div_monomial(p, q)
        if unit.rows[0][0] == 0:
            raise SeriesError("divisor is not a monomial times a unit")
        a = self.div_monomial(p, q)
        n = min(a.order, unit.order + a.valuation())
        n = min(n, a.order)
        b = unit.rows
        b0 = b[0][0]
        bitems = [((i, j), c) for (i, j), c in unit.items() if (i, j) != (0, 0) and i + j <= n]
        out = _zero_rows(n)
        for d in range(n + 1):
            for i in range(d + 1):
                j = d - i
                s = a.rows[i][j]
                for (bi, bj), c in bitems:
                    if bi <= i and bj <= j:
                        r = out[i - bi][j - bj]
                        if r:
                            s -= c * r
                out[i][j] = _div_scalar(s, b0) if s else 0
        return Series2._raw([_norm_list(r) for r in out], n)

    def __rtruediv__(self, other):
        return Series2.const(other, self.order) / self

    # operators -----------------------------------------------------------
    def euler(self) -> "Series2":
        """``d/dt f(t x, t y)`` at ``t = 1``: coefficient ``(i, j)`` times ``i + j``."""
        self._plain()
        return Series2._raw([[(i + j) * c for j, c in enumerate(r)] for i, r in enumerate(self.rows)],
                            self.order)

    def swap(self) -> "Series2":
        """Exchange the two variables."""
        n = self.order
        rows = _zero_rows(n)
        for (i, j), c in self.items():
            rows[j][i] = c
        return Series2._raw(rows, n, self.shift_w, self.shift_b)

    def diagonal(self) -> Series1:
        """``f(x, x)`` as a univariate series."""
        self._plain()
        out = [0] * (self.order + 1)
        for (i, j), c in self.items():
            out[i + j] += c
        return Series1._raw(_norm_list(out), self.order)

    def power_substitute(self, k: int) -> "Series2":
        """``f(x**k, y**k)``."""
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        self._plain()
        if k == 1:
            return self
        n = (self.order + 1) * k - 1
        rows = _zero_rows(n)
        for (i, j), c in self.items():
            rows[i * k][j * k] = c
        return Series2._raw(rows, n)

    def compose(self, g1: "Series2", g2: "Series2") -> "Series2":
        """``f(g1, g2)``; both arguments must vanish at the origin."""
        self._plain()
        g1._plain()
        g2._plain()
        if g1.rows[0][0] or g2.rows[0][0]:
            raise SeriesError("composition needs arguments without constant term")
        v = min(g1.valuation(), g2.valuation())
        n = min(g1.order, g2.order)
        if v <= n:
            n = min(n, (self.order + 1) * v - 1)
        g1, g2 = g1.truncate(n), g2.truncate(n)
        # Q_i = sum_j f_ij g2^j, then Horner in g1
        powers = [Series2.const(1, n)]
        for _ in range(self.order):
            powers.append(powers[-1] * g2)
        acc = None
        for i in range(self.order, -1, -1):
            row = self.rows[i]
            q = _lincomb2([(c, powers[j]) for j, c in enumerate(row) if c], n)
            acc = q if acc is None else (acc * g1).truncate(n) + q
        return acc.truncate(n)

    def __call__(self, g1: "Series2", g2: "Series2") -> "Series2":
        return self.compose(g1, g2)

    def laurent_shift(self, db: int, dw: int) -> "Series2":
        """Record a multiplication by ``x^db y^dw`` (offsets may be negative)."""
        return Series2._raw(self.rows, self.order, self.shift_b + db, self.shift_w + dw)

    def normalized(self) -> "Series2":
        sb, sw = self.shift_b, self.shift_w
        if sb == 0 and sw == 0:
            return self
        for (i, j), c in self.items():
            if i + sb < 0 or j + sw < 0:
                raise SeriesError(
                    f"negative exponent survives normalization: term {(i + sb, j + sw)}")
        n = self.order + sb + sw
        if n < 0:
            raise SeriesError("normalization leaves no known coefficients")
        rows = _zero_rows(n)
        for (i, j), c in self.items():
            if i + j + sb + sw <= n:
                rows[i + sb][j + sw] = c
        return Series2._raw(rows, n)


def _lincomb2(terms, n: int) -> Series2:
    rows = _zero_rows(n)
    for c, s in terms:
        for i, r in enumerate(s.rows[: n + 1]):
            orow = rows[i]
            for j, a in enumerate(r[: n + 1 - i]):
                if a:
                    orow[j] += c * a
    return Series2._raw([_norm_list(r) for r in rows], n)


Series = Union[Series1, Series2]


def laurent_shift(f: Series, offsets) -> Series:
    """Multiply ``f`` by a (possibly negative) monomial, recorded as metadata."""
    if isinstance(f, Series1):
        return f.laurent_shift(int(offsets))
    db, dw = offsets
    return f.laurent_shift(db, dw)


def poly1(coeffs: Sequence, s: Series1) -> Series1:
    """Evaluate the polynomial ``sum coeffs[k] T^k`` at ``T = s``."""
    acc = Series1.const(coeffs[-1], s.order)
    for c in reversed(coeffs[:-1]):
        acc = acc * s + c
    return acc


class PowerCache2:
    """Cached powers of a pair of bivariate series, for polynomial evaluation."""

    def __init__(self, s1: Series2, s2: Series2):
        self.order = min(s1.order, s2.order)
        self._p = ([Series2.const(1, self.order)], [Series2.const(1, self.order)])
        self._s = (s1.truncate(self.order), s2.truncate(self.order))

    def power(self, which: int, k: int) -> Series2:
        p = self._p[which]
        while len(p) <= k:
            p.append(p[-1] * self._s[which])
        return p[k]

    def poly(self, terms: Mapping[Tuple[int, int], object]) -> Series2:
        """Evaluate ``sum c * s1^a * s2^b`` over ``terms = {(a, b): c}``."""
        by_a: dict = {}
        for (a, b), c in terms.items():
            if c:
                by_a.setdefault(a, []).append((b, c))
        acc = Series2.zero(self.order)
        for a in sorted(by_a):
            inner = _lincomb2([(c, self.power(1, b)) for b, c in by_a[a]], self.order)
            acc = acc + (inner if a == 0 else inner * self.power(0, a))
        return acc


def poly2(terms: Mapping[Tuple[int, int], object], s1: Series2, s2: Series2) -> Series2:
    return PowerCache2(s1, s2).poly(terms)
