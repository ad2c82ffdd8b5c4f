"""Truncated power/Laurent series in t over Q[x], and bivariate series in (u, v).

A :class:`TSeries` knows exactly how far it can be trusted: every value
carries an inclusive truncation ``order`` and an integer ``valuation``
(the lowest t-exponent, possibly negative).  Every operation states how
the output order follows from the input orders, so precision is never
silently overstated:

* ``a + b``          order ``min(a.order, b.order)``
* ``a * b``          order ``min(a.order + b.valuation, b.order + a.valuation)``
* ``a.derivative()`` order ``a.order - 1``
* ``a.integrate()``  order ``a.order + 1`` (definite integral from 0)
* ``a.recip()``      order ``a.order - 2 * a.valuation``
* ``a.exp()``, ``a.sqrt()``, ``a.scale_arg(c)``   order ``a.order``

Laurent support is limited to finite negative valuation whose leading
coefficient is a nonzero rational (an x-free unit); there are no formal
logarithms, so integrating a series with a t^-1 term is an error.

:class:`BiSeries` is a bivariate series in (u, v) truncated by *total*
degree; it exists to check identities that substitute t -> u + v and
t -> u - v into univariate series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .algebra import Rational, RationalLike, XPoly, first_coeff_difference

CoeffLike = Union[XPoly, Rational, int]


class SeriesError(ValueError):
    """A series operation was asked to leave its domain."""


class LogSingularityError(SeriesError):
    """Integration hit a nonzero t^-1 coefficient (logarithmic singularity)."""


class NonUnitLeadingError(SeriesError):
    """Reciprocal/division needs an x-free nonzero leading coefficient."""


def _as_xpoly(v: CoeffLike) -> XPoly:
    if isinstance(v, XPoly):
        return v
    return XPoly((v,))


class TSeries:
    """Truncated (Laurent) series in t with XPoly coefficients.

    Immutable.  Coefficients are stored densely for exponents
    ``valuation .. order``; a series that is zero through its order is
    stored with ``valuation == order + 1`` and no coefficients.
    """

    __slots__ = ("_val", "_coeffs", "_order")

    def __init__(self, valuation: int, coeffs: Iterable[CoeffLike], order: int):
        cs = [_as_xpoly(c) for c in coeffs]
        # clip to the declared window, then normalise the leading end
        window = order - valuation + 1
        if window < 0:
            valuation, cs = order + 1, []
        else:
            cs = cs[:window]
            cs.extend([XPoly.zero()] * (window - len(cs)))
            while cs and cs[0].is_zero:
                cs.pop(0)
                valuation += 1
        if not cs:
            valuation = order + 1
        object.__setattr__(self, "_val", valuation)
        object.__setattr__(self, "_coeffs", tuple(cs))
        object.__setattr__(self, "_order", order)

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls(order + 1, (), order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, coeff: CoeffLike, exponent: int, order: int) -> "TSeries":
        return cls(exponent, (coeff,), order)

    @classmethod
    def t(cls, order: int) -> "TSeries":
        """The series 't' itself, known through ``order``."""
        return cls.monomial(1, 1, order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, CoeffLike], order: int) -> "TSeries":
        """Build from an exponent -> coefficient mapping."""
        if not terms:
            return cls.zero(order)
        lo = min(terms)
        coeffs = [XPoly.zero()] * (order - lo + 1)
        for n, c in terms.items():
            if lo <= n <= order:
                coeffs[n - lo] = _as_xpoly(c)
        return cls(lo, coeffs, order)

    # -- structure -----------------------------------------------------

    @property
    def valuation(self) -> int:
        """Lowest t-exponent with a nonzero coefficient (order+1 if zero)."""
        return self._val

    @property
    def order(self) -> int:
        """Inclusive truncation bound: coefficients are exact through t^order."""
        return self._order

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, n: int, normalized: bool = False) -> XPoly:
        """Coefficient of t^n; with ``normalized`` the table form n! * [t^n].

        Exponents above the truncation order are unknown and raise;
        exponents below the valuation are known zeros.
        """
        if n > self._order:
            raise SeriesError(
                f"coefficient of t^{n} requested but series is only known through t^{self._order}"
            )
        p = XPoly.zero()
        if self._val <= n <= self._order:
            p = self._coeffs[n - self._val]
        if normalized:
            if n < 0:
                raise SeriesError("factorial normalization is undefined for negative exponents")
            p = p * math.factorial(n)
        return p

    def terms(self) -> Iterable[tuple[int, XPoly]]:
        """Iterate (exponent, coefficient) over the nonzero stored terms."""
        for k, c in enumerate(self._coeffs):
            if not c.is_zero:
                yield self._val + k, c

    def truncate(self, order: int) -> "TSeries":
        """Forget knowledge above ``order`` (which must not exceed self.order)."""
        if order > self._order:
            raise SeriesError(
                f"cannot extend truncation order {self._order} to {order}"
            )
        return TSeries(self._val, self._coeffs, order)

    def __eq__(self, other: object) -> bool:
        """Mathematical equality through the smaller truncation order."""
        if not isinstance(other, TSeries):
            return NotImplemented
        return first_difference(self, other) is None

    def __hash__(self) -> None:  # pragma: no cover - mutable-style semantics
        raise TypeError("TSeries is not hashable; compare with first_difference")

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        order = min(self._order, other._order)
        if self.is_zero:
            return other.truncate(order)
        if other.is_zero:
            return self.truncate(order)
        lo = min(self._val, other._val)
        out = [XPoly.zero()] * (order - lo + 1)
        for src in (self, other):
            for n, c in src.terms():
                if n <= order:
                    out[n - lo] = out[n - lo] + c
        return TSeries(lo, out, order)

    def __sub__(self, other: "TSeries") -> "TSeries":
        if not isinstance(other, TSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TSeries":
        return TSeries(self._val, (-c for c in self._coeffs), self._order)

    def __mul__(self, other: "TSeries | CoeffLike") -> "TSeries":
        if isinstance(other, (XPoly, Fraction, int)):
            p = _as_xpoly(other)
            if p.is_zero:
                return TSeries.zero(self._order)
            return TSeries(self._val, (c * p for c in self._coeffs), self._order)
        if not isinstance(other, TSeries):
            return NotImplemented
        order = min(self._order + other._val, other._order + self._val)
        if self.is_zero or other.is_zero:
            return TSeries.zero(order)
        lo = self._val + other._val
        out = [XPoly.zero()] * (order - lo + 1)
        for i, ci in enumerate(self._coeffs):
            if ci.is_zero:
                continue
            ei = self._val + i
            jmax = min(len(other._coeffs) - 1, order - other._val - ei)
            for j in range(jmax + 1):
                cj = other._coeffs[j]
                if cj.is_zero:
                    continue
                k = ei + other._val + j - lo
                out[k] = out[k] + ci * cj
        return TSeries(lo, out, order)

    __rmul__ = __mul__

    def __truediv__(self, other: "TSeries | RationalLike") -> "TSeries":
        if isinstance(other, (Fraction, int)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self * (Fraction(1) / Fraction(other))
        if not isinstance(other, TSeries):
            return NotImplemented
        return self * other.recip()

    def __pow__(self, n: int) -> "TSeries":
        if not isinstance(n, int) or n < 0:
            raise SeriesError("series powers must be non-negative integers")
        result = TSeries.one(self._order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "TSeries":
        """Termwise d/dt; the output is exact through ``order - 1``."""
        order = self._order - 1
        terms = {n - 1: c * n for n, c in self.terms() if n != 0}
        return TSeries.from_terms(terms, order)

    def integrate(self) -> "TSeries":
        """Definite integral from 0; rejects a nonzero t^-1 coefficient."""
        if self._order < -1:
            raise SeriesError(
                "cannot integrate: the t^-1 coefficient lies beyond the truncation order"
            )
        if self._val <= -1 and not self.coeff(-1).is_zero:
            raise LogSingularityError(
                "integration would create a logarithm: nonzero t^-1 coefficient"
            )
        terms = {n + 1: c / (n + 1) for n, c in self.terms()}
        return TSeries.from_terms(terms, self._order + 1)

    def scale_arg(self, c: RationalLike) -> "TSeries":
        """Substitute t -> c*t for a rational c (coefficient of t^n scales by c^n)."""
        c = Fraction(c)
        if c == 0:
            if self._val < 0:
                raise SeriesError("cannot substitute t -> 0 into a Laurent series")
            return TSeries.from_terms({0: self.coeff(0)}, self._order) if self._val == 0 else TSeries.zero(self._order)
        terms = {n: coeff * c**n for n, coeff in self.terms()}
        return TSeries.from_terms(terms, self._order)

    def eval_x(self, v: RationalLike) -> "TSeries":
        """Substitute a rational value for x in every coefficient."""
        terms = {n: XPoly((c.eval_at(v),)) for n, c in self.terms()}
        return TSeries.from_terms(terms, self._order)

    # -- multiplicative structure ------------------------------------------

    def recip(self) -> "TSeries":
        """Multiplicative inverse; needs an x-free rational leading coefficient.

        For valuation v the result has valuation -v and is exact through
        ``order - 2*v``.
        """
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of the zero series")
        lead = self._coeffs[0]
        if lead.degree != 0:
            raise NonUnitLeadingError(
                f"leading coefficient {lead} is not invertible in the rationals"
            )
        u0 = lead.coeff(0)
        v = self._val
        n_out = len(self._coeffs)
        inv: list[XPoly] = [XPoly((Fraction(1) / u0,))]
        for n in range(1, n_out):
            acc = XPoly.zero()
            kmax = min(n, len(self._coeffs) - 1)
            for k in range(1, kmax + 1):
                uk = self._coeffs[k]
                if not uk.is_zero and not inv[n - k].is_zero:
                    acc = acc + uk * inv[n - k]
            inv.append(acc * (Fraction(-1) / u0))
        return TSeries(-v, inv, self._order - 2 * v)

    def exp(self) -> "TSeries":
        """Exponential of a series with zero constant term (valuation >= 1).

        Solved exactly from f' = a' f order by order.
        """
        if self._val < 1:
            raise SeriesError("exp needs valuation >= 1 (zero constant term)")
        order = self._order
        a = [self.coeff(n) for n in range(order + 1)]
        f: list[XPoly] = [XPoly.one()]
        for n in range(1, order + 1):
            acc = XPoly.zero()
            for k in range(1, n + 1):
                ak = a[k]
                if not ak.is_zero and not f[n - k].is_zero:
                    acc = acc + ak * f[n - k] * k
            f.append(acc / n)
        return TSeries(0, f, order)

    def sqrt(self) -> "TSeries":
        """Square root of a series with constant term exactly 1."""
        if self.is_zero or self._val != 0 or self._coeffs[0] != XPoly.one():
            raise SeriesError("sqrt needs constant term exactly 1")
        order = self._order
        a = [self.coeff(n) for n in range(order + 1)]
        g: list[XPoly] = [XPoly.one()]
        for n in range(1, order + 1):
            acc = a[n]
            for k in range(1, n):
                if not g[k].is_zero and not g[n - k].is_zero:
                    acc = acc - g[k] * g[n - k]
            g.append(acc / 2)
        return TSeries(0, g, order)

    # -- bivariate substitution ---------------------------------------------

    def subst_pm(self, sign: int) -> "BiSeries":
        """Substitute t -> u + v (sign=+1) or t -> u - v (sign=-1).

        Each t^n expands by binomials into the (u, v) triangle; the result
        is truncated at total degree ``order``.
        """
        if sign not in (1, -1):
            raise SeriesError("sign must be +1 or -1")
        if self._val < 0:
            raise SeriesError("bivariate substitution needs valuation >= 0")
        order = self._order
        rows = [[XPoly.zero()] * (order - i + 1) for i in range(order + 1)]
        for n, c in self.terms():
            for i in range(n + 1):
                j = n - i
                w = math.comb(n, i) * (sign**j)
                rows[i][j] = rows[i][j] + c * w
        return BiSeries(rows, order)

    def as_biseries(self, axis: str, order: "int | None" = None) -> "BiSeries":
        """Embed as a series in u alone (axis='u') or v alone (axis='v')."""
        if axis not in ("u", "v"):
            raise SeriesError("axis must be 'u' or 'v'")
        if self._val < 0:
            raise SeriesError("bivariate embedding needs valuation >= 0")
        order = self._order if order is None else order
        if order > self._order:
            raise SeriesError("cannot embed beyond the known truncation order")
        rows = [[XPoly.zero()] * (order - i + 1) for i in range(order + 1)]
        for n, c in self.terms():
            if n <= order:
                if axis == "u":
                    rows[n][0] = c
                else:
                    rows[0][n] = c
        return BiSeries(rows, order)

    # -- serialization ---------------------------------------------------

    def to_json(self, normalization: str = "plain") -> dict:
        """JSON form: variable, valuation, order, normalization, dense coeffs."""
        if normalization not in ("plain", "factorial"):
            raise ValueError(f"unknown normalization {normalization!r}")
        if normalization == "factorial" and self._val < 0:
            raise SeriesError("factorial normalization is undefined for Laurent series")
        coeffs = []
        for n in range(self._val, self._order + 1):
            c = self.coeff(n)
            if normalization == "factorial":
                c = c * math.factorial(n)
            coeffs.append(c.to_strings())
        return {
            "variable": "t",
            "valuation": self._val,
            "order": self._order,
            "normalization": normalization,
            "coeffs": coeffs,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "TSeries":
        if data.get("variable") != "t":
            raise ValueError("series JSON must declare variable 't'")
        normalization = data.get("normalization", "plain")
        if normalization not in ("plain", "factorial"):
            raise ValueError(f"unknown normalization {normalization!r}")
        val = int(data["valuation"])
        order = int(data["order"])
        coeffs = []
        for k, item in enumerate(data["coeffs"]):
            p = XPoly.from_strings(item)
            if normalization == "factorial":
                n = val + k
                if n < 0:
                    raise ValueError("factorial normalization with negative exponent")
                p = p / math.factorial(n)
            coeffs.append(p)
        return cls(val, coeffs, order)

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return f"O(t^{self._order + 1})"
        bits = []
        for n, c in self.terms():
            body = str(c)
            if c.degree > 0 or ("-" in body[1:] or "+" in body):
                body = f"({body})"
            bits.append(f"{body}*t^{n}")
        return " + ".join(bits) + f" + O(t^{self._order + 1})"

    def __repr__(self) -> str:
        return f"<TSeries valuation={self._val} order={self._order}>"


# ---------------------------------------------------------------------------
# mismatch reporting


@dataclass(frozen=True)
class TMismatch:
    """First coefficient disagreement between two univariate series."""

    t: int
    x: int
    lhs: Rational
    rhs: Rational

    def to_json(self) -> dict:
        return {"t": self.t, "x": self.x, "lhs": str(self.lhs), "rhs": str(self.rhs)}


@dataclass(frozen=True)
class UVMismatch:
    """First coefficient disagreement between two bivariate series."""

    u: int
    v: int
    x: int
    lhs: Rational
    rhs: Rational

    def to_json(self) -> dict:
        return {
            "u": self.u,
            "v": self.v,
            "x": self.x,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


def first_difference(
    a: TSeries, b: TSeries, through: "int | None" = None
) -> "TMismatch | None":
    """Least (t-power, x-power) where two series differ, or None.

    Comparison runs through ``through`` when given (which must not exceed
    either truncation order), otherwise through the smaller order.
    """
    limit = min(a.order, b.order) if through is None else through
    if limit > min(a.order, b.order):
        raise SeriesError(
            f"comparison through t^{limit} exceeds known orders ({a.order}, {b.order})"
        )
    lo = min(a.valuation, b.valuation)
    for n in range(lo, limit + 1):
        ca, cb = a.coeff(n), b.coeff(n)
        if ca != cb:
            k, va, vb = first_coeff_difference(ca, cb)
            return TMismatch(n, k, va, vb)
    return None


def equal_to_order(a: TSeries, b: TSeries, order: int) -> bool:
    """True when the two series agree for every exponent <= order."""
    return first_difference(a, b, through=order) is None


# ---------------------------------------------------------------------------
# bivariate series


class BiSeries:
    """Bivariate series in (u, v) over Q[x], truncated by total degree.

    Coefficients live on the triangle i + j <= order, stored row-major:
    ``rows[i][j]`` is the coefficient of u^i v^j.
    """

    __slots__ = ("_rows", "_order")

    def __init__(self, rows: Sequence[Sequence[CoeffLike]], order: int):
        if order < 0:
            raise SeriesError("total-degree order must be >= 0")
        norm: list[tuple[XPoly, ...]] = []
        for i in range(order + 1):
            row = rows[i] if i < len(rows) else ()
            vals = [_as_xpoly(c) for c in row[: order - i + 1]]
            vals.extend([XPoly.zero()] * (order - i + 1 - len(vals)))
            norm.append(tuple(vals))
        object.__setattr__(self, "_rows", tuple(norm))
        object.__setattr__(self, "_order", order)

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls((), order)

    @property
    def order(self) -> int:
        return self._order

    def coeff(self, i: int, j: int) -> XPoly:
        if i < 0 or j < 0 or i + j > self._order:
            raise SeriesError(f"(u^{i} v^{j}) is outside the truncation triangle")
        return self._rows[i][j]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for row in self._rows for c in row)

    def __add__(self, other: "BiSeries") -> "BiSeries":
        if not isinstance(other, BiSeries):
            return NotImplemented
        order = min(self._order, other._order)
        rows = [
            [self._rows[i][j] + other._rows[i][j] for j in range(order - i + 1)]
            for i in range(order + 1)
        ]
        return BiSeries(rows, order)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "BiSeries":
        return BiSeries([[-c for c in row] for row in self._rows], self._order)

    def __mul__(self, other: "BiSeries | CoeffLike") -> "BiSeries":
        if isinstance(other, (XPoly, Fraction, int)):
            p = _as_xpoly(other)
            return BiSeries([[c * p for c in row] for row in self._rows], self._order)
        if not isinstance(other, BiSeries):
            return NotImplemented
        order = min(self._order, other._order)
        rows = [[XPoly.zero()] * (order - i + 1) for i in range(order + 1)]
        for i1 in range(min(self._order, order) + 1):
            row1 = self._rows[i1]
            for j1 in range(min(len(row1) - 1, order - i1) + 1):
                c1 = row1[j1]
                if c1.is_zero:
                    continue
                for i2 in range(order - i1 - j1 + 1):
                    row2 = other._rows[i2]
                    for j2 in range(min(len(row2) - 1, order - i1 - j1 - i2) + 1):
                        c2 = row2[j2]
                        if c2.is_zero:
                            continue
                        rows[i1 + i2][j1 + j2] = rows[i1 + i2][j1 + j2] + c1 * c2
        return BiSeries(rows, order)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return first_difference_uv(self, other) is None

    def __hash__(self) -> None:  # pragma: no cover
        raise TypeError("BiSeries is not hashable")

    def to_json(self) -> dict:
        coeffs = [c.to_strings() for row in self._rows for c in row]
        return {"variables": ["u", "v"], "order": self._order, "coeffs": coeffs}

    @classmethod
    def from_json(cls, data: Mapping) -> "BiSeries":
        if list(data.get("variables", ())) != ["u", "v"]:
            raise ValueError("bivariate series JSON must declare variables ['u','v']")
        order = int(data["order"])
        flat = [XPoly.from_strings(item) for item in data["coeffs"]]
        rows = []
        pos = 0
        for i in range(order + 1):
            width = order - i + 1
            rows.append(flat[pos : pos + width])
            pos += width
        if pos != len(flat):
            raise ValueError("triangular coefficient array has the wrong length")
        return cls(rows, order)

    def __repr__(self) -> str:
        return f"<BiSeries order={self._order}>"


def first_difference_uv(
    a: BiSeries, b: BiSeries, through: "int | None" = None
) -> "UVMismatch | None":
    """First disagreement scanning total degree ascending, then u-power."""
    limit = min(a.order, b.order) if through is None else through
    if limit > min(a.order, b.order):
        raise SeriesError(
            f"comparison through total degree {limit} exceeds known orders"
        )
    for d in range(limit + 1):
        for i in range(d + 1):
            ca, cb = a.coeff(i, d - i), b.coeff(i, d - i)
            if ca != cb:
                k, va, vb = first_coeff_difference(ca, cb)
                return UVMismatch(i, d - i, k, va, vb)
    return None


# ---------------------------------------------------------------------------
# exact scalar reference series (x-free coefficients)


def exp_t_squared(c: RationalLike, order: int) -> TSeries:
    """exp(c * t^2) as an exact rational series."""
    c = Fraction(c)
    terms = {2 * k: c**k / math.factorial(k) for k in range(order // 2 + 1)}
    return TSeries.from_terms(terms, order)


def cosh_series(order: int) -> TSeries:
    terms = {n: Fraction(1, math.factorial(n)) for n in range(0, order + 1, 2)}
    return TSeries.from_terms(terms, order)


def sinh_series(order: int) -> TSeries:
    terms = {n: Fraction(1, math.factorial(n)) for n in range(1, order + 1, 2)}
    return TSeries.from_terms(terms, order)


def cos_series(order: int) -> TSeries:
    terms = {
        n: Fraction((-1) ** (n // 2), math.factorial(n)) for n in range(0, order + 1, 2)
    }
    return TSeries.from_terms(terms, order)


def sin_series(order: int) -> TSeries:
    terms = {
        n: Fraction((-1) ** ((n - 1) // 2), math.factorial(n))
        for n in range(1, order + 1, 2)
    }
    return TSeries.from_terms(terms, order)
