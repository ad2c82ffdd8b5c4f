"""Exact coefficient arithmetic: rationals and dense polynomials in x.

The scalar everywhere is an arbitrary-precision rational number; dense
polynomials in the formal variable x over those rationals form the
coefficient ring of every series in this package.  No floating point
anywhere: all results are exact and canonical.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

# The exact scalar.  fractions.Fraction already maintains the canonical
# reduced form (gcd(|num|, den) = 1, den >= 1) and prints it as "p" or
# "p/q" with "/1" never shown, which is exactly the textual contract of
# this package.
Rational = Fraction

RationalLike = Union[Rational, int, str]

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def format_rational(a: RationalLike) -> str:
    """Canonical text for a rational: optional '-', then 'p' or 'p/q'."""
    return str(Fraction(a))


def parse_rational(text: str) -> Rational:
    """Parse the canonical rational format; reject anything else.

    Accepts 'p' and 'p/q' (q > 0) with an optional leading minus; the
    result is reduced.  Decimal notation is rejected so that golden data
    and JSON payloads stay in a single exact format.
    """
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)  # raises ZeroDivisionError for 'p/0'
    return value


def rational(numerator: RationalLike, denominator: RationalLike = 1) -> Rational:
    """Convenience constructor for an exact rational."""
    return Fraction(numerator) / Fraction(denominator)


_ZERO = Fraction(0)
_ONE = Fraction(1)


class XPoly:
    """Dense polynomial in x with rational coefficients.

    Immutable.  The stored coefficient tuple is trailing-zero free; the
    zero polynomial stores nothing and has degree -1 (standing in for
    "minus infinity").
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "_c", tuple(c))

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "XPoly":
        return _XPOLY_ZERO

    @classmethod
    def one(cls) -> "XPoly":
        return _XPOLY_ONE

    @classmethod
    def x(cls) -> "XPoly":
        return _XPOLY_X

    @classmethod
    def monomial(cls, coeff: RationalLike, power: int) -> "XPoly":
        if power < 0:
            raise ValueError("monomial power must be >= 0")
        c = Fraction(coeff)
        if c == 0:
            return _XPOLY_ZERO
        return cls((0,) * power + (c,))

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> "XPoly":
        """Decode the JSON form: an array of canonical rational strings."""
        return cls(parse_rational(s) for s in items)

    def to_strings(self) -> list[str]:
        """Encode as the JSON form (empty list for the zero polynomial)."""
        return [str(v) for v in self._c]

    # -- structure ---------------------------------------------------

    @property
    def coeffs(self) -> tuple[Rational, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Highest x-exponent, or -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> Rational:
        if 0 <= k < len(self._c):
            return self._c[k]
        return _ZERO

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, XPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self == XPoly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "XPoly | RationalLike") -> "XPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return XPoly(out)

    __radd__ = __add__

    def __sub__(self, other: "XPoly | RationalLike") -> "XPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "XPoly | RationalLike") -> "XPoly":
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "XPoly":
        return XPoly(-v for v in self._c)

    def __mul__(self, other: "XPoly | RationalLike") -> "XPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return _XPOLY_ZERO
            return XPoly(v * other for v in self._c)
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return _XPOLY_ZERO
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return XPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: RationalLike) -> "XPoly":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        return XPoly(v / s for v in self._c)

    def __pow__(self, n: int) -> "XPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("XPoly powers must be non-negative integers")
        result = _XPOLY_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_at(self, v: RationalLike) -> Rational:
        """Evaluate at a rational point by Horner's rule (exact)."""
        v = Fraction(v)
        acc = _ZERO
        for c in reversed(self._c):
            acc = acc * v + c
        return acc

    # -- display -------------------------------------------------------

    def __str__(self) -> str:
        return render_xpoly(self)

    def __repr__(self) -> str:
        return f"XPoly({[str(v) for v in self._c]})"


def _lift(value: "XPoly | RationalLike") -> "XPoly":
    if isinstance(value, XPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return XPoly((value,))
    return NotImplemented


def render_xpoly(p: XPoly, var: str = "x") -> str:
    """Human-readable form, ascending powers: '13584 - 88320x^2 - 8192x^6'.

    Non-integer rational coefficients are parenthesised ('(-1/12)x^4') so
    the slash cannot be misread as dividing by the variable.
    """
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            xpart = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = xpart
            elif mag.denominator == 1:
                body = f"{mag}{xpart}"
            else:
                body = f"({mag}){xpart}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def first_coeff_difference(
    a: XPoly, b: XPoly
) -> "tuple[int, Rational, Rational] | None":
    """Least x-power where two polynomials differ, with both values."""
    for k in range(max(a.degree, b.degree) + 1):
        va, vb = a.coeff(k), b.coeff(k)
        if va != vb:
            return k, va, vb
    return None


_XPOLY_ZERO = XPoly()
_XPOLY_ONE = XPoly((1,))
_XPOLY_X = XPoly((0, 1))
