"""Pairing universal series against moment data of a linear functional.

An invariant evaluated on powers of the point class x is modelled as a
finite moment sequence mu_0, mu_1, ...; pairing extends the functional
linearly to series coefficients, sending sum_k c_k x^k to sum_k c_k mu_k
per t-power.  The evaluation formulas then combine paired series:

* even case    pair(B^2, mu_c) + pair(S^2, mu_{c+tau})
* even variant pair(B^2, mu_c) + pair(S^2, nu_c) / 2, where nu are the
  tau-inserted moments; with nu = 2 mu_{c+tau} it equals the even case
* odd case     pair(BS' - B'S, mu_c) + pair(BS, nu_c)
* simple type  closed hyperbolic forms, equal to the moment route on
  geometric moments mu_k = a * 2^k

Tau-inserted data is always caller-supplied: real invariant data has to
satisfy relations this module can check for consistency but deliberately
does not enforce.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import Rational, RationalLike, XPoly, parse_rational
from .blowup import BlowupSeriesSet, series_set
from .series import (
    SeriesError,
    TSeries,
    cosh_series,
    exp_t_squared,
    sinh_series,
)

PROVENANCE_EVEN = "maina"
PROVENANCE_ODD = "mainb"
PROVENANCE_EVEN_PRIME = "main-prime"
PROVENANCE_SIMPLE_EVEN = "corollary-even"
PROVENANCE_SIMPLE_ODD = "corollary-odd"


class InsufficientMomentsError(ValueError):
    """A pairing needed more moments than the functional supplies."""

    def __init__(self, label: str, supplied: int, required: int):
        super().__init__(
            f"functional {label!r} supplies {supplied} moments but the series "
            f"reaches x-degree {required - 1}; at least {required} moments are required"
        )
        self.required = required


@dataclass(frozen=True)
class MomentFunctional:
    """A linear form known through its values on x-powers."""

    label: str
    moments: tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, "moments", tuple(Fraction(m) for m in self.moments))

    def __len__(self) -> int:
        return len(self.moments)

    def value_on(self, p: XPoly) -> Rational:
        """Apply the functional to a polynomial in x."""
        if p.degree >= len(self.moments):
            raise InsufficientMomentsError(self.label, len(self.moments), p.degree + 1)
        return sum((c * self.moments[k] for k, c in enumerate(p.coeffs)), Fraction(0))

    def scaled(self, factor: RationalLike) -> "MomentFunctional":
        f = Fraction(factor)
        return MomentFunctional(self.label, tuple(m * f for m in self.moments))

    @classmethod
    def zero(cls, label: str, length: int) -> "MomentFunctional":
        return cls(label, (Fraction(0),) * length)

    @classmethod
    def geometric(
        cls, label: str, scale: RationalLike, ratio: RationalLike, length: int
    ) -> "MomentFunctional":
        """mu_k = scale * ratio^k; pairing against it is substitution x -> ratio."""
        scale, ratio = Fraction(scale), Fraction(ratio)
        return cls(label, tuple(scale * ratio**k for k in range(length)))

    def to_json(self) -> dict:
        return {"label": self.label, "moments": [str(m) for m in self.moments]}

    @classmethod
    def from_json(cls, data: Mapping) -> "MomentFunctional":
        label = data.get("label")
        if not isinstance(label, str):
            raise ValueError("moment JSON needs a string 'label'")
        moments = data.get("moments")
        if not isinstance(moments, list):
            raise ValueError("moment JSON needs a 'moments' array of rational strings")
        return cls(label, tuple(parse_rational(m) for m in moments))


def pair(f: TSeries, mu: MomentFunctional) -> TSeries:
    """Apply a moment functional to every coefficient of a series.

    The input must be an ordinary series (valuation >= 0); the output has
    x-free coefficients and the same truncation order.
    """
    if f.valuation < 0:
        raise SeriesError("pairing needs a series with valuation >= 0")
    terms = {n: XPoly((mu.value_on(c),)) for n, c in f.terms()}
    return TSeries.from_terms(terms, f.order)


@dataclass(frozen=True)
class EvalResult:
    """An evaluated invariant series plus which formula produced it."""

    series: TSeries
    provenance: str

    def to_json(self) -> dict:
        data = self.series.to_json()
        data["provenance"] = self.provenance
        return data


def _series_for(order: int, provided: "BlowupSeriesSet | None") -> BlowupSeriesSet:
    if provided is not None:
        if provided.order < order + 1:
            raise SeriesError(
                f"series set of order {provided.order} cannot evaluate through t^{order}"
            )
        return provided
    return series_set(order + 1)


def eval_even(
    mu_c: MomentFunctional,
    mu_ctau: MomentFunctional,
    order: int,
    series: "BlowupSeriesSet | None" = None,
) -> EvalResult:
    """Even pairing case: pair(B^2, mu_c) + pair(S^2, mu_{c+tau})."""
    st = _series_for(order, series)
    result = pair(st.b2.truncate(order), mu_c) + pair(st.s2.truncate(order), mu_ctau)
    return EvalResult(result, PROVENANCE_EVEN)


def eval_even_main_prime(
    mu_c: MomentFunctional,
    nu_c: MomentFunctional,
    order: int,
    series: "BlowupSeriesSet | None" = None,
) -> EvalResult:
    """Even-case variant over tau-inserted moments: pair(B^2, mu) + pair(S^2, nu)/2."""
    st = _series_for(order, series)
    result = pair(st.b2.truncate(order), mu_c) + pair(st.s2.truncate(order), nu_c) * Fraction(1, 2)
    return EvalResult(result, PROVENANCE_EVEN_PRIME)


def eval_odd(
    mu_c: MomentFunctional,
    nu_c: MomentFunctional,
    order: int,
    series: "BlowupSeriesSet | None" = None,
) -> EvalResult:
    """Odd pairing case: pair(BS' - B'S, mu_c) + pair(BS, nu_c)."""
    st = _series_for(order, series)
    result = pair(st.wronskian.truncate(order), mu_c) + pair(st.bs.truncate(order), nu_c)
    return EvalResult(result, PROVENANCE_ODD)


def eval_simple_type(
    a: RationalLike,
    b: RationalLike,
    d: RationalLike,
    parity: str,
    order: int,
) -> EvalResult:
    """Closed simple-type forms.

    even: exp(-t^2) (a cosh^2 t + b sinh^2 t); odd: exp(-t^2) (a + d sinh(2t)/2).
    Equals the moment-based route on geometric moments with ratio 2.
    """
    a, b, d = Fraction(a), Fraction(b), Fraction(d)
    envelope = exp_t_squared(-1, order)
    if parity == "even":
        c, s = cosh_series(order), sinh_series(order)
        series = envelope * (c * c * a + s * s * b)
        return EvalResult(series.truncate(order), PROVENANCE_SIMPLE_EVEN)
    if parity == "odd":
        half_double = sinh_series(order).scale_arg(2) * Fraction(1, 2)
        series = envelope * (TSeries.one(order) * a + half_double * d)
        return EvalResult(series.truncate(order), PROVENANCE_SIMPLE_ODD)
    raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
