"""Generation of the universal blow-up pair and every series derived from it.

The even series B = 1 - 2 t^4/4! + ... and the odd series S = t - x t^3/3!
+ ... are the unique pair of series in Q[x][[t]] that satisfy the bivariate
product identity

    B(u+v) B(u-v) = B^2(u) B^2(v) - S^2(u) S^2(v)                        (*)

together with the seeds B = 1 (mod t^4) and S = t - x t^3/6 (mod t^5).
Extracting the v^2 and v^4 coefficients of (*) turns it into two ordinary
differential relations,

    (E2)  B''B - (B')^2 + S^2 = 0
    (E4)  B''''B - 4 B'''B' + 3 (B'')^2 + 2 B^2 - 4x S^2 = 0,

and reading those off coefficient by coefficient gives a linear recurrence:
(E4) at t^n pins the next even coefficient b_{n+4}, then (E2) at t^{n+2}
pins the next odd coefficient s_{n+1}.  The seeds make the first two (E2)
instances redundant; they are kept as consistency checks, and generation
always re-verifies the full identity (*) bivariately and compares against
the embedded golden coefficient table before returning.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .algebra import Rational, XPoly
from .series import (
    BiSeries,
    SeriesError,
    TSeries,
    first_difference,
    first_difference_uv,
)


class GenerationError(RuntimeError):
    """The generating recurrence or its mandatory self-checks failed."""

    def __init__(self, message: str, degree: "int | None" = None):
        super().__init__(message if degree is None else f"{message} (degree {degree})")
        self.degree = degree


class UnexpectedPoleError(SeriesError):
    """A quotient of blow-up series had a pole it must not have."""


_X = XPoly.x()
_SEED_S3 = _X * Fraction(-1, 6)  # coefficient of t^3 in the odd seed


def _at(coeffs: Sequence[XPoly], i: int) -> XPoly:
    if 0 <= i < len(coeffs):
        return coeffs[i]
    return XPoly.zero()


def _ff(i: int, k: int) -> int:
    """Falling factorial (i+k)(i+k-1)...(i+1) -- the t-derivative weights."""
    return math.perm(i + k, k)


def _e4_residual(b: Sequence[XPoly], s: Sequence[XPoly], n: int) -> XPoly:
    """Left side of (E4) at t^n, with any missing coefficient read as zero."""
    acc = XPoly.zero()
    for i in range(n + 1):
        j = n - i
        p = _at(b, i + 4)
        q = _at(b, j)
        if p and q:
            acc = acc + (p * q) * _ff(i, 4)
        p = _at(b, i + 3)
        q = _at(b, j + 1)
        if p and q:
            acc = acc + (p * q) * (-4 * _ff(i, 3) * _ff(j, 1))
        p = _at(b, i + 2)
        q = _at(b, j + 2)
        if p and q:
            acc = acc + (p * q) * (3 * _ff(i, 2) * _ff(j, 2))
        p = _at(b, i)
        q = _at(b, j)
        if p and q:
            acc = acc + (p * q) * 2
        p = _at(s, i)
        q = _at(s, j)
        if p and q:
            acc = acc - (p * q) * (4 * _X)
    return acc


def _e2_residual(b: Sequence[XPoly], s: Sequence[XPoly], m: int) -> XPoly:
    """Left side of (E2) at t^m, with any missing coefficient read as zero."""
    acc = XPoly.zero()
    for i in range(m + 1):
        j = m - i
        p = _at(b, i + 2)
        q = _at(b, j)
        if p and q:
            acc = acc + (p * q) * _ff(i, 2)
        p = _at(b, i + 1)
        q = _at(b, j + 1)
        if p and q:
            acc = acc - (p * q) * (_ff(i, 1) * _ff(j, 1))
        p = _at(s, i)
        q = _at(s, j)
        if p and q:
            acc = acc + p * q
    return acc


def generate_pair(
    order: int,
    *,
    bb_check_order: int = 16,
    run_checks: bool = True,
) -> tuple[TSeries, TSeries]:
    """Generate the blow-up pair (B, S) exactly through t^order.

    ``order`` must be at least 4.  After the recurrence the generated pair
    is re-verified: the seed-redundant (E2) instances must vanish, the
    coefficients must match the embedded golden table wherever it reaches,
    and the bivariate identity (*) must hold through total degree
    ``min(order, bb_check_order)``.  Any mismatch raises
    :class:`GenerationError` naming the offending degree.
    """
    if order < 4:
        raise ValueError(f"generation needs order >= 4, got {order}")
    top = order + 4  # extra guard so s_{order} is reachable
    b: list[XPoly] = [XPoly.zero()] * (top + 1)
    s: list[XPoly] = [XPoly.zero()] * (top + 1)
    b[0] = XPoly.one()
    s[1] = XPoly.one()
    s[3] = _SEED_S3

    for n in range(0, order, 2):
        # the unknown slots are zero-initialised, so the residual helpers
        # naturally exclude them from their convolutions
        rest = _e4_residual(b, s, n)
        b[n + 4] = rest * Fraction(-1, _ff(n, 4))
        m = n + 2
        if m in (2, 4):
            check = _e2_residual(b, s, m)
            if not check.is_zero:
                raise GenerationError(
                    f"seed consistency check failed, residual {check}", degree=m
                )
        else:
            rest = _e2_residual(b, s, m)
            s[m - 1] = rest * Fraction(-1, 2)

    b_series = TSeries(0, b[: order + 1], order)
    s_series = TSeries(1, s[1 : order + 1], order)

    if run_checks:
        _check_against_golden(b_series, s_series)
        _check_bb(b_series, s_series, min(order, bb_check_order))
    return b_series, s_series


def _check_against_golden(b: TSeries, s: TSeries) -> None:
    table = golden_table()
    for name, generated in (("B", b), ("S", s)):
        reference = table[name]
        through = min(reference.order, generated.order)
        diff = first_difference(generated, reference, through=through)
        if diff is not None:
            raise GenerationError(
                f"generated {name} disagrees with the golden table at "
                f"t^{diff.t}, x^{diff.x}: {diff.lhs} vs {diff.rhs}",
                degree=diff.t,
            )


def _check_bb(b: TSeries, s: TSeries, total_order: int) -> None:
    lhs, rhs = bb_sides(b, s, total_order)
    diff = first_difference_uv(lhs, rhs, through=total_order)
    if diff is not None:
        raise GenerationError(
            f"bivariate product identity fails at u^{diff.u} v^{diff.v} "
            f"x^{diff.x}: {diff.lhs} vs {diff.rhs}",
            degree=diff.u + diff.v,
        )


def bb_sides(b: TSeries, s: TSeries, total_order: int) -> tuple[BiSeries, BiSeries]:
    """Both sides of the bivariate product identity (*) through a total degree."""
    bt = b.truncate(min(b.order, total_order))
    st = s.truncate(min(s.order, total_order))
    lhs = bt.subst_pm(+1) * bt.subst_pm(-1)
    b2 = bt * bt
    s2 = st * st
    rhs = b2.as_biseries("u", total_order) * b2.as_biseries("v", total_order) - s2.as_biseries(
        "u", total_order
    ) * s2.as_biseries("v", total_order)
    return lhs, rhs


# ---------------------------------------------------------------------------
# derived series


def derived_products(b: TSeries, s: TSeries) -> tuple[TSeries, TSeries, TSeries, TSeries]:
    """B^2, S^2, BS and the Wronskian BS' - B'S, all by fresh arithmetic."""
    b2 = b * b
    s2 = s * s
    bs = b * s
    wronskian = b * s.derivative() - b.derivative() * s
    return b2, s2, bs, wronskian


def exponential_pair(b: TSeries, s: TSeries) -> tuple[TSeries, TSeries, TSeries, TSeries]:
    """The exponential solutions of the two evaluation ODEs, and their halves.

    For each sign the series exp(int_0^t ((B' +- S)/B)(2s) ds) is built, and
    independently the closed form sqrt(B(2t)) * exp(+-(1/2) int_0^{2t} S/B);
    the two routes must agree exactly, otherwise generation is corrupt.
    Returns (plus, minus, half_sum, half_difference).
    """
    db = b.derivative()
    sqrt_b2t = b.scale_arg(2).sqrt()
    half_integral = (s / b).integrate().scale_arg(2) * Fraction(1, 2)
    built = []
    for sign in (1, -1):
        numerator = db + s if sign == 1 else db - s
        direct = (numerator / b).scale_arg(2).integrate().exp()
        alt = sqrt_b2t * (half_integral if sign == 1 else -half_integral).exp()
        diff = first_difference(direct, alt)
        if diff is not None:
            raise GenerationError(
                "the two closed forms of the exponential series disagree at "
                f"t^{diff.t}, x^{diff.x}",
                degree=diff.t,
            )
        built.append(direct)
    plus, minus = built
    half = Fraction(1, 2)
    return plus, minus, (plus + minus) * half, (plus - minus) * half


def odd_case_pair(b: TSeries, s: TSeries) -> tuple[TSeries, TSeries]:
    """The universal series of the odd pairing case, from their integral forms.

    ws0 = exp((1/2) int_0^{2t} (-B + S')/S) and
    ws1 = t * exp((1/2) int_0^{2t} [(B + S')/S - 2/s] ds).
    The first integrand must be regular at 0; the second must carry exactly
    the 2/s pole that the subtraction removes.
    """
    ds = s.derivative()
    regular = (ds - b) / s
    if not regular.is_zero and regular.valuation < 1:
        raise UnexpectedPoleError(
            f"(-B + S')/S should vanish at 0 but has valuation {regular.valuation}"
        )
    ws0 = (regular.integrate().scale_arg(2) * Fraction(1, 2)).exp()

    singular = (ds + b) / s
    if singular.valuation != -1 or singular.coeff(-1) != XPoly((2,)):
        raise UnexpectedPoleError(
            "(B + S')/S should have exactly the pole 2/t; got valuation "
            f"{singular.valuation} with residue {singular.coeff(-1) if singular.valuation <= -1 else 0}"
        )
    removed = singular - TSeries.monomial(2, -1, singular.order)
    if not removed.is_zero and removed.valuation < 1:
        raise UnexpectedPoleError(
            "pole subtraction left a singular or constant term "
            f"(valuation {removed.valuation})"
        )
    core = (removed.integrate().scale_arg(2) * Fraction(1, 2)).exp()
    ws1 = TSeries.t(core.order + 1) * core
    return ws0, ws1


@dataclass(frozen=True)
class BlowupSeriesSet:
    """Every universal series the engine knows how to build, at one order.

    ``b2``, ``s2``, ``bs`` and ``wronskian`` are recomputed products, never
    aliases; ``b_plus``/``b_minus`` solve the evaluation ODEs and ``b0``/
    ``btau`` are their half sum/difference; ``ws0``/``ws1`` come from the
    odd-case integral formulas.  ``content_hash`` fingerprints (b, s).
    """

    order: int
    b: TSeries
    s: TSeries
    b2: TSeries
    s2: TSeries
    bs: TSeries
    wronskian: TSeries
    b_plus: TSeries
    b_minus: TSeries
    b0: TSeries
    btau: TSeries
    ws0: TSeries
    ws1: TSeries
    content_hash: str


def series_content_hash(b: TSeries, s: TSeries) -> str:
    payload = json.dumps(
        [b.to_json(), s.to_json()], sort_keys=True, separators=(",", ":")
    )
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def assemble_set(b: TSeries, s: TSeries) -> BlowupSeriesSet:
    """Build the full derived family from a given pair (no generation checks)."""
    if b.order != s.order:
        raise ValueError("the pair must share one truncation order")
    b2, s2, bs, wronskian = derived_products(b, s)
    plus, minus, b0, btau = exponential_pair(b, s)
    ws0, ws1 = odd_case_pair(b, s)
    return BlowupSeriesSet(
        order=b.order,
        b=b,
        s=s,
        b2=b2,
        s2=s2,
        bs=bs,
        wronskian=wronskian,
        b_plus=plus,
        b_minus=minus,
        b0=b0,
        btau=btau,
        ws0=ws0,
        ws1=ws1,
        content_hash=series_content_hash(b, s),
    )


def build_series_set(order: int, *, bb_check_order: int = 16) -> BlowupSeriesSet:
    """Generate the pair at ``order`` (with checks) and derive everything."""
    b, s = generate_pair(order, bb_check_order=bb_check_order)
    return assemble_set(b, s)


@lru_cache(maxsize=8)
def series_set(order: int) -> BlowupSeriesSet:
    """Cached :func:`build_series_set` for repeated use at one order."""
    return build_series_set(order)


# ---------------------------------------------------------------------------
# golden table


def _golden_bytes() -> bytes:
    return resources.files("blowup_series").joinpath("data/golden_table.json").read_bytes()


@lru_cache(maxsize=1)
def golden_table() -> dict[str, TSeries]:
    """The embedded reference coefficient table, parsed to plain series."""
    raw = json.loads(_golden_bytes())
    return {name: TSeries.from_json(entry) for name, entry in raw.items()}


@lru_cache(maxsize=1)
def golden_table_hash() -> str:
    return hashlib.sha256(_golden_bytes()).hexdigest()


@dataclass(frozen=True)
class GoldenDiff:
    """One coefficient slot where a generated series leaves the golden table."""

    row: str
    series: str
    t: int
    x: int
    expected: Rational
    got: Rational

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "series": self.series,
            "t": self.t,
            "x": self.x,
            "expected": str(self.expected),
            "got": str(self.got),
        }


#: which generated series are measured against which golden rows
_GOLDEN_PAIRING: tuple[tuple[str, str], ...] = (
    ("B", "b"),
    ("S", "s"),
    ("B2", "b2"),
    ("S2", "s2"),
    ("WS0", "wronskian"),
    ("WS0", "ws0"),
    ("WS1", "bs"),
    ("WS1", "ws1"),
)


def golden_diff(series_set: BlowupSeriesSet) -> list[GoldenDiff]:
    """All disagreements between the set and the golden table (empty = match)."""
    table = golden_table()
    diffs: list[GoldenDiff] = []
    for row, attr in _GOLDEN_PAIRING:
        reference = table[row]
        generated: TSeries = getattr(series_set, attr)
        through = min(reference.order, generated.order)
        for n in range(min(reference.valuation, generated.valuation), through + 1):
            want = reference.coeff(n)
            have = generated.coeff(n)
            if want != have:
                for k in range(max(want.degree, have.degree) + 1):
                    if want.coeff(k) != have.coeff(k):
                        diffs.append(
                            GoldenDiff(row, attr, n, k, want.coeff(k), have.coeff(k))
                        )
    return diffs
