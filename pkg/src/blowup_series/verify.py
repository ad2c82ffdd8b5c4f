"""The identity suite: every series identity the engine can certify.

Each identity is checked by expanding both sides exactly to a finite
truncation order and comparing coefficient by coefficient, so a passing
report certifies the identity *through that order only*.  The univariate
equalities between the integral-formula series and the plain products
(b0 = B^2 and friends), the evaluation ODE, the bivariate product
identities and the hyperbolic/trigonometric degenerations are all
theorems about evaluated invariants; as statements between the raw series
they remain conjectural, and their reports say so.  Only the golden-table
and coefficient-relation checks certify transcribed reference data.

Reports carry a hash of the generated pair so a certificate is tied to the
series it was computed from, and a wall-clock duration in milliseconds.
Identity content never depends on the execution schedule, so running the
catalog with any number of worker threads yields identical reports up to
the timing fields.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import XPoly
from .blowup import BlowupSeriesSet, GenerationError, bb_sides, build_series_set, golden_diff
from .series import (
    SeriesError,
    TMismatch,
    TSeries,
    UVMismatch,
    cos_series,
    cosh_series,
    exp_t_squared,
    first_difference,
    first_difference_uv,
    sin_series,
    sinh_series,
)

STATUS_CONJECTURAL = "conjectural (series level)"
STATUS_APPENDIX = "appendix data"

UNIVARIATE = "univariate"
BIVARIATE = "bivariate"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check at one truncation order."""

    identity: str
    order: int
    passed: bool
    first_mismatch: "TMismatch | UVMismatch | None"
    series_hash: str
    ms: float
    status: str
    error: "str | None" = None

    def to_json(self) -> dict:
        data = {
            "identity": self.identity,
            "order": self.order,
            "pass": self.passed,
            "first_mismatch": None if self.first_mismatch is None else self.first_mismatch.to_json(),
            "series_hash": self.series_hash,
            "ms": self.ms,
            "status": self.status,
        }
        if self.error is not None:
            data["error"] = self.error
        return data


def _timed(
    identity: str,
    status: str,
    order: int,
    series_hash: str,
    check: Callable[[], "TMismatch | UVMismatch | None"],
) -> VerificationReport:
    start = time.perf_counter()
    error = None
    try:
        mismatch = check()
    except (SeriesError, GenerationError, ZeroDivisionError) as exc:
        mismatch = None
        error = f"{type(exc).__name__}: {exc}"
    ms = (time.perf_counter() - start) * 1000.0
    passed = mismatch is None and error is None
    return VerificationReport(identity, order, passed, mismatch, series_hash, ms, status, error)


# ---------------------------------------------------------------------------
# individual identity checks


def verify_frak_identities(series_set: BlowupSeriesSet, order: int) -> list[VerificationReport]:
    """The four equalities between integral-formula series and plain products."""
    pairs = (
        ("b0_equals_b2", series_set.b0, series_set.b2),
        ("btau_equals_s2", series_set.btau, series_set.s2),
        ("ws0_equals_wronskian", series_set.ws0, series_set.wronskian),
        ("ws1_equals_bs", series_set.ws1, series_set.bs),
    )
    return [
        _timed(
            name,
            STATUS_CONJECTURAL,
            order,
            series_set.content_hash,
            lambda lhs=lhs, rhs=rhs: first_difference(lhs, rhs, through=order),
        )
        for name, lhs, rhs in pairs
    ]


def _pm_ode_mismatch(series_set: BlowupSeriesSet, sign: int, order: int) -> "TMismatch | None":
    combo = series_set.b2 + series_set.s2 if sign == 1 else series_set.b2 - series_set.s2
    lhs = combo.derivative()
    numerator = series_set.b.derivative() + (series_set.s if sign == 1 else -series_set.s)
    rhs = (numerator / series_set.b).scale_arg(2) * combo
    return first_difference(lhs, rhs, through=order)


def verify_pm_ode(series_set: BlowupSeriesSet, order: int) -> list[VerificationReport]:
    """d/dt (B^2 +- S^2) = ((B' +- S)/B)(2t) * (B^2 +- S^2), before evaluation."""
    return [
        _timed(
            f"pm_ode_{label}",
            STATUS_CONJECTURAL,
            order,
            series_set.content_hash,
            lambda sign=sign: _pm_ode_mismatch(series_set, sign, order),
        )
        for label, sign in (("plus", 1), ("minus", -1))
    ]


def verify_bb_diagonal(series_set: BlowupSeriesSet, order: int) -> VerificationReport:
    """The u = v specialisation of the product identity: B(2t) = B^4 - S^4."""

    def check() -> "TMismatch | None":
        lhs = series_set.b.scale_arg(2)
        rhs = series_set.b2 * series_set.b2 - series_set.s2 * series_set.s2
        return first_difference(lhs, rhs, through=order)

    return _timed("bb_diagonal", STATUS_CONJECTURAL, order, series_set.content_hash, check)


def verify_bb(
    series_set: BlowupSeriesSet, total_order: int, diagonal_order: "int | None" = None
) -> VerificationReport:
    """The bivariate product identity, with the diagonal as a fast pre-check."""

    def check() -> "TMismatch | UVMismatch | None":
        diag_through = series_set.order if diagonal_order is None else diagonal_order
        diag = verify_bb_diagonal(series_set, diag_through)
        if not diag.passed:
            return diag.first_mismatch
        lhs, rhs = bb_sides(series_set.b, series_set.s, total_order)
        return first_difference_uv(lhs, rhs, through=total_order)

    return _timed("bb", STATUS_CONJECTURAL, total_order, series_set.content_hash, check)


def verify_bbb(series_set: BlowupSeriesSet, total_order: int) -> VerificationReport:
    """The triple-product identity relating S(u)S(v)S(u+v) to derivatives of B."""

    def check() -> "UVMismatch | None":
        m = total_order
        b = series_set.b.truncate(m)
        s = series_set.s.truncate(m)
        db = series_set.b.derivative().truncate(m)
        b_u, b_v = b.as_biseries("u", m), b.as_biseries("v", m)
        db_u, db_v = db.as_biseries("u", m), db.as_biseries("v", m)
        b_uv = b.subst_pm(+1)
        lhs = s.as_biseries("u", m) * s.as_biseries("v", m) * s.subst_pm(+1)
        rhs = db_u * b_v * b_uv + b_u * db_v * b_uv - b_u * b_v * db.subst_pm(+1)
        return first_difference_uv(lhs, rhs, through=m)

    return _timed("bbb", STATUS_CONJECTURAL, total_order, series_set.content_hash, check)


def _degeneration_references(point: int, order: int) -> dict[str, TSeries]:
    if point == 2:
        envelope = exp_t_squared(-1, order)
        c, s = cosh_series(order), sinh_series(order)
        double = sinh_series(order).scale_arg(2) * Fraction(1, 2)
    elif point == -2:
        envelope = exp_t_squared(1, order)
        c, s = cos_series(order), sin_series(order)
        double = sin_series(order).scale_arg(2) * Fraction(1, 2)
    else:
        raise ValueError("degeneration point must be 2 or -2")
    return {
        "b2": envelope * c * c,
        "s2": envelope * s * s,
        "wronskian": envelope,
        "bs": envelope * double,
    }


def verify_simple_type_degeneration(
    series_set: BlowupSeriesSet, order: int, point: int = 2
) -> list[VerificationReport]:
    """Substituting x -> +-2 collapses the series to closed hyperbolic or
    trigonometric forms; all four named series are compared exactly."""
    refs = _degeneration_references(point, order)
    tag = "x2" if point == 2 else "xneg2"
    reports = []
    for attr in ("b2", "s2", "wronskian", "bs"):
        series: TSeries = getattr(series_set, attr)
        reports.append(
            _timed(
                f"degeneration_{tag}_{attr}",
                STATUS_CONJECTURAL,
                order,
                series_set.content_hash,
                lambda series=series, ref=refs[attr]: first_difference(
                    series.eval_x(point), ref, through=order
                ),
            )
        )
    return reports


_RELATION_FACTS: tuple[tuple[str, int, XPoly], ...] = (
    ("b2", 2, XPoly.zero()),
    ("s2", 2, XPoly((2,))),
    ("b2", 4, XPoly((-4,))),
    ("s2", 4, XPoly.x() * -8),
)


def verify_relations_coefficients(series_set: BlowupSeriesSet) -> VerificationReport:
    """The four low-order table coefficients that drive the two classical
    evaluation relations on tau^2 and tau^4."""

    def check() -> "TMismatch | None":
        for attr, n, expected in _RELATION_FACTS:
            got = getattr(series_set, attr).coeff(n, normalized=True)
            if got != expected:
                for k in range(max(got.degree, expected.degree) + 1):
                    if got.coeff(k) != expected.coeff(k):
                        return TMismatch(n, k, got.coeff(k), expected.coeff(k))
        return None

    return _timed("relations_coefficients", STATUS_APPENDIX, 4, series_set.content_hash, check)


def golden_check(series_set: BlowupSeriesSet) -> VerificationReport:
    """Exact comparison of the whole set against the embedded golden table."""
    if series_set.order < 16:
        raise SeriesError("the golden table reaches t^16; build the set at order >= 16")

    def check() -> "TMismatch | None":
        diffs = golden_diff(series_set)
        if diffs:
            d = diffs[0]
            return TMismatch(d.t, d.x, d.got, d.expected)
        return None

    return _timed(
        "golden_table", STATUS_APPENDIX, min(series_set.order, 16), series_set.content_hash, check
    )


# ---------------------------------------------------------------------------
# the catalog


@dataclass(frozen=True)
class IdentityDescriptor:
    """One catalog entry: a deterministic recipe for an identity check."""

    id: str
    arity: str
    status: str
    max_feasible_order_hint: int
    run: Callable[[BlowupSeriesSet, int], VerificationReport]


def _single(reports: Sequence[VerificationReport], identity: str) -> VerificationReport:
    for report in reports:
        if report.identity == identity:
            return report
    raise KeyError(identity)


def _make_catalog() -> tuple[IdentityDescriptor, ...]:
    entries: list[IdentityDescriptor] = []

    def add(identity: str, arity: str, status: str, hint: int, run) -> None:
        entries.append(IdentityDescriptor(identity, arity, status, hint, run))

    for name in ("b0_equals_b2", "btau_equals_s2", "ws0_equals_wronskian", "ws1_equals_bs"):
        add(
            name,
            UNIVARIATE,
            STATUS_CONJECTURAL,
            128,
            lambda st, order, name=name: _single(verify_frak_identities(st, order), name),
        )
    for name in ("pm_ode_plus", "pm_ode_minus"):
        add(
            name,
            UNIVARIATE,
            STATUS_CONJECTURAL,
            128,
            lambda st, order, name=name: _single(verify_pm_ode(st, order), name),
        )
    add("bb_diagonal", UNIVARIATE, STATUS_CONJECTURAL, 128, verify_bb_diagonal)
    add("bb", BIVARIATE, STATUS_CONJECTURAL, 24, lambda st, order: verify_bb(st, order))
    add("bbb", BIVARIATE, STATUS_CONJECTURAL, 24, verify_bbb)
    for point, tag in ((2, "x2"), (-2, "xneg2")):
        for attr in ("b2", "s2", "wronskian", "bs"):
            name = f"degeneration_{tag}_{attr}"
            add(
                name,
                UNIVARIATE,
                STATUS_CONJECTURAL,
                128,
                lambda st, order, name=name, point=point: _single(
                    verify_simple_type_degeneration(st, order, point), name
                ),
            )
    add(
        "relations_coefficients",
        UNIVARIATE,
        STATUS_APPENDIX,
        128,
        lambda st, order: verify_relations_coefficients(st),
    )
    return tuple(entries)


CATALOG: tuple[IdentityDescriptor, ...] = _make_catalog()

CATALOG_IDS: tuple[str, ...] = tuple(d.id for d in CATALOG)


def run_catalog(
    series_set: BlowupSeriesSet,
    order: int,
    *,
    bivariate_order: int = 16,
    jobs: int = 1,
    identities: "Iterable[str] | None" = None,
) -> list[VerificationReport]:
    """Run catalog identities over an existing set, in fixed catalog order.

    Univariate identities run through ``order``, bivariate ones through
    ``min(bivariate_order, order)``; both are capped by each entry's
    feasibility hint.  With ``jobs`` > 1 the independent checks execute on
    a thread pool; the report list is aggregated in catalog order either
    way.
    """
    selected = list(CATALOG)
    if identities is not None:
        wanted = list(identities)
        unknown = sorted(set(wanted) - set(CATALOG_IDS))
        if unknown:
            raise ValueError(f"unknown identity ids: {', '.join(unknown)}")
        selected = [d for d in CATALOG if d.id in wanted]

    def order_for(descriptor: IdentityDescriptor) -> int:
        n = order if descriptor.arity == UNIVARIATE else min(bivariate_order, order)
        return min(n, descriptor.max_feasible_order_hint)

    if jobs <= 1:
        return [d.run(series_set, order_for(d)) for d in selected]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(d.run, series_set, order_for(d)) for d in selected]
        return [f.result() for f in futures]


def verify_all(
    order: int,
    jobs: int = 1,
    *,
    bivariate_order: int = 16,
    identities: "Iterable[str] | None" = None,
) -> list[VerificationReport]:
    """Regenerate the pair at ``order`` and run the whole catalog.

    The set is built one order above the request so that every check that
    loses an order to differentiation still genuinely reaches ``order``.
    Generation failures propagate as :class:`GenerationError`.
    """
    if order < 8:
        raise ValueError(f"verification needs order >= 8, got {order}")
    series_set = build_series_set(order + 1)
    return run_catalog(
        series_set,
        order,
        bivariate_order=bivariate_order,
        jobs=jobs,
        identities=identities,
    )
