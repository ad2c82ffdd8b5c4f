import json
from fractions import Fraction as F

import pytest

from blowup_series.algebra import XPoly
from blowup_series.blowup import assemble_set, generate_pair
from blowup_series.series import SeriesError, TSeries
from blowup_series.verify import (
    CATALOG,
    CATALOG_IDS,
    STATUS_APPENDIX,
    STATUS_CONJECTURAL,
    golden_check,
    run_catalog,
    verify_all,
    verify_bb,
    verify_bb_diagonal,
    verify_bbb,
    verify_frak_identities,
    verify_pm_ode,
    verify_relations_coefficients,
    verify_simple_type_degeneration,
)


def _mutated_set(base_order=12, exponent=4, delta=F(1, 24)):
    """A series set whose even series is perturbed at one t-slot."""
    b, s = generate_pair(base_order)
    bad_b = b + TSeries.monomial(delta, exponent, b.order)
    return assemble_set(bad_b, s)


class TestCatalogShape:
    def test_fixed_catalog_order(self):
        assert CATALOG_IDS == (
            "b0_equals_b2",
            "btau_equals_s2",
            "ws0_equals_wronskian",
            "ws1_equals_bs",
            "pm_ode_plus",
            "pm_ode_minus",
            "bb_diagonal",
            "bb",
            "bbb",
            "degeneration_x2_b2",
            "degeneration_x2_s2",
            "degeneration_x2_wronskian",
            "degeneration_x2_bs",
            "degeneration_xneg2_b2",
            "degeneration_xneg2_s2",
            "degeneration_xneg2_wronskian",
            "degeneration_xneg2_bs",
            "relations_coefficients",
        )

    def test_statuses(self):
        by_id = {d.id: d for d in CATALOG}
        assert by_id["bb"].status == STATUS_CONJECTURAL
        assert by_id["relations_coefficients"].status == STATUS_APPENDIX
        assert by_id["bb"].arity == "bivariate"
        assert by_id["pm_ode_plus"].arity == "univariate"


class TestFrakIdentities:
    def test_pass_at_low_order(self, set17):
        reports = verify_frak_identities(set17, 16)
        assert [r.identity for r in reports] == [
            "b0_equals_b2",
            "btau_equals_s2",
            "ws0_equals_wronskian",
            "ws1_equals_bs",
        ]
        assert all(r.passed for r in reports)

    def test_both_routes_share_the_order4_value(self, set17):
        assert set17.b0.coeff(4, normalized=True) == XPoly((-4,))
        assert set17.b2.coeff(4, normalized=True) == XPoly((-4,))

    def test_corrupted_coefficient_is_reported_with_both_values(self):
        bad = _mutated_set(exponent=4, delta=F(1, 24))  # t^4 slot becomes -3/24
        reports = verify_frak_identities(bad, 8)
        failed = [r for r in reports if not r.passed]
        assert failed, "a corrupted even series must break at least one equality"
        report = failed[0]
        assert report.first_mismatch is not None
        assert report.first_mismatch.t == 4
        assert report.first_mismatch.lhs != report.first_mismatch.rhs

    def test_requested_order_beyond_the_data_fails_honestly(self, set17):
        # the wronskian loses one order to differentiation, so a request at
        # the raw truncation order is unprovable and reported as failed
        reports = verify_frak_identities(set17, 17)
        by_id = {r.identity: r for r in reports}
        report = by_id["ws0_equals_wronskian"]
        assert not report.passed and report.error is not None


class TestOdeAndBivariate:
    def test_pm_ode_passes(self, set17):
        reports = verify_pm_ode(set17, 14)
        assert [r.identity for r in reports] == ["pm_ode_plus", "pm_ode_minus"]
        assert all(r.passed for r in reports)

    def test_bb_diagonal_passes(self, set17):
        assert verify_bb_diagonal(set17, 16).passed

    def test_bb_and_bbb_pass(self, set17):
        assert verify_bb(set17, 8).passed
        assert verify_bbb(set17, 8).passed

    def test_bbb_low_order_slot_value(self, set17):
        """Lowest block of the triple-product identity: both sides reduce to
        u^2 v + u v^2, so the (2,1) slot carries coefficient 1."""
        m = 6
        s = set17.s.truncate(m)
        lhs = s.as_biseries("u", m) * s.as_biseries("v", m) * s.subst_pm(+1)
        assert lhs.coeff(2, 1) == XPoly.one()
        db = set17.b.derivative().truncate(m)
        b = set17.b.truncate(m)
        rhs = (
            db.as_biseries("u", m) * b.as_biseries("v", m) * b.subst_pm(+1)
            + b.as_biseries("u", m) * db.as_biseries("v", m) * b.subst_pm(+1)
            - b.as_biseries("u", m) * b.as_biseries("v", m) * db.subst_pm(+1)
        )
        assert rhs.coeff(2, 1) == XPoly.one()

    def test_bb_catches_mutations(self):
        bad = _mutated_set(exponent=8, delta=1)
        assert not verify_bb(bad, 8).passed


class TestDegenerations:
    def test_hyperbolic_point(self, set17):
        reports = verify_simple_type_degeneration(set17, 14, point=2)
        assert all(r.passed for r in reports)
        assert [r.identity for r in reports] == [
            "degeneration_x2_b2",
            "degeneration_x2_s2",
            "degeneration_x2_wronskian",
            "degeneration_x2_bs",
        ]

    def test_trigonometric_mirror(self, set17):
        reports = verify_simple_type_degeneration(set17, 12, point=-2)
        assert all(r.passed for r in reports)

    def test_frozen_low_order_values(self, set17):
        """B^2 at x = 2 is exp(-t^2) cosh^2 t = 1 - t^4/6 + (2/45) t^6 + ..."""
        sub = set17.b2.eval_x(2)
        assert sub.coeff(2).is_zero
        assert sub.coeff(4) == XPoly((F(-1, 6),))
        assert sub.coeff(6) == XPoly((F(2, 45),))
        # the Wronskian row at t^4/4! evaluates to 12 at x = 2, matching exp(-t^2)
        assert set17.wronskian.coeff(4, normalized=True).eval_at(2) == 12

    def test_bad_point_rejected(self, set17):
        with pytest.raises(ValueError):
            verify_simple_type_degeneration(set17, 8, point=3)


class TestRelationsAndGolden:
    def test_relation_coefficients(self, set17):
        report = verify_relations_coefficients(set17)
        assert report.passed and report.status == STATUS_APPENDIX
        assert set17.b2.coeff(2, normalized=True).is_zero
        assert set17.s2.coeff(2, normalized=True) == XPoly((2,))
        assert set17.b2.coeff(4, normalized=True) == XPoly((-4,))
        assert set17.s2.coeff(4, normalized=True) == XPoly.x() * -8

    def test_golden_check(self, set17):
        report = golden_check(set17)
        assert report.passed and report.identity == "golden_table"

    def test_golden_check_needs_full_table_coverage(self):
        small = assemble_set(*generate_pair(12))
        with pytest.raises(SeriesError):
            golden_check(small)


class TestRunCatalogAndVerifyAll:
    def test_minimum_order(self):
        with pytest.raises(ValueError):
            verify_all(4)

    def test_reports_in_catalog_order(self, set17):
        reports = run_catalog(set17, 12, bivariate_order=8)
        assert [r.identity for r in reports] == list(CATALOG_IDS)
        assert all(r.passed for r in reports)
        assert all(r.series_hash == set17.content_hash for r in reports)

    def test_identity_filter(self, set17):
        reports = run_catalog(set17, 10, identities=["bb_diagonal", "b0_equals_b2"])
        assert [r.identity for r in reports] == ["b0_equals_b2", "bb_diagonal"]
        with pytest.raises(ValueError):
            run_catalog(set17, 10, identities=["nope"])

    def test_jobs_do_not_change_content(self):
        serial = verify_all(8, jobs=1, bivariate_order=8)
        threaded = verify_all(8, jobs=4, bivariate_order=8)

        def strip(reports):
            out = []
            for r in reports:
                d = r.to_json()
                d.pop("ms")
                out.append(d)
            return out

        assert strip(serial) == strip(threaded)

    def test_monotonicity(self, set17):
        """An identity passing at an order passes at every lower order."""
        for order in (14, 10, 8):
            assert all(r.passed for r in verify_frak_identities(set17, order))

    def test_report_json_schema(self, set17):
        report = run_catalog(set17, 8, identities=["bb"])[0]
        data = report.to_json()
        assert set(data) == {
            "identity",
            "order",
            "pass",
            "first_mismatch",
            "series_hash",
            "ms",
            "status",
        }
        text = json.dumps(data)
        assert json.loads(text)["pass"] is True

    def test_mismatch_json_for_corrupted_set(self):
        bad = _mutated_set(exponent=4)
        report = run_catalog(bad, 8, identities=["b0_equals_b2"])[0]
        data = report.to_json()
        assert data["pass"] is False
        assert set(data["first_mismatch"]) == {"t", "x", "lhs", "rhs"}

    def test_out_of_range_order_becomes_failed_report_with_error(self):
        st = assemble_set(*generate_pair(10))
        # differentiation costs one order, so order-10 data cannot certify
        # the ode at order 10; the runner records that as a failed report
        reports = verify_pm_ode(st, 10)
        assert all(not r.passed and r.error for r in reports)
        assert all("error" in r.to_json() for r in reports)
        # while at order 9 the same set passes cleanly
        assert all(r.passed for r in verify_pm_ode(st, 9))
