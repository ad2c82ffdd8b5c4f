"""Independent oracles for the test suite.

The production generator turns the bivariate product identity into two
extracted differential relations and runs them as a linear recurrence.
The oracle here never does that: it expands the bivariate identity
directly slot by slot, treats the frontier coefficients as unknowns,
solves the resulting affine-linear equations degree by degree, and
demands that every remaining slot is consistent.  Quartic cost, so it is
only run at small orders, where it must agree with the production path.
"""
from __future__ import annotations

import math
from fractions import Fraction

from blowup_series.algebra import XPoly


def _sq_coeff(coeffs: list[XPoly], n: int) -> XPoly:
    """[t^n] of the square of the series with the given plain coefficients."""
    acc = XPoly.zero()
    for i in range(n + 1):
        a = coeffs[i] if i < len(coeffs) else XPoly.zero()
        b = coeffs[n - i] if n - i < len(coeffs) else XPoly.zero()
        if a and b:
            acc = acc + a * b
    return acc


def _lhs_slot(b: list[XPoly], a: int, c: int) -> XPoly:
    """[u^a v^c] of B(u+v) B(u-v)."""
    acc = XPoly.zero()
    d = a + c
    for n1 in range(d + 1):
        n2 = d - n1
        p1 = b[n1] if n1 < len(b) else XPoly.zero()
        p2 = b[n2] if n2 < len(b) else XPoly.zero()
        if p1.is_zero or p2.is_zero:
            continue
        weight = 0
        for a1 in range(min(a, n1) + 1):
            c1 = n1 - a1
            if c1 < 0 or c1 > c:
                continue
            a2, c2 = a - a1, c - c1
            weight += math.comb(n1, a1) * math.comb(n2, a2) * (-1) ** c2
        if weight:
            acc = acc + (p1 * p2) * weight
    return acc


def _residual_slot(b: list[XPoly], s: list[XPoly], a: int, c: int) -> XPoly:
    """[u^a v^c] of B(u+v)B(u-v) - (B^2(u)B^2(v) - S^2(u)S^2(v))."""
    rhs = _sq_coeff(b, a) * _sq_coeff(b, c) - _sq_coeff(s, a) * _sq_coeff(s, c)
    return _lhs_slot(b, a, c) - rhs


def solve_by_bivariate_identity(order: int) -> tuple[list[XPoly], list[XPoly]]:
    """Solve the bivariate product identity directly for the pair (B, S).

    Returns plain coefficient lists.  Raises AssertionError if any block is
    inconsistent or fails to pin its unknowns uniquely.
    """
    if order < 4:
        raise ValueError("the oracle needs order >= 4")
    # the block at total degree d pins b_d and s_{d-3}, so run enough
    # extra blocks that both lists genuinely cover the requested order
    top = order + 4
    b = [XPoly.zero() for _ in range(top + 1)]
    s = [XPoly.zero() for _ in range(top + 1)]
    b[0] = XPoly.one()
    s[1] = XPoly.one()
    s[3] = XPoly.x() * Fraction(-1, 6)

    for d in range(2, top):
        slots = [(a, d - a) for a in range(d + 1)]
        if d % 2 == 1:
            for a, c in slots:
                assert _residual_slot(b, s, a, c).is_zero, (
                    f"odd-degree slot (u^{a} v^{c}) should vanish by parity"
                )
            continue
        if d == 2:
            # the identity does not pin b_2; it is seed data, so this
            # block must already be consistent
            for a, c in slots:
                assert _residual_slot(b, s, a, c).is_zero, "seed block inconsistent"
            continue

        s_index = d - 3  # first odd coefficient reachable at this block
        has_s_unknown = d >= 8

        base = [_residual_slot(b, s, a, c) for a, c in slots]
        b[d] = XPoly.one()
        with_b = [_residual_slot(b, s, a, c) for a, c in slots]
        b[d] = XPoly.zero()
        alphas = [wb - r0 for wb, r0 in zip(with_b, base)]
        assert all(al.degree <= 0 for al in alphas), "b-multiplier must be rational"
        alphas = [al.coeff(0) for al in alphas]

        if has_s_unknown:
            s[s_index] = XPoly.one()
            with_s = [_residual_slot(b, s, a, c) for a, c in slots]
            s[s_index] = XPoly.zero()
            betas = [ws - r0 for ws, r0 in zip(with_s, base)]
            assert all(be.degree <= 0 for be in betas), "s-multiplier must be rational"
            betas = [be.coeff(0) for be in betas]
        else:
            betas = [Fraction(0)] * len(slots)

        if has_s_unknown:
            pivot = None
            for i in range(len(slots)):
                for j in range(i + 1, len(slots)):
                    det = alphas[i] * betas[j] - alphas[j] * betas[i]
                    if det != 0:
                        pivot = (i, j, det)
                        break
                if pivot:
                    break
            assert pivot is not None, f"block {d}: unknowns are not pinned uniquely"
            i, j, det = pivot
            b_val = (base[i] * (-betas[j]) + base[j] * betas[i]) * (Fraction(1) / det)
            s_val = (base[i] * alphas[j] + base[j] * (-alphas[i])) * (Fraction(1) / det)
            b[d] = b_val
            s[s_index] = s_val
        else:
            i = next(k for k, al in enumerate(alphas) if al != 0)
            b[d] = base[i] * (Fraction(-1) / alphas[i])

        for (a, c) in slots:
            assert _residual_slot(b, s, a, c).is_zero, (
                f"block {d}: slot (u^{a} v^{c}) inconsistent after the solve"
            )

    return b[: order + 1], s[: order + 1]
