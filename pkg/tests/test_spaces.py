"""Order-set algebra, membership evidence, primitives, chained bounds."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holobound import closed_form_sup, make, segment_integral
from holobound.errors import (
    BadParameterError,
    OrderViolationError,
    SupInfiniteError,
    UnboundedDomainError,
    UnboundedInputError,
)
from holobound.geometry import (
    Disc,
    contains,
    horizontal_strip,
    real_line_rays,
    unit_disc,
    unit_square,
    upper_half_plane,
)
from holobound.spaces import (
    A_SPACE,
    EVIDENCE_MEMBER,
    H_INF,
    WITNESS_NON_MEMBER,
    OrderSet,
    chain_bound,
    gap_check_bounded,
    gap_check_halflines,
    membership_verdict,
    primitive,
)

# ---------------------------------------------------------------------------
# order sets
# ---------------------------------------------------------------------------


def test_filled_examples():
    assert OrderSet((0, 3)).filled().elements == (0, 1, 2, 3)
    assert OrderSet((2, 5, 7)).filled().elements == (2, 3, 4, 5, 6, 7)
    assert OrderSet((1,)).filled().elements == (1,)


def test_filled_from_zero_examples():
    assert OrderSet((1,)).filled_from_zero().elements == (0, 1)
    assert OrderSet((0,)).filled_from_zero().elements == (0,)
    assert OrderSet((2, 5)).filled_from_zero().elements == (0, 1, 2, 3, 4, 5)


def test_filled_from_zero_requires_finite_sup():
    with pytest.raises(SupInfiniteError):
        OrderSet((1,), sup_infinite=True).filled_from_zero()


def test_order_set_validation_and_normalization():
    assert OrderSet((3, 1, 1, 2)).elements == (1, 2, 3)
    with pytest.raises(BadParameterError):
        OrderSet(())
    with pytest.raises(BadParameterError):
        OrderSet((-1, 2))


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(0, 12), min_size=1, max_size=8))
def test_fill_algebra_properties(raw):
    f = OrderSet(tuple(raw))
    filled = f.filled()
    filled0 = f.filled_from_zero()
    # idempotence and inclusion chain, as exact set identities
    assert filled.filled().elements == filled.elements
    assert filled0.filled_from_zero().elements == filled0.elements
    assert set(f.elements) <= set(filled.elements) <= set(filled0.elements)
    assert filled.minimum == f.minimum and filled.supremum == f.supremum
    assert filled0.minimum == 0 and filled0.supremum == f.supremum


# ---------------------------------------------------------------------------
# membership evidence
# ---------------------------------------------------------------------------


def test_membership_pole_on_square_all_member():
    verdict = membership_verdict(make("pole", w=3), OrderSet((0, 1, 2)),
                                 unit_square())
    assert verdict.all_member()
    assert len(verdict.entries) == 6


def test_membership_boundary_singular_on_disc():
    verdict = membership_verdict(make("boundary-essential"), OrderSet((0, 1)),
                                 unit_disc())
    assert verdict.entry(0, H_INF).status == EVIDENCE_MEMBER
    assert verdict.entry(0, A_SPACE).status == EVIDENCE_MEMBER
    e1 = verdict.entry(1, H_INF)
    assert e1.status == WITNESS_NON_MEMBER
    assert e1.witness is not None and e1.witness.moduli[-1] >= 1e3
    ea = verdict.entry(1, A_SPACE)
    assert ea.status == WITNESS_NON_MEMBER
    assert ea.oscillation is not None and not ea.oscillation.decayed


def test_membership_monomial_on_half_plane():
    # derivative of order l is unbounded, but extends continuously to the
    # closure of every clipped piece
    verdict = membership_verdict(make("monomial", power=2), OrderSet((1,)),
                                 upper_half_plane(), threshold=1e3)
    assert verdict.entry(1, H_INF).status == WITNESS_NON_MEMBER
    assert verdict.entry(1, A_SPACE).status == EVIDENCE_MEMBER


def test_membership_monotone_under_subsets():
    f = make("pole", w=3)
    big = membership_verdict(f, OrderSet((0, 1, 2)), unit_square())
    small = membership_verdict(f, OrderSet((0, 2)), unit_square())
    assert big.all_member()
    assert small.all_member()
    for entry in small.entries:
        assert big.entry(entry.order, entry.space).status == entry.status


def test_membership_sine_on_ray_family():
    verdict = membership_verdict(make("sine"), OrderSet((0, 1)),
                                 real_line_rays())
    assert verdict.all_member()


def test_membership_requires_finite_set():
    with pytest.raises(SupInfiniteError):
        membership_verdict(make("sine"), OrderSet((0,), sup_infinite=True),
                           unit_disc())


# ---------------------------------------------------------------------------
# primitives
# ---------------------------------------------------------------------------


def test_primitive_of_one_is_identity():
    f = make("constant", value=1)
    for z in (0.3 + 0.1j, -0.5j, 0.7 + 0.2j):
        assert abs(primitive(f, 0j, z, unit_disc()) - z) < 1e-11


def test_primitive_of_linear_function():
    f = make("scalar-multiple", scalar=2, inner=make("monomial", power=1))
    got = primitive(f, 0j, 1 + 1j, Disc(0j, 2.0))
    assert abs(got - 2j) < 1e-10


def test_primitive_two_leg_path_equality():
    # independent quadrature along both paths agrees on convex domains
    d = Disc(0j, 2.0)
    cases = [make("pole", w=3), make("sine"), make("monomial", power=4)]
    a, b, c = -1 + 0.2j, 0.5j, 1.2 - 0.3j
    for f in cases:
        direct = primitive(f, a, c, d, tol=1e-12)
        two_leg = primitive(f, a, b, d, tol=1e-12) + \
            segment_integral(f, b, c, tol=1e-12)
        assert abs(direct - two_leg) <= 1e-9


def test_primitive_lipschitz_certificate():
    rng = random.Random(42)
    fixtures = [
        (make("pole", w=3), unit_disc(), closed_form_sup(make("pole", w=3), 0,
                                                         unit_disc())),
        (make("monomial", power=2), unit_square(),
         closed_form_sup(make("monomial", power=2), 0, unit_square())),
    ]
    for f, d, sup in fixtures:
        assert sup is not None and math.isfinite(sup)
        anchor = d.interior_point()
        for _ in range(1000):
            z1 = _sample(rng, d)
            z2 = _sample(rng, d)
            p1 = primitive(f, anchor, z1, d, tol=1e-12)
            p2 = primitive(f, anchor, z2, d, tol=1e-12)
            assert abs(p1 - p2) <= sup * abs(z1 - z2) * (1 + 1e-6) + 1e-10


def _sample(rng, d):
    while True:
        z = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        if contains(d, z):
            return z


def test_primitive_validates_inputs():
    f = make("sine")
    with pytest.raises(BadParameterError):
        primitive(f, 0j, 5 + 5j, unit_disc())
    with pytest.raises(BadParameterError):
        primitive(f, 0j, 0.5j, real_line_rays())


# ---------------------------------------------------------------------------
# chained bound
# ---------------------------------------------------------------------------


def test_chain_bound_worked_square_fixture():
    res = chain_bound(make("monomial", power=2), 0, 2, unit_square(),
                      z_o=complex(0.5, 0.5))
    assert res.passed
    assert res.lhs == pytest.approx(2.0, rel=0.01)
    assert res.rhs == pytest.approx(6.5, rel=1e-9)
    assert res.rhs_source == "closed_form"


def test_chain_bound_constant_equality():
    res = chain_bound(make("constant", value=3 - 4j), 0, 1, unit_square())
    assert res.passed
    assert res.lhs == pytest.approx(5.0, rel=1e-12)
    assert res.rhs == pytest.approx(5.0, rel=1e-12)


def test_chain_bound_pole_on_disc():
    res = chain_bound(make("pole", w=3), 0, 1, unit_disc(), z_o=0j)
    assert res.passed
    assert res.lhs == pytest.approx(0.5, rel=0.01)
    assert res.rhs == pytest.approx(5.0 / 6.0, rel=1e-9)


def test_chain_bound_requires_bounded_convex():
    with pytest.raises(UnboundedDomainError):
        chain_bound(make("sine"), 0, 1, upper_half_plane())
    with pytest.raises(OrderViolationError):
        chain_bound(make("sine"), 2, 2, unit_disc())


# ---------------------------------------------------------------------------
# gap checks
# ---------------------------------------------------------------------------


def test_gap_check_halflines_pole():
    report = gap_check_halflines(make("pole", w=-2j), OrderSet((0, 2)),
                                 upper_half_plane())
    assert report.passed
    assert report.checked_orders == (1,)
    rec = report.records[0]
    assert rec.lhs == pytest.approx(0.25)
    assert rec.rhs == pytest.approx(math.sqrt(2) * 0.5, rel=1e-9)


def test_gap_check_halflines_sine_on_rays():
    report = gap_check_halflines(make("sine"), OrderSet((0, 4)),
                                 real_line_rays())
    assert report.passed
    assert report.checked_orders == (1, 2, 3)
    for rec in report.records:
        assert rec.sups == (1.0, 1.0, 1.0)


def test_gap_check_halflines_constant_on_strip():
    report = gap_check_halflines(make("constant", value=2), OrderSet((0, 5)),
                                 horizontal_strip())
    assert report.passed
    for rec in report.records:
        assert rec.lhs == 0.0


def test_gap_check_halflines_rejects_diverging_orders():
    with pytest.raises(UnboundedInputError):
        gap_check_halflines(make("monomial", power=3), OrderSet((0, 2)),
                            upper_half_plane())


def test_gap_check_halflines_no_gap_is_vacuous():
    report = gap_check_halflines(make("pole", w=-2j), OrderSet((0, 1)),
                                 upper_half_plane())
    assert report.passed
    assert report.checked_orders == ()


def test_gap_check_bounded_pole():
    report = gap_check_bounded(make("pole", w=3), OrderSet((1,)), unit_disc())
    assert report.passed
    assert report.checked_orders == (0,)


def test_gap_check_bounded_vacuous():
    report = gap_check_bounded(make("boundary-essential"), OrderSet((0,)),
                               unit_disc())
    assert report.passed
    assert report.checked_orders == ()


def test_gap_check_bounded_monomial_with_dense_oracle():
    report = gap_check_bounded(make("monomial", power=4), OrderSet((2,)),
                               unit_square())
    assert report.passed
    assert report.checked_orders == (0, 1)
    # dense closure sampling gives the true sups the probe should approach
    oracle = {0: _dense_square_sup(lambda z: z ** 4),
              1: _dense_square_sup(lambda z: 4 * z ** 3)}
    for rec in report.records:
        assert rec.lhs <= oracle[rec.order_low] + 1e-9
        assert rec.lhs >= 0.95 * oracle[rec.order_low]


def _dense_square_sup(func, n=241):
    best = 0.0
    for i in range(n):
        for j in range(n):
            z = complex(i / (n - 1), j / (n - 1))
            best = max(best, abs(func(z)))
    return best
