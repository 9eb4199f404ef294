"""Evaluation, derivative and quadrature checks against independent oracles."""

from __future__ import annotations

import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holobound import make
from holobound.errors import (
    NoConvergenceError,
    OutsideDomainError,
    SegmentExitsDomainError,
)
from holobound.numerics import (
    CAUCHY_INTEGRAL,
    CLOSED_FORM,
    cauchy_derivative,
    derivative,
    evaluate,
    segment_integral,
)


def brute_force_segment(f, a, b, nodes=20001):
    """Composite Simpson quadrature with a fixed large node count."""
    h = 1.0 / (nodes - 1)
    total = 0j
    for i in range(nodes):
        z = a + (b - a) * i * h
        w = 1.0 if i in (0, nodes - 1) else (4.0 if i % 2 == 1 else 2.0)
        total += w * f.eval(z)
    return total * (b - a) * h / 3.0


def test_evaluate_pole():
    f = make("pole", w=2)
    assert evaluate(f, 0j) == -0.5


def test_evaluate_monomial():
    f = make("monomial", power=3)
    assert evaluate(f, 1 + 1j) == (1 + 1j) ** 3 == -2 + 2j


def test_evaluate_boundary_singular_function_at_minus_one():
    # independent evaluation of (z-1)*exp((z+1)/(z-1)) at z = -1
    z = -1 + 0j
    oracle = (z - 1) * cmath.exp((z + 1) / (z - 1))
    assert oracle == -2 + 0j
    f = make("boundary-essential")
    assert abs(evaluate(f, z) - oracle) < 1e-15


def test_evaluate_outside_domain():
    f = make("pole", w=2)
    with pytest.raises(OutsideDomainError):
        evaluate(f, 2 + 0j)


def test_derivative_monomial_closed_form():
    f = make("monomial", power=4)
    res = derivative(f, 3, 2 + 0j)
    assert res.value == 48.0  # 4! * 2
    assert res.method == CLOSED_FORM
    assert res.error_estimate == 0.0


def test_derivative_order_must_be_nonneg():
    f = make("sine")
    with pytest.raises(Exception):
        derivative(f, -1, 0j)


def test_directional_exp_modulus_preserved():
    f = make("directional-exp", theta=0.37)
    rng = random.Random(7)
    for _ in range(25):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        base = abs(evaluate(f, z))
        for l in range(7):
            assert abs(abs(derivative(f, l, z).value) - base) <= 1e-9 * base


def test_cauchy_derivative_pole():
    f = make("pole", w=2)
    res = cauchy_derivative(f, 1, 0j)
    assert res.method == CAUCHY_INTEGRAL
    # closed-form oracle: d/dz (z-2)^{-1} = -(z-2)^{-2} -> -1/4 at 0
    assert abs(res.value - (-0.25)) <= res.error_estimate + 1e-12


def test_cauchy_matches_closed_forms_spot():
    rng = random.Random(11)
    for name, params in [("pole", {"w": 2j}), ("boundary-essential", {}),
                         ("directional-exp", {"theta": 1.0}),
                         ("monomial", {"power": 5}), ("sine", {})]:
        f = make(name, **params)
        for _ in range(10):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if f.singular_points and min(abs(z - s) for s in f.singular_points) < 0.1:
                continue
            for l in (0, 1, 3):
                exact = f.derivative(l).eval(z)
                got = derivative(f, l, z, force_cauchy=True).value
                assert abs(got - exact) <= max(1e-8 * abs(exact), 1e-10)


def test_derivative_linearity_via_cauchy():
    # derivative(a*f + b*g) = a*derivative(f) + b*derivative(g)
    f = make("pole", w=3)
    g = make("sine")
    a, b = 2.5, -1.25
    combo = make("sum", parts=(
        make("scalar-multiple", scalar=a, inner=f),
        make("scalar-multiple", scalar=b, inner=g)))
    for z in (0j, 1 + 1j, -0.5 - 0.25j):
        for l in (1, 2):
            lhs = derivative(combo, l, z, force_cauchy=True).value
            rhs = a * derivative(f, l, z).value + b * derivative(g, l, z).value
            assert abs(lhs - rhs) <= max(1e-8 * abs(rhs), 1e-10)


def test_segment_integral_constant():
    f = make("constant", value=1)
    assert abs(segment_integral(f, 0j, 1 + 1j) - (1 + 1j)) < 1e-12


def test_segment_integral_linear():
    f = make("scalar-multiple", scalar=2, inner=make("monomial", power=1))
    # antiderivative z^2: (1+i)^2 = 2i
    assert abs(segment_integral(f, 0j, 1 + 1j) - 2j) < 1e-11


def test_segment_integral_pole_log_oracle():
    f = make("pole", w=3)
    # principal-branch antiderivative Log(z-3): Log(-2) - Log(-3) = ln(2/3)
    oracle = cmath.log(-2 + 0j) - cmath.log(-3 + 0j)
    assert abs(oracle - math.log(2.0 / 3.0)) < 1e-15
    brute = brute_force_segment(f, 0j, 1 + 0j)
    assert abs(brute - oracle) < 1e-12
    got = segment_integral(f, 0j, 1 + 0j, tol=1e-12)
    assert abs(got - oracle) < 1e-11


def test_segment_exits_domain():
    f = make("pole", w=0.5)
    with pytest.raises(SegmentExitsDomainError):
        segment_integral(f, 0j, 1 + 0j)


@settings(max_examples=40, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.integers(0, 6))
def test_cauchy_agreement_property(x, y, l):
    f = make("sine")
    z = complex(x, y)
    exact = f.derivative(l).eval(z)
    got = derivative(f, l, z, force_cauchy=True)
    assert abs(got.value - exact) <= \
        got.error_estimate + max(1e-8 * abs(exact), 1e-10)


@settings(max_examples=50, deadline=None)
@given(st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2), st.floats(-2, 2),
       st.floats(0.05, 0.95))
def test_segment_additivity(ax, ay, cx, cy, t):
    f = make("sine")
    a = complex(ax, ay)
    c = complex(cx, cy)
    b = a + t * (c - a)
    tol = 1e-10
    whole = segment_integral(f, a, c, tol)
    split = segment_integral(f, a, b, tol) + segment_integral(f, b, c, tol)
    assert abs(whole - split) <= 2 * tol + 1e-13


def test_cauchy_no_convergence_on_rough_integrand():
    # a discontinuous "function" defeats the trapezoid rule: the node-doubling
    # differences decay like 1/N and never reach the tolerance
    class Rough:
        kind = "rough-stub"

        @property
        def analyticity(self):
            from holobound.geometry import Plane
            return Plane()

        def eval(self, z):
            return 1.0 if z.real >= 0 else -1.0

    with pytest.raises(NoConvergenceError):
        cauchy_derivative(Rough(), 1, 0j, abs_tol=1e-14, rel_tol=1e-14)
