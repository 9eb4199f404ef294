"""Domain membership, recession cones, half-lines, diameters and clipping."""

from __future__ import annotations

import cmath
import math
import random

import pytest

from holobound.errors import (
    BadParameterError,
    NoHalflineError,
    UnboundedDomainError,
)
from holobound.geometry import (
    ANTIPODAL_PAIR,
    ARC,
    EMPTY,
    FULL_CIRCLE,
    SINGLE_DIRECTION,
    Disc,
    DiscExterior,
    Halfline,
    HalflineFamily,
    HalfPlanes,
    Plane,
    RecessionCone,
    boundary_samples,
    classify,
    clip_to_disc,
    contains,
    diameter,
    distance_to_closure,
    first_quadrant,
    halfline_through,
    horizontal_strip,
    max_abs_over_closure,
    polygon_vertices,
    random_bounded_polygon,
    random_unbounded_polygon,
    real_line_rays,
    recession_cone,
    regular_polygon,
    support_value,
    unit_disc,
    unit_square,
    upper_half_plane,
)

TRIANGLE = HalfPlanes(
    (-1 + 0j, -1j, complex(1, 1) / math.sqrt(2)),
    (0.0, 0.0, 1 / math.sqrt(2)),
    complex(0.25, 0.25),
)  # vertices 0, 1, i


def test_contains_half_plane_open():
    uhp = upper_half_plane()
    assert contains(uhp, 1j)
    assert not contains(uhp, 0j)  # boundary point of an open set
    assert not contains(uhp, -1j)


def test_contains_disc_exterior():
    d = DiscExterior(0j, 1.0)
    assert contains(d, 2 + 0j)
    assert not contains(d, 0.5j)
    assert not contains(d, 1 + 0j)


def test_contains_halfline_family():
    rays = real_line_rays()
    assert contains(rays, 5.0 + 0j)
    assert contains(rays, -123.0 + 0j)
    assert not contains(rays, 1j)


def test_recession_half_plane_is_half_circle():
    cone = recession_cone(upper_half_plane())
    assert cone.shape == ARC
    assert math.degrees(cone.width) == pytest.approx(180.0, abs=1e-9)
    assert classify(cone).kind == "half_plane"


def test_recession_strip_is_antipodal_pair():
    cone = recession_cone(horizontal_strip())
    assert cone.shape == ANTIPODAL_PAIR
    dirs = sorted(cone.directions(), key=lambda h: h.real)
    assert abs(dirs[0] - (-1)) < 1e-12 and abs(dirs[1] - 1) < 1e-12
    assert classify(cone).kind == "strip_like"


def test_recession_quadrant_is_quarter_arc():
    cone = recession_cone(first_quadrant())
    label = classify(cone)
    assert label.kind == "proper_cone"
    assert label.angle_deg == pytest.approx(90.0, abs=1e-9)


def test_recession_square_is_empty():
    cone = recession_cone(unit_square())
    assert cone.shape == EMPTY
    assert classify(cone).kind == "bounded"


def test_recession_half_strip_single_direction():
    # {x > 0, 0 < y < 1}: only the +1 direction recedes
    d = HalfPlanes((-1 + 0j, -1j, 1j), (0.0, 0.0, 1.0), complex(1.0, 0.5))
    cone = recession_cone(d)
    assert cone.shape == SINGLE_DIRECTION
    assert abs(cone.directions()[0] - 1) < 1e-9
    label = classify(cone)
    assert label.kind == "proper_cone" and label.angle_deg == 0.0


def test_classify_full_circle_and_wide_arc():
    assert classify(RecessionCone(FULL_CIRCLE)).kind == "whole_plane"
    wide = RecessionCone(ARC, 0.0, math.radians(200.0))
    assert classify(wide).kind == "whole_plane"
    assert classify(recession_cone(Plane())).kind == "whole_plane"


def test_halfline_through_half_plane():
    h, r = halfline_through(upper_half_plane(), 1j)
    assert abs(h - 1j) < 1e-12
    assert r == pytest.approx(0.5)
    # dense sampling: the whole ray stays inside
    for t in [(-0.5) * (1 - 1e-9)] + [0.1 * k for k in range(200)] + [1e6]:
        assert contains(upper_half_plane(), 1j + t * h)


def test_halfline_through_strip_tie_break():
    h, r = halfline_through(horizontal_strip(), 0.5j)
    assert abs(h - 1) < 1e-12  # positive real part preferred
    assert r == pytest.approx(0.25)


def test_halfline_through_bounded_raises():
    with pytest.raises(NoHalflineError):
        halfline_through(unit_square(), complex(0.5, 0.5))


def test_halfline_through_family_and_exterior():
    rays = real_line_rays()
    h, r = halfline_through(rays, 3.0 + 0j)
    assert h == 1 + 0j and r == pytest.approx(4.0)
    d = DiscExterior(0j, 1.0)
    h, r = halfline_through(d, 3 + 0j)
    assert abs(h - 1) < 1e-12 and r == pytest.approx(1.0)


def test_diameter_fixtures():
    assert diameter(unit_disc()) == 2.0
    assert diameter(unit_square()) == pytest.approx(math.sqrt(2), abs=1e-12)
    assert diameter(TRIANGLE) == pytest.approx(math.sqrt(2), abs=1e-9)
    with pytest.raises(UnboundedDomainError):
        diameter(upper_half_plane())


def test_diameter_dominates_sampled_pairs():
    rng = random.Random(3)
    for _ in range(10):
        d = random_bounded_polygon(rng)
        diam = diameter(d)
        pts = []
        while len(pts) < 40:
            v = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            if contains(d, v):
                pts.append(v)
        for i, a in enumerate(pts):
            for b in pts[i + 1:]:
                assert abs(a - b) <= diam + 1e-12


def test_polygon_vertices_square():
    verts = sorted(polygon_vertices(unit_square()), key=lambda v: (v.real, v.imag))
    expected = [0j, 1j, 1 + 0j, 1 + 1j]
    assert len(verts) == 4
    for v, e in zip(verts, expected):
        assert abs(v - e) < 1e-9


def test_clip_nesting():
    rng = random.Random(17)
    for d in (upper_half_plane(), horizontal_strip(), first_quadrant()):
        small = clip_to_disc(d, 2)
        large = clip_to_disc(d, 3)
        for _ in range(300):
            z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
            if contains(small, z):
                assert contains(large, z)
            if contains(large, z):
                assert contains(d, z)


def test_clip_makes_half_plane_bounded():
    clipped = clip_to_disc(upper_half_plane(), 1)
    assert diameter(clipped) <= 2.0
    assert recession_cone(clipped).shape == EMPTY
    strip_clip = clip_to_disc(horizontal_strip(), 5)
    assert contains(strip_clip, 0.5j)
    assert diameter(strip_clip) <= 10.0


def test_clip_disc_cases():
    assert clip_to_disc(Disc(0j, 5.0), 2) == Disc(0j, 2.0)
    d = Disc(3 + 0j, 1.0)
    assert clip_to_disc(d, 5) == d
    clipped = clip_to_disc(Disc(3 + 0j, 1.0), 3)
    assert contains(clipped, 2.5 + 0j)
    assert not contains(clipped, 3.5 + 0j)  # outside D(0,3)


def test_clip_square_unchanged_region():
    sq = unit_square()
    clipped = clip_to_disc(sq, 10)
    rng = random.Random(4)
    for _ in range(200):
        z = complex(rng.uniform(-0.5, 1.5), rng.uniform(-0.5, 1.5))
        assert contains(sq, z) == contains(clipped, z)


def test_recession_soundness_random_domains():
    rng = random.Random(123)
    for _ in range(10):
        d = random_unbounded_polygon(rng)
        cone = recession_cone(d)
        assert cone.shape != EMPTY
        base_points = []
        while len(base_points) < 5:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            jitter = d.witness + (z - d.witness) * rng.random()
            if contains(d, jitter):
                base_points.append(jitter)
        for p in base_points:
            for h in cone.sample_directions(8):
                for t in (1.0, 10.0, 1e3, 1e6):
                    assert contains(d, p + t * h)


def test_halfline_direction_independent_of_base_point():
    rng = random.Random(31)
    for d in (horizontal_strip(), first_quadrant(),
              random_unbounded_polygon(rng)):
        pts = []
        while len(pts) < 5:
            z = d.witness + complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            if contains(d, z):
                pts.append(z)
        dirs = {halfline_through(d, p)[0] for p in pts}
        assert len(dirs) == 1


def test_distance_to_closure_polygon():
    sq = unit_square()
    assert distance_to_closure(sq, complex(0.5, 0.5)) == 0.0
    assert distance_to_closure(sq, complex(2.0, 0.5)) == pytest.approx(1.0)
    assert distance_to_closure(sq, complex(2.0, 2.0)) == \
        pytest.approx(math.sqrt(2), abs=1e-12)
    assert distance_to_closure(upper_half_plane(), -2j) == pytest.approx(2.0)
    assert distance_to_closure(Disc(0j, 1.0), 3 + 0j) == pytest.approx(2.0)
    assert distance_to_closure(DiscExterior(0j, 2.0), 0.5 + 0j) == \
        pytest.approx(1.5)


def test_distance_to_closure_matches_edge_oracle():
    # independent oracle: distance to a convex polygon is the minimum of
    # point-to-edge-segment distances (0 inside the closure)
    def seg_dist(w, a, b):
        d = b - a
        den = abs(d) ** 2
        t = max(0.0, min(1.0, ((w - a).real * d.real + (w - a).imag * d.imag)
                         / den)) if den else 0.0
        return abs(w - (a + t * d))

    rng = random.Random(7)
    for _ in range(100):
        d = random_bounded_polygon(rng)
        verts = list(polygon_vertices(d))
        centroid = sum(verts) / len(verts)
        verts.sort(key=lambda v: cmath.phase(v - centroid))
        w = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        inside = all(
            w.real * n.real + w.imag * n.imag <= c + 1e-12
            for n, c in zip(d.normals, d.offsets))
        oracle = 0.0 if inside else min(
            seg_dist(w, a, b) for a, b in zip(verts, verts[1:] + verts[:1]))
        assert distance_to_closure(d, w) == pytest.approx(oracle, abs=1e-12)


def test_support_values():
    assert support_value(upper_half_plane(), -1j) == pytest.approx(0.0)
    assert math.isinf(support_value(upper_half_plane(), 1j))
    assert support_value(horizontal_strip(), 1j) == pytest.approx(1.0)
    assert support_value(first_quadrant(), -1 + 0j) == pytest.approx(0.0)
    assert support_value(unit_square(), 1 + 0j) == pytest.approx(1.0)
    assert support_value(Disc(1 + 1j, 2.0), 1 + 0j) == pytest.approx(3.0)
    assert math.isinf(support_value(Plane(), 1 + 0j))


def test_max_abs_over_closure():
    assert max_abs_over_closure(unit_square()) == pytest.approx(math.sqrt(2))
    assert max_abs_over_closure(Disc(3 + 0j, 1.0)) == 4.0
    assert math.isinf(max_abs_over_closure(upper_half_plane()))


def test_hpoly_validation():
    with pytest.raises(BadParameterError):
        HalfPlanes((2 + 0j,), (1.0,), 0j)  # non-unit normal
    with pytest.raises(BadParameterError):
        HalfPlanes((1 + 0j,), (0.0,), 1 + 0j)  # witness not interior
    with pytest.raises(BadParameterError):
        Halfline(0j, 1 + 0j, 0.0)  # zero overshoot
    with pytest.raises(BadParameterError):
        Disc(0j, -1.0)


def test_boundary_samples_bounded_only():
    samples = boundary_samples(unit_square(), per_edge=2)
    assert len(samples) == 8
    for point, inward in samples:
        assert not contains(unit_square(), point)
        assert contains(unit_square(), point + 1e-6 * inward)
    with pytest.raises(UnboundedDomainError):
        boundary_samples(upper_half_plane())


def test_regular_polygon_contains_center():
    rng = random.Random(8)
    for _ in range(20):
        d = random_bounded_polygon(rng)
        assert contains(d, d.witness)
        assert recession_cone(d).shape == EMPTY


def test_cone_contains_direction():
    cone = recession_cone(first_quadrant())
    assert cone.contains_direction(cmath.exp(1j * math.pi / 4))
    assert cone.contains_direction(1 + 0j)
    assert not cone.contains_direction(-1 + 0j)
