"""Planar domains with exact membership and recession-direction geometry.

Domains are open subsets of the plane, stored with enough structure that
membership is a handful of exact inequality evaluations:

* ``Disc`` -- open disc.
* ``HalfPlanes`` -- finite intersection of open half-planes ``<z, n_i> < c_i``
  with unit normals; convex, possibly unbounded.  A stored witness point
  certifies that the interior is non-empty.
* ``DiscExterior`` -- complement of a closed disc; with ``radius == 0`` this
  is the punctured plane, which is how analyticity regions of functions with
  one singular point are stored.
* ``HalflineFamily`` -- an explicit finite union of open half-lines, used to
  probe functions along rays (e.g. the real axis).
* ``Plane`` -- the whole plane.

For an unbounded ``HalfPlanes`` domain the set of unit recession directions
(directions ``h`` with ``<h, n_i> <= 0`` for every constraint) is computed
exactly from the normals; it is a single closed arc of width at most 180
degrees, an antipodal direction pair (strips), a single direction
(half-strips) or empty (bounded domains).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    BadParameterError,
    NoHalflineError,
    OutsideDomainError,
    UnboundedDomainError,
)

TWO_PI = 2.0 * math.pi

# Absolute tolerances: domain data is expected at user scale (~1).
UNIT_TOL = 1e-12
ANGLE_TOL = 1e-12
VERTEX_TOL = 1e-9

CLIP_SIDES = 64


def dot(z: complex, w: complex) -> float:
    """Real inner product of plane vectors stored as complex numbers."""
    return z.real * w.real + z.imag * w.imag


def cross(z: complex, w: complex) -> float:
    """Signed area spanned by two plane vectors."""
    return z.real * w.imag - z.imag * w.real


def _unit(z: complex) -> complex:
    r = abs(z)
    if r == 0:
        raise BadParameterError("zero vector has no direction")
    return z / r


# ---------------------------------------------------------------------------
# domain variants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Disc:
    center: complex
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise BadParameterError("disc radius must be positive and finite")

    def contains(self, z: complex) -> bool:
        return abs(z - self.center) < self.radius

    def boundary_distance(self, z: complex) -> float:
        return self.radius - abs(z - self.center)

    def is_bounded(self) -> bool:
        return True

    def interior_point(self) -> complex:
        return self.center


@dataclass(frozen=True)
class HalfPlanes:
    """Intersection of open half-planes ``<z, n_i> < c_i`` (unit ``n_i``)."""

    normals: tuple[complex, ...]
    offsets: tuple[float, ...]
    witness: complex
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.normals) == 0 or len(self.normals) != len(self.offsets):
            raise BadParameterError("need matching, non-empty normals/offsets")
        for n in self.normals:
            if abs(abs(n) - 1.0) > UNIT_TOL:
                raise BadParameterError(f"normal {n} is not unit length")
        if self.margin(self.witness) <= 0:
            raise BadParameterError("witness point is not strictly interior")

    def margin(self, z: complex) -> float:
        """Distance from z to the complement (negative outside).

        The complement is the union of closed half-planes, so the distance
        is exactly the smallest constraint slack.
        """
        return min(c - dot(z, n) for n, c in zip(self.normals, self.offsets))

    def contains(self, z: complex) -> bool:
        return all(dot(z, n) < c for n, c in zip(self.normals, self.offsets))

    def boundary_distance(self, z: complex) -> float:
        return self.margin(z)

    def is_bounded(self) -> bool:
        return recession_cone(self).shape == EMPTY

    def interior_point(self) -> complex:
        return self.witness


@dataclass(frozen=True)
class DiscExterior:
    center: complex
    radius: float  # >= 0; radius 0 is the punctured plane

    def __post_init__(self):
        if self.radius < 0 or not math.isfinite(self.radius):
            raise BadParameterError("exterior radius must be >= 0 and finite")

    def contains(self, z: complex) -> bool:
        return abs(z - self.center) > self.radius

    def boundary_distance(self, z: complex) -> float:
        return abs(z - self.center) - self.radius

    def is_bounded(self) -> bool:
        return False

    def interior_point(self) -> complex:
        return self.center + (self.radius + 1.0)


@dataclass(frozen=True)
class Halfline:
    """Open half-line ``{base + t*direction : t > -overshoot}``."""

    base: complex
    direction: complex
    overshoot: float

    def __post_init__(self):
        if abs(abs(self.direction) - 1.0) > UNIT_TOL:
            raise BadParameterError("half-line direction must be unit length")
        if not (self.overshoot > 0):
            raise BadParameterError("half-line overshoot must be positive")

    def parameter_of(self, z: complex) -> float | None:
        """t with z = base + t*direction, or None if z is off the line."""
        w = z - self.base
        if abs(cross(w, self.direction)) > 1e-9 * (1.0 + abs(w)):
            return None
        return dot(w, self.direction)

    def contains(self, z: complex) -> bool:
        t = self.parameter_of(z)
        return t is not None and t > -self.overshoot

    def distance_to(self, w: complex) -> float:
        """Distance from w to the closure of the half-line."""
        t = max(dot(w - self.base, self.direction), -self.overshoot)
        return abs(w - (self.base + t * self.direction))


@dataclass(frozen=True)
class HalflineFamily:
    rays: tuple[Halfline, ...]

    def __post_init__(self):
        if not self.rays:
            raise BadParameterError("half-line family must be non-empty")

    def contains(self, z: complex) -> bool:
        return any(ray.contains(z) for ray in self.rays)

    def boundary_distance(self, z: complex) -> float:
        return 0.0

    def is_bounded(self) -> bool:
        return False

    def interior_point(self) -> complex:
        return self.rays[0].base


@dataclass(frozen=True)
class Plane:
    def contains(self, z: complex) -> bool:
        return True

    def boundary_distance(self, z: complex) -> float:
        return math.inf

    def is_bounded(self) -> bool:
        return False

    def interior_point(self) -> complex:
        return 0j


Domain = Disc | HalfPlanes | DiscExterior | HalflineFamily | Plane


def contains(d: Domain, z: complex) -> bool:
    """Exact, strict membership (all domains are open)."""
    return d.contains(z)


def boundary_distance(d: Domain, z: complex) -> float:
    return d.boundary_distance(z)


def is_bounded(d: Domain) -> bool:
    return d.is_bounded()


def interior_point(d: Domain) -> complex:
    return d.interior_point()


# ---------------------------------------------------------------------------
# recession cone
# ---------------------------------------------------------------------------

EMPTY = "empty"
SINGLE_DIRECTION = "single_direction"
ANTIPODAL_PAIR = "antipodal_pair"
ARC = "arc"
FULL_CIRCLE = "full_circle"


def _wrap(a: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    a = math.fmod(a, TWO_PI)
    if a <= -math.pi:
        a += TWO_PI
    elif a > math.pi:
        a -= TWO_PI
    return a


@dataclass(frozen=True)
class RecessionCone:
    """Unit recession directions of a convex domain, as angular data.

    ``ARC`` spans counter-clockwise from ``start`` to ``end`` (width in
    (0, 2*pi]); ``SINGLE_DIRECTION`` and ``ANTIPODAL_PAIR`` store the
    direction angle in ``start``.
    """

    shape: str
    start: float = 0.0
    end: float = 0.0

    @property
    def width(self) -> float:
        if self.shape == ARC:
            return self.end - self.start
        if self.shape == FULL_CIRCLE:
            return TWO_PI
        return 0.0

    def directions(self) -> tuple[complex, ...]:
        """Canonical direction(s); for arcs the angular midpoint."""
        if self.shape == EMPTY:
            return ()
        if self.shape == SINGLE_DIRECTION:
            return (cmath.exp(1j * self.start),)
        if self.shape == ANTIPODAL_PAIR:
            h = cmath.exp(1j * self.start)
            return (h, -h)
        if self.shape == ARC:
            return (cmath.exp(1j * (self.start + self.end) / 2),)
        return (1.0 + 0j,)

    def contains_direction(self, h: complex, tol: float = 1e-9) -> bool:
        if self.shape == EMPTY:
            return False
        if self.shape == FULL_CIRCLE:
            return True
        phi = cmath.phase(_unit(h))
        if self.shape in (SINGLE_DIRECTION, ANTIPODAL_PAIR):
            d = abs(_wrap(phi - self.start))
            if self.shape == ANTIPODAL_PAIR:
                d = min(d, abs(_wrap(phi - self.start - math.pi)))
            return d <= tol
        delta = math.fmod(phi - self.start, TWO_PI)
        if delta < 0:
            delta += TWO_PI
        return delta <= self.width + tol

    def sample_directions(self, k: int, inset: float = 0.02) -> tuple[complex, ...]:
        """k directions strictly inside the cone (arc endpoints inset)."""
        if self.shape == EMPTY:
            return ()
        if self.shape in (SINGLE_DIRECTION, ANTIPODAL_PAIR):
            return self.directions()
        if self.shape == FULL_CIRCLE:
            return tuple(cmath.exp(2j * math.pi * i / k) for i in range(k))
        pad = self.width * inset
        lo, hi = self.start + pad, self.end - pad
        if k == 1:
            return (cmath.exp(1j * (lo + hi) / 2),)
        return tuple(
            cmath.exp(1j * (lo + (hi - lo) * i / (k - 1))) for i in range(k)
        )


def _interval_point_hits(phi: float, a: float, b: float, tol: float) -> bool:
    """Is angle phi inside the ccw arc [a, b] (b >= a), mod 2*pi?"""
    delta = math.fmod(phi - a, TWO_PI)
    if delta < 0:
        delta += TWO_PI
    return delta <= (b - a) + tol or delta >= TWO_PI - tol


def _cone_from_normals(normals: tuple[complex, ...]) -> RecessionCone:
    """Intersect the half-circles {phi : <e^{i phi}, n> <= 0} exactly.

    The feasible set is the set of unit directions of a closed convex cone
    in the plane: a single arc of width <= pi, an antipodal pair, a single
    direction, or empty.  Maintained as a small state machine.
    """
    state = "arc"
    # first constraint: closed half-circle centred on -n
    c0 = cmath.phase(-normals[0])
    lo, hi = c0 - math.pi / 2, c0 + math.pi / 2
    pair: tuple[float, float] = (0.0, 0.0)

    for n in normals[1:]:
        a = cmath.phase(-n) - math.pi / 2  # semicircle [a, a + pi]
        if state == "empty":
            return RecessionCone(EMPTY)
        if state in ("single", "pair"):
            pts = [p for p in (pair if state == "pair" else (pair[0],))
                   if _interval_point_hits(p, a, a + math.pi, ANGLE_TOL)]
            if not pts:
                state = "empty"
            elif len(pts) == 1:
                state, pair = "single", (pts[0], 0.0)
            continue
        # state == "arc": intersect [lo, hi] with shifted copies of [a, a+pi]
        comps = []
        base = a + TWO_PI * math.floor((lo - a) / TWO_PI)
        for shift in (base, base + TWO_PI):
            s, e = max(lo, shift), min(hi, shift + math.pi)
            if e >= s - ANGLE_TOL:
                comps.append((s, min(e, hi)))
        comps = [(s, e) for s, e in comps if e >= s - ANGLE_TOL]
        if not comps:
            state = "empty"
        elif len(comps) == 1:
            s, e = comps[0]
            if e - s <= ANGLE_TOL:
                state, pair = "single", ((s + e) / 2, 0.0)
            else:
                lo, hi = s, e
        else:
            # two components: only the antipodal-pair degeneracy
            mids = [(s + e) / 2 for s, e in comps if e - s <= ANGLE_TOL]
            if len(mids) == 2 and abs(abs(_wrap(mids[0] - mids[1])) - math.pi) <= 1e-9:
                state, pair = "pair", (mids[0], mids[1])
            elif len(mids) == 1:
                state, pair = "single", (mids[0], 0.0)
            else:
                # numerically impossible for convex cones; keep the widest
                s, e = max(comps, key=lambda se: se[1] - se[0])
                lo, hi = s, e

    if state == "empty":
        return RecessionCone(EMPTY)
    if state == "pair":
        return RecessionCone(ANTIPODAL_PAIR, _wrap(pair[0]))
    if state == "single":
        return RecessionCone(SINGLE_DIRECTION, _wrap(pair[0]))
    if hi - lo <= ANGLE_TOL:
        return RecessionCone(SINGLE_DIRECTION, _wrap((lo + hi) / 2))
    s = _wrap(lo)
    return RecessionCone(ARC, s, s + (hi - lo))


def recession_cone(d: Domain) -> RecessionCone:
    """Unit directions h with <h, n_i> <= 0 for every constraint.

    Computed from the constraint normals only, hence independent of any
    base point.  EMPTY exactly when the domain is bounded.
    """
    if isinstance(d, HalfPlanes):
        return _cone_from_normals(d.normals)
    if isinstance(d, Disc):
        return RecessionCone(EMPTY)
    if isinstance(d, Plane):
        return RecessionCone(FULL_CIRCLE)
    raise BadParameterError(
        f"recession cone is defined for convex domains, not {type(d).__name__}"
    )


BOUNDED = "bounded"
STRIP_LIKE = "strip_like"
PROPER_CONE = "proper_cone"
HALF_PLANE = "half_plane"
WHOLE_PLANE = "whole_plane"


@dataclass(frozen=True)
class ConeClass:
    kind: str
    angle_deg: float | None = None


def classify(cone: RecessionCone) -> ConeClass:
    """Map a recession cone to the geometry of the underlying domain."""
    if cone.shape == EMPTY:
        return ConeClass(BOUNDED)
    if cone.shape == ANTIPODAL_PAIR:
        return ConeClass(STRIP_LIKE)
    if cone.shape == SINGLE_DIRECTION:
        return ConeClass(PROPER_CONE, 0.0)
    if cone.shape == FULL_CIRCLE:
        return ConeClass(WHOLE_PLANE)
    deg = math.degrees(cone.width)
    if abs(deg - 180.0) <= 1e-9:
        return ConeClass(HALF_PLANE, 180.0)
    if deg > 180.0:
        return ConeClass(WHOLE_PLANE, deg)
    return ConeClass(PROPER_CONE, deg)


# ---------------------------------------------------------------------------
# half-line witnesses
# ---------------------------------------------------------------------------


def halfline_through(d: Domain, p: complex) -> tuple[complex, float]:
    """Unit direction h and overshoot r with {p + t*h : t > -r} inside d.

    For a convex unbounded domain, h is the angular midpoint of the
    recession cone (ties for strips broken toward positive real part, then
    positive imaginary part) and r is half the boundary distance of p.
    """
    if not contains(d, p):
        raise OutsideDomainError(f"{p} is not in the domain")
    if isinstance(d, HalfPlanes):
        cone = recession_cone(d)
        if cone.shape == EMPTY:
            raise NoHalflineError("bounded domain contains no half-line")
        if cone.shape == ANTIPODAL_PAIR:
            h = cmath.exp(1j * cone.start)
            if h.real < -ANGLE_TOL or (abs(h.real) <= ANGLE_TOL and h.imag < 0):
                h = -h
        else:
            h = cone.directions()[0]
        return h, d.margin(p) / 2
    if isinstance(d, DiscExterior):
        return _unit(p - d.center), (abs(p - d.center) - d.radius) / 2
    if isinstance(d, HalflineFamily):
        for ray in d.rays:
            t = ray.parameter_of(p)
            if t is not None and t > -ray.overshoot:
                return ray.direction, t + ray.overshoot
        raise NoHalflineError("no family ray passes through the point")
    if isinstance(d, Plane):
        return 1.0 + 0j, 1.0
    raise NoHalflineError("bounded domain contains no half-line")


# ---------------------------------------------------------------------------
# vertices, diameter, distances
# ---------------------------------------------------------------------------


def polygon_vertices(d: HalfPlanes, tol: float = VERTEX_TOL) -> tuple[complex, ...]:
    """Pairwise constraint-line intersections feasible for all constraints."""
    verts: list[complex] = []
    n = len(d.normals)
    for i in range(n):
        for j in range(i + 1, n):
            ni, nj = d.normals[i], d.normals[j]
            det = cross(ni, nj)
            if abs(det) < 1e-12:
                continue
            ci, cj = d.offsets[i], d.offsets[j]
            x = (ci * nj.imag - cj * ni.imag) / det
            y = (ni.real * cj - nj.real * ci) / det
            v = complex(x, y)
            if all(dot(v, nk) <= ck + tol
                   for nk, ck in zip(d.normals, d.offsets)):
                if all(abs(v - u) > tol for u in verts):
                    verts.append(v)
    return tuple(verts)


def diameter(d: Domain) -> float:
    """Diameter of a bounded domain (sup of pairwise distances)."""
    if isinstance(d, Disc):
        return 2.0 * d.radius
    if isinstance(d, HalfPlanes):
        if recession_cone(d).shape != EMPTY:
            raise UnboundedDomainError("diameter of an unbounded domain")
        verts = polygon_vertices(d)
        if len(verts) < 2:
            raise BadParameterError("degenerate polygon")
        return max(abs(a - b) for i, a in enumerate(verts) for b in verts[i + 1:])
    raise UnboundedDomainError(f"{type(d).__name__} is unbounded")


def max_abs_over_closure(d: Domain) -> float:
    """sup of |z| over the closure; attained at a vertex for polygons."""
    if isinstance(d, Disc):
        return abs(d.center) + d.radius
    if isinstance(d, HalfPlanes) and recession_cone(d).shape == EMPTY:
        return max(abs(v) for v in polygon_vertices(d))
    return math.inf


def distance_to_closure(d: Domain, w: complex) -> float:
    """Euclidean distance from w to the closure of the domain."""
    if isinstance(d, Disc):
        return max(0.0, abs(w - d.center) - d.radius)
    if isinstance(d, DiscExterior):
        return max(0.0, d.radius - abs(w - d.center))
    if isinstance(d, Plane):
        return 0.0
    if isinstance(d, HalflineFamily):
        return min(ray.distance_to(w) for ray in d.rays)
    if isinstance(d, HalfPlanes):
        if all(dot(w, n) <= c + VERTEX_TOL for n, c in zip(d.normals, d.offsets)):
            return 0.0
        best = math.inf
        # nearest point lies on a face (projection onto the face line,
        # feasible for the other constraints) or at a vertex
        for n, c in zip(d.normals, d.offsets):
            proj = w + (c - dot(w, n)) * n
            if all(dot(proj, nk) <= ck + VERTEX_TOL
                   for nk, ck in zip(d.normals, d.offsets)):
                best = min(best, abs(w - proj))
        for v in polygon_vertices(d):
            best = min(best, abs(w - v))
        return best
    raise BadParameterError(f"unsupported domain {type(d).__name__}")


def support_value(d: Domain, u: complex) -> float:
    """sup of <z, u> over the closure of the domain (may be +inf)."""
    u = _unit(u)
    if isinstance(d, Plane) or isinstance(d, DiscExterior):
        return math.inf
    if isinstance(d, Disc):
        return dot(d.center, u) + d.radius
    if isinstance(d, HalflineFamily):
        best = -math.inf
        for ray in d.rays:
            q = dot(ray.direction, u)
            if q > 1e-12:
                return math.inf
            best = max(best, dot(ray.base, u) - ray.overshoot * q)
        return best
    if isinstance(d, HalfPlanes):
        cone = recession_cone(d)
        if cone.shape != EMPTY:
            # unbounded in direction u unless u is polar to the whole cone
            worst = max(_cone_max_dot(cone, u), 0.0)
            if worst > 1e-12:
                return math.inf
        verts = polygon_vertices(d)
        if verts:
            return max(dot(v, u) for v in verts)
        # no vertices: all constraint lines are parallel; u must align
        # with one of the normals for the value to be finite
        vals = [c for n, c in zip(d.normals, d.offsets) if dot(u, n) > 0.5]
        if not vals:
            raise BadParameterError("support direction escaped parallel-strip case")
        return min(vals)
    raise BadParameterError(f"unsupported domain {type(d).__name__}")


def _cone_max_dot(cone: RecessionCone, u: complex) -> float:
    """max of <h, u> over the closed cone directions."""
    if cone.shape == EMPTY:
        return -math.inf
    if cone.shape == FULL_CIRCLE:
        return 1.0
    if cone.shape in (SINGLE_DIRECTION, ANTIPODAL_PAIR):
        return max(dot(h, u) for h in cone.directions())
    phi = cmath.phase(u)
    delta = math.fmod(phi - cone.start, TWO_PI)
    if delta < 0:
        delta += TWO_PI
    if delta <= cone.width:
        return 1.0
    gap = min(delta - cone.width, TWO_PI - delta)
    return math.cos(gap)


# ---------------------------------------------------------------------------
# clipping
# ---------------------------------------------------------------------------


def _ngon_constraints(center: complex, radius: float,
                      sides: int = CLIP_SIDES) -> tuple[tuple[complex, ...], tuple[float, ...]]:
    """Inscribed regular polygon of D(center, radius), as half-planes."""
    normals, offsets = [], []
    apothem = radius * math.cos(math.pi / sides)
    for k in range(sides):
        n = cmath.exp(2j * math.pi * (k + 0.5) / sides)
        normals.append(n)
        offsets.append(dot(center, n) + apothem)
    return tuple(normals), tuple(offsets)


def clip_to_disc(d: Domain, m: int) -> Domain:
    """Bounded localization: intersect with (a polygon inscribed in) D(0, m).

    Half-plane domains gain the 64-gon constraints; concentric discs are
    intersected exactly; anything else bounded and inside D(0, m) passes
    through unchanged.  The clipped sets are nested in m by construction.
    """
    if m < 1:
        raise BadParameterError("clip radius must be >= 1")
    if isinstance(d, Disc):
        if d.center == 0:
            return Disc(0j, min(d.radius, float(m)))
        if abs(d.center) + d.radius <= m:
            return d
        normals, offsets = _ngon_constraints(d.center, d.radius)
        poly = HalfPlanes(normals, offsets, d.center,
                          notes=("polygonal approximation of a disc",))
        return clip_to_disc(poly, m)
    if isinstance(d, Plane):
        normals, offsets = _ngon_constraints(0j, float(m))
        return HalfPlanes(normals, offsets, 0j,
                          notes=(f"inscribed {CLIP_SIDES}-gon of D(0,{m})",))
    if isinstance(d, HalfPlanes):
        gon_n, gon_c = _ngon_constraints(0j, float(m))
        normals = d.normals + gon_n
        offsets = d.offsets + gon_c
        witness = d.witness
        if not all(dot(witness, n) < c for n, c in zip(normals, offsets)):
            witness = _feasible_point(normals, offsets)
        return HalfPlanes(normals, offsets, witness,
                          notes=d.notes + (f"clipped to D(0,{m})",))
    raise BadParameterError(f"cannot clip {type(d).__name__}")


def _feasible_point(normals, offsets) -> complex:
    """Interior point of a bounded intersection, via the vertex centroid."""
    verts: list[complex] = []
    n = len(normals)
    for i in range(n):
        for j in range(i + 1, n):
            det = cross(normals[i], normals[j])
            if abs(det) < 1e-12:
                continue
            ci, cj = offsets[i], offsets[j]
            x = (ci * normals[j].imag - cj * normals[i].imag) / det
            y = (normals[i].real * cj - normals[j].real * ci) / det
            v = complex(x, y)
            if all(dot(v, nk) <= ck + VERTEX_TOL for nk, ck in zip(normals, offsets)):
                verts.append(v)
    if not verts:
        raise BadParameterError("clipped region is empty")
    centroid = sum(verts) / len(verts)
    if not all(dot(centroid, nk) < ck for nk, ck in zip(normals, offsets)):
        raise BadParameterError("clipped region has empty interior")
    return centroid


# ---------------------------------------------------------------------------
# boundary sampling (used by continuity probes) and named fixtures
# ---------------------------------------------------------------------------


def boundary_samples(d: Domain, per_edge: int = 8) -> tuple[tuple[complex, complex], ...]:
    """(boundary point, inward unit direction) samples of a bounded domain."""
    if isinstance(d, Disc):
        out = []
        k = max(per_edge * 4, 16)
        for i in range(k):
            u = cmath.exp(2j * math.pi * i / k)
            out.append((d.center + d.radius * u, -u))
        return tuple(out)
    if isinstance(d, HalfPlanes):
        if recession_cone(d).shape != EMPTY:
            raise UnboundedDomainError("boundary sampling needs a bounded domain")
        verts = list(polygon_vertices(d))
        centroid = sum(verts) / len(verts)
        verts.sort(key=lambda v: cmath.phase(v - centroid))
        out = []
        for a, b in zip(verts, verts[1:] + verts[:1]):
            mid = (a + b) / 2
            inward = None
            for nk, ck in zip(d.normals, d.offsets):
                if abs(dot(mid, nk) - ck) <= 1e-7 * (1 + abs(ck)):
                    inward = -nk
                    break
            if inward is None:
                continue
            for i in range(1, per_edge + 1):
                t = i / (per_edge + 1)
                out.append((a + t * (b - a), inward))
        return tuple(out)
    raise UnboundedDomainError("boundary sampling needs a bounded 2-D domain")


def upper_half_plane() -> HalfPlanes:
    return HalfPlanes((-1j,), (0.0,), 1j)


def horizontal_strip(y0: float = 0.0, y1: float = 1.0) -> HalfPlanes:
    if not y0 < y1:
        raise BadParameterError("strip needs y0 < y1")
    return HalfPlanes((-1j, 1j), (-y0, y1), complex(0.0, (y0 + y1) / 2))


def first_quadrant() -> HalfPlanes:
    return HalfPlanes((-1 - 0j, -1j), (0.0, 0.0), 1 + 1j)


def unit_square() -> HalfPlanes:
    return HalfPlanes((-1 - 0j, 1 + 0j, -1j, 1j), (0.0, 1.0, 0.0, 1.0),
                      complex(0.5, 0.5))


def unit_disc() -> Disc:
    return Disc(0j, 1.0)


def real_line_rays(overshoot: float = 1.0) -> HalflineFamily:
    """The real axis as two overlapping open half-lines."""
    return HalflineFamily((Halfline(0j, 1.0 + 0j, overshoot),
                           Halfline(0j, -1.0 + 0j, overshoot)))


def regular_polygon(center: complex, circumradius: float, sides: int,
                    rotation: float = 0.0) -> HalfPlanes:
    if sides < 3 or circumradius <= 0:
        raise BadParameterError("need >= 3 sides and positive radius")
    normals, offsets = [], []
    apothem = circumradius * math.cos(math.pi / sides)
    for k in range(sides):
        n = cmath.exp(1j * (rotation + TWO_PI * (k + 0.5) / sides))
        normals.append(n)
        offsets.append(dot(center, n) + apothem)
    return HalfPlanes(tuple(normals), tuple(offsets), center)


def random_bounded_polygon(rng) -> HalfPlanes:
    """Seeded random convex polygon (regular k-gon, random pose/scale)."""
    sides = rng.randint(3, 8)
    center = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
    radius = rng.uniform(0.4, 1.6)
    rotation = rng.uniform(0.0, TWO_PI)
    return regular_polygon(center, radius, sides, rotation)


def random_unbounded_polygon(rng) -> HalfPlanes:
    """Seeded random unbounded convex intersection of half-planes.

    Normals are drawn from a sub-arc of the half-circle opposing a random
    axis direction, which guarantees a recession cone of positive width
    around that axis.
    """
    axis = rng.uniform(0.0, TWO_PI)
    halfwidth = math.radians(rng.uniform(15.0, 80.0))
    count = rng.randint(1, 5)
    normals, offsets = [], []
    for _ in range(count):
        ang = axis + math.pi + rng.uniform(-1.0, 1.0) * (math.pi / 2 - halfwidth)
        normals.append(cmath.exp(1j * ang))
        offsets.append(rng.uniform(-1.0, 2.0))
    reach = (max(abs(c) for c in offsets) + 1.0) / math.sin(halfwidth) + 1.0
    witness = reach * cmath.exp(1j * axis)
    return HalfPlanes(tuple(normals), tuple(offsets), witness)
