"""Sup-norm probing over domains, divergence witnesses, ray sampling.

Probing never proves boundedness: a report either carries a heuristic
``bounded_estimate`` (the maximum of exact evaluations at sampled points,
hence always a lower bound on the true sup) or a certified
``divergence_witness`` -- at least eight in-domain points whose moduli
strictly escalate past a threshold.

Strategy: a coarse grid over the domain (its bounded clip for unbounded
domains) plus recession-ray scans, followed by refinement rounds that
shrink local grids around the running best points and approach the
boundary geometrically down to the configured band.  Reductions are
sequential maxima with a lexicographic (re, im) tie-break, so runs are
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadParameterError, SegmentExitsDomainError
from .geometry import (
    EMPTY,
    Disc,
    DiscExterior,
    Domain,
    HalfPlanes,
    HalflineFamily,
    Plane,
    boundary_distance,
    clip_to_disc,
    contains,
    distance_to_closure,
    halfline_through,
    interior_point,
    is_bounded,
    polygon_vertices,
    recession_cone,
)

BOUNDED_ESTIMATE = "bounded_estimate"
DIVERGENCE_WITNESS = "divergence_witness"


@dataclass(frozen=True)
class ProbeConfig:
    coarse_grid: int = 64          # points per axis of the coarse grid
    refinement_rounds: int = 6
    boundary_band: float = 1e-3    # closest approach to the domain boundary
    ray_t_max: float = 1e6
    budget: int = 10 ** 6          # max evaluations per probe
    divergence_threshold: float = 1e6
    clip_radius: int = 8           # bounded window for unbounded domains

    def __post_init__(self):
        if min(self.coarse_grid, self.refinement_rounds, self.budget,
               self.clip_radius) <= 0:
            raise BadParameterError("probe configuration values must be positive")
        if not (0 < self.boundary_band < 1):
            raise BadParameterError("boundary band must lie in (0, 1)")
        if self.ray_t_max <= 1 or self.divergence_threshold <= 0:
            raise BadParameterError("ray range and threshold must be positive")


@dataclass(frozen=True)
class DivergenceWitness:
    points: tuple[complex, ...]
    moduli: tuple[float, ...]

    def __post_init__(self):
        if len(self.points) < 8 or len(self.points) != len(self.moduli):
            raise BadParameterError("witness needs >= 8 points with moduli")
        for a, b in zip(self.moduli, self.moduli[1:]):
            if not b > a:
                raise BadParameterError("witness moduli must strictly increase")


@dataclass(frozen=True)
class ProbeReport:
    order: int
    sup_estimate: float
    argmax: complex
    history: tuple[float, ...]      # best estimate after each round
    verdict: str
    witness: DivergenceWitness | None = None
    evaluations: int = 0
    budget_exhausted: bool = False
    converged: bool = False         # last round gained < 1%


class _Sampler:
    """Budgeted max-tracker with deterministic tie-breaking."""

    def __init__(self, handle, domain: Domain, cfg: ProbeConfig,
                 respect_band: bool = True):
        self.handle = handle
        self.domain = domain
        self.cfg = cfg
        self.respect_band = respect_band and not isinstance(domain, HalflineFamily)
        self.count = 0
        self.exhausted = False
        self.best = -1.0
        self.argmax = 0j
        self.tops: list[tuple[float, float, float]] = []  # (modulus, re, im)

    def probe(self, z: complex) -> float | None:
        if self.count >= self.cfg.budget:
            self.exhausted = True
            return None
        if not contains(self.domain, z):
            return None
        if self.respect_band and \
                boundary_distance(self.domain, z) < self.cfg.boundary_band * (1 - 1e-9):
            return None
        self.count += 1
        try:
            m = abs(self.handle.eval(z))
        except (OverflowError, ZeroDivisionError, ValueError):
            m = math.inf
        if math.isnan(m):
            return None
        if m > self.best or (m == self.best and
                             (z.real, z.imag) < (self.argmax.real, self.argmax.imag)):
            self.best = m
            self.argmax = z
        self.tops.append((m, z.real, z.imag))
        if len(self.tops) > 40:
            self._prune()
        return m

    def _prune(self, keep: int = 10) -> None:
        self.tops.sort(key=lambda t: (-t[0], t[1], t[2]))
        self.tops = self.tops[:keep]

    def top_points(self, keep: int = 10) -> list[complex]:
        self._prune(keep)
        return [complex(re, im) for _, re, im in self.tops]


def _grid_points(x0: float, x1: float, y0: float, y1: float,
                 per_axis: int) -> list[complex]:
    if per_axis == 1:
        return [complex((x0 + x1) / 2, (y0 + y1) / 2)]
    xs = [x0 + (x1 - x0) * i / (per_axis - 1) for i in range(per_axis)]
    ys = [y0 + (y1 - y0) * i / (per_axis - 1) for i in range(per_axis)]
    return [complex(x, y) for y in ys for x in xs]


def _bounding_box(d: Domain, cfg: ProbeConfig) -> tuple[float, float, float, float]:
    if isinstance(d, Disc):
        c, r = d.center, d.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r
    if isinstance(d, HalfPlanes):
        verts = polygon_vertices(d)
        if verts and recession_cone(d).shape == EMPTY:
            xs = [v.real for v in verts]
            ys = [v.imag for v in verts]
            return min(xs), max(xs), min(ys), max(ys)
    m = float(cfg.clip_radius)
    return -m, m, -m, m


def _initial_candidates(d: Domain, cfg: ProbeConfig) -> tuple[list[complex], float]:
    """Coarse candidates and the grid cell size."""
    if isinstance(d, HalflineFamily):
        return [], 0.1
    window: Domain = d
    if not is_bounded(d):
        if isinstance(d, (HalfPlanes, Plane)):
            window = clip_to_disc(d, cfg.clip_radius)
        # disc exteriors just use the clip-radius box below
    x0, x1, y0, y1 = _bounding_box(window, cfg)
    cell = max(x1 - x0, y1 - y0) / max(cfg.coarse_grid - 1, 1)
    pts = _grid_points(x0, x1, y0, y1, cfg.coarse_grid)
    return pts, cell


def _toward_boundary(d: Domain, z: complex) -> complex | None:
    if isinstance(d, Disc):
        u = z - d.center
        return u / abs(u) if u != 0 else 1.0 + 0j
    if isinstance(d, HalfPlanes):
        best_i = min(range(len(d.normals)),
                     key=lambda i: d.offsets[i] - _dot(z, d.normals[i]))
        return d.normals[best_i]
    if isinstance(d, DiscExterior):
        u = z - d.center
        return -u / abs(u) if u != 0 else None
    return None


def _dot(z: complex, w: complex) -> float:
    return z.real * w.real + z.imag * w.imag


def _ray_specs(d: Domain, f) -> list[tuple[complex, complex, float]]:
    """(base, unit direction, overshoot) rays covering the unbounded part."""
    specs: list[tuple[complex, complex, float]] = []
    if isinstance(d, HalflineFamily):
        for ray in d.rays:
            specs.append((ray.base, ray.direction, ray.overshoot * (1 - 1e-12)))
        return specs
    if isinstance(d, Plane):
        dirs = list(f.growth_directions)
        dirs += [complex(math.cos(a), math.sin(a))
                 for a in (k * math.pi / 4 for k in range(8))]
        return [(0j, _dedupe_unit(h), 1.0) for h in _unique_dirs(dirs)]
    if isinstance(d, HalfPlanes):
        cone = recession_cone(d)
        if cone.shape == EMPTY:
            return []
        p = d.witness
        r = d.margin(p) / 2
        dirs = [h for h in f.growth_directions if cone.contains_direction(h)]
        dirs += list(cone.sample_directions(5))
        return [(p, h, r) for h in _unique_dirs(dirs)]
    if isinstance(d, DiscExterior):
        for k in range(8):
            h = complex(math.cos(k * math.pi / 4), math.sin(k * math.pi / 4))
            base = d.center + (d.radius + 1.0) * h
            specs.append((base, h, 0.5))
        return specs
    return []


def _unique_dirs(dirs: list[complex]) -> list[complex]:
    out: list[complex] = []
    for h in dirs:
        h = _dedupe_unit(h)
        if all(abs(h - g) > 1e-9 for g in out):
            out.append(h)
    return out


def _dedupe_unit(h: complex) -> complex:
    r = abs(h)
    if r == 0:
        raise BadParameterError("zero direction")
    return h / r


def _scan_ray(sampler: _Sampler, p: complex, h: complex, r: float,
              cfg: ProbeConfig, uniform: int = 48) -> None:
    """Sample |g| along {p + t h}: uniform on [-r, 1], geometric beyond."""
    ts: list[float] = []
    start = -r * (1 - 1e-9)
    for i in range(uniform):
        ts.append(start + (1.0 - start) * i / (uniform - 1))
    t = 1.25
    while t <= cfg.ray_t_max:
        ts.append(t)
        t *= 1.25
    vals: list[tuple[float, float]] = []
    for t in ts:
        m = sampler.probe(p + t * h)
        if m is not None and math.isfinite(m):
            vals.append((m, t))
    vals.sort(key=lambda mt: (-mt[0], mt[1]))
    for _, t0 in vals[:3]:
        width = max(abs(t0) * 0.25, 0.5)
        for _ in range(3):
            for i in range(13):
                t = t0 - width + 2 * width * i / 12
                if t <= start:
                    continue
                m = sampler.probe(p + t * h)
                if m is not None and math.isfinite(m) and m >= sampler.best:
                    t0 = t
            width /= 6.0


def estimate_sup(f, l: int, d: Domain, cfg: ProbeConfig | None = None) -> ProbeReport:
    """Lower-bound estimate of sup over the domain of |f^(l)|."""
    cfg = cfg or ProbeConfig()
    g = f.derivative(l)
    sampler = _Sampler(g, d, cfg)

    sampler.probe(interior_point(d))
    pts, cell = _initial_candidates(d, cfg)
    for z in pts:
        sampler.probe(z)
    for p, h, r in _ray_specs(d, f):
        _scan_ray(sampler, p, h, r, cfg)
    history = [max(sampler.best, 0.0)]

    for rnd in range(cfg.refinement_rounds):
        width = cell * (0.33 ** rnd)
        for z0 in sampler.top_points():
            for z in _grid_points(z0.real - width, z0.real + width,
                                  z0.imag - width, z0.imag + width, 9):
                sampler.probe(z)
            dist = boundary_distance(d, z0)
            direction = _toward_boundary(d, z0)
            if direction is not None and math.isfinite(dist) and \
                    dist > cfg.boundary_band:
                for k in range(1, 5):
                    target = max(cfg.boundary_band * (1 + 1e-9), dist * 0.25 ** k)
                    sampler.probe(z0 + direction * (dist - target))
        history.append(max(sampler.best, history[-1]))
        if sampler.best > cfg.divergence_threshold or sampler.exhausted:
            break

    verdict = BOUNDED_ESTIMATE
    witness = None
    if sampler.best > cfg.divergence_threshold:
        witness = find_divergence_witness(f, l, d, cfg.divergence_threshold, cfg)
        if witness is not None:
            verdict = DIVERGENCE_WITNESS
    converged = len(history) >= 2 and history[-1] > 0 and \
        (history[-1] - history[-2]) < 0.01 * history[-1]
    return ProbeReport(
        order=l,
        sup_estimate=sampler.best,
        argmax=sampler.argmax,
        history=tuple(history),
        verdict=verdict,
        witness=witness,
        evaluations=sampler.count,
        budget_exhausted=sampler.exhausted,
        converged=converged,
    )


# ---------------------------------------------------------------------------
# divergence witnesses
# ---------------------------------------------------------------------------


def find_divergence_witness(f, l: int, d: Domain, threshold: float,
                            cfg: ProbeConfig | None = None) -> DivergenceWitness | None:
    """Search for >= 8 in-domain points with strictly escalating |f^(l)|.

    Tries boundary approaches toward the function's declared singular
    points first, then recession rays of unbounded domains.  ``None``
    means the search found nothing, not that the derivative is bounded.
    """
    cfg = cfg or ProbeConfig()
    g = f.derivative(l)
    for zs in f.singular_points:
        if distance_to_closure(d, zs) <= 1e-9:
            witness = _witness_from(_shell_sequence(g, d, zs, threshold), threshold)
            if witness is not None:
                return witness
    for p, h, r in _ray_specs(d, f):
        witness = _witness_from(_ray_sequence(g, d, p, h, cfg), threshold)
        if witness is not None:
            return witness
    return None


def _shell_sequence(g, d: Domain, zs: complex,
                    threshold: float) -> list[tuple[complex, float]]:
    """Best modulus on shrinking shells around a singular boundary point.

    When the domain boundary near the point can be parametrized, the shell
    is sampled at geometric boundary depths down to the square of the shell
    radius: blow-ups reachable only along near-tangential paths (depth of
    order radius^2) stay visible at every scale.
    """
    frame = _boundary_frame(d, zs)
    seq: list[tuple[complex, float]] = []
    eps = 0.5
    while eps > 1e-13:
        best_m = -1.0
        best_z = None
        for z in _shell_points(zs, eps, frame):
            rad = abs(z - zs)
            if not (eps / 8 <= rad <= 1.5 * eps) or not contains(d, z):
                continue
            try:
                m = abs(g.eval(z))
            except (OverflowError, ZeroDivisionError, ValueError):
                continue
            if math.isfinite(m) and m > best_m:
                best_m, best_z = m, z
        if best_z is not None:
            seq.append((best_z, best_m))
            if best_m >= threshold and len(seq) >= 16:
                break
        eps /= 2.0
    return seq


def _shell_points(zs: complex, eps: float, frame) -> list[complex]:
    if frame is None:
        return _grid_points(zs.real - eps, zs.real + eps,
                            zs.imag - eps, zs.imag + eps, 25)
    taus = [0.0]
    for frac in (0.25, 0.5, 0.75, 1.0):
        taus.extend((frac * eps, -frac * eps))
    depths = []
    s = eps
    floor = max(eps * eps / 4, 1e-15)
    while s >= floor:
        depths.append(s)
        s /= 4.0
    pts = []
    for tau in taus:
        boundary_point, inward = frame(tau)
        for s in depths:
            pts.append(boundary_point + inward * s)
    return pts


def _boundary_frame(d: Domain, zs: complex):
    """tau -> (boundary point, inward unit) parametrization near zs, if any."""
    if isinstance(d, Disc):
        if abs(abs(zs - d.center) - d.radius) > 1e-9:
            return None
        phi = math.atan2((zs - d.center).imag, (zs - d.center).real)

        def disc_frame(tau: float):
            c = math.cos(phi + tau / d.radius)
            s = math.sin(phi + tau / d.radius)
            u = complex(c, s)
            return d.center + d.radius * u, -u

        return disc_frame
    if isinstance(d, DiscExterior) and d.radius > 0:
        if abs(abs(zs - d.center) - d.radius) > 1e-9:
            return None
        phi = math.atan2((zs - d.center).imag, (zs - d.center).real)

        def exterior_frame(tau: float):
            u = complex(math.cos(phi + tau / d.radius),
                        math.sin(phi + tau / d.radius))
            return d.center + d.radius * u, u

        return exterior_frame
    if isinstance(d, HalfPlanes):
        margins = [c - _dot(zs, n) for n, c in zip(d.normals, d.offsets)]
        if min(margins) < -1e-9:
            return None
        binding = [i for i, m in enumerate(margins) if abs(m) <= 1e-9]
        if not binding:
            return None
        normal = d.normals[binding[0]]
        tangent = 1j * normal

        def edge_frame(tau: float):
            return zs + tangent * tau, -normal

        return edge_frame
    return None


def _ray_sequence(g, d: Domain, p: complex, h: complex,
                  cfg: ProbeConfig) -> list[tuple[complex, float]]:
    seq: list[tuple[complex, float]] = []
    t = 1.0
    while t <= cfg.ray_t_max:
        z = p + t * h
        if contains(d, z):
            try:
                m = abs(g.eval(z))
            except (OverflowError, ZeroDivisionError, ValueError):
                break
            if not math.isfinite(m):
                break
            seq.append((z, m))
        t *= 1.5
    return seq


def _witness_from(seq: list[tuple[complex, float]],
                  threshold: float) -> DivergenceWitness | None:
    records: list[tuple[complex, float]] = []
    best = -math.inf
    for z, m in seq:
        if m > best:
            records.append((z, m))
            best = m
    for j in range(7, len(records)):
        if records[j][1] >= threshold:
            chain = records[max(0, j - 23):j + 1]
            return DivergenceWitness(tuple(z for z, _ in chain),
                                     tuple(m for _, m in chain))
    return None


# ---------------------------------------------------------------------------
# half-line sampling
# ---------------------------------------------------------------------------


def probe_halfline(f, k: int, p: complex, h: complex,
                   cfg: ProbeConfig | None = None, r: float = 0.0) -> float:
    """sup over the sampled ray {p + t h : t > -r} of |f^(k)|.

    Since |h| = 1, this equals the sup of the k-th derivative of the
    one-variable restriction t -> f(p + t h).
    """
    cfg = cfg or ProbeConfig()
    if abs(abs(h) - 1.0) > 1e-9:
        raise BadParameterError("ray direction must be unit length")
    if r < 0:
        raise BadParameterError("overshoot must be >= 0")
    _require_ray_inside(f, p, h, r, cfg)
    g = f.derivative(k)

    def value(t: float) -> float:
        try:
            m = abs(g.eval(p + t * h))
        except (OverflowError, ZeroDivisionError, ValueError):
            return math.inf
        return m if not math.isnan(m) else -1.0

    start = -r * (1 - 1e-12)
    ts = [start + (1.0 - start) * i / 127 for i in range(128)]
    t = 1.2
    while t <= cfg.ray_t_max:
        ts.append(t)
        t *= 1.2
    scored = sorted(((value(t), t) for t in ts), key=lambda mt: (-mt[0], mt[1]))
    best = scored[0][0]
    for _, t0 in scored[:3]:
        width = max(abs(t0) * 0.2, 0.25)
        for _ in range(3):
            for i in range(13):
                t = t0 - width + 2 * width * i / 12
                if t <= start:
                    continue
                m = value(t)
                if m >= best:
                    best, t0 = m, t
            width /= 6.0
    return best


def _require_ray_inside(f, p: complex, h: complex, r: float,
                        cfg: ProbeConfig) -> None:
    region = f.analyticity
    if isinstance(region, Plane):
        return
    if isinstance(region, DiscExterior):
        t = max(_dot(region.center - p, h), -r)
        if abs(region.center - (p + t * h)) <= region.radius:
            raise SegmentExitsDomainError(
                f"ray from {p} along {h} meets the excluded disc of '{f.kind}'")
        return
    t = -r
    while t <= cfg.ray_t_max:
        if not contains(region, p + t * h):
            raise SegmentExitsDomainError(
                f"ray from {p} along {h} exits the analyticity region of '{f.kind}'")
        t = t * 2 if t > 1 else t + 0.125
