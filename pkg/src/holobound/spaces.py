"""Order-set algebra and the derivative-boundedness checkers.

An order set F is a finite ascending set of derivative orders (optionally
flagged as having infinite sup, in which case only the set algebra is
available).  ``filled()`` completes F to the contiguous range from min F
to sup F, ``filled_from_zero()`` to the range starting at 0.

On a domain every point of which lies on a ray, boundedness of the
derivatives at two orders of F propagates to every order in between via
the max-form interpolation inequality; ``gap_check_halflines`` verifies
this numerically order by order.  On a bounded convex domain, repeated
primitives propagate boundedness all the way down to order zero through
the chained bound

    sup|f^(l)| <= sup|f^(alpha)| * diam^(alpha-l)
                  + sum_{k=l}^{alpha-1} |f^(k)(z_o)| * diam^(k-l),

which ``chain_bound`` evaluates and ``gap_check_bounded`` aggregates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import FunctionHandle, closed_form_sup
from .errors import (
    BadParameterError,
    OrderViolationError,
    SupInfiniteError,
    UnboundedDomainError,
    UnboundedInputError,
)
from .favard import VerificationRecord, verify_max_form
from .geometry import (
    Disc,
    DiscExterior,
    Domain,
    HalfPlanes,
    HalflineFamily,
    boundary_samples,
    clip_to_disc,
    contains,
    diameter,
    interior_point,
    is_bounded,
)
from .numerics import segment_integral
from .probe import (
    DIVERGENCE_WITNESS,
    DivergenceWitness,
    ProbeConfig,
    ProbeReport,
    estimate_sup,
    find_divergence_witness,
)

H_INF = "h_inf"
A_SPACE = "a"

EVIDENCE_MEMBER = "evidence_member"
WITNESS_NON_MEMBER = "witness_non_member"

LOCALIZATION_CAP = 8  # unbounded-domain continuity runs on clips up to D(0, 8)


@dataclass(frozen=True)
class OrderSet:
    """Finite ascending set of derivative orders, with a symbolic-sup flag.

    With ``sup_infinite`` the elements hold the explicit finite part (at
    least the minimum); such sets support only the range algebra.
    """

    elements: tuple[int, ...]
    sup_infinite: bool = False

    def __post_init__(self):
        if not self.elements:
            raise BadParameterError("order set must be non-empty")
        norm = tuple(sorted(set(self.elements)))
        if norm != self.elements:
            object.__setattr__(self, "elements", norm)
        if self.elements[0] < 0 or not all(isinstance(e, int) for e in self.elements):
            raise BadParameterError("orders must be integers >= 0")

    @property
    def minimum(self) -> int:
        return self.elements[0]

    @property
    def supremum(self) -> int:
        if self.sup_infinite:
            raise SupInfiniteError("order set has infinite sup")
        return self.elements[-1]

    def filled(self) -> "OrderSet":
        """Contiguous range min F .. sup F (symbolic tail if sup is infinite)."""
        if self.sup_infinite:
            return OrderSet((self.minimum,), sup_infinite=True)
        return OrderSet(tuple(range(self.minimum, self.supremum + 1)))

    def filled_from_zero(self) -> "OrderSet":
        """Contiguous range 0 .. sup F; requires a finite sup."""
        return OrderSet(tuple(range(0, self.supremum + 1)))


# ---------------------------------------------------------------------------
# membership evidence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OscillationRecord:
    """Oscillation of a derivative near one boundary point, per scale."""

    boundary_point: complex
    scales: tuple[float, ...]
    oscillations: tuple[float, ...]
    decayed: bool


@dataclass(frozen=True)
class OrderEntry:
    order: int
    space: str                      # H_INF or A_SPACE
    status: str                     # EVIDENCE_MEMBER or WITNESS_NON_MEMBER
    probe: ProbeReport | None = None
    witness: DivergenceWitness | None = None
    oscillation: OscillationRecord | None = None


@dataclass(frozen=True)
class MembershipVerdict:
    entries: tuple[OrderEntry, ...]

    def entry(self, order: int, space: str) -> OrderEntry:
        for e in self.entries:
            if e.order == order and e.space == space:
                return e
        raise KeyError((order, space))

    def all_member(self) -> bool:
        return all(e.status == EVIDENCE_MEMBER for e in self.entries)


def membership_verdict(f: FunctionHandle, orders: OrderSet, d: Domain,
                       cfg: ProbeConfig | None = None,
                       threshold: float = 1e3) -> MembershipVerdict:
    """Per-order evidence for sup-boundedness and continuous extendability.

    Boundedness evidence is a probe report; non-membership is certified by
    a divergence witness.  Continuity runs a boundary oscillation probe,
    localized to clipped domains for unbounded inputs.
    """
    if orders.sup_infinite:
        raise SupInfiniteError("membership probing needs an explicit finite set")
    cfg = cfg or ProbeConfig()
    entries: list[OrderEntry] = []
    for l in orders.elements:
        witness = find_divergence_witness(f, l, d, threshold, cfg)
        if witness is None:
            report = estimate_sup(f, l, d, cfg)
            if report.verdict == DIVERGENCE_WITNESS:
                entries.append(OrderEntry(l, H_INF, WITNESS_NON_MEMBER,
                                          probe=report, witness=report.witness))
            else:
                entries.append(OrderEntry(l, H_INF, EVIDENCE_MEMBER, probe=report))
        else:
            entries.append(OrderEntry(l, H_INF, WITNESS_NON_MEMBER, witness=witness))
        record = _continuity_record(f, l, d, cfg)
        status = EVIDENCE_MEMBER if record is None or record.decayed \
            else WITNESS_NON_MEMBER
        entries.append(OrderEntry(l, A_SPACE, status, oscillation=record))
    return MembershipVerdict(tuple(entries))


def _continuity_record(f: FunctionHandle, l: int, d: Domain,
                       cfg: ProbeConfig) -> OscillationRecord | None:
    """Worst boundary-oscillation record over the (localized) boundary."""
    if isinstance(d, HalflineFamily):
        spots = [(ray.base - ray.overshoot * ray.direction, ray.direction)
                 for ray in d.rays]
        return _oscillation_over(f, l, d, spots)
    if isinstance(d, DiscExterior):
        spots = []
        if d.radius > 0:
            for k in range(16):
                u = complex(math.cos(k * math.pi / 8), math.sin(k * math.pi / 8))
                spots.append((d.center + d.radius * u, u))
        for zs in f.singular_points:
            if abs(abs(zs - d.center) - d.radius) <= 1e-9:
                u = (zs - d.center) / abs(zs - d.center) if zs != d.center else 1 + 0j
                spots.append((zs, u))
        return _oscillation_over(f, l, d, spots) if spots else None
    if is_bounded(d):
        domains = [d]
    else:
        cap = LOCALIZATION_CAP
        try:
            domains = [clip_to_disc(d, m) for m in (1, 2, 4, cap)]
        except BadParameterError:
            return None
    worst: OscillationRecord | None = None
    for dom in domains:
        spots = list(boundary_samples(dom, per_edge=4))
        for zs in f.singular_points:
            inward = _inward_at(dom, zs)
            if inward is not None:
                spots.append((zs, inward))
        rec = _oscillation_over(f, l, dom, spots)
        if rec is not None and (worst is None or
                                (not rec.decayed and worst.decayed) or
                                (rec.decayed == worst.decayed and
                                 rec.oscillations[-1] > worst.oscillations[-1])):
            worst = rec
    return worst


def _inward_at(d: Domain, zs: complex) -> complex | None:
    """Inward direction at a boundary point, or None if zs is not adjacent."""
    if isinstance(d, Disc):
        if abs(abs(zs - d.center) - d.radius) > 1e-9:
            return None
        u = zs - d.center
        return -u / abs(u)
    if isinstance(d, HalfPlanes):
        margins = [c - (zs.real * n.real + zs.imag * n.imag)
                   for n, c in zip(d.normals, d.offsets)]
        if min(margins) < -1e-9:
            return None
        binding = [i for i, m in enumerate(margins) if abs(m) <= 1e-9]
        if not binding:
            return None
        inward = -sum(d.normals[i] for i in binding)
        return inward / abs(inward) if inward != 0 else None
    return None


def _oscillation_over(f: FunctionHandle, l: int, d: Domain,
                      spots) -> OscillationRecord | None:
    g = f.derivative(l)
    scales = tuple(1e-2 * 0.25 ** j for j in range(6))
    worst: OscillationRecord | None = None
    for beta, inward in spots:
        tangent = inward * 1j
        oscs = []
        magnitude = 0.0
        for delta in scales:
            values = []
            for s in (delta, delta / 4, max(delta * delta, 1e-14)):
                for tau in (0.0, delta / 2, -delta / 2, delta, -delta, 2 * delta,
                            -2 * delta):
                    z = beta + inward * s + tangent * tau
                    if not contains(d, z):
                        continue
                    try:
                        v = g.eval(z)
                    except (OverflowError, ZeroDivisionError, ValueError):
                        v = complex(math.inf, 0.0)
                    values.append(v)
            if len(values) < 2:
                oscs.append(0.0)
                continue
            for a in values:
                if math.isfinite(abs(a)):
                    magnitude = max(magnitude, abs(a))
            osc = 0.0
            for i, a in enumerate(values):
                for b in values[i + 1:]:
                    try:
                        osc = max(osc, abs(a - b))
                    except OverflowError:
                        osc = math.inf
            oscs.append(osc)
        decayed = oscs[-1] <= max(0.05 * oscs[0], 1e-7 * max(magnitude, 1.0))
        rec = OscillationRecord(beta, scales, tuple(oscs), decayed)
        if worst is None or (not rec.decayed and worst.decayed) or \
                (rec.decayed == worst.decayed and
                 rec.oscillations[-1] > worst.oscillations[-1]):
            worst = rec
    return worst


# ---------------------------------------------------------------------------
# primitives and the chained bound
# ---------------------------------------------------------------------------


def primitive(f: FunctionHandle, base: complex, z: complex, d: Domain,
              tol: float = 1e-10) -> complex:
    """Integral of f along [base, z]; convexity keeps the segment inside d."""
    if not isinstance(d, (Disc, HalfPlanes)):
        raise BadParameterError("primitive needs a convex planar domain")
    if not contains(d, base) or not contains(d, z):
        raise BadParameterError("primitive endpoints must lie in the domain")
    return segment_integral(f, base, z, tol)


@dataclass(frozen=True)
class ChainBoundResult:
    order_low: int
    order_high: int
    lhs: float
    rhs: float
    slack: float
    passed: bool
    anchor: complex
    anchor_terms: tuple[float, ...]
    diam: float
    rhs_source: str


def chain_bound(f: FunctionHandle, l: int, alpha: int, d: Domain,
                z_o: complex | None = None, cfg: ProbeConfig | None = None,
                slack: float = 0.02) -> ChainBoundResult:
    """Evaluate the repeated-primitive bound for orders l < alpha."""
    if not l < alpha:
        raise OrderViolationError(f"need l < alpha, got ({l}, {alpha})")
    if not isinstance(d, (Disc, HalfPlanes)) or not is_bounded(d):
        raise UnboundedDomainError("chained bound needs a bounded convex domain")
    z_o = interior_point(d) if z_o is None else z_o
    if not contains(d, z_o):
        raise BadParameterError("anchor point must lie in the domain")
    cfg = cfg or ProbeConfig()
    lhs = estimate_sup(f, l, d, cfg).sup_estimate
    diam = diameter(d)
    sup_alpha = closed_form_sup(f, alpha, d)
    rhs_source = "closed_form"
    if sup_alpha is None:
        sup_alpha = estimate_sup(f, alpha, d, cfg).sup_estimate
        rhs_source = "probe"
    anchor_terms = tuple(abs(f.derivative(k).eval(z_o)) * diam ** (k - l)
                         for k in range(l, alpha))
    rhs = sup_alpha * diam ** (alpha - l) + sum(anchor_terms)
    passed = lhs <= rhs * (1.0 + slack)
    return ChainBoundResult(l, alpha, lhs, rhs, slack, passed, z_o,
                            anchor_terms, diam, rhs_source)


# ---------------------------------------------------------------------------
# gap checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GapCheckReport:
    checked_orders: tuple[int, ...]
    records: tuple
    passed: bool


def gap_check_halflines(f: FunctionHandle, orders: OrderSet, d: Domain,
                        cfg: ProbeConfig | None = None,
                        slack: float = 0.05) -> GapCheckReport:
    """Verify every gap order of F against its tightest bracket in F.

    The domain must be unbounded (every point on a ray).  The orders in F
    are first checked for boundedness; a diverging input is an error, not
    a failed verification.
    """
    if orders.sup_infinite:
        raise SupInfiniteError("gap checking needs an explicit finite set")
    if not isinstance(d, HalflineFamily) and is_bounded(d):
        raise BadParameterError("gap check over half-lines needs an unbounded domain")
    cfg = cfg or ProbeConfig()
    for a in orders.elements:
        exact = closed_form_sup(f, a, d)
        if exact is not None and math.isinf(exact):
            raise UnboundedInputError(f"derivative order {a} diverges on the domain")
        if exact is None:
            report = estimate_sup(f, a, d, cfg)
            if report.verdict == DIVERGENCE_WITNESS:
                raise UnboundedInputError(
                    f"derivative order {a} diverges on the domain")
    gaps = tuple(l for l in orders.filled().elements
                 if l not in orders.elements)
    records: list[VerificationRecord] = []
    for l in gaps:
        alpha1 = max(a for a in orders.elements if a < l)
        alpha2 = min(a for a in orders.elements if a > l)
        records.append(verify_max_form(f, d, alpha1, l, alpha2, cfg, slack))
    return GapCheckReport(gaps, tuple(records), all(r.passed for r in records))


def gap_check_bounded(f: FunctionHandle, orders: OrderSet, d: Domain,
                      cfg: ProbeConfig | None = None,
                      slack: float = 0.02) -> GapCheckReport:
    """Verify every order below sup F via the chained primitive bound."""
    if orders.sup_infinite:
        raise SupInfiniteError("gap checking needs an explicit finite set")
    alpha = orders.supremum
    cfg = cfg or ProbeConfig()
    exact = closed_form_sup(f, alpha, d)
    if exact is not None and math.isinf(exact):
        raise UnboundedInputError(f"derivative order {alpha} diverges on the domain")
    if exact is None:
        report = estimate_sup(f, alpha, d, cfg)
        if report.verdict == DIVERGENCE_WITNESS:
            raise UnboundedInputError(
                f"derivative order {alpha} diverges on the domain")
    gaps = tuple(l for l in orders.filled_from_zero().elements
                 if l not in orders.elements)
    records = tuple(chain_bound(f, l, alpha, d, None, cfg, slack) for l in gaps)
    return GapCheckReport(gaps, records, all(r.passed for r in records))
