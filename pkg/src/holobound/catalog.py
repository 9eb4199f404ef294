"""Built-in holomorphic functions with exact derivatives of every order.

Each handle evaluates from a closed formula and produces, for any l >= 0, a
new handle for its l-th derivative.  The chains are exact:

* ``pole``             1/(z - w)          -> (-1)^l l! (z - w)^(-l-1)
* ``monomial``         z^m                -> falling-factorial coefficients
* ``directional-exp``  exp(e^{-i theta} z) -> e^{-il theta} times itself
* ``sine``             sin z              -> cycles sin/cos with signs
* ``boundary-essential`` (z-1) exp((z+1)/(z-1)) -> exp((z+1)/(z-1)) times an
  integer-coefficient Laurent polynomial in 1/(z-1), advanced symbolically
  so no cancellation occurs near z = 1
* ``constant`` / ``sum`` / ``scalar-multiple``  combinators, closed under
  differentiation

Handles are immutable and safe to share.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BadParameterError
from .geometry import (
    Disc,
    DiscExterior,
    Domain,
    HalfPlanes,
    HalflineFamily,
    Plane,
    distance_to_closure,
    max_abs_over_closure,
    support_value,
)


class FunctionHandle:
    """Common interface: exact evaluation plus a closed derivative chain."""

    kind = "abstract"

    def eval(self, z: complex) -> complex:
        raise NotImplementedError

    def derivative(self, l: int) -> "FunctionHandle":
        raise NotImplementedError

    @property
    def analyticity(self) -> Domain:
        return Plane()

    @property
    def singular_points(self) -> tuple[complex, ...]:
        return ()

    @property
    def growth_directions(self) -> tuple[complex, ...]:
        """Directions along which the modulus is known to blow up."""
        return ()

    def __call__(self, z: complex) -> complex:
        return self.eval(z)


def _check_order(l: int) -> int:
    if not isinstance(l, int) or l < 0:
        raise BadParameterError(f"derivative order must be an integer >= 0, got {l}")
    return l


@dataclass(frozen=True)
class Pole(FunctionHandle):
    """order-th derivative of 1/(z - w)."""

    w: complex
    order: int = 0
    kind = "pole"

    def eval(self, z: complex) -> complex:
        k = self.order
        return (-1) ** k * math.factorial(k) * (z - self.w) ** (-k - 1)

    def derivative(self, l: int) -> "Pole":
        return Pole(self.w, self.order + _check_order(l))

    @property
    def analyticity(self) -> Domain:
        return DiscExterior(self.w, 0.0)

    @property
    def singular_points(self) -> tuple[complex, ...]:
        return (self.w,)


@dataclass(frozen=True)
class BoundaryEssential(FunctionHandle):
    """order-th derivative of (z-1)*exp((z+1)/(z-1)).

    Stored as exp((z+1)/(z-1)) * sum(a_k * v^k) with v = 1/(z-1); the base
    function is the k = -1 monomial.  Differentiation maps the coefficient
    on v^k to -2 on v^(k+2) and -k on v^(k+1), all in exact integers.
    """

    coeffs: tuple[tuple[int, int], ...] = ((-1, 1),)
    order: int = 0
    kind = "boundary-essential"

    def eval(self, z: complex) -> complex:
        v = 1.0 / (z - 1.0)
        inner = cmath.exp((z + 1.0) * v)
        return inner * sum(a * v ** k for k, a in self.coeffs)

    def derivative(self, l: int) -> "BoundaryEssential":
        _check_order(l)
        coeffs = dict(self.coeffs)
        for _ in range(l):
            nxt: dict[int, int] = {}
            for k, a in coeffs.items():
                nxt[k + 2] = nxt.get(k + 2, 0) - 2 * a
                nxt[k + 1] = nxt.get(k + 1, 0) - k * a
            coeffs = {k: a for k, a in nxt.items() if a != 0}
        return BoundaryEssential(tuple(sorted(coeffs.items())), self.order + l)

    @property
    def analyticity(self) -> Domain:
        return DiscExterior(1.0 + 0j, 0.0)

    @property
    def singular_points(self) -> tuple[complex, ...]:
        return (1.0 + 0j,)


@dataclass(frozen=True)
class DirectionalExp(FunctionHandle):
    """order-th derivative of exp(e^{-i theta} z): e^{-i order theta} times it."""

    theta: float
    order: int = 0
    kind = "directional-exp"

    def eval(self, z: complex) -> complex:
        u = cmath.exp(-1j * self.theta)
        return cmath.exp(-1j * self.order * self.theta) * cmath.exp(u * z)

    def derivative(self, l: int) -> "DirectionalExp":
        return DirectionalExp(self.theta, self.order + _check_order(l))

    @property
    def growth_directions(self) -> tuple[complex, ...]:
        return (cmath.exp(1j * self.theta),)


@dataclass(frozen=True)
class Monomial(FunctionHandle):
    """coeff * z^power with power >= 0."""

    power: int
    coeff: complex = 1.0 + 0j
    kind = "monomial"

    def __post_init__(self):
        if not isinstance(self.power, int) or self.power < 0:
            raise BadParameterError("monomial power must be an integer >= 0")

    def eval(self, z: complex) -> complex:
        return self.coeff * z ** self.power

    def derivative(self, l: int) -> "Monomial":
        _check_order(l)
        if l > self.power:
            return Monomial(0, 0j)
        return Monomial(self.power - l, self.coeff * math.perm(self.power, l))

    @property
    def growth_directions(self) -> tuple[complex, ...]:
        return (1.0 + 0j,) if self.power > 0 else ()


@dataclass(frozen=True)
class Sine(FunctionHandle):
    """sin shifted by phase quarter-turns; derivatives advance the phase."""

    shift: int = 0
    kind = "sine"

    def eval(self, z: complex) -> complex:
        k = self.shift % 4
        if k == 0:
            return cmath.sin(z)
        if k == 1:
            return cmath.cos(z)
        if k == 2:
            return -cmath.sin(z)
        return -cmath.cos(z)

    def derivative(self, l: int) -> "Sine":
        return Sine((self.shift + _check_order(l)) % 4)

    @property
    def growth_directions(self) -> tuple[complex, ...]:
        return (1j, -1j)


@dataclass(frozen=True)
class Constant(FunctionHandle):
    value: complex
    kind = "constant"

    def eval(self, z: complex) -> complex:
        return complex(self.value)

    def derivative(self, l: int) -> "Constant":
        return self if _check_order(l) == 0 else Constant(0j)


@dataclass(frozen=True)
class ScalarMultiple(FunctionHandle):
    scalar: complex
    inner: FunctionHandle
    kind = "scalar-multiple"

    def eval(self, z: complex) -> complex:
        return self.scalar * self.inner.eval(z)

    def derivative(self, l: int) -> "ScalarMultiple":
        return ScalarMultiple(self.scalar, self.inner.derivative(l))

    @property
    def analyticity(self) -> Domain:
        return self.inner.analyticity

    @property
    def singular_points(self) -> tuple[complex, ...]:
        return self.inner.singular_points

    @property
    def growth_directions(self) -> tuple[complex, ...]:
        return self.inner.growth_directions


@dataclass(frozen=True)
class Sum(FunctionHandle):
    parts: tuple[FunctionHandle, ...]
    kind = "sum"

    def __post_init__(self):
        if not self.parts:
            raise BadParameterError("sum needs at least one part")
        if len(set(self.singular_points)) > 1:
            raise BadParameterError(
                "sums with more than one singular point are not supported")

    def eval(self, z: complex) -> complex:
        return sum(p.eval(z) for p in self.parts)

    def derivative(self, l: int) -> "Sum":
        _check_order(l)
        return Sum(tuple(p.derivative(l) for p in self.parts))

    @property
    def analyticity(self) -> Domain:
        pts = set(self.singular_points)
        if not pts:
            return Plane()
        return DiscExterior(next(iter(pts)), 0.0)

    @property
    def singular_points(self) -> tuple[complex, ...]:
        return tuple(s for p in self.parts for s in p.singular_points)

    @property
    def growth_directions(self) -> tuple[complex, ...]:
        return tuple(g for p in self.parts for g in p.growth_directions)


# ---------------------------------------------------------------------------
# factory
# ---------------------------------------------------------------------------

CATALOG_KINDS = (
    "pole", "boundary-essential", "directional-exp", "monomial", "sine",
    "constant", "sum", "scalar-multiple",
)


def make(kind: str, **params) -> FunctionHandle:
    """Build a catalog function by name, validating parameters."""
    kind = kind.replace("_", "-")
    try:
        if kind == "pole":
            w = _as_complex(params.pop("w"))
            _no_extras(kind, params)
            return Pole(w)
        if kind == "boundary-essential":
            _no_extras(kind, params)
            return BoundaryEssential()
        if kind == "directional-exp":
            if "direction" in params:
                direction = _as_complex(params.pop("direction"))
                if direction == 0:
                    raise BadParameterError("direction must be non-zero")
                theta = cmath.phase(direction)
            else:
                theta = float(params.pop("theta"))
                if not math.isfinite(theta):
                    raise BadParameterError("theta must be finite")
            _no_extras(kind, params)
            return DirectionalExp(theta)
        if kind == "monomial":
            power = params.pop("power")
            coeff = _as_complex(params.pop("coeff", 1.0))
            _no_extras(kind, params)
            return Monomial(power, coeff)
        if kind == "sine":
            _no_extras(kind, params)
            return Sine()
        if kind == "constant":
            value = _as_complex(params.pop("value"))
            _no_extras(kind, params)
            return Constant(value)
        if kind == "sum":
            parts = tuple(params.pop("parts"))
            _no_extras(kind, params)
            return Sum(parts)
        if kind == "scalar-multiple":
            scalar = _as_complex(params.pop("scalar"))
            inner = params.pop("inner")
            _no_extras(kind, params)
            return ScalarMultiple(scalar, inner)
    except KeyError as exc:
        raise BadParameterError(f"missing parameter {exc} for kind '{kind}'") from exc
    except (TypeError, ValueError) as exc:
        raise BadParameterError(f"invalid parameter for kind '{kind}': {exc}") from exc
    raise BadParameterError(f"unknown function kind '{kind}'")


def _as_complex(v) -> complex:
    z = complex(v)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise BadParameterError("parameter must be finite")
    return z


def _no_extras(kind: str, params: dict) -> None:
    if params:
        raise BadParameterError(f"unexpected parameters for '{kind}': {sorted(params)}")


# ---------------------------------------------------------------------------
# closed-form sup-norms over domains
# ---------------------------------------------------------------------------


def closed_form_sup(f: FunctionHandle, l: int, d: Domain) -> float | None:
    """Exact sup of |f^{(l)}| over the domain, when a formula exists.

    Returns ``math.inf`` when the sup is known to be infinite and ``None``
    when no closed form is available (probing is the fallback).
    """
    _check_order(l)
    if isinstance(f, Constant):
        return abs(f.value) if l == 0 else 0.0
    if isinstance(f, Pole):
        total = f.order + l
        dist = distance_to_closure(d, f.w)
        if dist == 0.0:
            return math.inf
        return math.factorial(total) / dist ** (total + 1)
    if isinstance(f, Monomial):
        g = f.derivative(l)
        if g.power == 0:
            return abs(g.coeff)
        top = max_abs_over_closure(d)
        if math.isinf(top):
            return math.inf
        return abs(g.coeff) * top ** g.power
    if isinstance(f, DirectionalExp):
        # |f^{(l)}(z)| = |f(z)| = exp(<z, e^{i theta}>)
        s = support_value(d, cmath.exp(1j * f.theta))
        return math.inf if math.isinf(s) else math.exp(s)
    if isinstance(f, Sine):
        if isinstance(d, HalflineFamily) and all(
            ray.base.imag == 0.0 and abs(ray.direction.imag) == 0.0
            for ray in d.rays
        ):
            return 1.0  # |sin| and |cos| both have sup 1 on an infinite real ray
        return None
    if isinstance(f, ScalarMultiple):
        inner = closed_form_sup(f.inner, l, d)
        if inner is None:
            return None
        return abs(f.scalar) * inner
    return None
