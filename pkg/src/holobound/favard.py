"""Favard constants, whole-line derivative interpolation constants, and the
max-form inequality verifier.

The n-th Favard constant is the series

    K_n = (4/pi) * sum_{j>=0} ((-1)^j / (2j+1))^(n+1),

alternating for even n and positive for odd n.  Both branches return a
certified enclosure:

* even n: repeated averaging of the partial sums (the Euler transform).
  The coefficients (2j+1)^(-n-1) are moments of a positive measure, hence
  totally monotone, so every averaged row is again the partial-sum sequence
  of an alternating series with the same limit; consecutive entries of any
  row bracket the sum, and the final bracket is the reported tail bound.
  Direct term-by-term summation would need ~10^10 terms for n = 0 at
  1e-10, far past the term cap.
* odd n: partial sum plus an Euler-Maclaurin tail with corrections through
  the third-derivative term.  The summand is completely monotone, so the
  remainder is bounded by the first omitted correction.

The whole-line interpolation constant for derivative orders (0, k, n) is
C(n, k) = K_{n-k} / K_n^(1 - k/n), exactly 1 at the endpoints k = 0, n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import probe as probe_mod
from .catalog import FunctionHandle, closed_form_sup
from .errors import (
    BadParameterError,
    OrderViolationError,
    TolTooTightError,
    UnboundedInputError,
)
from .geometry import Domain, HalflineFamily, is_bounded

TERM_CAP = 10 ** 7

CLOSED_FORM_SOURCE = "closed_form"
PROBE_SOURCE = "probe"


@dataclass(frozen=True)
class ConstantResult:
    """A numeric constant with a certified enclosure radius."""

    value: float
    tail_bound: float
    terms_used: int


def favard_constant(n: int, tol: float = 1e-10) -> ConstantResult:
    if not isinstance(n, int) or n < 0:
        raise BadParameterError("series index must be an integer >= 0")
    if not tol > 0:
        raise BadParameterError("tolerance must be positive")
    scale = 4.0 / math.pi
    inner_tol = tol / scale
    if n % 2 == 0:
        value, bound, used = _alternating_sum(n + 1, inner_tol)
    else:
        value, bound, used = _positive_sum(n + 1, inner_tol)
    return ConstantResult(scale * value, scale * bound, used)


def _alternating_sum(p: int, tol: float) -> tuple[float, float, int]:
    """sum_j (-1)^j (2j+1)^(-p) with a bracketing tail bound."""
    count = 24
    while count <= TERM_CAP:
        row = []
        acc = 0.0
        for j in range(count):
            acc += (2.0 * j + 1.0) ** (-p) * (1 if j % 2 == 0 else -1)
            row.append(acc)
        while len(row) > 2:
            row = [(row[i] + row[i + 1]) / 2.0 for i in range(len(row) - 1)]
        lo, hi = min(row), max(row)
        value = (lo + hi) / 2.0
        bound = (hi - lo) / 2.0 + 4e-16 * count * max(1.0, abs(value))
        if bound <= tol:
            return value, bound, count
        count *= 2
    raise TolTooTightError(f"alternating series needs more than {TERM_CAP} terms")


def _positive_sum(p: int, tol: float) -> tuple[float, float, int]:
    """sum_j (2j+1)^(-p) (p >= 2) with an Euler-Maclaurin tail at J."""
    head_terms = 64
    while head_terms <= TERM_CAP:
        x = 2.0 * head_terms + 1.0
        integral = x ** (1 - p) / (2.0 * (p - 1))
        half = x ** (-p) / 2.0
        c1 = p * x ** (-p - 1) / 6.0
        c2 = -8.0 * p * (p + 1) * (p + 2) * x ** (-p - 3) / 720.0
        remainder = 32.0 * p * (p + 1) * (p + 2) * (p + 3) * (p + 4) \
            * x ** (-p - 5) / 30240.0
        head = math.fsum((2.0 * j + 1.0) ** (-p) for j in range(head_terms))
        value = head + integral + half + c1 + c2
        bound = remainder + 8e-16 * max(1.0, value)
        if bound <= tol:
            return value, bound, head_terms
        head_terms *= 2
    raise TolTooTightError(f"series tail needs more than {TERM_CAP} terms")


def lk_constant(n: int, k: int, tol: float = 1e-9) -> ConstantResult:
    """Whole-line constant comparing derivative orders 0, k, n."""
    if not isinstance(n, int) or not isinstance(k, int) or n < 1:
        raise BadParameterError("need integers with n >= 1")
    if not 0 <= k <= n:
        raise BadParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0 or k == n:
        return ConstantResult(1.0, 0.0, 0)
    sub_tol = tol / 8.0
    high = favard_constant(n - k, sub_tol)
    low = favard_constant(n, sub_tol)
    exponent = 1.0 - k / n
    value = high.value / low.value ** exponent
    rel = high.tail_bound / high.value + exponent * low.tail_bound / low.value
    bound = value * rel * 1.5 + 4e-16 * value
    return ConstantResult(value, bound, high.terms_used + low.terms_used)


def shifted_lk_constant(alpha1: int, l: int, alpha2: int,
                        tol: float = 1e-9) -> ConstantResult:
    """Constant for bracketed orders (alpha1, l, alpha2).

    Applying the whole-line inequality to the alpha1-th derivative reduces
    the triple to orders (0, l - alpha1, alpha2 - alpha1).
    """
    if not alpha1 < l < alpha2:
        raise OrderViolationError(
            f"need alpha1 < l < alpha2, got ({alpha1}, {l}, {alpha2})")
    return lk_constant(alpha2 - alpha1, l - alpha1, tol)


# ---------------------------------------------------------------------------
# max-form verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationRecord:
    orders: tuple[int, int, int]
    sups: tuple[float, float, float]       # at alpha1, l, alpha2
    sources: tuple[str, str, str]
    constant: ConstantResult
    lhs: float
    rhs: float
    slack: float
    passed: bool


def sup_with_source(f: FunctionHandle, l: int, d: Domain,
                    cfg: "probe_mod.ProbeConfig | None" = None) -> tuple[float, str]:
    """Closed-form sup when the catalog has one, else a probe estimate.

    Returns ``math.inf`` with source "closed_form" for a known-infinite sup
    and with source "probe" when a divergence witness was found.
    """
    exact = closed_form_sup(f, l, d)
    if exact is not None:
        return exact, CLOSED_FORM_SOURCE
    report = probe_mod.estimate_sup(f, l, d, cfg)
    if report.verdict == probe_mod.DIVERGENCE_WITNESS:
        return math.inf, PROBE_SOURCE
    return report.sup_estimate, PROBE_SOURCE


def verify_max_form(f: FunctionHandle, probe_domain: Domain, alpha1: int,
                    l: int, alpha2: int,
                    cfg: "probe_mod.ProbeConfig | None" = None,
                    slack: float = 0.05, tol: float = 1e-9) -> VerificationRecord:
    """Check sup|f^(l)| <= C(alpha1,l,alpha2) * max of the bracketing sups.

    The right-hand side gets a multiplicative slack (default 5%) to absorb
    probe underestimation when no closed-form sups are available.
    """
    constant = shifted_lk_constant(alpha1, l, alpha2, tol)
    if isinstance(probe_domain, HalflineFamily):
        pass
    elif is_bounded(probe_domain):
        raise BadParameterError(
            "max-form verification needs an unbounded domain or a ray family")
    sup_low, src_low = sup_with_source(f, alpha1, probe_domain, cfg)
    sup_high, src_high = sup_with_source(f, alpha2, probe_domain, cfg)
    if math.isinf(sup_low) or math.isinf(sup_high):
        raise UnboundedInputError(
            f"derivative of order {alpha1 if math.isinf(sup_low) else alpha2} "
            "diverges on the domain")
    sup_mid, src_mid = sup_with_source(f, l, probe_domain, cfg)
    rhs = constant.value * max(sup_low, sup_high)
    passed = sup_mid <= rhs * (1.0 + slack)
    return VerificationRecord(
        orders=(alpha1, l, alpha2),
        sups=(sup_low, sup_mid, sup_high),
        sources=(src_low, src_mid, src_high),
        constant=constant,
        lhs=sup_mid,
        rhs=rhs,
        slack=slack,
        passed=passed,
    )
