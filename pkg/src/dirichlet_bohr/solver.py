"""Certified roots of ``F(sigma) = target`` and the closed-form constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .enclosure import ErrorBoundedValue
from .errors import BracketError, InvalidArgumentError, PrecisionError
from .zeta import DEFAULT_POLICY, TruncationPolicy, bohr_sum

BOHR_TARGET = 0.5
MIXED_TARGET = 1.0
DEFAULT_TOL = 1e-8
INITIAL_BRACKET = (1.0, 3.0)
MAX_TIGHTENINGS = 3

# Reported for comparison only; derived in prior work, never recomputed here.
CITED_CONSTANTS = {
    "bohr_abscissa_upper_bound_prior": 1.8154,
    "mixed_sigma_bound_prior": 1.7287,
    "bohr_abscissa_lower_bound": math.log(3) / math.log(2),
}

R2_LITERAL = math.sqrt(3) / 8
R2_ALTERNATE = math.sqrt(3 / 8)


@dataclass(frozen=True)
class AbscissaResult:
    root: float
    bracket: tuple[float, float]
    residual: ErrorBoundedValue
    iterations: int
    policy: TruncationPolicy
    target: float


def _sign(sigma: float, target: float, policy: TruncationPolicy) -> tuple[int, ErrorBoundedValue]:
    f = bohr_sum(sigma, policy) - target
    if f.lower > 0.0:
        return 1, f
    if f.upper < 0.0:
        return -1, f
    return 0, f


def solve_abscissa(
    target: float,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tol: float = DEFAULT_TOL,
) -> AbscissaResult:
    """Bisect the decreasing ``F`` on ``[1, 3]`` until the bracket is ``<= tol`` wide.

    At the end ``F(lo) > target > F(hi)`` holds for the enclosures, which
    certifies a root inside the bracket. ``residual`` encloses
    ``F - target`` over the whole final bracket and therefore contains 0.
    """
    if not target > 0.0:
        raise InvalidArgumentError(f"target must be positive, got {target}")
    if not tol > 0.0:
        raise InvalidArgumentError(f"tol must be positive, got {tol}")
    lo, hi = INITIAL_BRACKET
    s_lo, f_lo = _sign(lo, target, policy)
    s_hi, f_hi = _sign(hi, target, policy)
    if s_lo != 1 or s_hi != -1:
        raise BracketError(
            f"[{lo}, {hi}] does not straddle target {target}: "
            f"F({lo}) = {f_lo.value + target!r}, F({hi}) = {f_hi.value + target!r}"
        )
    iterations = 0
    tightenings = 0
    while hi - lo > tol:
        iterations += 1
        mid = 0.5 * (lo + hi)
        s_mid, f_mid = _sign(mid, target, policy)
        while s_mid == 0 and tightenings < MAX_TIGHTENINGS:
            policy = policy.tightened()
            tightenings += 1
            s_mid, f_mid = _sign(mid, target, policy)
        if s_mid == 0:
            # mid is numerically on the root; certify a bracket of width tol/2 around it
            d = 0.25 * tol
            s_left, f_left = _sign(mid - d, target, policy)
            s_right, f_right = _sign(mid + d, target, policy)
            if s_left == 1 and s_right == -1:
                lo, hi, f_lo, f_hi = mid - d, mid + d, f_left, f_right
                break
            raise PrecisionError(
                f"cannot certify the sign of F({mid}) - {target} = {f_mid!r} after "
                f"{MAX_TIGHTENINGS} policy tightenings; use a tighter policy or larger tol"
            )
        if s_mid == 1:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    # F decreasing: F - target over [lo, hi] lies in [lower(F(hi)), upper(F(lo))]
    a, b = f_hi.lower, f_lo.upper
    residual = ErrorBoundedValue(0.5 * (a + b), 0.5 * (b - a))
    return AbscissaResult(
        root=0.5 * (lo + hi),
        bracket=(lo, hi),
        residual=residual,
        iterations=iterations,
        policy=policy,
        target=target,
    )


def _check_a1(a1_abs: float) -> None:
    if not 0.0 <= a1_abs <= 1.0:
        raise InvalidArgumentError(f"|a_1| must lie in [0, 1], got {a1_abs}")


def bohr_bound_modulus(
    a1_abs: float, sigma: float, policy: TruncationPolicy = DEFAULT_POLICY
) -> ErrorBoundedValue:
    """Enclosure of ``|a_1| + (1 - |a_1|**2) F(sigma)``."""
    _check_a1(a1_abs)
    return bohr_sum(sigma, policy).scale(1.0 - a1_abs * a1_abs) + a1_abs


def bohr_bound_squared(
    a1_abs: float, sigma: float, policy: TruncationPolicy = DEFAULT_POLICY
) -> ErrorBoundedValue:
    """Enclosure of ``|a_1|**2 + (1 - |a_1|**2) F(sigma)``."""
    _check_a1(a1_abs)
    a2 = a1_abs * a1_abs
    return bohr_sum(sigma, policy).scale(1.0 - a2) + a2


def radius_to_abscissa(r: float) -> float:
    """Abscissa at which ``2**-sigma == r``."""
    if not 0.0 < r <= 1.0:
        raise InvalidArgumentError(f"radius must lie in (0, 1], got {r}")
    return -math.log2(r)


def _rogosinski_residual(r: float, l: int) -> float:
    return 1.0 - r - 2.0 * r ** (l + 1)


def rogosinski_radius(l: int, tol: float = 1e-13, alternate_r2: bool = False) -> float:
    """Positive root of ``1 - r - 2 r**(l+1) = 0`` for ``l >= 3``.

    ``l = 1`` and ``l = 2`` return the tabulated values 1/2 and sqrt(3)/8;
    ``alternate_r2`` switches the latter to sqrt(3/8).
    """
    if isinstance(l, bool) or not isinstance(l, int) or l < 1:
        raise InvalidArgumentError(f"l must be a positive integer, got {l!r}")
    if l == 1:
        return 0.5
    if l == 2:
        return R2_ALTERNATE if alternate_r2 else R2_LITERAL
    lo, hi = 0.0, 1.0
    # g(0) = 1 > 0 > g(1) = -2 and g is strictly decreasing on [0, 1]
    while True:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        g = _rogosinski_residual(mid, l)
        if g == 0.0:
            return mid
        if g > 0.0:
            lo = mid
        else:
            hi = mid
    best = min((lo, hi), key=lambda r: abs(_rogosinski_residual(r, l)))
    if abs(_rogosinski_residual(best, l)) > tol:
        raise PrecisionError(f"residual of r_{l} exceeds {tol}")
    return best
