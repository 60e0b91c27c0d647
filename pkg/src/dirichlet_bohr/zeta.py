"""Enclosures for the Riemann zeta, prime zeta and almost-prime zeta sums.

``S_k(s)`` is the sum of ``n**-s`` over integers with exactly ``k`` prime
factors counted with multiplicity. It is the complete homogeneous symmetric
function of the values ``p**-s``, so it follows from prime zeta values by the
power-sum recurrence ``k S_k(s) = sum_{j=1..k} P(j s) S_{k-j}(s)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from .enclosure import SLACK, ErrorBoundedValue
from .errors import DomainError, InvalidArgumentError, PrecisionError


@dataclass(frozen=True)
class TruncationPolicy:
    zeta_terms: int = 64
    moebius_terms: int = 64
    k_tail_tolerance: float = 1e-14

    def __post_init__(self) -> None:
        if self.zeta_terms < 1 or self.moebius_terms < 1:
            raise InvalidArgumentError("term counts must be positive")
        if not 0.0 < self.k_tail_tolerance < 1.0:
            raise InvalidArgumentError("k_tail_tolerance must lie in (0, 1)")

    def tightened(self) -> TruncationPolicy:
        return replace(
            self,
            zeta_terms=2 * self.zeta_terms,
            moebius_terms=2 * self.moebius_terms,
            k_tail_tolerance=self.k_tail_tolerance / 2,
        )


DEFAULT_POLICY = TruncationPolicy()

# Euler-Maclaurin coefficients B_2/2!, B_4/4! and the first omitted B_6/6!
_EM_B2 = 1.0 / 12.0
_EM_B4 = -1.0 / 720.0
_EM_B6 = 1.0 / 30240.0


def _zeta_minus_one(t: np.ndarray, terms: int) -> tuple[np.ndarray, np.ndarray]:
    """Midpoints and radii of ``zeta(t) - 1`` for an array of ``t > 1``."""
    t = np.asarray(t, dtype=float)
    N = float(terms)
    n = np.arange(2, terms + 1, dtype=float)
    direct = np.sum(n[None, :] ** -t[:, None], axis=1) if terms >= 2 else np.zeros_like(t)
    tail = (
        N ** (1.0 - t) / (t - 1.0)
        - 0.5 * N**-t
        + _EM_B2 * t * N ** (-t - 1.0)
        + _EM_B4 * t * (t + 1.0) * (t + 2.0) * N ** (-t - 3.0)
    )
    value = direct + tail
    remainder = _EM_B6 * t * (t + 1.0) * (t + 2.0) * (t + 3.0) * (t + 4.0) * N ** (-t - 5.0)
    error = np.abs(remainder) + SLACK * (terms + 8) * np.abs(value)
    return value, error


def riemann_zeta(s: float, policy: TruncationPolicy = DEFAULT_POLICY) -> ErrorBoundedValue:
    if not s > 1.0:
        raise DomainError(f"riemann_zeta requires s > 1, got s={s}")
    v, e = _zeta_minus_one(np.array([s]), policy.zeta_terms)
    return ErrorBoundedValue(1.0 + float(v[0]), float(e[0]) + SLACK)


@lru_cache(maxsize=None)
def _moebius(count: int) -> np.ndarray:
    mu = np.ones(count + 1, dtype=np.int64)
    mu[0] = 0
    is_composite = np.zeros(count + 1, dtype=bool)
    for p in range(2, count + 1):
        if is_composite[p]:
            continue
        is_composite[2 * p :: p] = True
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    mu.setflags(write=False)
    return mu


def prime_zeta(s: float, policy: TruncationPolicy = DEFAULT_POLICY) -> ErrorBoundedValue:
    """Enclosure of ``sum_p p**-s`` from ``sum_m mu(m)/m log zeta(m s)``."""
    if not s > 1.0:
        raise DomainError(f"prime_zeta requires s > 1, got s={s}")
    M = policy.moebius_terms
    mu = _moebius(M)[1:]
    keep = mu != 0
    m = np.arange(1, M + 1, dtype=float)[keep]
    zm1, zerr = _zeta_minus_one(m * s, policy.zeta_terms)
    # log(1 + x) with the radius scaled by the largest derivative on the enclosure
    logs = np.log1p(zm1)
    log_err = zerr / (1.0 + np.maximum(zm1 - zerr, 0.0)) + SLACK * np.abs(logs)
    terms = mu[keep] * logs / m
    value = math.fsum(terms)
    error = float(np.sum(log_err / m)) + SLACK * float(np.sum(np.abs(terms)))
    # |log zeta(t)| <= zeta(t) - 1 <= 2**-t (1 + 2/(t - 1))
    t0 = (M + 1) * s
    tail = 2.0**-t0 * (1.0 + 2.0 / (t0 - 1.0)) / ((M + 1) * (1.0 - 2.0**-s))
    return ErrorBoundedValue(value, error + tail)


def almost_prime_zetas(
    k_max: int, s: float, policy: TruncationPolicy = DEFAULT_POLICY
) -> list[ErrorBoundedValue]:
    """Enclosures of ``S_0(s), ..., S_{k_max}(s)``."""
    if not s > 1.0:
        raise DomainError(f"almost_prime_zeta requires s > 1, got s={s}")
    if k_max < 0:
        raise InvalidArgumentError(f"k must be >= 0, got {k_max}")
    powers = [prime_zeta(j * s, policy) for j in range(1, k_max + 1)]
    out = [ErrorBoundedValue.exact(1.0)]
    for k in range(1, k_max + 1):
        out.append(_next_term(out, powers, k))
    return out


def _next_term(
    previous: list[ErrorBoundedValue], powers: list[ErrorBoundedValue], k: int
) -> ErrorBoundedValue:
    acc = ErrorBoundedValue.exact(0.0)
    for j in range(1, k + 1):
        acc = acc + powers[j - 1] * previous[k - j]
    return acc.scale(1.0 / k)


def almost_prime_zeta(
    k: int, s: float, policy: TruncationPolicy = DEFAULT_POLICY
) -> ErrorBoundedValue:
    return almost_prime_zetas(k, s, policy)[k]


@lru_cache(maxsize=512)
def bohr_sum(
    sigma: float, policy: TruncationPolicy = DEFAULT_POLICY, max_terms: int = 100_000
) -> ErrorBoundedValue:
    """Enclosure of ``F(sigma) = sum_{k>=1} sqrt(S_k(2 sigma))``.

    The outer sum stops at the first ``K`` whose geometric tail bound
    ``sqrt(S_K) q / (1 - q)`` with ``q = sqrt(P(2 sigma))`` (upper edges)
    drops below ``policy.k_tail_tolerance``. The bound uses
    ``S_{k+1} <= P S_k``: every ``(k+1)``-almost-prime is a prime times a
    ``k``-almost-prime.
    """
    s = 2.0 * sigma
    if not s > 1.0:
        raise DomainError(f"bohr_sum requires 2*sigma > 1, got sigma={sigma}")
    p1 = prime_zeta(s, policy)
    if not p1.upper < 1.0:
        raise DomainError(
            f"bohr_sum requires P(2*sigma) < 1 for its tail bound; "
            f"P({s}) <= {p1.upper} at sigma={sigma}"
        )
    q = math.sqrt(p1.upper)
    powers = [p1]
    series = [ErrorBoundedValue.exact(1.0)]
    total = ErrorBoundedValue.exact(0.0)
    for k in range(1, max_terms + 1):
        if k > 1:
            powers.append(prime_zeta(k * s, policy))
        series.append(_next_term(series, powers, k))
        root = series[k].sqrt()
        total = total + root
        tail = root.upper * q / (1.0 - q)
        if tail < policy.k_tail_tolerance:
            return ErrorBoundedValue(total.value, total.error + tail)
    raise PrecisionError(
        f"outer sum did not reach tolerance {policy.k_tail_tolerance} in {max_terms} terms"
    )
