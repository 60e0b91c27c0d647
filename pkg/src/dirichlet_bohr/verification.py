"""Checks behind ``dirichlet-bohr verify``: the published constants and consistency properties."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BohrError
from .lift import (
    DirichletPolynomial,
    evaluate_dirichlet,
    evaluate_monomials,
    lattice_for_degree,
    lift,
    rogosinski_halfplane_bound,
)
from .oracles import cached_direct_sum, lattice_enumeration_check
from .primes import build_prime_table
from .solver import (
    BOHR_TARGET,
    CITED_CONSTANTS,
    MIXED_TARGET,
    R2_LITERAL,
    bohr_bound_modulus,
    bohr_bound_squared,
    radius_to_abscissa,
    rogosinski_radius,
    solve_abscissa,
)
from .zeta import DEFAULT_POLICY, almost_prime_zeta

PUBLISHED_BOHR_ROOT = 1.7267
PUBLISHED_MIXED_ROOT = 1.2061
ROOT_WINDOW = 2e-3
GRID_SLACK = 1e-6
LIFT_TOL = 1e-12
RADIUS_RESIDUAL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str


@lru_cache(maxsize=None)
def _root(target: float):
    start = time.perf_counter()
    result = solve_abscissa(target)
    return result, time.perf_counter() - start


def check_bohr_root() -> CheckResult:
    r, elapsed = _root(BOHR_TARGET)
    ok = abs(r.root - PUBLISHED_BOHR_ROOT) <= ROOT_WINDOW and r.residual.contains(0.0) and elapsed < 10.0
    return CheckResult(1, "root of F = 1/2 near 1.7267", ok, f"root={r.root:.8f}")


def check_mixed_root() -> CheckResult:
    r, _ = _root(MIXED_TARGET)
    ok = abs(r.root - PUBLISHED_MIXED_ROOT) <= ROOT_WINDOW and r.residual.contains(0.0)
    return CheckResult(2, "root of F = 1 near 1.2061", ok, f"root={r.root:.8f}")


def check_lower_bounds() -> CheckResult:
    half = radius_to_abscissa(0.5)
    third = radius_to_abscissa(1 / 3)
    root = _root(BOHR_TARGET)[0].root
    window = (CITED_CONSTANTS["bohr_abscissa_lower_bound"], CITED_CONSTANTS["bohr_abscissa_upper_bound_prior"])
    ok = (
        abs(half - 1.0) <= 1e-12
        and abs(third - 1.5849625007) <= 1e-9
        and window[0] <= root < window[1]
    )
    return CheckResult(3, "radius-to-abscissa constants and root window", ok, f"log3/log2={third:.10f}")


def check_kernel_vs_oracle(prime_limit: int = 10**6) -> CheckResult:
    N = 10**6
    if prime_limit < N:
        return CheckResult(4, "almost-prime kernel vs direct sum", False, f"prime limit {prime_limit} < {N}")
    table = lru_cache(maxsize=1)(lambda: build_prime_table(prime_limit))
    worst = 0.0
    ok = True
    for k in range(1, 6):
        for s in (3.0, 4.0, 6.0):
            kernel = almost_prime_zeta(k, s, DEFAULT_POLICY)
            oracle = cached_direct_sum(k, s, N, table)
            gap = abs(kernel.value - oracle.value)
            budget = kernel.error + oracle.tail_bound
            ok &= gap <= budget
            worst = max(worst, gap / budget if budget else math.inf)
    return CheckResult(4, "almost-prime kernel vs direct sum", ok, f"max gap/budget={worst:.3f}")


def check_bound_functionals() -> CheckResult:
    grid = np.linspace(0.0, 1.0, 1001)
    s1 = _root(BOHR_TARGET)[0].root
    s2 = _root(MIXED_TARGET)[0].root
    worst = -math.inf
    for a in grid:
        worst = max(
            worst,
            bohr_bound_modulus(float(a), s1).upper,
            bohr_bound_squared(float(a), s2).upper,
        )
    return CheckResult(5, "bound functionals stay <= 1", worst <= 1.0 + GRID_SLACK, f"max={worst:.10f}")


def check_rogosinski_radii() -> CheckResult:
    radii = [rogosinski_radius(l) for l in range(3, 21)]
    residual = max(abs(1 - r - 2 * r ** (l + 1)) for l, r in zip(range(3, 21), radii))
    ok = (
        residual < RADIUS_RESIDUAL
        and rogosinski_radius(1) == 0.5
        and rogosinski_radius(2) == R2_LITERAL
        and all(a < b for a, b in zip(radii, radii[1:]))
    )
    return CheckResult(6, "Rogosinski radii", ok, f"max residual={residual:.1e}")


def check_lattices() -> CheckResult:
    table = build_prime_table(100)
    ok = True
    for k in range(2, 101):
        spec = lattice_for_degree(k, table)
        ok &= lattice_enumeration_check(spec)
        own = next(a for a in spec.points if spec.in_log_form(a) and _value(spec, a) == k)
        ok &= spec.in_integer_form(own)
    four = lattice_for_degree(4, table)
    ok &= set(four.points) == {(0, 0), (1, 0), (0, 1), (2, 0)}
    return CheckResult(7, "lattice exactness for k = 2..100", ok, "")


def _value(spec, alpha) -> int:
    return math.prod(p**a for p, a in zip(spec.prime_basis, alpha))


def check_lift_round_trip(seed: int = 20240501) -> CheckResult:
    rng = np.random.default_rng(seed)
    table = build_prime_table(200)
    worst = 0.0
    for _ in range(100):
        degree = int(rng.integers(1, 201))
        radius = rng.uniform(0.0, 1.0, degree)
        coeffs = radius * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, degree))
        poly = DirichletPolynomial(tuple(coeffs))
        s = complex(rng.uniform(0.5, 3.0), rng.uniform(-50.0, 50.0))
        direct = evaluate_dirichlet(poly, s)
        lifted = evaluate_monomials(lift(poly, table), s)
        worst = max(worst, abs(direct - lifted) / abs(direct))
    return CheckResult(8, "Bohr lift round trip", worst < LIFT_TOL, f"max rel dev={worst:.1e}")


def check_ordering() -> CheckResult:
    table = build_prime_table(50)
    bounds = {k: rogosinski_halfplane_bound(k, table) for k in range(2, 51)}
    below = [k for k, b in bounds.items() if not (math.isfinite(b) and b >= 1.0)]
    ok = not below and _root(BOHR_TARGET)[0].root > 1.0
    detail = f"min bound={min(bounds.values()):.6f}"
    if below:
        detail += f"; below 1 at k={below}"
    return CheckResult(9, "half-plane bounds >= 1 and Bohr root > 1", ok, detail)


def run_checks(prime_limit: int = 10**6) -> list[CheckResult]:
    checks = [
        check_bohr_root,
        check_mixed_root,
        check_lower_bounds,
        lambda: check_kernel_vs_oracle(prime_limit),
        check_bound_functionals,
        check_rogosinski_radii,
        check_lattices,
        check_lift_round_trip,
        check_ordering,
    ]
    out = []
    for i, check in enumerate(checks, start=1):
        try:
            out.append(check())
        except BohrError as exc:
            out.append(CheckResult(i, "error", False, str(exc)))
    return out
