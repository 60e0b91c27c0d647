"""Brute-force validators and the oracle regression fixture file."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .enclosure import EPS
from .errors import DomainError, InvalidArgumentError, OutOfRangeError
from .lift import LatticeSpec
from .primes import PrimeTable

FIXTURE_ENV = "BOHR_FIXTURE_DIR"
FIXTURE_NAME = "oracle_fixture.txt"
FIXTURE_HEADER = "# dirichlet-bohr oracle fixture v1"


@dataclass(frozen=True)
class OracleReport:
    value: float
    tail_bound: float
    terms_used: int
    parameters: dict = field(default_factory=dict)


def direct_sum_oracle(k: int, s: float, N: int, table: PrimeTable) -> OracleReport:
    """``sum_{n <= N, Omega(n) = k} n**-s`` by literal summation.

    ``tail_bound`` covers every ``n > N`` regardless of Omega, through
    ``N**(1-s) / (s-1)``, plus a few ulps for the summation itself.
    """
    if k < 0:
        raise InvalidArgumentError(f"k must be >= 0, got {k}")
    if not s > 1.0:
        raise DomainError(f"direct_sum_oracle requires s > 1, got s={s}")
    if N < 1:
        raise InvalidArgumentError(f"N must be positive, got {N}")
    if N > table.limit:
        raise OutOfRangeError(f"N={N} exceeds the sieve limit {table.limit}")
    omega = table.omega_array[: N + 1]
    n = np.flatnonzero(omega == k)
    n = n[n >= 1]
    terms = n.astype(float) ** -s
    # fsum is correctly rounded, so the order of terms cannot change the result
    value = math.fsum(terms)
    tail = N ** (1.0 - s) / (s - 1.0) + 4 * EPS * value
    return OracleReport(value, tail, int(n.size), {"k": k, "s": s, "N": N})


def _product_points(primes: tuple[int, ...], k: int) -> list[tuple[int, ...]]:
    out = []
    alpha = [0] * len(primes)

    def walk(i: int, n: int) -> None:
        if i == len(primes):
            out.append(tuple(alpha))
            return
        a, m = 0, n
        while m <= k:
            alpha[i] = a
            walk(i + 1, m)
            a += 1
            m *= primes[i]
        alpha[i] = 0

    walk(0, 1)
    return out


def lattice_enumeration_check(spec: LatticeSpec) -> bool:
    """Whether ``sum m_i alpha_i <= m`` and ``prod p_i**alpha_i <= k`` pick the same vectors.

    Both regions are walked completely (each pruned by its own inequality),
    which covers every vector of the bounding box that either form admits.
    ``spec.points`` must list exactly that common set.
    """
    primes, k = tuple(spec.prime_basis), spec.degree
    weights, bound = tuple(spec.integer_weights), spec.integer_bound
    if len(weights) != len(primes) or any(w <= 0 for w in weights):
        return False
    product = _product_points(primes, k)
    for alpha in product:
        if sum(w * a for w, a in zip(weights, alpha)) > bound:
            return False
    admitted = 0
    alpha = [0] * len(primes)

    def walk(i: int, budget: int, n: int) -> bool:
        nonlocal admitted
        if i == len(primes):
            admitted += 1
            return n <= k
        a, m = 0, n
        while a * weights[i] <= budget:
            alpha[i] = a
            if m > k or not walk(i + 1, budget - a * weights[i], m):
                return False
            a += 1
            m *= primes[i]
        return True

    if bound < 0 or not walk(0, bound, 1):
        return False
    return admitted == len(product) and sorted(spec.points) == sorted(product)


@dataclass(frozen=True)
class FixtureRecord:
    operation: str
    parameters: dict
    value: float
    tail_bound: float

    def key(self) -> tuple:
        return (self.operation, tuple(sorted(self.parameters.items())))


def _format_params(params: dict) -> str:
    return ";".join(f"{k}={v!r}" for k, v in sorted(params.items()))


def _parse_value(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def _parse_params(text: str) -> dict:
    out = {}
    for item in filter(None, text.split(";")):
        name, _, raw = item.partition("=")
        out[name] = _parse_value(raw)
    return out


def write_fixture(path: str | Path, records: list[FixtureRecord]) -> None:
    lines = [FIXTURE_HEADER, "# operation\tparameters\tvalue\ttail_bound"]
    for r in sorted(records, key=FixtureRecord.key):
        lines.append(f"{r.operation}\t{_format_params(r.parameters)}\t{r.value!r}\t{r.tail_bound!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_fixture(path: str | Path) -> list[FixtureRecord]:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0].strip() != FIXTURE_HEADER:
        raise InvalidArgumentError(f"{path}: not a v1 oracle fixture file")
    records = []
    for raw in lines[1:]:
        if not raw.strip() or raw.startswith("#"):
            continue
        op, params, value, tail = raw.split("\t")
        records.append(FixtureRecord(op, _parse_params(params), float(value), float(tail)))
    return records


def fixture_path() -> Path | None:
    directory = os.environ.get(FIXTURE_ENV)
    return Path(directory) / FIXTURE_NAME if directory else None


def cached_direct_sum(k: int, s: float, N: int, table_factory) -> OracleReport:
    """``direct_sum_oracle`` through the fixture file named by ``BOHR_FIXTURE_DIR``.

    ``table_factory`` is only called on a cache miss. Without the variable
    nothing is read or written.
    """
    path = fixture_path()
    params = {"k": k, "s": float(s), "N": N}
    wanted = FixtureRecord("direct_sum", params, 0.0, 0.0).key()
    records = read_fixture(path) if path is not None and path.exists() else []
    for r in records:
        if r.key() == wanted:
            return OracleReport(r.value, r.tail_bound, -1, params)
    report = direct_sum_oracle(k, s, N, table_factory())
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        records.append(FixtureRecord("direct_sum", params, report.value, report.tail_bound))
        write_fixture(path, records)
    return report
