"""Smallest-prime-factor sieve, factorization and the Omega function."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import InvalidArgumentError, OutOfRangeError, ResourceError

ExponentVector = list[tuple[int, int]]


@dataclass(frozen=True)
class PrimeTable:
    """Read-only sieve table up to ``limit``.

    ``smallest_prime_factor[n]`` is defined for ``2 <= n <= limit``; entries
    0 and 1 are zero.
    """

    limit: int
    smallest_prime_factor: np.ndarray = field(repr=False)
    primes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.smallest_prime_factor.setflags(write=False)
        self.primes.setflags(write=False)

    @cached_property
    def omega_array(self) -> np.ndarray:
        """Omega(n) for every ``0 <= n <= limit`` (Omega(0) is set to 0)."""
        spf = self.smallest_prime_factor
        out = np.zeros(self.limit + 1, dtype=np.int16)
        lo = 2
        # n // spf(n) <= n // 2, so each dyadic block only reads finished entries
        while lo <= self.limit:
            hi = min(2 * lo, self.limit + 1)
            n = np.arange(lo, hi)
            out[lo:hi] = out[n // spf[lo:hi]] + 1
            lo = hi
        out.setflags(write=False)
        return out

    def _check(self, n: int) -> None:
        if n < 1:
            raise InvalidArgumentError(f"n must be a positive integer, got {n}")
        if n > self.limit:
            raise OutOfRangeError(f"n={n} exceeds the sieve limit {self.limit}")


def build_prime_table(limit: int) -> PrimeTable:
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be >= 2, got {limit}")
    try:
        spf = np.zeros(limit + 1, dtype=np.int64)
        for p in range(2, int(limit**0.5) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        idx = np.flatnonzero(spf[2:] == 0) + 2
        spf[idx] = idx
    except MemoryError as exc:
        raise ResourceError(
            f"cannot allocate a sieve of {limit + 1} entries ({8 * (limit + 1)} bytes)"
        ) from exc
    return PrimeTable(limit=limit, smallest_prime_factor=spf, primes=idx)


def factorize(n: int, table: PrimeTable) -> ExponentVector:
    """Exponent vector ``[(p, a), ...]`` of ``n``; ``1`` maps to ``[]``."""
    table._check(n)
    spf = table.smallest_prime_factor
    entries: ExponentVector = []
    while n > 1:
        p = int(spf[n])
        a = 0
        while n % p == 0:
            n //= p
            a += 1
        entries.append((p, a))
    return entries


def omega(n: int, table: PrimeTable) -> int:
    return sum(a for _, a in factorize(n, table))


def reconstruct(entries: ExponentVector) -> int:
    out = 1
    for p, a in entries:
        out *= p**a
    return out
