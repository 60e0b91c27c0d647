"""Midpoint-radius enclosures of real numbers.

Arithmetic is ordinary binary64 arithmetic. Every combinator widens the
radius by ``SLACK`` times the magnitude of the result to cover the rounding of
the operation itself, so the enclosure property holds without directed
rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

EPS = 2.0**-52
SLACK = 8 * EPS
# rounding of a product can lose up to one subnormal ulp even when it underflows to 0
TINY = math.ulp(0.0)


def _up(radius: float) -> float:
    """Round a radius computed in round-to-nearest safely upward."""
    return math.nextafter(radius * (1.0 + 4 * EPS), math.inf)


@dataclass(frozen=True)
class ErrorBoundedValue:
    value: float
    error: float = 0.0

    def __post_init__(self) -> None:
        if not (self.error >= 0.0 and math.isfinite(self.error)):
            raise ValueError(f"error radius must be finite and >= 0, got {self.error}")

    @classmethod
    def exact(cls, x: float) -> ErrorBoundedValue:
        return cls(float(x), 0.0)

    @property
    def lower(self) -> float:
        return self.value - self.error

    @property
    def upper(self) -> float:
        return self.value + self.error

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def intersects(self, other: ErrorBoundedValue) -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def _coerce(self, other) -> ErrorBoundedValue:
        if isinstance(other, ErrorBoundedValue):
            return other
        return ErrorBoundedValue.exact(other)

    def __add__(self, other) -> ErrorBoundedValue:
        other = self._coerce(other)
        v = self.value + other.value
        return ErrorBoundedValue(v, _up(self.error + other.error + SLACK * abs(v)))

    __radd__ = __add__

    def __neg__(self) -> ErrorBoundedValue:
        return ErrorBoundedValue(-self.value, self.error)

    def __sub__(self, other) -> ErrorBoundedValue:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> ErrorBoundedValue:
        return self._coerce(other) - self

    def __mul__(self, other) -> ErrorBoundedValue:
        other = self._coerce(other)
        v = self.value * other.value
        err = (
            abs(self.value) * other.error
            + abs(other.value) * self.error
            + self.error * other.error
            + SLACK * abs(v)
            + TINY
        )
        return ErrorBoundedValue(v, _up(err))

    __rmul__ = __mul__

    def scale(self, c: float) -> ErrorBoundedValue:
        v = c * self.value
        return ErrorBoundedValue(v, _up(abs(c) * self.error + SLACK * abs(v) + TINY))

    def sqrt(self) -> ErrorBoundedValue:
        if self.value < 0.0:
            raise DomainError(f"square root of an enclosure centred at {self.value} < 0")
        v = math.sqrt(self.value)
        hi = math.sqrt(self.upper)
        if self.lower >= 0.0:
            # concave: the lower side is the wider one
            err = max(v - math.sqrt(self.lower), hi - v)
        else:
            err = max(v, hi - v)
        return ErrorBoundedValue(v, _up(err + SLACK * v))

    def log1p(self) -> ErrorBoundedValue:
        if self.lower <= -1.0:
            raise DomainError(f"log1p of an enclosure reaching {self.lower} <= -1")
        v = math.log1p(self.value)
        # derivative 1/(1+x) is largest at the lower edge
        err = self.error / (1.0 + self.lower)
        return ErrorBoundedValue(v, _up(err + SLACK * abs(v)))

    def __repr__(self) -> str:
        return f"ErrorBoundedValue({self.value!r} ± {self.error:.3g})"
