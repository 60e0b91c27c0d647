"""Bohr lift of Dirichlet polynomials and their exponent lattices.

Substituting ``z_i = p_i**-s`` turns ``sum a_n n**-s`` into a polynomial in
the prime coordinates. The exponents occurring in a degree-``k`` polynomial
are exactly the vectors with ``prod p_i**alpha_i <= k``; that region is
rationalised into a weighted integer inequality
``sum m_i alpha_i <= m`` with the same lattice points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from pathlib import Path

import numpy as np

from .errors import DomainError, InvalidArgumentError, OutOfRangeError
from .primes import PrimeTable, factorize
from .solver import rogosinski_radius

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class DirichletPolynomial:
    """Coefficients ``a_1..a_k``; ``coefficients[n - 1]`` multiplies ``n**-s``."""

    coefficients: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) < 1:
            raise InvalidArgumentError("a Dirichlet polynomial needs degree >= 1")
        object.__setattr__(self, "coefficients", tuple(complex(c) for c in self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class MonomialExpansion:
    prime_basis: tuple[int, ...]
    terms: tuple[tuple[complex, Exponents], ...]


@dataclass(frozen=True)
class LatticeSpec:
    prime_basis: tuple[int, ...]
    degree: int
    integer_weights: tuple[int, ...]
    integer_bound: int
    points: tuple[Exponents, ...]
    scale: int = 0

    def in_log_form(self, alpha: Exponents) -> bool:
        """Exact membership in ``sum alpha_i log p_i <= log k``."""
        n = 1
        for p, a in zip(self.prime_basis, alpha):
            n *= p**a
            if n > self.degree:
                return False
        return True

    def in_integer_form(self, alpha: Exponents) -> bool:
        return sum(w * a for w, a in zip(self.integer_weights, alpha)) <= self.integer_bound


def _basis(k: int, table: PrimeTable) -> tuple[int, ...]:
    if k > table.limit:
        raise OutOfRangeError(f"degree {k} exceeds the sieve limit {table.limit}")
    primes = table.primes
    return tuple(int(p) for p in primes[: np.searchsorted(primes, k, side="right")])


def _dense(n: int, basis: tuple[int, ...], table: PrimeTable) -> Exponents:
    index = {p: i for i, p in enumerate(basis)}
    alpha = [0] * len(basis)
    for p, a in factorize(n, table):
        alpha[index[p]] = a
    return tuple(alpha)


def lift(poly: DirichletPolynomial, table: PrimeTable) -> MonomialExpansion:
    basis = _basis(poly.degree, table)
    terms = tuple(
        (c, _dense(n, basis, table))
        for n, c in enumerate(poly.coefficients, start=1)
        if c != 0
    )
    return MonomialExpansion(prime_basis=basis, terms=terms)


def _check_half_plane(s: complex) -> complex:
    s = complex(s)
    if not s.real > 0.0:
        raise DomainError(f"evaluation requires Re s > 0, got s={s}")
    return s


def evaluate_dirichlet(poly: DirichletPolynomial, s: complex) -> complex:
    s = _check_half_plane(s)
    n = np.arange(1, poly.degree + 1, dtype=float)
    a = np.asarray(poly.coefficients, dtype=complex)
    with np.errstate(over="raise", invalid="raise"):
        return complex(np.sum(a * np.exp(-s * np.log(n))))


def evaluate_monomials(expansion: MonomialExpansion, s: complex) -> complex:
    s = _check_half_plane(s)
    if not expansion.terms:
        return 0j
    z = np.exp(-s * np.log(np.asarray(expansion.prime_basis, dtype=float)))
    coeffs = np.array([c for c, _ in expansion.terms], dtype=complex)
    alphas = np.array([a for _, a in expansion.terms], dtype=np.int64).reshape(
        len(expansion.terms), len(expansion.prime_basis)
    )
    with np.errstate(over="raise", invalid="raise"):
        monomials = np.prod(z[None, :] ** alphas, axis=1)
        return complex(np.sum(coeffs * monomials))


def _integer_points(
    weights: tuple[int, ...], bound: int, accept, limit: int
) -> list[Exponents] | None:
    """All ``alpha`` with ``sum w_i alpha_i <= bound``.

    Returns ``None`` as soon as a point fails ``accept`` or more than
    ``limit`` points are found.
    """
    out: list[Exponents] = []
    alpha = [0] * len(weights)

    def walk(i: int, budget: int) -> bool:
        if i == len(weights):
            point = tuple(alpha)
            if not accept(point) or len(out) >= limit:
                return False
            out.append(point)
            return True
        a = 0
        while a * weights[i] <= budget:
            alpha[i] = a
            if not walk(i + 1, budget - a * weights[i]):
                return False
            a += 1
        alpha[i] = 0
        return True

    return out if walk(0, bound) else None


def lattice_for_degree(k: int, table: PrimeTable, max_scale: int = 100_000) -> LatticeSpec:
    """Smallest-scale integer rationalisation of the degree-``k`` exponent region.

    For ``D = 1, 2, ...`` the weights ``round(D log p_i)`` and bound
    ``round(D log k)`` are reduced by their gcd and accepted once their
    lattice points coincide with the exponent vectors of ``1..k``.
    """
    if k < 2:
        raise InvalidArgumentError(f"lattice degree must be >= 2, got {k}")
    basis = _basis(k, table)
    points = tuple(sorted(_dense(n, basis, table) for n in range(1, k + 1)))
    members = set(points)
    logs = [math.log(p) for p in basis]
    log_k = math.log(k)
    for D in range(1, max_scale + 1):
        raw = [round(D * x) for x in logs] + [round(D * log_k)]
        g = reduce(math.gcd, raw)
        weights, bound = tuple(w // g for w in raw[:-1]), raw[-1] // g
        if min(weights) < 1:
            continue
        spec = LatticeSpec(basis, k, weights, bound, points, scale=D)
        if not all(spec.in_integer_form(a) for a in points):
            continue
        found = _integer_points(weights, bound, members.__contains__, len(points))
        if found is not None and len(found) == len(points):
            return spec
    raise RuntimeError(f"no integer form for degree {k} with scale <= {max_scale}")


def rogosinski_halfplane_bound(
    k: int,
    table: PrimeTable,
    tol: float = 1e-13,
    lattice: LatticeSpec | None = None,
    alternate_r2: bool = False,
) -> float:
    """Abscissa beyond which ``(p_i**-sigma)`` lies in the ``r_m**m_i``-scaled polydisc.

    ``max_i m_i log(1/r_m) / log p_i`` for the integer form ``(m_i; m)`` of the
    degree-``k`` lattice. A caller-supplied ``lattice`` must describe the same
    point set.
    """
    if lattice is None:
        lattice = lattice_for_degree(k, table)
    else:
        from .oracles import lattice_enumeration_check

        if lattice.degree != k or not lattice_enumeration_check(lattice):
            raise InvalidArgumentError("supplied lattice does not match the degree-k point set")
    r = rogosinski_radius(lattice.integer_bound, tol=tol, alternate_r2=alternate_r2)
    shrink = -math.log(r)
    return max(w * shrink / math.log(p) for w, p in zip(lattice.integer_weights, lattice.prime_basis))


def parse_polynomial(text: str) -> DirichletPolynomial:
    """Parse ``n re im`` lines; ``#`` starts a comment."""
    terms: dict[int, complex] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise InvalidArgumentError(f"line {lineno}: expected 'n re im', got {raw!r}")
        try:
            n = int(fields[0])
            c = complex(float(fields[1]), float(fields[2]))
        except ValueError as exc:
            raise InvalidArgumentError(f"line {lineno}: {exc}") from None
        if n < 1:
            raise InvalidArgumentError(f"line {lineno}: index must be >= 1, got {n}")
        if n in terms:
            raise InvalidArgumentError(f"line {lineno}: duplicate index {n}")
        terms[n] = c
    if not terms:
        raise InvalidArgumentError("polynomial file has no terms")
    coeffs = [0j] * max(terms)
    for n, c in terms.items():
        coeffs[n - 1] = c
    return DirichletPolynomial(tuple(coeffs))


def format_polynomial(poly: DirichletPolynomial) -> str:
    lines = [
        f"{n} {c.real!r} {c.imag!r}"
        for n, c in enumerate(poly.coefficients, start=1)
        if c != 0
    ]
    return "\n".join(lines) + "\n"


def read_polynomial(path: str | Path) -> DirichletPolynomial:
    return parse_polynomial(Path(path).read_text(encoding="utf-8"))
