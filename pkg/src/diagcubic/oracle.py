"""Ground truth: exact brute-force counting and numeric character sums.

The exact side counts zeros by dynamic programming over the additive group:
the distribution of x_1^3 + ... + x_s^3 is the s-fold additive convolution of
the cube histogram, O(s * q^2) integer operations and bit-identical however
it is partitioned.  It is deliberately simpler than the closed forms it
checks, and is cross-checked in turn against naive q^s enumeration on tiny
fields.

The numeric side evaluates the additive character psi(x) = exp(2*pi*i*Tr(x)/p)
and the cubic character in double precision to confirm the analytic
identities the closed forms rest on (Gauss-sum modulus, cubed-Gauss-sum
decomposition, the cubic satisfied by the power sums S_h, orthogonality).
Tolerances are chosen far below the smallest genuine signal, which is of
order q^(3/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, ResourceError
from .fields import CubicClass, FieldDescriptor, FieldElement

#: Default caps for the brute-force enumerations; callers may raise them
#: explicitly when they accept the cost.
MAX_Q = 128
MAX_S = 8

_OMEGA_C = complex(-0.5, math.sqrt(3.0) / 2.0)
_CHI_COMPLEX = {
    CubicClass.ZERO: 0j,
    CubicClass.C0: 1 + 0j,
    CubicClass.C1: _OMEGA_C,
    CubicClass.C2: _OMEGA_C * _OMEGA_C,
}


@dataclass(frozen=True)
class CubeHistogram:
    """counts[int(v)] = number of cube roots of v in the field."""

    field: FieldDescriptor
    counts: tuple[int, ...]

    def count_of(self, v: FieldElement) -> int:
        return self.counts[int(v)]

    def items(self) -> Iterator[tuple[FieldElement, int]]:
        for code, count in enumerate(self.counts):
            yield self.field.element_from_int(code), count


def cube_histogram(field: FieldDescriptor) -> CubeHistogram:
    counts = [0] * field.q
    for x in field.elements():
        counts[int(x ** 3)] += 1
    return CubeHistogram(field=field, counts=tuple(counts))


@lru_cache(maxsize=32)
def _add_codes(field: FieldDescriptor) -> list[list[int]]:
    """Addition on base-p element codes, tabulated once per field."""
    elems = list(field.elements())
    return [[int(a + b) for b in elems] for a in elems]


def _neg_codes(field: FieldDescriptor) -> list[int]:
    return [int(-x) for x in field.elements()]


def _check_cap(field: FieldDescriptor, s: int, max_q: int, max_s: int) -> None:
    if field.q > max_q or s > max_s:
        raise ResourceError(
            f"brute force over q = {field.q}, s = {s} exceeds the cap (q <= {max_q}, s <= {max_s})"
        )


def diagonal_count_vector(
    field: FieldDescriptor, s: int, *, max_q: int = MAX_Q, max_s: int = MAX_S
) -> list[int]:
    """Exact counts of x_1^3 + ... + x_s^3 = v for every v, indexed by int(v)."""
    if s < 1:
        raise DomainError("need at least one variable")
    _check_cap(field, s, max_q, max_s)
    hist = cube_histogram(field).counts
    support = [(code, count) for code, count in enumerate(hist) if count]
    if field.k == 1:
        q = field.q
        dist = list(hist)
        for _ in range(s - 1):
            nxt = [0] * q
            for v, dv in enumerate(dist):
                if dv:
                    for w, hw in support:
                        nxt[(v + w) % q] += dv * hw
            dist = nxt
        return dist
    add = _add_codes(field)
    dist = list(hist)
    for _ in range(s - 1):
        nxt = [0] * field.q
        for v, dv in enumerate(dist):
            if dv:
                row = add[v]
                for w, hw in support:
                    nxt[row[w]] += dv * hw
        dist = nxt
    return dist


def brute_diagonal(
    field: FieldDescriptor, s: int, z: FieldElement, *, max_q: int = MAX_Q, max_s: int = MAX_S
) -> int:
    """Number of zeros of x_1^3 + ... + x_s^3 = z by exact convolution."""
    return diagonal_count_vector(field, s, max_q=max_q, max_s=max_s)[int(z)]


def brute_twisted(
    field: FieldDescriptor, s: int, y: FieldElement, *, max_q: int = MAX_Q, max_s: int = MAX_S
) -> int:
    """Number of zeros of x_1^3 + ... + x_{s-1}^3 + y * x_s^3 = 0, y nonzero."""
    if y.is_zero():
        raise DomainError("the scaled variable's coefficient must be nonzero")
    if s < 2:
        raise DomainError("twisted counts need at least two variables")
    _check_cap(field, s, max_q, max_s)
    dist = diagonal_count_vector(field, s - 1, max_q=max_q, max_s=max_s)
    scaled = [0] * field.q
    for x in field.elements():
        scaled[int(y * x ** 3)] += 1
    neg = _neg_codes(field)
    return sum(dv * scaled[neg[v]] for v, dv in enumerate(dist) if dv)


def brute_diagonal_naive(field: FieldDescriptor, s: int, z: FieldElement) -> int:
    """Literal q^s enumeration; the cross-check for the convolution oracle."""
    if field.q ** s > 2 ** 16:
        raise ResourceError(f"naive enumeration over {field.q}^{s} tuples refused")
    cubes = [x ** 3 for x in field.elements()]
    zero = field.zero

    def recurse(depth: int, acc: FieldElement) -> int:
        if depth == 0:
            return 1 if acc == z else 0
        return sum(recurse(depth - 1, acc + c) for c in cubes)

    return recurse(s, zero)


# ---------------------------------------------------------------------------
# numeric character sums


def _psi_table(field: FieldDescriptor) -> list[complex]:
    """psi(x) = exp(2*pi*i*Tr(x)/p) for every x, indexed by int(x)."""
    p = field.p
    unit_roots = [cmath.exp(2j * cmath.pi * t / p) for t in range(p)]
    return [unit_roots[field.element_from_int(code).trace()] for code in range(field.q)]


def _chi_table(field: FieldDescriptor) -> list[complex]:
    return [_CHI_COMPLEX[field.cube_class(x)] for x in field.elements()]


def gauss_sum_numeric(field: FieldDescriptor) -> complex:
    """G(chi, psi) = sum over nonzero x of chi(x) * psi(x), double precision."""
    if field.q % 3 != 1:
        raise DomainError(f"q = {field.q} = 2 (mod 3) has no cubic character")
    psi = _psi_table(field)
    chi = _chi_table(field)
    return sum(chi[code] * psi[code] for code in range(1, field.q))


def conjugate_gauss_sum_numeric(field: FieldDescriptor) -> complex:
    """G(conj(chi), psi), evaluated directly rather than by conjugation."""
    if field.q % 3 != 1:
        raise DomainError(f"q = {field.q} = 2 (mod 3) has no cubic character")
    psi = _psi_table(field)
    chi = _chi_table(field)
    return sum(chi[code].conjugate() * psi[code] for code in range(1, field.q))


def cubic_exp_sum_numeric(field: FieldDescriptor, h: FieldElement) -> complex:
    """S_h = sum over all y of psi(h * y^3); h nonzero."""
    if h.is_zero():
        raise DomainError("S_h is used with nonzero h")
    psi = _psi_table(field)
    return sum(psi[int(h * y ** 3)] for y in field.elements())


def jacobi_sum_numeric(field: FieldDescriptor) -> complex:
    """G(chi, psi)^2 / G(conj(chi), psi) over a prime field: the numeric route
    to the cubic Jacobi sum."""
    if field.k != 1:
        raise DomainError("the numeric Jacobi route is taken over prime fields")
    g = gauss_sum_numeric(field)
    g_conj = conjugate_gauss_sum_numeric(field)
    return g * g / g_conj


@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    max_error: float
    tolerance: float

    def __bool__(self) -> bool:
        return self.ok


def orthogonality_check(field: FieldDescriptor, tolerance: float = 1e-6) -> OrthogonalityReport:
    """sum over a of psi(a*x) must be q at x = 0 and 0 elsewhere."""
    psi = _psi_table(field)
    elems = list(field.elements())
    worst = 0.0
    for x in elems:
        total = sum(psi[int(a * x)] for a in elems)
        expected = field.q if x.is_zero() else 0
        worst = max(worst, abs(total - expected))
    return OrthogonalityReport(ok=worst <= tolerance, max_error=worst, tolerance=tolerance)
