"""Closed-form counts of zeros of diagonal cubic equations over F_q.

Let N_s(z) be the number of solutions of x_1^3 + ... + x_s^3 = z and T_s(y)
the number of solutions of x_1^3 + ... + x_{s-1}^3 + y*x_s^3 = 0 with y
non-cubic.  For q = 1 (mod 3) the deviation u_s(z) = N_s(z) - q^(s-1)
satisfies the three-term recurrence

    u_s = 3q * u_{s-2} + qc * u_{s-3}        (s >= 4),

equivalently sum_s u_s x^s is a rational function with denominator
1 - 3q x^2 - qc x^3.  The seeds, with (c, d, theta) from the constants
module and all half-integer expressions combined into exact integers:

    target 0:            w1 = 0,   w2 = 2(q-1),                w3 = c(q-1)
    nonzero cube (C0):   u1 = 2,   u2 = c - 2,                 u3 = 6q - c
    non-cube, class C1:  u1 = -1,  u2 = (-4 - c + 9d*theta)/2, u3 = -3q - c
    non-cube, class C2:  u1 = -1,  u2 = (-4 - c - 9d*theta)/2, u3 = -3q - c

The twisted counts follow from T_s(y) = N_{s-1}(0) + (q-1) N_{s-1}(y) and,
independently, from their own generating function: v_s = T_{s+1}(y) - q^s has
seeds v1 = -(q-1), v2 = -(q-1)(c + 9d*delta_y)/2, v3 = 3q*v1 and the same
recurrence, where delta_y = -theta for class C1 and +theta for class C2.

For q = 2 (mod 3) the cube map is a bijection and every count is q^(s-1);
see :func:`bijective_count`.

Class labels C1/C2 are relative to the field's chosen generator (swapping g
for a generator of the other coset swaps them, and flips theta with them), so
counts keyed to a concrete element z are generator-independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .constants import CubicData, cd_search, delta
from .errors import DomainError, IntegrityError
from .fields import CubicClass, FieldDescriptor

_NONCUBIC = (CubicClass.C1, CubicClass.C2)


@dataclass(frozen=True)
class SeriesWindow:
    """The first n coefficients N_1..N_n of one target's counting series."""

    target: CubicClass
    coefficients: tuple[int, ...]
    constants: CubicData


def excess_seeds(data: CubicData, cls: CubicClass, theta_source: str = "exact") -> tuple[int, int, int]:
    """Seeds (u_1, u_2, u_3) of the deviation u_s = N_s - q^(s-1) for a
    nonzero target class.  The zero target has its own seeds; see
    :func:`count_diagonal`."""
    c, d, q = data.c, data.d, data.q
    if cls is CubicClass.C0:
        return 2, c - 2, 6 * q - c
    if cls in _NONCUBIC:
        numerator = -4 - c - 9 * d * delta(data, cls, theta_source)
        if numerator % 2 != 0:
            raise IntegrityError(
                f"second seed {numerator}/2 is not an integer for q = {q}: "
                f"theta source {theta_source!r} is inconsistent with this field"
            )
        return -1, numerator // 2, -3 * q - c
    raise DomainError("seeds are defined for nonzero classes; the zero target has its own")


def _recurrence(seeds: tuple[int, int, int], q: int, c: int) -> Iterator[int]:
    """Yield the recurrence x_s = 3q x_{s-2} + qc x_{s-3} from three seeds."""
    x1, x2, x3 = seeds
    yield x1
    yield x2
    yield x3
    while True:
        x1, x2, x3 = x2, x3, 3 * q * x2 + q * c * x1
        yield x3


def _value_at(seeds: tuple[int, int, int], q: int, c: int, s: int) -> int:
    stream = _recurrence(seeds, q, c)
    for _ in range(s - 1):
        next(stream)
    return next(stream)


def excess_at(data: CubicData, cls: CubicClass, s: int, theta_source: str = "exact") -> int:
    """u_s for a nonzero target class, any s >= 1, exact."""
    if s < 1:
        raise DomainError("the deviation sequence starts at s = 1")
    return _value_at(excess_seeds(data, cls, theta_source), data.q, data.c, s)


def _zero_seeds(data: CubicData) -> tuple[int, int, int]:
    return 0, 2 * (data.q - 1), data.c * (data.q - 1)


def count_diagonal(data: CubicData, s: int, target: CubicClass, theta_source: str = "exact") -> int:
    """N_s for a target given by its cubic class (CubicClass.ZERO for z = 0).

    s = 0 is the empty-tuple convention (1 for the zero target, else 0),
    provided as plumbing beyond the series proper.
    """
    if s < 0:
        raise DomainError("s must be nonnegative")
    if s == 0:
        return 1 if target is CubicClass.ZERO else 0
    if target is CubicClass.ZERO:
        seeds = _zero_seeds(data)
    else:
        seeds = excess_seeds(data, target, theta_source)
    value = data.q ** (s - 1) + _value_at(seeds, data.q, data.c, s)
    if value < 0:
        raise IntegrityError(f"negative count {value} for s = {s}, target {target}")
    return value


def bijective_count(q: int, s: int, zero_target: bool) -> int:
    """Counts for q = 2 (mod 3), where cubing is a bijection: q^(s-1) for
    every target and s >= 1 (s = 0 follows the empty-tuple convention)."""
    if q % 3 != 2:
        raise DomainError(f"q = {q} is not 2 (mod 3)")
    if s < 0:
        raise DomainError("s must be nonnegative")
    if s == 0:
        return 1 if zero_target else 0
    return q ** (s - 1)


def count_twisted(data: CubicData, s: int, y_cls: CubicClass, theta_source: str = "exact") -> int:
    """T_s for non-cubic y of the given class, via
    T_s(y) = N_{s-1}(0) + (q-1) * N_{s-1}(y)."""
    if y_cls not in _NONCUBIC:
        raise DomainError(f"the scaled variable's coefficient must be non-cubic, got {y_cls}")
    if s < 2:
        raise DomainError("twisted counts need at least two variables")
    return count_diagonal(data, s - 1, CubicClass.ZERO, theta_source) + (data.q - 1) * count_diagonal(
        data, s - 1, y_cls, theta_source
    )


def twisted3_closed(data: CubicData, y_cls: CubicClass, theta_source: str = "exact") -> int:
    """T_3 in closed form: q^2 + (q-1) * (-c - 9 * delta_y * d) / 2, exact."""
    if y_cls not in _NONCUBIC:
        raise DomainError(f"the scaled variable's coefficient must be non-cubic, got {y_cls}")
    numerator = (data.q - 1) * (-data.c - 9 * delta(data, y_cls, theta_source) * data.d)
    if numerator % 2 != 0:
        raise IntegrityError(f"half-integer T_3 for q = {data.q} under theta source {theta_source!r}")
    return data.q * data.q + numerator // 2


def diagonal_series(data: CubicData, target: CubicClass, n: int, theta_source: str = "exact") -> SeriesWindow:
    """First n coefficients N_1..N_n of the counting series for one target,
    generated by the integer recurrence (never by power-series division)."""
    if n < 1:
        raise DomainError("need at least one coefficient")
    if target is CubicClass.ZERO:
        seeds = _zero_seeds(data)
    else:
        seeds = excess_seeds(data, target, theta_source)
    stream = _recurrence(seeds, data.q, data.c)
    coeffs = tuple(data.q ** s_idx + next(stream) for s_idx in range(n))
    return SeriesWindow(target=target, coefficients=coeffs, constants=data)


def twisted_series(data: CubicData, y_cls: CubicClass, n: int, theta_source: str = "exact") -> tuple[int, ...]:
    """(T_2, ..., T_{n+1}) for non-cubic y, from the twisted generating
    function itself -- an independent route from :func:`count_twisted`."""
    if y_cls not in _NONCUBIC:
        raise DomainError(f"the scaled variable's coefficient must be non-cubic, got {y_cls}")
    if n < 1:
        raise DomainError("need at least one coefficient")
    q, c, d = data.q, data.c, data.d
    numerator = (q - 1) * (c + 9 * d * delta(data, y_cls, theta_source))
    if numerator % 2 != 0:
        raise IntegrityError(f"half-integer twisted seed for q = {q} under theta source {theta_source!r}")
    v1 = -(q - 1)
    seeds = (v1, -numerator // 2, 3 * q * v1)
    stream = _recurrence(seeds, q, c)
    return tuple(q ** (s_idx + 1) + next(stream) for s_idx in range(n))


def signed_d_mod4(field: FieldDescriptor, y_cls: CubicClass) -> int:
    """Signed d for the three-variable twisted count over a prime field where
    2 is non-cubic, selected by the mod-4 rule:

        d~ = c (mod 4)   if y and 2 share a cubic class,
        d~ != c (mod 4)  if y and 4 share a cubic class,

    so that T_3(y) = p^2 + (p-1) * (-c + 9 * d~) / 2.  Here c and d are both
    odd, hence exactly one of +d, -d satisfies each branch.
    """
    if field.k != 1:
        raise DomainError("the mod-4 rule is stated over prime fields")
    p = field.p
    if p % 3 != 1:
        raise DomainError(f"p = {p} = 2 (mod 3): no non-cubic elements")
    if y_cls not in _NONCUBIC:
        raise DomainError(f"y must be non-cubic, got {y_cls}")
    two = field.element([2])
    cls_two = field.cube_class(two)
    if cls_two is CubicClass.C0:
        raise DomainError(f"2 is cubic over F_{p}: the mod-4 rule does not apply")
    cls_four = field.cube_class(two * two)
    c, d = cd_search(p, p)
    if d % 2 == 0:
        raise IntegrityError(f"even d = {d} with 2 non-cubic over F_{p}")
    if y_cls is cls_two:
        wanted = c % 4
    elif y_cls is cls_four:
        wanted = (c + 2) % 4
    else:
        raise IntegrityError("non-cubic classes must be exactly those of 2 and 4")
    if d % 4 == wanted:
        return d
    if (-d) % 4 == wanted:
        return -d
    raise IntegrityError(f"neither {d} nor {-d} is {wanted} (mod 4)")
