"""Exact arithmetic in Z[w], the ring of Eisenstein integers (w = exp(2*pi*i/3)).

Elements are written a + b*w with arbitrary-precision integers a, b, reduced
with w^2 = -1 - w.  Embedded in the complex plane, a + b*w = (2a - b)/2 +
b*sqrt(3)/2 * i, so the doubled real part 2a - b and the sign of the
imaginary part sgn(b) are exact integer quantities.

This ring carries the cubic Jacobi sum over a prime field F_p (p = 1 mod 3),

    J = sum over x in F_p, x not in {0, 1}, of chi(x) * chi(1 - x),

where chi is the cubic residue character sending a chosen generator of F_p*
to w.  J has norm p, its w-coefficient is divisible by 3, and 2J = r1 +
3*sqrt(3)*r2*i defines the integer pair (r1, r2) with 4p = r1^2 + 27*r2^2,
r1 = 1 (mod 3), and the sign of r2 pinned by the congruence
9*r2 = (2*t + 1)*r1 (mod p) for t = gen^((p-1)/3) mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, IntegrityError
from .ntheory import is_prime, prime_factors

_SQRT3_2 = math.sqrt(3.0) / 2.0


@dataclass(frozen=True, slots=True)
class EisensteinInt:
    """a + b*w with exact integer coefficients."""

    a: int
    b: int

    def __add__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: EisensteinInt) -> EisensteinInt:
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> EisensteinInt:
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other: EisensteinInt | int) -> EisensteinInt:
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        a, b, c, d = self.a, self.b, other.a, other.b
        # (a + b*w)(c + d*w) = ac + (ad + bc)*w + bd*w^2,  w^2 = -1 - w
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    def __rmul__(self, other: int) -> EisensteinInt:
        return self * other

    def __pow__(self, e: int) -> EisensteinInt:
        if e < 0:
            raise DomainError("negative powers leave Z[w]")
        result = EisensteinInt(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> EisensteinInt:
        """Complex conjugate: conj(a + b*w) = (a - b) - b*w."""
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        """Algebraic norm a^2 - a*b + b^2 = |a + b*w|^2; multiplicative."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def real_doubled(self) -> int:
        """2 * Re(a + b*w) = 2a - b, exact."""
        return 2 * self.a - self.b

    def imag_sign(self) -> int:
        """Sign of Im(a + b*w) = b*sqrt(3)/2: one of -1, 0, +1."""
        return (self.b > 0) - (self.b < 0)

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2.0, self.b * _SQRT3_2)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}*w"


OMEGA = EisensteinInt(0, 1)
OMEGA2 = EisensteinInt(-1, -1)
EI_ONE = EisensteinInt(1, 0)
EI_ZERO = EisensteinInt(0, 0)


class RPair(NamedTuple):
    """The pair (r1, r2) with 4p = r1^2 + 27*r2^2; r2 may be negative."""

    r1: int
    r2: int


def _verify_generator_mod_p(gen: int, p: int) -> None:
    if gen % p == 0:
        raise DomainError(f"{gen} is not a unit mod {p}")
    for ell in prime_factors(p - 1):
        if pow(gen, (p - 1) // ell, p) == 1:
            raise DomainError(f"{gen} does not generate the units mod {p}")


def jacobi_sum_cubic(p: int, gen: int) -> EisensteinInt:
    """Cubic Jacobi sum over F_p by direct O(p) summation, with chi(gen) = w.

    Builds the discrete-log table of gen in one multiplicative pass, then sums
    chi(x) * chi(1 - x) over x in F_p minus {0, 1}.  The result is checked to
    have norm p and w-coefficient divisible by 3 before it is returned.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p % 3 != 1:
        raise DomainError(f"no cubic character mod {p}: p = 2 (mod 3)")
    _verify_generator_mod_p(gen, p)

    index_mod3 = [0] * p
    x = 1
    for j in range(p - 1):
        index_mod3[x] = j % 3
        x = x * gen % p

    # chi(x) * chi(1-x) = w^(ind(x) + ind(1-x)); tally the three powers of w.
    buckets = [0, 0, 0]
    for c1 in range(2, p):
        buckets[(index_mod3[c1] + index_mod3[(1 - c1) % p]) % 3] += 1
    n0, n1, n2 = buckets
    # n0 + n1*w + n2*w^2 with w^2 = -1 - w
    j_sum = EisensteinInt(n0 - n2, n1 - n2)

    if j_sum.norm() != p:
        raise IntegrityError(f"Jacobi sum over F_{p} has norm {j_sum.norm()}, expected {p}")
    if j_sum.b % 3 != 0:
        raise IntegrityError(f"Jacobi sum over F_{p} has w-coefficient {j_sum.b} not divisible by 3")
    return j_sum


def r_pair(j_sum: EisensteinInt, p: int) -> RPair:
    """Extract (r1, r2) from a cubic Jacobi sum via 2J = r1 + 3*sqrt(3)*r2*i.

    With J = a + b*w this reads r1 = 2a - b and r2 = b/3.  The preconditions
    (norm p, 3 | b) and the defining constraints of the pair are re-checked;
    any violation signals a Jacobi-sum bug and raises IntegrityError.
    """
    if j_sum.norm() != p:
        raise IntegrityError(f"norm {j_sum.norm()} != {p}: not a cubic Jacobi sum for this prime")
    if j_sum.b % 3 != 0:
        raise IntegrityError(f"w-coefficient {j_sum.b} not divisible by 3")
    r1 = j_sum.real_doubled()
    r2 = j_sum.b // 3
    if 4 * p != r1 * r1 + 27 * r2 * r2:
        raise IntegrityError(f"4*{p} != {r1}^2 + 27*{r2}^2")
    if r1 % 3 != 1:
        raise IntegrityError(f"r1 = {r1} is not 1 (mod 3)")
    if (r1 - r2) % 2 != 0:
        raise IntegrityError(f"r1 = {r1} and r2 = {r2} have opposite parity")
    return RPair(r1, r2)
