"""Finite fields F_q (q = p^k) at desk scale, with cubic-class structure.

Elements are coefficient vectors of length k in the power basis of a monic
irreducible modulus, little-endian (constant term first), entries in [0, p).
The prime field is the degenerate case k = 1 with modulus t.

Construction is canonical and reproducible: the default modulus is the
smallest monic irreducible polynomial of degree k, and the default generator
g of the multiplicative group is the smallest element of order q - 1, both
under the ordering of coefficient vectors as base-p integers.  Either can be
overridden explicitly; the cubic class labels C1/C2 (and every sign derived
from them) are relative to the chosen g.

Textual form used by the CLI: ``p^k/modulus-coeffs/g-coeffs`` with
comma-separated little-endian coefficient lists, e.g. ``7^2/1,0,1/2,1``.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator, Sequence

from .eisenstein import EI_ONE, EI_ZERO, OMEGA, OMEGA2, EisensteinInt
from .errors import DomainError, IntegrityError
from .ntheory import is_prime, prime_factors


class CubicClass(Enum):
    """Cubic class of a field element when q = 1 (mod 3).

    ZERO is the zero element; Ci collects the z whose index with respect to
    the field's generator is i (mod 3).  C0 is the nonzero cubes.
    """

    ZERO = "zero"
    C0 = "c0"
    C1 = "c1"
    C2 = "c2"

    def __str__(self) -> str:
        return self.value


NONZERO_CLASSES = (CubicClass.C0, CubicClass.C1, CubicClass.C2)
NONCUBIC_CLASSES = (CubicClass.C1, CubicClass.C2)

_CHARACTER_VALUE = {
    CubicClass.ZERO: EI_ZERO,
    CubicClass.C0: EI_ONE,
    CubicClass.C1: OMEGA,
    CubicClass.C2: OMEGA2,
}


# ---------------------------------------------------------------------------
# polynomials over F_p, little-endian coefficient tuples


def _poly_rem(num: Sequence[int], den: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of num mod den over F_p; den must be monic."""
    rem = list(num)
    dd = len(den) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i] % p
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - c * den[j]) % p
    rem = [c % p for c in rem[:dd]]
    return tuple(rem)


def _is_zero_poly(poly: Sequence[int]) -> bool:
    return all(c == 0 for c in poly)


def _monic_polys(p: int, degree: int) -> Iterator[tuple[int, ...]]:
    """Monic degree-d polynomials in base-p order of their lower coefficients."""
    for n in range(p ** degree):
        coeffs = []
        m = n
        for _ in range(degree):
            coeffs.append(m % p)
            m //= p
        yield tuple(coeffs) + (1,)


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    degree = len(poly) - 1
    if degree < 1:
        return False
    if degree == 1:
        return True
    for d in range(1, degree // 2 + 1):
        for div in _monic_polys(p, d):
            if _is_zero_poly(_poly_rem(poly, div, p)):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree k >= 2 over F_p.

    "Smallest" orders the non-leading coefficient vectors (a0, ..., a_{k-1})
    as base-p integers with the constant term least significant.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 2:
        raise DomainError("degree must be at least 2; the prime field needs no modulus")
    for poly in _monic_polys(p, k):
        if _is_irreducible(poly, p):
            return poly
    raise IntegrityError(f"no irreducible polynomial of degree {k} over F_{p}")  # unreachable


# ---------------------------------------------------------------------------
# field elements


class FieldElement:
    """An element of a FieldDescriptor's field; immutable value semantics."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "FieldDescriptor", coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check_same_field(self, other: "FieldElement") -> None:
        if self.field._sig != other.field._sig:
            raise DomainError("elements of different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check_same_field(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check_same_field(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check_same_field(other)
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if not isinstance(e, int):
            return NotImplemented
        field = self.field
        if self.is_zero():
            if e > 0:
                return self
            if e == 0:
                return field.one
            raise DomainError("inverse of zero")
        # the base is a unit, so any integer exponent reduces mod q - 1
        e %= field.q - 1
        result = field.one.coeffs
        base = self.coeffs
        while e:
            if e & 1:
                result = field._mul_coeffs(result, base)
            base = field._mul_coeffs(base, base)
            e >>= 1
        return FieldElement(field, result)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DomainError("inverse of zero")
        return self ** (self.field.q - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def norm(self) -> int:
        """Norm to the prime field: the product of all k conjugates, as an
        integer in [0, p).  Equals x ** ((q-1)/(p-1)) for every x."""
        field = self.field
        y = self ** ((field.q - 1) // (field.p - 1))
        return y._prime_subfield_value("norm")

    def trace(self) -> int:
        """Trace to the prime field: the sum of all k conjugates, in [0, p)."""
        field = self.field
        acc = self
        frob = self
        for _ in range(field.k - 1):
            frob = frob ** field.p
            acc = acc + frob
        return acc._prime_subfield_value("trace")

    def _prime_subfield_value(self, what: str) -> int:
        if any(c != 0 for c in self.coeffs[1:]):
            raise IntegrityError(f"{what} landed outside the prime subfield: {self}")
        return self.coeffs[0]

    def __int__(self) -> int:
        """Base-p integer encoding of the coefficient vector."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.field.p + c
        return value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field._sig == other.field._sig and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field._sig, self.coeffs))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self} in F_{self.field.q})"


# ---------------------------------------------------------------------------
# field descriptors


class FieldDescriptor:
    """A concrete model of F_{p^k}: prime, degree, modulus, generator.

    Immutable after construction; every operation is a pure function of its
    inputs, so descriptors and elements are safe to share across threads.
    Use :func:`make_field` rather than calling this constructor directly.
    """

    __slots__ = ("p", "k", "q", "modulus", "g", "_sig", "_red_rows", "_cube_roots")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...], generator: tuple[int, ...] | None):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if k < 1:
            raise DomainError("extension degree must be positive")
        self.p = p
        self.k = k
        self.q = p ** k

        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise DomainError(f"modulus must be monic of degree {k}")
        if any(not (0 <= c < p) for c in modulus):
            raise DomainError(f"modulus coefficients must lie in [0, {p})")
        if k == 1:
            if modulus != (0, 1):
                raise DomainError("the prime field uses the trivial modulus t")
        elif not _is_irreducible(modulus, p):
            raise DomainError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = tuple(modulus)
        self._sig = (p, k, self.modulus)

        # t^j mod modulus for j = k .. 2k-2, consumed by _mul_coeffs
        rows = []
        row = tuple(-modulus[i] % p for i in range(k))
        for _ in range(k, 2 * k - 1):
            rows.append(row)
            shifted = (0,) + row[: k - 1]
            lead = row[k - 1]
            row = tuple((shifted[i] + lead * rows[0][i]) % p for i in range(k))
        self._red_rows = tuple(rows)

        if generator is None:
            g = find_generator(self)
        else:
            g = self.element(generator)
            if not self._has_full_order(g):
                raise DomainError(f"{g} does not generate the multiplicative group of F_{self.q}")
        self.g = g

        if self.q % 3 == 1:
            h = g ** ((self.q - 1) // 3)
            self._cube_roots = (self.one, h, h * h)
        else:
            self._cube_roots = None

    # -- element construction -------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        """Element from a little-endian coefficient sequence of length k."""
        if len(coeffs) != self.k:
            raise DomainError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def element_from_int(self, n: int) -> FieldElement:
        """Element whose coefficient vector is the base-p expansion of n."""
        if not (0 <= n < self.q):
            raise DomainError(f"element code {n} outside [0, {self.q})")
        coeffs = []
        for _ in range(self.k):
            coeffs.append(n % self.p)
            n //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in base-p integer order."""
        for n in range(self.q):
            yield self.element_from_int(n)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        for n in range(1, self.q):
            yield self.element_from_int(n)

    # -- arithmetic kernel ----------------------------------------------------

    def _mul_coeffs(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        out = prod[:k]
        for j in range(k, 2 * k - 1):
            c = prod[j] % p
            if c:
                row = self._red_rows[j - k]
                for i in range(k):
                    out[i] += c * row[i]
        return tuple(c % p for c in out)

    def _has_full_order(self, x: FieldElement) -> bool:
        if x.is_zero():
            return False
        n = self.q - 1
        if (x ** n) != self.one:
            return False
        return all((x ** (n // ell)) != self.one for ell in prime_factors(n))

    # -- cubic structure --------------------------------------------------------

    def cube_class(self, z: FieldElement) -> CubicClass:
        """Cubic class of z relative to this field's generator.

        Computed without a discrete logarithm: z ** ((q-1)/3) is a cube root
        of unity and equals (g ** ((q-1)/3)) ** i exactly for the class index i.
        """
        if self.q % 3 != 1:
            raise DomainError(f"q = {self.q} = 2 (mod 3): every element is a cube, classes are undefined")
        if z.is_zero():
            return CubicClass.ZERO
        w = z ** ((self.q - 1) // 3)
        one, h, h2 = self._cube_roots
        if w == one:
            return CubicClass.C0
        if w == h:
            return CubicClass.C1
        if w == h2:
            return CubicClass.C2
        raise IntegrityError(f"{z} ** ((q-1)/3) is not a cube root of unity")

    def cubic_character(self, z: FieldElement) -> EisensteinInt:
        """Order-3 multiplicative character with value w at the generator.

        Returns 1, w, or w^2 = -1-w for nonzero z, and 0 at zero by convention.
        """
        return _CHARACTER_VALUE[self.cube_class(z)]

    def representative(self, cls: CubicClass) -> FieldElement:
        """Smallest element (base-p integer order) of the given cubic class."""
        if cls is CubicClass.ZERO:
            return self.zero
        for z in self.nonzero_elements():
            if self.cube_class(z) is cls:
                return z
        raise IntegrityError(f"no element of class {cls} in F_{self.q}")  # unreachable

    # -- identity and textual form ---------------------------------------------

    def to_string(self) -> str:
        mod = ",".join(str(c) for c in self.modulus)
        return f"{self.p}^{self.k}/{mod}/{self.g}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return self._sig == other._sig and self.g.coeffs == other.g.coeffs

    def __hash__(self) -> int:
        return hash((self._sig, self.g.coeffs))

    def __repr__(self) -> str:
        return f"FieldDescriptor({self.to_string()})"


def find_generator(field: FieldDescriptor) -> FieldElement:
    """Smallest element of multiplicative order q - 1, in base-p integer order.

    Verification is exact: x has order q - 1 iff x ** (q-1) = 1 and
    x ** ((q-1)/l) != 1 for every prime l dividing q - 1.
    """
    for x in field.nonzero_elements():
        if field._has_full_order(x):
            return x
    raise IntegrityError(f"no generator found in F_{field.q}")  # unreachable


def make_field(
    p: int,
    k: int = 1,
    modulus: Sequence[int] | None = None,
    generator: Sequence[int] | None = None,
) -> FieldDescriptor:
    """Construct F_{p^k} with canonical (or explicitly given) modulus and generator."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if k < 1:
        raise DomainError("extension degree must be positive")
    if modulus is None:
        modulus = (0, 1) if k == 1 else find_irreducible(p, k)
    return FieldDescriptor(p, k, tuple(modulus), tuple(generator) if generator is not None else None)


def parse_element(field: FieldDescriptor, text: str) -> FieldElement:
    """Parse the comma-separated little-endian element syntax c0,c1,...,c{k-1}."""
    try:
        coeffs = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad element syntax {text!r}") from exc
    if len(coeffs) != field.k:
        raise DomainError(f"expected {field.k} coefficients for F_{field.q}, got {len(coeffs)}")
    if any(not (0 <= c < field.p) for c in coeffs):
        raise DomainError(f"element coefficients must lie in [0, {field.p})")
    return field.element(coeffs)


def parse_field(text: str) -> FieldDescriptor:
    """Parse the textual field form ``p^k/modulus-coeffs/g-coeffs``."""
    parts = text.split("/")
    if len(parts) != 3 or "^" not in parts[0]:
        raise DomainError(f"bad field syntax {text!r}, expected p^k/modulus/generator")
    try:
        p_text, k_text = parts[0].split("^")
        p, k = int(p_text), int(k_text)
        modulus = tuple(int(c) for c in parts[1].split(","))
        generator = tuple(int(c) for c in parts[2].split(","))
    except ValueError as exc:
        raise DomainError(f"bad field syntax {text!r}") from exc
    return make_field(p, k, modulus, generator)
