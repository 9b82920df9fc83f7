import pytest
from hypothesis import given, strategies as st

from diagcubic import (
    CubicClass,
    DomainError,
    EisensteinInt,
    find_generator,
    find_irreducible,
    make_field,
    parse_element,
    parse_field,
)
from diagcubic.ntheory import prime_factors


class TestFindIrreducible:
    def test_smallest_moduli(self):
        assert find_irreducible(2, 2) == (1, 1, 1)  # t^2 + t + 1
        assert find_irreducible(3, 2) == (1, 0, 1)  # t^2 + 1: -1 is a non-square mod 3
        assert find_irreducible(7, 2) == (1, 0, 1)  # -1 is a non-square mod 7

    def test_rejects_bad_inputs(self):
        with pytest.raises(DomainError):
            find_irreducible(4, 2)
        with pytest.raises(DomainError):
            find_irreducible(7, 1)

    @pytest.mark.parametrize("p,k", [(2, 3), (2, 6), (3, 3), (5, 2), (7, 2)])
    def test_result_has_no_small_factors(self, p, k):
        poly = find_irreducible(p, k)
        assert len(poly) == k + 1 and poly[-1] == 1
        # no roots in the prime field (degree-1 factor check)
        for r in range(p):
            value = sum(c * pow(r, i, p) for i, c in enumerate(poly)) % p
            assert value != 0


class TestFindGenerator:
    def test_known_generators(self):
        assert int(make_field(31).g) == 3  # 2 has order 5 only
        assert int(make_field(7).g) == 3
        assert int(make_field(13).g) == 2

    @pytest.mark.parametrize(
        "p,k",
        [(2, 2), (7, 1), (13, 1), (2, 4), (19, 1), (5, 2), (31, 1), (37, 1),
         (43, 1), (7, 2), (61, 1), (2, 6), (5, 1), (2, 3), (11, 1)],
    )
    def test_order_is_exactly_q_minus_1(self, p, k):
        field = make_field(p, k)
        g, n = field.g, field.q - 1
        assert g ** n == field.one
        for ell in prime_factors(n):
            assert g ** (n // ell) != field.one

    def test_find_generator_matches_canonical(self, f49):
        assert find_generator(f49) == f49.g

    def test_explicit_generator_is_verified(self):
        with pytest.raises(DomainError):
            make_field(7, generator=[2])  # order 3, not 6


class TestArithmetic:
    def test_f4_reduction(self, f4):
        t = f4.element([0, 1])
        assert t * t == f4.element([1, 1])  # t^2 = t + 1

    def test_f7_inverse(self, f7):
        three = f7.element([3])
        assert three.inverse() == f7.element([5])
        assert three * three.inverse() == f7.one

    def test_f9_power(self, f9):
        x = f9.element([1, 1])
        assert x ** 4 == f9.element([2, 0])

    def test_pow_conventions(self, f49):
        x = f49.element([2, 1])
        big = 10 ** 30
        assert x ** big == x ** (big % (f49.q - 1))
        assert x ** -1 == x.inverse()
        assert f49.zero ** 0 == f49.one
        assert f49.zero ** 5 == f49.zero
        with pytest.raises(DomainError):
            f49.zero ** -1
        with pytest.raises(DomainError):
            f49.zero.inverse()

    def test_cross_field_operations_rejected(self, f7, f13):
        with pytest.raises(DomainError):
            f7.element([1]) + f13.element([1])

    @given(st.integers(0, 48), st.integers(0, 48), st.integers(0, 48))
    def test_field_axioms_f49(self, na, nb, nc):
        field = make_field(7, 2)
        a, b, c = (field.element_from_int(n) for n in (na, nb, nc))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == field.zero
        if not a.is_zero():
            assert a * a.inverse() == field.one


class TestNormTrace:
    def test_prime_field_identity(self, f7):
        for z in f7.elements():
            assert z.norm() == z.coeffs[0]
            assert z.trace() == z.coeffs[0]

    def test_examples(self, f4, f9):
        assert f4.element([0, 1]).norm() == 1  # t * t^2 = t^3 = 1
        assert f4.element([0, 1]).trace() == 1  # t + t^2 = 1 in characteristic 2
        assert f9.element([1, 1]).norm() == 2

    def test_trace_of_zero(self, f49):
        assert f49.zero.trace() == 0

    @pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (5, 2), (7, 2)])
    def test_norm_multiplicative_trace_additive(self, p, k):
        field = make_field(p, k)
        elems = list(field.elements())
        for a in elems:
            for b in elems:
                assert (a * b).norm() == a.norm() * b.norm() % p
                assert (a + b).trace() == (a.trace() + b.trace()) % p

    def test_norm_of_generator_generates_prime_units(self, f49):
        g_norm = f49.g.norm()
        seen = set()
        x = 1
        for _ in range(f49.p - 1):
            x = x * g_norm % f49.p
            seen.add(x)
        assert len(seen) == f49.p - 1


class TestCubicClass:
    def test_f7_classes(self, f7):
        assert f7.cube_class(f7.element([1])) is CubicClass.C0
        assert f7.cube_class(f7.element([2])) is CubicClass.C2  # 2 = 3^2
        assert f7.cube_class(f7.element([6])) is CubicClass.C0  # 6 = 3^3
        assert f7.cube_class(f7.zero) is CubicClass.ZERO

    def test_rejects_bijective_regime(self):
        f5 = make_field(5)
        with pytest.raises(DomainError):
            f5.cube_class(f5.element([2]))

    @pytest.mark.parametrize("p,k", [(2, 2), (7, 1), (13, 1), (2, 4), (5, 2), (7, 2)])
    def test_class_sizes(self, p, k):
        field = make_field(p, k)
        sizes = {cls: 0 for cls in (CubicClass.C0, CubicClass.C1, CubicClass.C2)}
        for z in field.nonzero_elements():
            sizes[field.cube_class(z)] += 1
        assert set(sizes.values()) == {(field.q - 1) // 3}

    def test_coset_invariance(self, f13):
        for z in f13.nonzero_elements():
            cls = f13.cube_class(z)
            for w in f13.nonzero_elements():
                assert f13.cube_class(z * w ** 3) is cls

    def test_representative(self, f7):
        assert int(f7.representative(CubicClass.C0)) == 1
        assert int(f7.representative(CubicClass.C2)) == 2
        assert int(f7.representative(CubicClass.C1)) == 3
        assert f7.representative(CubicClass.ZERO) == f7.zero


class TestCubicCharacter:
    def test_values(self, f7):
        omega = EisensteinInt(0, 1)
        assert f7.cubic_character(f7.g) == omega
        assert f7.cubic_character(f7.one) == EisensteinInt(1, 0)
        assert f7.cubic_character(f7.element([2])) == EisensteinInt(-1, -1)
        assert f7.cubic_character(f7.zero) == EisensteinInt(0, 0)

    @pytest.mark.parametrize("p,k", [(7, 1), (13, 1), (7, 2)])
    def test_indicator_identity(self, p, k):
        # 1 + chi(a) + chi(a)^2 is 3 on nonzero cubes and 0 elsewhere
        field = make_field(p, k)
        one = EisensteinInt(1, 0)
        for a in field.nonzero_elements():
            chi = field.cubic_character(a)
            total = one + chi + chi * chi
            expected = EisensteinInt(3, 0) if field.cube_class(a) is CubicClass.C0 else EisensteinInt(0, 0)
            assert total == expected

    def test_multiplicative(self, f13):
        for a in f13.nonzero_elements():
            for b in f13.nonzero_elements():
                assert f13.cubic_character(a * b) == f13.cubic_character(a) * f13.cubic_character(b)


class TestSerialization:
    def test_field_round_trip(self, f49):
        assert parse_field(f49.to_string()) == f49
        assert f49.to_string() == "7^2/1,0,1/2,1"

    def test_element_round_trip(self, f49):
        for z in f49.elements():
            assert parse_element(f49, str(z)) == z

    def test_parse_errors(self, f49):
        with pytest.raises(DomainError):
            parse_element(f49, "1")  # wrong length
        with pytest.raises(DomainError):
            parse_element(f49, "1,x")
        with pytest.raises(DomainError):
            parse_element(f49, "1,9")  # coefficient out of range
        with pytest.raises(DomainError):
            parse_field("7^2/1,0,1")

    def test_element_int_encoding(self, f49):
        for n in range(f49.q):
            assert int(f49.element_from_int(n)) == n


class TestConstruction:
    def test_prime_field_is_degenerate_extension(self):
        f31 = make_field(31)
        assert f31.modulus == (0, 1)
        assert f31.k == 1 and f31.q == 31

    def test_modulus_validation(self):
        with pytest.raises(DomainError):
            make_field(7, 2, modulus=(5, 0, 1))  # t^2 + 5 = (t+3)(t+4) mod 7
        with pytest.raises(DomainError):
            make_field(7, 2, modulus=(1, 0, 2))  # not monic
        with pytest.raises(DomainError):
            make_field(7, 2, modulus=(1, 1))  # wrong degree
        with pytest.raises(DomainError):
            make_field(7, 1, modulus=(1, 1))  # prime field must use t

    def test_alternative_modulus_accepted(self):
        field = make_field(7, 2, modulus=(3, 1, 1))  # t^2 + t + 3, irreducible
        assert field.q == 49
        assert field.g ** 48 == field.one
