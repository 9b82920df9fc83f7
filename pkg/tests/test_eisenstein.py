import pytest
from hypothesis import given, strategies as st

from diagcubic import DomainError, EisensteinInt, IntegrityError, jacobi_sum_cubic, r_pair
from diagcubic.ntheory import primes_up_to

ints = st.integers(-10 ** 6, 10 ** 6)
eis = st.builds(EisensteinInt, ints, ints)


class TestRingArithmetic:
    def test_examples(self):
        one_plus_w = EisensteinInt(1, 1)
        assert one_plus_w * one_plus_w == EisensteinInt(0, 1)
        assert EisensteinInt(5, 6).conjugate() == EisensteinInt(-1, -6)
        assert EisensteinInt(-1, -3) ** 2 == EisensteinInt(-8, -3)

    def test_norm_examples(self):
        assert EisensteinInt(5, 6).norm() == 31
        assert EisensteinInt(0, 1).norm() == 1
        assert EisensteinInt(-4, -3).norm() == 13

    @given(eis, eis, eis)
    def test_ring_laws(self, x, y, z):
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x - x == EisensteinInt(0, 0)

    @given(eis, eis)
    def test_conjugation_and_norm(self, x, y):
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x * y).norm() == x.norm() * y.norm()
        product = x * x.conjugate()
        assert product == EisensteinInt(x.norm(), 0)
        assert x.norm() >= 0
        assert (x.norm() == 0) == (x == EisensteinInt(0, 0))

    @given(eis, st.integers(0, 12))
    def test_power_matches_repeated_product(self, x, e):
        expected = EisensteinInt(1, 0)
        for _ in range(e):
            expected = expected * x
        assert x ** e == expected

    def test_negative_power_rejected(self):
        with pytest.raises(DomainError):
            EisensteinInt(1, 1) ** -1

    @given(eis)
    def test_complex_embedding(self, x):
        value = x.to_complex()
        assert abs(abs(value) ** 2 - x.norm()) <= 1e-6 * max(1, x.norm())
        assert ((value.imag > 0) - (value.imag < 0)) == x.imag_sign()

    def test_str_form(self):
        assert str(EisensteinInt(5, 6)) == "5+6*w"
        assert str(EisensteinInt(-1, -3)) == "-1-3*w"


class TestJacobiSum:
    def test_known_sums(self):
        assert jacobi_sum_cubic(7, 3) == EisensteinInt(-1, -3)
        assert jacobi_sum_cubic(31, 3) == EisensteinInt(5, 6)
        assert jacobi_sum_cubic(13, 2) == EisensteinInt(-4, -3)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            jacobi_sum_cubic(5, 2)  # p = 2 (mod 3)
        with pytest.raises(DomainError):
            jacobi_sum_cubic(7, 2)  # 2 has order 3 mod 7
        with pytest.raises(DomainError):
            jacobi_sum_cubic(9, 2)

    def test_invariants_scan(self):
        # every prime p = 1 (mod 3) below 1000; the acceptance suite goes to 10^4
        for p in primes_up_to(1000):
            if p % 3 != 1:
                continue
            gen = next(g for g in range(2, p) if _is_primitive_root(g, p))
            j = jacobi_sum_cubic(p, gen)
            assert j.norm() == p
            assert j.b % 3 == 0
            r1, r2 = r_pair(j, p)
            assert 4 * p == r1 * r1 + 27 * r2 * r2
            assert r1 % 3 == 1
            assert (r1 - r2) % 2 == 0
            # the defining congruence holds and rejects the flipped sign
            t = pow(gen, (p - 1) // 3, p)
            assert (9 * r2 - (2 * t + 1) * r1) % p == 0
            assert r2 != 0  # 4p = r1^2 would force p square
            assert (9 * -r2 - (2 * t + 1) * r1) % p != 0


def _is_primitive_root(g, p):
    from diagcubic.ntheory import prime_factors

    return all(pow(g, (p - 1) // ell, p) != 1 for ell in prime_factors(p - 1))


class TestRPair:
    def test_examples(self):
        assert r_pair(EisensteinInt(5, 6), 31) == (4, 2)
        assert r_pair(EisensteinInt(-1, -3), 7) == (1, -1)
        assert r_pair(EisensteinInt(-4, -3), 13) == (-5, -1)

    def test_integrity_errors(self):
        with pytest.raises(IntegrityError):
            r_pair(EisensteinInt(1, 1), 31)  # norm 1, not 31
        with pytest.raises(IntegrityError):
            r_pair(EisensteinInt(2, 1), 3)  # norm 3 but w-coefficient not divisible by 3
