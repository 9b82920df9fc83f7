import pytest

from diagcubic import (
    CubicClass,
    DomainError,
    EisensteinInt,
    IntegrityError,
    cd_search,
    cubic_data,
    delta,
    make_field,
    theta_exact,
    theta_sign_rule,
)
from diagcubic.verify import SUPPORTED_FIELDS

# independently enumerated representations 4q = c^2 + 27 d^2 (see cd_search
# contract for the side conditions pinning the signs)
CD_EXPECTED = {
    4: (4, 0), 7: (1, 1), 13: (-5, 1), 16: (-8, 0), 19: (7, 1), 25: (10, 0),
    31: (4, 2), 37: (-11, 1), 43: (-8, 2), 49: (13, 1), 61: (1, 3), 64: (16, 0),
}


class TestCdSearch:
    @pytest.mark.parametrize("q", sorted(CD_EXPECTED))
    def test_known_pairs(self, q):
        p, _ = SUPPORTED_FIELDS[q]
        assert cd_search(q, p) == CD_EXPECTED[q]

    def test_coprimality_excludes_square_candidate(self):
        # at q = 49 the d = 0 candidate c = -14 is killed by gcd(c, 7) > 1
        assert cd_search(49, 7) == (13, 1)

    def test_rejects_bijective_regime(self):
        with pytest.raises(DomainError):
            cd_search(5, 5)


class TestThetaExact:
    def test_prime_fields(self, f31, f7):
        theta, m = theta_exact(f31)
        assert (theta, m) == (1, EisensteinInt(5, 6))
        theta, m = theta_exact(f7)
        assert (theta, m) == (-1, EisensteinInt(-1, -3))

    def test_even_degree_canonical_generator(self, f49):
        # canonical g = 2 + t has norm 5, giving J = 2 + 3w and theta = -1
        assert f49.g.norm() == 5
        theta, m = theta_exact(f49)
        assert (theta, m) == (-1, EisensteinInt(5, -3))
        assert m.real_doubled() == 13 and abs(m.b) == 3

    def test_even_degree_other_coset_generator(self):
        # a generator with norm 3 flips the character, hence theta and C1/C2
        field = make_field(7, 2, generator=(3, 1))
        assert field.g.norm() == 3
        theta, m = theta_exact(field)
        assert (theta, m) == (1, EisensteinInt(8, 3))

    def test_no_prime_cubic_character(self, f4):
        theta, m = theta_exact(f4)
        assert theta == 0
        assert m == EisensteinInt(2, 0)  # c/2 with c = 4
        assert m.norm() == 4


class TestThetaSignRule:
    def test_odd_degree(self):
        assert theta_sign_rule(1, 4, 2) == 1
        assert theta_sign_rule(1, 1, -1) == -1
        assert theta_sign_rule(3, 1, -1) == (EisensteinInt(-1, -3) ** 3).imag_sign()

    def test_even_degree_is_zero(self):
        assert theta_sign_rule(2, 4, 2) == 0
        assert theta_sign_rule(4, 1, 1) == 0

    def test_parity_violation(self):
        with pytest.raises(IntegrityError):
            theta_sign_rule(1, 2, 1)


class TestDelta:
    def test_worked_values(self, f31):
        data = cubic_data(f31)
        assert delta(data, CubicClass.C1) == -1
        assert delta(data, CubicClass.C2) == 1

    def test_zero_when_d_vanishes(self, f4):
        data = cubic_data(f4)
        assert delta(data, CubicClass.C1) == 0
        assert delta(data, CubicClass.C2) == 0

    def test_undefined_for_cubes(self, f31):
        data = cubic_data(f31)
        with pytest.raises(DomainError):
            delta(data, CubicClass.C0)
        with pytest.raises(DomainError):
            delta(data, CubicClass.ZERO)

    def test_paper_source(self, f49):
        data = cubic_data(f49)
        assert delta(data, CubicClass.C1, theta_source="paper") == 0
        assert delta(data, CubicClass.C1) == -data.theta
        with pytest.raises(DomainError):
            data.theta_from("folklore")


class TestCubicData:
    def test_f31_record(self, f31):
        data = cubic_data(f31)
        assert (data.q, data.p, data.k) == (31, 31, 1)
        assert (data.c, data.d, data.r1, data.r2) == (4, 2, 4, 2)
        assert data.theta == data.theta_paper == 1
        assert data.gauss_cubed_over_q == EisensteinInt(5, 6)

    def test_f4_record(self, f4):
        data = cubic_data(f4)
        assert (data.c, data.d) == (4, 0)
        assert data.r1 is None and data.r2 is None
        assert data.theta == data.theta_paper == 0

    def test_f49_record(self, f49):
        data = cubic_data(f49)
        assert (data.c, data.d) == (13, 1)
        assert (data.r1, data.r2) == (1, 1)  # from the induced generator norm(g) = 5
        assert data.theta == -1
        assert data.theta_paper == 0  # the parity rule, kept for comparison

    def test_rejects_bijective_regime(self):
        with pytest.raises(DomainError):
            cubic_data(make_field(5))

    def test_exact_path_matches_search_widely(self):
        # cubic_data raises IntegrityError if the Eisenstein route and the
        # Diophantine search ever disagree; sweep every q = p^k = 1 (mod 3)
        # with p <= 100, k <= 4, q <= 10^4
        from diagcubic.ntheory import primes_up_to

        swept = 0
        for p in primes_up_to(100):
            for k in (1, 2, 3, 4):
                q = p ** k
                if q > 10_000 or q % 3 != 1:
                    continue
                data = cubic_data(make_field(p, k))
                assert 4 * q == data.c ** 2 + 27 * data.d ** 2
                if k % 2 == 1:
                    assert data.theta == data.theta_paper
                swept += 1
        assert swept > 40

    @pytest.mark.parametrize("q", sorted(SUPPORTED_FIELDS))
    def test_invariants(self, q):
        p, k = SUPPORTED_FIELDS[q]
        data = cubic_data(make_field(p, k))
        assert 4 * q == data.c ** 2 + 27 * data.d ** 2
        assert data.c % 3 == 1 and data.d >= 0
        assert (data.c - data.d) % 2 == 0
        assert (data.d == 0) == (data.theta == 0)
        assert (data.r1 is not None) == (p % 3 == 1)
        m = data.gauss_cubed_over_q
        assert m.norm() == q
        total = m + m.conjugate()
        assert (total.a, total.b) == (data.c, 0)
        assert m.real_doubled() == data.c and abs(m.b) == 3 * data.d
        if k % 2 == 1:
            assert data.theta == data.theta_paper
        if p % 3 == 1 and k % 2 == 0:
            assert data.theta != 0 and data.theta_paper == 0
