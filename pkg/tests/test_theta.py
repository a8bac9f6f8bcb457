import random

import pytest

from fermat_lab.modmath import legendre, primes_in_range
from fermat_lab.quotient import build_table, fermat_quotient
from fermat_lab.theta import (BadResidue, ReductionType, SOutOfRange,
                              reduction_type, theta, theta_direct,
                              theta_extended, theta_oracle)


class TestThetaValues:
    def test_p5(self):
        # q_5 = (0, 3, 1, 1); all three classes are wild split
        assert [theta_direct(5, s) for s in (1, 2, 3)] == [1, 1, 1]

    def test_roots_give_tame(self):
        # p = 7 = 1 mod 3: roots of s^2 + s + 1 are 2 and 4
        assert theta_direct(7, 2) == 0
        assert theta_direct(7, 4) == 0

    def test_wieferich_at_one(self):
        assert theta_direct(1093, 1) == 0
        assert theta_direct(3511, 1) == 0

    def test_takes_precomputed_quotients(self):
        p = 101
        t = build_table(p, p - 1)
        for s in range(1, p - 1):
            assert theta(p, s, t[s], t[s + 1]) == theta_direct(p, s)

    def test_out_of_range(self):
        for bad in (0, -1, 6, 100):
            with pytest.raises(SOutOfRange):
                theta_direct(7, bad)


class TestOracleEquivalence:
    def test_exhaustive_small(self):
        for p in primes_in_range(5, 200):
            for s in range(1, p - 1):
                assert theta_direct(p, s) == theta_oracle(p, s), (p, s)

    def test_random_large(self):
        rng = random.Random(7)
        primes = primes_in_range(10_000, 1_000_000)
        for _ in range(300):
            p = rng.choice(primes)
            s = rng.randrange(1, p - 1)
            assert theta_direct(p, s) == theta_oracle(p, s), (p, s)

    def test_oracle_spot_values(self):
        assert theta_oracle(5, 2) == 1
        assert theta_oracle(7, 2) == 0


class TestShortcutAtOne:
    def test_matches_wieferich_form(self):
        for p in primes_in_range(5, 10_000):
            assert theta_direct(p, 1) == legendre(-2 * fermat_quotient(2, p), p)


class TestExtended:
    def test_examples(self):
        assert theta_extended(5, 7) == theta_direct(5, 2)
        with pytest.raises(BadResidue):
            theta_extended(5, 4)   # 4 = -1 mod 5
        with pytest.raises(BadResidue):
            theta_extended(5, 10)  # 0 mod 5

    def test_periodicity(self):
        for p in primes_in_range(5, 300):
            for s in range(1, p - 1):
                base = theta_direct(p, s)
                for k in (1, 2):
                    assert theta_extended(p, s + k * p) == base

    def test_definition_at_shifted_point(self):
        # evaluate the defining expression at t = s + p directly mod p^2
        from fermat_lab.modmath import inv_mod

        for p in primes_in_range(5, 60):
            pp = p * p
            for s in range(1, p - 1):
                t = s + p
                w = pow(t, t, pp) * inv_mod(pow(t + 1, t + 1, pp), pp) % pp
                direct = legendre(2 * t * (t + 1) % p * fermat_quotient(w, p), p)
                assert theta_extended(p, t) == direct


class TestReductionType:
    def test_mapping(self):
        assert ReductionType.from_theta(0) is ReductionType.Tame
        assert ReductionType.from_theta(1) is ReductionType.WildSplit
        assert ReductionType.from_theta(-1) is ReductionType.WildNonSplit
        for rt in ReductionType:
            assert ReductionType.from_theta(rt.theta) is rt

    def test_examples(self):
        assert reduction_type(7, 2) is ReductionType.Tame
        assert reduction_type(1093, 1) is ReductionType.Tame
        assert reduction_type(5, 1) is ReductionType.WildSplit
