import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import euler_legendre
from fermat_lab.modmath import (NoSolution, NotInvertible, inv_mod, is_prime,
                                jacobi, legendre, mul_mod, pow_mod,
                                primes_in_range, roots_of_unity3,
                                smallest_prime_factors, solve_unit_equation)


class TestMulMod:
    def test_trivial(self):
        assert mul_mod(3, 4, 5) == 2
        assert mul_mod(0, 4, 5) == 0
        assert mul_mod(1, 4, 5) == 4

    def test_wide_reference_sweep(self):
        # against an independent split-limb evaluation, near the 2^62 edge
        rng = random.Random(0)
        shift = (1 << 31)
        for _ in range(1_000_000):
            m = rng.randrange(2, 1 << 62)
            a = rng.randrange(m)
            b = rng.randrange(m)
            hi, lo = divmod(a, shift)
            want = ((hi * b % m) * (shift % m) + lo * b) % m
            assert mul_mod(a, b, m) == want

    @given(st.integers(2, (1 << 62) - 1), st.data())
    @settings(max_examples=300, deadline=None)
    def test_property(self, m, data):
        a = data.draw(st.integers(0, m - 1))
        b = data.draw(st.integers(0, m - 1))
        hi, lo = divmod(a, 1 << 31)
        assert mul_mod(a, b, m) == ((hi * b % m) * ((1 << 31) % m) + lo * b) % m


class TestPowMod:
    def test_examples(self):
        assert pow_mod(2, 4, 25) == 16
        assert pow_mod(17, 0, 29) == 1
        assert pow_mod(0, 0, 7) == 1
        # Wieferich property: 2^1092 = 1 mod 1093^2
        assert pow_mod(2, 1092, 1093 * 1093) == 1

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            pow_mod(2, -1, 7)


class TestInvMod:
    def test_examples(self):
        assert inv_mod(3, 7) == 5
        assert inv_mod(1, 97) == 1
        with pytest.raises(NotInvertible):
            inv_mod(6, 9)

    def test_roundtrip(self):
        rng = random.Random(1)
        for _ in range(2000):
            m = rng.randrange(2, 1 << 40)
            a = rng.randrange(1, m)
            try:
                b = inv_mod(a, m)
            except NotInvertible:
                continue
            assert a * b % m == 1 and 0 <= b < m


class TestLegendre:
    def test_examples(self):
        assert legendre(4, 5) == 1
        assert legendre(10, 5) == 0
        # squares mod 5 are {1, 4}, so 2 is a non-residue
        assert {x * x % 5 for x in range(1, 5)} == {1, 4}
        assert legendre(2, 5) == -1

    def test_against_euler(self):
        for p in primes_in_range(3, 1000):
            for a in range(p):
                assert legendre(a, p) == euler_legendre(a, p), (a, p)

    def test_jacobi_multiplicative(self):
        rng = random.Random(2)
        for _ in range(500):
            n = rng.randrange(1, 10_000) * 2 + 1
            a, b = rng.randrange(n), rng.randrange(n)
            assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


class TestUnitEquation:
    def test_examples(self):
        assert solve_unit_equation(7, 5) == (4, 3)
        assert solve_unit_equation(2, 3) == (1, 2)
        with pytest.raises(NoSolution):
            solve_unit_equation(6, 3)

    def test_exhaustive_small(self):
        # unique solution, checked against brute-force enumeration
        for ell in (3, 5, 7, 11):
            for r in range(2, 40):
                if r % ell == 0:
                    continue
                u, v = solve_unit_equation(r, ell)
                brute = [(uu, vv) for uu in range(1, r) for vv in range(1, ell)
                         if r * vv - ell * uu == 1]
                assert brute == [(u, v)]

    @given(st.integers(0, 1200), st.integers(2, 100_000))
    @settings(max_examples=300, deadline=None)
    def test_property(self, pidx, r):
        primes = primes_in_range(3, 10_000)
        ell = primes[pidx % len(primes)]
        if r % ell == 0:
            return
        u, v = solve_unit_equation(r, ell)
        assert r * v - ell * u == 1 and 0 < u < r and 0 < v < ell


class TestRootsOfUnity:
    def test_examples(self):
        assert roots_of_unity3(7) == (2, 4)
        assert roots_of_unity3(13) == (3, 9)
        assert roots_of_unity3(11) is None

    def test_sweep(self):
        for p in primes_in_range(5, 100_000):
            roots = roots_of_unity3(p)
            if p % 3 == 2:
                assert roots is None
            else:
                s0, s1 = roots
                assert s0 < s1
                assert (s0 * s0 + s0 + 1) % p == 0
                assert (s1 * s1 + s1 + 1) % p == 0


class TestPrimes:
    def test_examples(self):
        assert primes_in_range(2, 10) == [2, 3, 5, 7]
        assert primes_in_range(90, 96) == []
        assert primes_in_range(9973, 9973) == [9973]

    def test_against_trial_division(self):
        def trial(n):
            return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))

        rng = random.Random(3)
        for _ in range(20):
            a = rng.randrange(2, 10_000_000)
            b = a + rng.randrange(0, 500)
            assert primes_in_range(a, b) == [n for n in range(a, b + 1) if trial(n)]

    def test_is_prime(self):
        small = set(primes_in_range(2, 5000))
        for n in range(5000):
            assert is_prime(n) == (n in small)
        assert is_prime(2_147_483_647)  # 2^31 - 1
        assert not is_prime(2_147_483_647 - 1)

    def test_spf(self):
        spf = smallest_prime_factors(1000)
        for w in range(2, 1001):
            s = int(spf[w])
            assert w % s == 0
            assert all(w % q for q in range(2, s))
