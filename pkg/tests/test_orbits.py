import random

import pytest

from fermat_lab.modmath import primes_in_range
from fermat_lab.orbits import (PTooSmall, apply_F, apply_G, decompose,
                               decomposition_lines, expected_orbit_count,
                               orbit_of, _inverse_table)
from fermat_lab.quotient import build_table
from fermat_lab.theta import theta, theta_direct


class TestGenerators:
    def test_examples(self):
        assert apply_F(13, 2) == 10
        assert apply_F(13, 11) == 1
        assert apply_F(13, 6) == 6          # -1/2 is the fixed point of F
        assert apply_G(13, 2) == 7
        assert apply_G(13, 1) == 1
        assert apply_G(13, 5) == 8

    def test_involutions_and_braid(self):
        for p in primes_in_range(5, 10_000):
            inv = _inverse_table(p)
            for s in range(1, p - 1):
                f = p - 1 - s
                assert 1 <= f <= p - 2
                assert p - 1 - f == s
                g = inv[s]
                assert 1 <= g <= p - 2
                assert inv[g] == s
                # (FG)^3 = identity
                t = s
                for _ in range(3):
                    t = inv[p - 1 - t]
                assert t == s

    def test_range_checks(self):
        with pytest.raises(ValueError):
            apply_F(13, 0)
        with pytest.raises(ValueError):
            apply_G(13, 12)


class TestOrbitOf:
    def test_examples(self):
        assert orbit_of(13, 2).members == (2, 4, 5, 7, 8, 10)
        assert orbit_of(13, 1).members == (1, 6, 11)
        assert orbit_of(13, 3).members == (3, 9)

    def test_closure(self):
        rng = random.Random(11)
        for p in (101, 1009, 10007):
            for _ in range(50):
                s = rng.randrange(1, p - 1)
                orbit = orbit_of(p, s)
                members = set(orbit.members)
                for e in orbit.members:
                    assert apply_F(p, e) in members
                    assert apply_G(p, e) in members

    def test_same_orbit_same_members(self):
        orbit = orbit_of(101, 17)
        for e in orbit.members:
            assert orbit_of(101, e).members == orbit.members


class TestDecompose:
    def test_p13(self):
        d = decompose(13)
        assert [o.members for o in d.orbits] == \
            [(1, 6, 11), (2, 4, 5, 7, 8, 10), (3, 9)]
        assert d.special_fixed.members == (1, 6, 11)
        assert d.special_roots.members == (3, 9)

    def test_p11(self):
        d = decompose(11)
        assert len(d) == 2
        assert d.special_roots is None
        assert d.special_fixed.members == (1, 5, 9)

    def test_p5_degenerate(self):
        d = decompose(5)
        assert len(d) == 1
        assert d.orbits[0].members == (1, 2, 3)

    def test_partition_and_counts(self):
        for p in primes_in_range(11, 10_000):
            d = decompose(p)
            seen = [e for o in d.orbits for e in o.members]
            assert len(seen) == p - 2
            assert len(set(seen)) == p - 2
            assert len(d) == expected_orbit_count(p)

    def test_orbit_size_structure(self):
        for p in primes_in_range(11, 2000):
            sizes = sorted(o.size for o in decompose(p).orbits)
            assert set(sizes) <= {2, 3, 6}
            assert sizes.count(3) == 1
            assert sizes.count(2) == (1 if p % 3 == 1 else 0)

    def test_lines_format(self):
        lines = decomposition_lines(decompose(13))
        assert lines[0] == "1: 1,6,11"
        assert lines[2] == "3: 3,9"


class TestExpectedCount:
    def test_examples(self):
        assert expected_orbit_count(13) == 3
        assert expected_orbit_count(11) == 2
        with pytest.raises(PTooSmall):
            expected_orbit_count(7)


class TestThetaConstantOnOrbits:
    def test_exhaustive_small(self):
        for p in primes_in_range(5, 500):
            table = build_table(p, p - 1)
            for orbit in decompose(p).orbits:
                vals = {theta(p, e, table[e], table[e + 1]) for e in orbit.members}
                assert len(vals) == 1, (p, orbit.members)

    def test_spot_large(self):
        rng = random.Random(13)
        primes = primes_in_range(100_000, 10_000_000)
        for _ in range(100):
            p = rng.choice(primes)
            s = rng.randrange(1, p - 1)
            orbit = orbit_of(p, s)
            vals = {theta_direct(p, e) for e in orbit.members}
            assert len(vals) == 1, (p, orbit.members)
