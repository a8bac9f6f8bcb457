import random

import pytest

from fermat_lab.counting import (CountRecord, count, count_orbitwise,
                                 count_streaming, count_table, read_csv,
                                 wieferich_scan, write_csv, _orbitwise_py)
from fermat_lab.modmath import primes_in_range


class TestKnownCensuses:
    def test_p5(self):
        assert count_streaming(5).counts() == (0, 3, 0)

    def test_wieferich_censuses(self):
        assert count_streaming(1093).n0 == 17
        assert count_orbitwise(3511).n0 == 5

    def test_orbit_structure_of_3511(self):
        # 3511 = 1 mod 3: the 2-orbit of cube roots plus the tame 3-orbit
        rec = count_orbitwise(3511)
        assert rec.class3 == 1
        assert rec.n0 == 3 + 2

    def test_p7_root_lower_bound(self):
        assert count_streaming(7).n0 >= 2


class TestModeEquivalence:
    def test_small_sweep(self, warm_kernels):
        for p in primes_in_range(3, 500):
            a = count_streaming(p)
            b = count_table(p)
            c = count_orbitwise(p)
            assert a.counts() == b.counts() == c.counts(), p

    def test_random_medium(self, warm_kernels):
        rng = random.Random(17)
        primes = primes_in_range(1000, 100_000)
        for p in rng.sample(primes, 12):
            a = count_streaming(p)
            b = count_table(p)
            c = count_orbitwise(p)
            assert a.counts() == b.counts() == c.counts(), p

    def test_pure_python_orbitwise_matches(self, warm_kernels):
        for p in primes_in_range(5, 200):
            assert _orbitwise_py(p) == count_streaming(p).counts()

    def test_auto_mode_dispatch(self):
        assert count(97, "auto").mode == "streaming"
        assert count(10007, "auto").mode == "orbitwise"
        with pytest.raises(ValueError):
            count(97, "nonsense")


class TestRecordInvariants:
    def test_sum_rule(self):
        for p in primes_in_range(3, 300):
            rec = count_streaming(p)
            assert rec.n0 + rec.n1 + rec.nm1 == p - 2
            assert rec.class3 == p % 3

    def test_n0_residues(self, warm_kernels):
        for p in primes_in_range(11, 3000):
            if p in (1093, 3511):
                continue
            rec = count(p, "auto")
            if p % 3 == 1:
                assert rec.n0 % 6 == 2, (p, rec.n0)
                assert rec.n0 >= 2
            else:
                assert rec.n0 % 6 == 0, (p, rec.n0)

    def test_sum_rule_enforced_on_construction(self):
        with pytest.raises(AssertionError):
            CountRecord(p=7, class3=1, n0=1, n1=1, nm1=1, mode="table", elapsed=0.0)


class TestWieferichScan:
    def test_small_limits(self):
        assert wieferich_scan(1000) == []
        assert wieferich_scan(10_000) == [1093, 3511]
        assert wieferich_scan(1) == []


class TestCsvRoundTrip:
    def test_roundtrip(self, tmp_path):
        records = [count_streaming(p) for p in primes_in_range(5, 100)]
        path = tmp_path / "census.csv"
        write_csv(records, path)
        back = read_csv(path)
        assert [r.counts() for r in back] == [r.counts() for r in records]
        assert [r.p for r in back] == [r.p for r in records]
        assert [r.mode for r in back] == [r.mode for r in records]

    def test_header_check(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b,c\n1,2,3\n")
        with pytest.raises(ValueError):
            read_csv(path)
