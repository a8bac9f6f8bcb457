import math

import pytest

from fermat_lab.counting import CountRecord, count_streaming
from fermat_lab.modmath import primes_in_range
from fermat_lab.stats import (EmptyInput, UnexcludedWieferich, moments,
                              moments_text, n0_growth_diagnostic,
                              normalize_n1, poisson_prediction, poisson_table,
                              poisson_text)


def _rec(p, n0, n1, mode="table"):
    return CountRecord(p=p, class3=p % 3, n0=n0, n1=n1, nm1=p - 2 - n0 - n1,
                       mode=mode, elapsed=0.0)


class TestNormalize:
    def test_p5(self):
        x = normalize_n1(_rec(5, 0, 3))
        assert x == pytest.approx((3 - 2.5) / math.sqrt(7.5))
        assert x == pytest.approx(0.18257, abs=1e-5)

    def test_sign(self):
        assert normalize_n1(_rec(13, 0, 9)) > 0
        assert normalize_n1(_rec(13, 0, 3)) < 0


class TestMoments:
    def test_single_record(self):
        rec = _rec(5, 0, 3)
        x = normalize_n1(rec)
        report = moments([rec])
        assert report.count == 1
        for k, m in enumerate(report.moments, start=1):
            assert m == pytest.approx(x ** k)

    def test_cauchy_schwarz(self):
        records = [count_streaming(p) for p in primes_in_range(5, 2000)]
        report = moments(records)
        assert abs(report.moments[0]) <= math.sqrt(report.moments[1])

    def test_empty(self):
        with pytest.raises(EmptyInput):
            moments([])

    def test_text_render(self):
        report = moments([_rec(5, 0, 3)])
        text = moments_text(report)
        assert "E[X^k]" in text and text.count("\n") == 9


class TestPoissonPrediction:
    def test_k0(self):
        assert poisson_prediction(1, 0) == pytest.approx(math.exp(-1 / 6))
        assert poisson_prediction(1000, 0) == pytest.approx(846.48, abs=0.01)

    def test_k1(self):
        assert poisson_prediction(1000, 1) == pytest.approx(141.08, abs=0.01)

    def test_table_scale(self):
        assert poisson_prediction(332287, 3) == pytest.approx(217.03, abs=0.01)


class TestPoissonTable:
    def test_small_range(self):
        records = [count_streaming(p) for p in primes_in_range(5, 3000)]
        report = poisson_table(records)
        assert report.anomalies == []
        assert report.excluded == [1093]
        assert sum(b.t1 for b in report.bins) == report.n1_class
        assert sum(b.t2 for b in report.bins) == report.n2_class

    def test_unexcluded_raises(self):
        records = [count_streaming(p) for p in primes_in_range(1090, 1100)]
        with pytest.raises(UnexcludedWieferich):
            poisson_table(records, exclude_wieferich=False)

    def test_anomaly_detection(self):
        # a fabricated class-2 record with n0 not divisible by 6
        records = [_rec(11, 0, 5), _rec(23, 1, 10)]
        report = poisson_table(records)
        assert report.anomalies == [23]

    def test_bins_never_drop_occupied(self):
        records = [count_streaming(p) for p in primes_in_range(5, 500)]
        report = poisson_table(records, kmax=0)
        assert sum(b.t1 + b.t2 for b in report.bins) == \
            report.n1_class + report.n2_class

    def test_text_render(self):
        records = [count_streaming(p) for p in primes_in_range(5, 200)]
        assert "T1(k)" in poisson_text(poisson_table(records))


class TestGrowthDiagnostic:
    def test_wieferich_ratio(self):
        records = [count_streaming(p) for p in primes_in_range(1000, 1200)]
        p_star, ratio = n0_growth_diagnostic(records)
        assert p_star == 1093
        assert ratio == pytest.approx(17 / 1093 ** (2 / 3), abs=1e-9)
        assert ratio == pytest.approx(0.160, abs=5e-4)

    def test_monotone_in_range(self):
        records = [count_streaming(p) for p in primes_in_range(5, 100)]
        _, full = n0_growth_diagnostic(records)
        _, sub = n0_growth_diagnostic(records[:5])
        assert full >= sub
