"""
测试样本互相关与曲线类型
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.signal import lfilter

from arfima_xcorr.analysis.curves import CorrelationKind, CrossCorrelationCurve, ExactCorrelation
from arfima_xcorr.analysis.sample import null_correlation_stderr, sample_cross_correlation
from arfima_xcorr.errors import DegenerateInputError, DomainError
from arfima_xcorr.processes.types import SeriesPair


class TestSampleCrossCorrelation:
	"""测试 sample_cross_correlation"""

	def test_lag_convention(self) -> None:
		"""测试 y 落后 x 三期时峰值在 n = +3"""
		rng = np.random.default_rng(1)
		source = rng.standard_normal(4003)
		pair = SeriesPair(x=source[3:], y=source[:-3])
		curve = sample_cross_correlation(pair, 10)

		assert int(curve.lags[np.argmax(curve.values)]) == 3
		assert curve.value_at(3) > 0.99

	def test_swap_reverses_lags(self, arfima_pair: SeriesPair) -> None:
		"""测试 ρ̂_xy(n) = ρ̂_yx(−n)"""
		forward = sample_cross_correlation(arfima_pair, 50)
		backward = sample_cross_correlation(SeriesPair(x=arfima_pair.y, y=arfima_pair.x), 50)

		np.testing.assert_allclose(forward.values, backward.values[::-1], rtol=1e-12)

	@pytest.mark.parametrize('scale_x, shift_x, scale_y, shift_y', [(3.0, -2.0, 0.5, 7.0), (1e-3, 1e3, 40.0, 0.0)])
	def test_affine_invariant(
		self, arfima_pair: SeriesPair, scale_x: float, shift_x: float, scale_y: float, shift_y: float
	) -> None:
		"""测试正系数仿射变换不改变样本互相关"""
		base = sample_cross_correlation(arfima_pair, 60)
		moved = sample_cross_correlation(
			SeriesPair(x=scale_x * arfima_pair.x + shift_x, y=scale_y * arfima_pair.y + shift_y), 60
		)

		np.testing.assert_allclose(moved.values, base.values, rtol=1e-9, atol=1e-12)

	def test_negative_scale_flips_sign(self, arfima_pair: SeriesPair) -> None:
		"""测试 x 乘负数时互相关整体变号"""
		base = sample_cross_correlation(arfima_pair, 20)
		flipped = sample_cross_correlation(SeriesPair(x=-2.0 * arfima_pair.x, y=arfima_pair.y), 20)

		np.testing.assert_allclose(flipped.values, -base.values, rtol=1e-9, atol=1e-12)

	def test_bounded(self, ar_pair: SeriesPair) -> None:
		"""测试 |ρ̂| ≤ 1 且 kind 为 sample"""
		curve = sample_cross_correlation(ar_pair, 100)

		assert curve.kind == CorrelationKind.SAMPLE
		assert len(curve) == 201
		assert np.all(np.abs(curve.values) <= 1.0)

	def test_perfectly_correlated(self) -> None:
		"""测试 y = 2x 时 ρ̂(0) = 1"""
		x = np.sin(np.arange(400) * 0.37)
		curve = sample_cross_correlation(SeriesPair(x=x, y=2.0 * x), 5)

		assert curve.value_at(0) == pytest.approx(1.0, rel=1e-12)

	@pytest.mark.parametrize('max_lag', [0, 25, 100])
	def test_max_lag_range(self, max_lag: int) -> None:
		"""测试 max_lag 必须满足 1 ≤ max_lag < N/4"""
		x = np.arange(100.0)
		with pytest.raises(DomainError):
			sample_cross_correlation(SeriesPair(x=x, y=x[::-1]), max_lag)

	def test_constant_series(self) -> None:
		"""测试方差为零时抛出 DegenerateInputError"""
		pair = SeriesPair(x=np.ones(100), y=np.arange(100.0))

		with pytest.raises(DegenerateInputError):
			sample_cross_correlation(pair, 5)


class TestCrossCorrelationCurve:
	"""测试 CrossCorrelationCurve 类"""

	def test_lags_must_increase(self) -> None:
		"""测试滞后必须严格递增"""
		with pytest.raises(ValidationError):
			CrossCorrelationCurve(lags=[0, 2, 1], values=[0.1, 0.2, 0.3], kind='exact_truncated')

	def test_shape_mismatch(self) -> None:
		"""测试长度不一致被拒绝"""
		with pytest.raises(ValidationError):
			CrossCorrelationCurve(lags=[0, 1], values=[0.1], kind='asymptotic')

	def test_sample_bounds(self) -> None:
		"""测试样本曲线不允许 |ρ| > 1，渐近曲线允许"""
		with pytest.raises(ValidationError):
			CrossCorrelationCurve(lags=[1], values=[1.5], kind='sample')
		CrossCorrelationCurve(lags=[1], values=[1.5], kind='asymptotic')

	def test_value_at_missing_lag(self) -> None:
		"""测试取不存在的滞后"""
		curve = CrossCorrelationCurve(lags=[1, 3], values=[0.2, 0.1], kind='asymptotic')

		assert curve.value_at(3) == 0.1
		with pytest.raises(KeyError):
			curve.value_at(2)

	def test_restrict(self) -> None:
		"""测试截取滞后区间"""
		curve = CrossCorrelationCurve(
			lags=np.arange(-5, 6), values=np.linspace(-0.5, 0.5, 11), kind='exact_truncated'
		)
		part = curve.restrict(-1, 2)

		np.testing.assert_array_equal(part.lags, [-1, 0, 1, 2])
		assert part.kind == CorrelationKind.EXACT_TRUNCATED


class TestExactCorrelation:
	"""测试 ExactCorrelation 类"""

	def test_corrected(self) -> None:
		"""测试修正值与 float 转换"""
		result = ExactCorrelation(value=0.25, truncation=10, tail_bound=0.01, tail_estimate=0.005)

		assert result.corrected == pytest.approx(0.255)
		assert float(result) == 0.25

	def test_negative_bound(self) -> None:
		"""测试余项上界不能为负"""
		with pytest.raises(ValidationError):
			ExactCorrelation(value=0.1, truncation=1, tail_bound=-1.0)


class TestNullCorrelationStderr:
	"""测试独立假设下的标准误"""

	def test_white_noise(self) -> None:
		"""测试两条独立白噪声的标准误约为 N^{-1/2}"""
		rng = np.random.default_rng(7)
		pair = SeriesPair(x=rng.standard_normal(4096), y=rng.standard_normal(4096))

		assert null_correlation_stderr(pair) == pytest.approx(4096**-0.5, rel=0.1)

	def test_persistent_series(self) -> None:
		"""测试两条独立 AR(1)（φ = 0.9）的标准误约为 √((1+φ²)/((1−φ²)N))"""
		rng = np.random.default_rng(11)
		x = lfilter([1.0], [1.0, -0.9], rng.standard_normal(8192))
		y = lfilter([1.0], [1.0, -0.9], rng.standard_normal(8192))
		expected = math.sqrt(1.81 / 0.19 / 8192)

		assert null_correlation_stderr(SeriesPair(x=x, y=y)) == pytest.approx(expected, rel=0.25)

	def test_scale_invariant(self, ar_pair: SeriesPair) -> None:
		"""测试标准误与序列的尺度无关"""
		scaled = SeriesPair(x=5.0 * ar_pair.x + 1.0, y=0.1 * ar_pair.y)

		assert null_correlation_stderr(scaled) == pytest.approx(
			null_correlation_stderr(ar_pair), rel=1e-9
		)

	def test_constant_series(self) -> None:
		"""测试方差为零时抛出 DegenerateInputError"""
		with pytest.raises(DegenerateInputError):
			null_correlation_stderr(SeriesPair(x=np.ones(64), y=np.arange(64.0)))
