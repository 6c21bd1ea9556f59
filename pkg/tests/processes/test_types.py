"""
测试过程与模拟的领域类型
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from arfima_xcorr.errors import InvalidSpecError
from arfima_xcorr.processes.types import (
	MIN_BURN_IN,
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	PairKind,
	SeriesMeta,
	SeriesPair,
	SimulationConfig,
	default_burn_in,
)


class TestProcessSpecs:
	"""测试 FracDiffOrder 和 ArCoefficient"""

	@pytest.mark.parametrize('d', [-0.5, 0.5, 0.7, math.nan])
	def test_frac_diff_outside_stationary_range(self, d: float) -> None:
		"""测试 d 超出 (−0.5, 0.5) 被拒绝"""
		with pytest.raises(ValidationError):
			FracDiffOrder(d=d)

	@pytest.mark.parametrize('theta', [-1.0, 1.0, 1.5])
	def test_ar_coefficient_outside_unit_interval(self, theta: float) -> None:
		"""测试 |θ| ≥ 1 被拒绝"""
		with pytest.raises(ValidationError):
			ArCoefficient(theta=theta)

	def test_hurst_exponents(self) -> None:
		"""测试 H = d + 0.5，AR(1) 为 0.5"""
		assert FracDiffOrder(d=0.3).hurst == pytest.approx(0.8)
		assert ArCoefficient(theta=0.9).hurst == 0.5

	def test_white_noise_std(self) -> None:
		"""测试 d = 0 时标准差等于新息标准差"""
		assert FracDiffOrder(d=0.0).std(4.0) == 2.0

	def test_arfima_std(self) -> None:
		"""测试 σ_x = σ_ε·sqrt(Γ(1−2d))/Γ(1−d)"""
		expected = math.sqrt(math.gamma(0.2)) / math.gamma(0.6)
		assert FracDiffOrder(d=0.4).std(1.0) == pytest.approx(expected, rel=1e-14)

	def test_ar_std(self) -> None:
		"""测试 σ_y = σ_ν/sqrt(1−θ²)"""
		assert ArCoefficient(theta=0.5).std(3.0) == pytest.approx(2.0)

	def test_negative_variance(self) -> None:
		"""测试负方差被拒绝"""
		with pytest.raises(InvalidSpecError):
			FracDiffOrder(d=0.1).std(-1.0)


class TestInnovationSpec:
	"""测试 InnovationSpec 类"""

	def test_defaults(self) -> None:
		"""测试默认值"""
		spec = InnovationSpec()

		assert spec.sigma_e2 == 1.0
		assert spec.sigma_v2 == 1.0
		assert spec.sigma_ev == 0.5
		assert spec.correlation == 0.5

	def test_not_positive_semidefinite(self) -> None:
		"""测试 σ_εν² > σ_ε²σ_ν² 被拒绝"""
		with pytest.raises(ValidationError):
			InnovationSpec(sigma_e2=1.0, sigma_v2=1.0, sigma_ev=1.5)

	def test_zero_variance_with_covariance(self) -> None:
		"""测试 σ_ε = 0 且 σ_εν ≠ 0 被拒绝"""
		with pytest.raises(ValidationError):
			InnovationSpec(sigma_e2=0.0, sigma_v2=1.0, sigma_ev=0.1)

	def test_cholesky_reproduces_covariance(self) -> None:
		"""测试 L·Lᵀ 等于协方差矩阵"""
		spec = InnovationSpec(sigma_e2=2.0, sigma_v2=3.0, sigma_ev=-1.2)
		factor = spec.cholesky_factor()

		np.testing.assert_allclose(factor @ factor.T, [[2.0, -1.2], [-1.2, 3.0]], rtol=1e-14)
		assert factor[0, 1] == 0.0

	def test_cholesky_degenerate_first_component(self) -> None:
		"""测试 σ_ε = 0 时的因子"""
		factor = InnovationSpec(sigma_e2=0.0, sigma_v2=4.0, sigma_ev=0.0).cholesky_factor()

		np.testing.assert_array_equal(factor, [[0.0, 0.0], [0.0, 2.0]])

	def test_perfect_correlation(self) -> None:
		"""测试完全相关时残差为零"""
		factor = InnovationSpec(sigma_e2=1.0, sigma_v2=1.0, sigma_ev=1.0).cholesky_factor()

		assert factor[1, 1] == 0.0

	def test_frozen(self) -> None:
		"""测试构造后不可修改"""
		spec = InnovationSpec()

		with pytest.raises(ValidationError):
			spec.sigma_ev = 0.1  # type: ignore[misc]


class TestSimulationConfig:
	"""测试 SimulationConfig 类"""

	def test_default_burn_in(self) -> None:
		"""测试 M = max(N, 2¹⁴)"""
		assert SimulationConfig(length=100).effective_burn_in == MIN_BURN_IN
		assert SimulationConfig(length=2**16).effective_burn_in == 2**16
		assert default_burn_in(2**15) == 2**15

	def test_burn_in_shorter_than_length(self) -> None:
		"""测试 M < N 被拒绝"""
		with pytest.raises(ValidationError):
			SimulationConfig(length=1000, burn_in=999)

	def test_seed_range(self) -> None:
		"""测试种子必须是 64 位无符号整数"""
		SimulationConfig(length=10, seed=2**64 - 1)
		with pytest.raises(ValidationError):
			SimulationConfig(length=10, seed=2**64)
		with pytest.raises(ValidationError):
			SimulationConfig(length=10, seed=-1)

	def test_with_seed(self) -> None:
		"""测试 with_seed 只改变种子"""
		cfg = SimulationConfig(length=100, burn_in=200, seed=1)
		other = cfg.with_seed(7)

		assert other.seed == 7
		assert other.length == 100
		assert other.burn_in == 200
		assert cfg.seed == 1


class TestSeriesMeta:
	"""测试 SeriesMeta 类"""

	def test_records_roundtrip(self) -> None:
		"""测试 key = value 记录可以恢复元数据"""
		meta = SeriesMeta(
			pair=PairKind.ARFIMA_AR,
			d1=0.3,
			theta=0.9,
			innovations=InnovationSpec(sigma_ev=0.25),
			length=4096,
			burn_in=16384,
			seed=42,
		)
		records = meta.to_records()

		assert list(records) == [
			'pair', 'd1', 'theta', 'sigma_e2', 'sigma_v2', 'sigma_ev', 'N', 'M', 'seed'
		]
		assert SeriesMeta.from_records(records) == meta

	def test_missing_key(self) -> None:
		"""测试缺少键时抛出 InvalidSpecError"""
		with pytest.raises(InvalidSpecError, match='缺少键'):
			SeriesMeta.from_records({'pair': 'arfima_arfima', 'd1': '0.1'})

	def test_pair_requires_second_parameter(self) -> None:
		"""测试过程对缺少 d2 或 θ"""
		with pytest.raises(ValidationError):
			SeriesMeta(
				pair=PairKind.ARFIMA_ARFIMA,
				d1=0.1,
				innovations=InnovationSpec(),
				length=10,
				burn_in=10,
				seed=0,
			)

	def test_processes(self) -> None:
		"""测试边缘过程描述"""
		meta = SeriesMeta(
			pair=PairKind.ARFIMA_AR,
			d1=0.2,
			theta=0.5,
			innovations=InnovationSpec(),
			length=10,
			burn_in=10,
			seed=0,
		)
		first, second = meta.processes

		assert first == FracDiffOrder(d=0.2)
		assert second == ArCoefficient(theta=0.5)


class TestSeriesPair:
	"""测试 SeriesPair 类"""

	def test_arrays_are_read_only(self) -> None:
		"""测试序列被复制并设为只读"""
		source = np.arange(5.0)
		pair = SeriesPair(x=source, y=source * 2)
		source[0] = 100.0

		assert pair.x[0] == 0.0
		with pytest.raises(ValueError):
			pair.x[0] = 1.0

	def test_length_mismatch(self) -> None:
		"""测试长度不一致被拒绝"""
		with pytest.raises(ValidationError):
			SeriesPair(x=[1.0, 2.0], y=[1.0])

	def test_non_finite_values(self) -> None:
		"""测试非有限值被拒绝"""
		with pytest.raises(ValidationError):
			SeriesPair(x=[1.0, math.inf], y=[1.0, 2.0])
