"""
测试 Hurst 指数换算与理论 H_xy
"""

import pytest
from pydantic import ValidationError

from arfima_xcorr.errors import DomainError
from arfima_xcorr.estimation.relations import (
	HurstRelation,
	combine_hurst,
	hurst_from_gamma,
	theoretical_hxy,
	theoretical_hxy_for,
)
from arfima_xcorr.processes.types import ArCoefficient, FracDiffOrder, PairKind


class TestHurstRelation:
	"""测试 HurstRelation 类"""

	def test_identities(self) -> None:
		"""测试 d = H − 0.5 与 γ = 2 − 2H"""
		relation = HurstRelation.from_h(0.8)

		assert relation.d == pytest.approx(0.3)
		assert relation.gamma == pytest.approx(0.4)

	def test_constructors_agree(self) -> None:
		"""测试三种构造方式给出同一个 H"""
		assert HurstRelation.from_d(0.3).h == pytest.approx(0.8)
		assert HurstRelation.from_gamma(0.4).h == pytest.approx(0.8)

	@pytest.mark.parametrize('h', [0.0, 1.0, -0.2])
	def test_range(self, h: float) -> None:
		"""测试 H 必须在 (0, 1) 内"""
		with pytest.raises(ValidationError):
			HurstRelation(h=h)


class TestCombineHurst:
	"""测试 combine_hurst 与相关函数"""

	def test_average(self) -> None:
		"""测试 H_xy = (H_x + H_y)/2"""
		assert combine_hurst(0.9, 0.7) == pytest.approx(0.8)

	@pytest.mark.parametrize(('h_x', 'h_y'), [(0.0, 0.5), (0.5, 1.0), (1.2, 0.5)])
	def test_domain(self, h_x: float, h_y: float) -> None:
		"""测试输入必须在 (0, 1) 内"""
		with pytest.raises(DomainError):
			combine_hurst(h_x, h_y)

	def test_hurst_from_gamma(self) -> None:
		"""测试 H_xy = 1 − γ/2"""
		assert hurst_from_gamma(0.4) == pytest.approx(0.8)
		with pytest.raises(DomainError):
			hurst_from_gamma(2.0)

	def test_theoretical_hxy(self) -> None:
		"""测试由边缘过程计算理论值"""
		assert theoretical_hxy(FracDiffOrder(d=0.4), FracDiffOrder(d=0.2)) == pytest.approx(0.8)
		assert theoretical_hxy(FracDiffOrder(d=0.4), ArCoefficient(theta=0.9)) == pytest.approx(0.7)

	def test_theoretical_hxy_for(self) -> None:
		"""测试按过程对类型计算理论值，AR 一侧与 θ 无关"""
		assert theoretical_hxy_for(PairKind.ARFIMA_ARFIMA, 0.1, d2=0.3) == pytest.approx(0.7)
		assert theoretical_hxy_for(PairKind.ARFIMA_AR, 0.4, theta=0.1) == pytest.approx(
			theoretical_hxy_for(PairKind.ARFIMA_AR, 0.4, theta=0.9)
		)

	def test_theoretical_hxy_missing_parameter(self) -> None:
		"""测试缺少 d2 或 θ"""
		with pytest.raises(DomainError):
			theoretical_hxy_for(PairKind.ARFIMA_ARFIMA, 0.1)
		with pytest.raises(DomainError):
			theoretical_hxy_for(PairKind.ARFIMA_AR, 0.1)
