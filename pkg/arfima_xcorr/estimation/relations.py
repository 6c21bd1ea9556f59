"""
Hurst 指数的参数化换算

H、d = H − 0.5、γ = 2 − 2H 三种写法之间的转换，以及双变量 Hurst 指数的理论值
H_xy = (H_x + H_y)/2。
"""

from pydantic import BaseModel, ConfigDict, Field

from arfima_xcorr.errors import DomainError
from arfima_xcorr.processes.types import (
	ArCoefficient,
	FracDiffOrder,
	PairKind,
	ProcessSpec,
)


class HurstRelation(BaseModel):
	"""同一个 Hurst 指数的三种参数化

	只存储 H，d 与 γ 由 H 计算，因此两个恒等式总是成立。
	"""

	model_config = ConfigDict(frozen=True)

	h: float = Field(gt=0.0, lt=1.0, allow_inf_nan=False, description='Hurst 指数 H')

	@property
	def d(self) -> float:
		"""分数差分阶数 d = H − 0.5"""
		return self.h - 0.5

	@property
	def gamma(self) -> float:
		"""衰减指数 γ = 2 − 2H"""
		return 2.0 - 2.0 * self.h

	@classmethod
	def from_h(cls, h: float) -> 'HurstRelation':
		return cls(h=h)

	@classmethod
	def from_d(cls, d: float) -> 'HurstRelation':
		return cls(h=d + 0.5)

	@classmethod
	def from_gamma(cls, gamma: float) -> 'HurstRelation':
		return cls(h=1.0 - gamma / 2.0)


def _check_unit_interval(name: str, value: float) -> None:
	if not (0.0 < value < 1.0):
		raise DomainError(f'{name} 必须在 (0, 1) 内: {value}')


def combine_hurst(h_x: float, h_y: float) -> float:
	"""双变量 Hurst 指数 H_xy = (H_x + H_y)/2

	Args:
		h_x: x 的 Hurst 指数，0 < H_x < 1
		h_y: y 的 Hurst 指数，0 < H_y < 1

	Returns:
		算术平均

	Raises:
		DomainError: 输入不在 (0, 1) 内

	Example:
		>>> combine_hurst(0.9, 0.7)
		0.8
	"""
	_check_unit_interval('H_x', h_x)
	_check_unit_interval('H_y', h_y)
	return (h_x + h_y) / 2.0


def hurst_from_gamma(gamma_xy: float) -> float:
	"""由互相关衰减指数求 H_xy = 1 − γ/2

	Raises:
		DomainError: γ 不在 (0, 2) 内
	"""
	if not (0.0 < gamma_xy < 2.0):
		raise DomainError(f'gamma 必须在 (0, 2) 内: {gamma_xy}')
	return 1.0 - gamma_xy / 2.0


def theoretical_hxy(first: ProcessSpec, second: ProcessSpec) -> float:
	"""两个边缘过程对应的理论 H_xy"""
	return combine_hurst(first.hurst, second.hurst)


def theoretical_hxy_for(
	pair: PairKind,
	d1: float,
	d2: float | None = None,
	theta: float | None = None,
) -> float:
	"""按过程对类型和参数计算理论 H_xy

	Args:
		pair: 过程对类型
		d1: x 的分数差分阶数
		d2: y 的分数差分阶数（arfima_arfima）
		theta: y 的 AR(1) 系数（arfima_ar）

	Returns:
		(H_x + H_y)/2，AR(1) 一侧 H_y = 0.5
	"""
	first = FracDiffOrder(d=d1)
	if pair == PairKind.ARFIMA_ARFIMA:
		if d2 is None:
			raise DomainError('arfima_arfima 需要 d2')
		return theoretical_hxy(first, FracDiffOrder(d=d2))
	if theta is None:
		raise DomainError('arfima_ar 需要 theta')
	return theoretical_hxy(first, ArCoefficient(theta=theta))
