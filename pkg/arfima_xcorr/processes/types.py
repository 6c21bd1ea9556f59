"""
过程与模拟的领域类型

所有类型都基于 pydantic，构造时即校验不变量（平稳区间、半正定协方差等），
构造后不可修改。
"""

import math
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy import special

from arfima_xcorr.errors import InvalidSpecError

# 截断 MA(∞) 时预样本新息长度的下限
MIN_BURN_IN = 2**14

UINT64_MAX = 2**64 - 1


def default_burn_in(length: int) -> int:
	"""默认预热长度 M = max(N, 2¹⁴)

	Args:
		length: 输出序列长度 N

	Returns:
		预热长度 M
	"""
	return max(int(length), MIN_BURN_IN)


class PairKind(str, Enum):
	"""过程对类型"""

	ARFIMA_ARFIMA = 'arfima_arfima'
	ARFIMA_AR = 'arfima_ar'


class ProcessSpec(BaseModel, ABC):
	"""单个边缘过程的抽象描述

	具体实现为 FracDiffOrder（ARFIMA(0,d,0)）和 ArCoefficient（AR(1)）。
	"""

	model_config = ConfigDict(frozen=True)

	@property
	@abstractmethod
	def hurst(self) -> float:
		"""过程的 Hurst 指数"""
		...

	@abstractmethod
	def std(self, innovation_variance: float) -> float:
		"""给定新息方差时过程的标准差

		Args:
			innovation_variance: 新息方差 σ²

		Returns:
			过程标准差
		"""
		...


class FracDiffOrder(ProcessSpec):
	"""分数差分阶数 d，平稳区间 −0.5 < d < 0.5"""

	d: float = Field(gt=-0.5, lt=0.5, allow_inf_nan=False, description='分数差分阶数')

	@property
	def hurst(self) -> float:
		return self.d + 0.5

	def std(self, innovation_variance: float) -> float:
		"""σ_x = σ_ε·sqrt(Γ(1−2d))/Γ(1−d)"""
		if innovation_variance < 0:
			raise InvalidSpecError(f'新息方差不能为负数: {innovation_variance}')
		if self.d == 0:
			return math.sqrt(innovation_variance)
		ratio = math.sqrt(special.gamma(1.0 - 2.0 * self.d)) / special.gamma(
			1.0 - self.d
		)
		return math.sqrt(innovation_variance) * float(ratio)


class ArCoefficient(ProcessSpec):
	"""AR(1) 系数 θ，|θ| < 1"""

	theta: float = Field(gt=-1.0, lt=1.0, allow_inf_nan=False, description='AR(1) 系数')

	@property
	def hurst(self) -> float:
		return 0.5

	def std(self, innovation_variance: float) -> float:
		"""σ_y = σ_ν/sqrt(1−θ²)"""
		if innovation_variance < 0:
			raise InvalidSpecError(f'新息方差不能为负数: {innovation_variance}')
		return math.sqrt(innovation_variance / (1.0 - self.theta**2))


def as_frac_diff(d: float | FracDiffOrder) -> FracDiffOrder:
	"""把浮点数或 FracDiffOrder 统一成 FracDiffOrder（触发区间校验）"""
	if isinstance(d, FracDiffOrder):
		return d
	return FracDiffOrder(d=d)


def as_ar_coefficient(theta: float | ArCoefficient) -> ArCoefficient:
	"""把浮点数或 ArCoefficient 统一成 ArCoefficient（触发区间校验）"""
	if isinstance(theta, ArCoefficient):
		return theta
	return ArCoefficient(theta=theta)


class InnovationSpec(BaseModel):
	"""二元高斯新息 (ε, ν) 的二阶矩

	Attributes:
		sigma_e2: ε 的方差 σ_ε²
		sigma_v2: ν 的方差 σ_ν²
		sigma_ev: ε 与 ν 的协方差 σ_εν
	"""

	model_config = ConfigDict(frozen=True)

	sigma_e2: float = Field(default=1.0, ge=0.0, allow_inf_nan=False)
	sigma_v2: float = Field(default=1.0, ge=0.0, allow_inf_nan=False)
	sigma_ev: float = Field(default=0.5, allow_inf_nan=False)

	@model_validator(mode='after')
	def check_positive_semidefinite(self) -> 'InnovationSpec':
		"""σ_εν² ≤ σ_ε²·σ_ν²"""
		bound = self.sigma_e2 * self.sigma_v2
		if self.sigma_ev**2 > bound * (1.0 + 1e-12):
			raise ValueError(
				f'协方差矩阵不是半正定的: sigma_ev²={self.sigma_ev**2} > '
				f'sigma_e2·sigma_v2={bound}'
			)
		return self

	@property
	def sigma_e(self) -> float:
		return math.sqrt(self.sigma_e2)

	@property
	def sigma_v(self) -> float:
		return math.sqrt(self.sigma_v2)

	@property
	def correlation(self) -> float:
		"""新息相关系数 σ_εν/(σ_εσ_ν)，任一方差为零时返回 0"""
		denominator = self.sigma_e * self.sigma_v
		if denominator == 0:
			return 0.0
		return self.sigma_ev / denominator

	def cholesky_factor(self) -> np.ndarray:
		"""下三角因子 L，满足 L·Lᵀ = [[σ_ε², σ_εν], [σ_εν, σ_ν²]]

		Returns:
			2×2 下三角矩阵

		Raises:
			InvalidSpecError: σ_ε = 0 而 σ_εν ≠ 0，或协方差不是半正定的
		"""
		sigma_e = self.sigma_e
		if sigma_e == 0:
			if self.sigma_ev != 0:
				raise InvalidSpecError(
					f'sigma_e2 = 0 时 sigma_ev 必须为 0，收到: {self.sigma_ev}'
				)
			return np.array([[0.0, 0.0], [0.0, self.sigma_v]])

		lower = self.sigma_ev / sigma_e
		residual = self.sigma_v2 - lower * lower
		if residual < -1e-12 * max(self.sigma_v2, 1.0):
			raise InvalidSpecError(
				f'协方差矩阵不是半正定的: sigma_ev={self.sigma_ev}, '
				f'sigma_e2={self.sigma_e2}, sigma_v2={self.sigma_v2}'
			)
		return np.array([[sigma_e, 0.0], [lower, math.sqrt(max(residual, 0.0))]])


class SimulationConfig(BaseModel):
	"""模拟配置

	Attributes:
		length: 输出长度 N
		burn_in: 预热长度 M（截断 MA 的预样本新息数），None 时取 max(N, 2¹⁴)
		seed: 64 位无符号随机种子
	"""

	model_config = ConfigDict(frozen=True)

	length: int = Field(gt=0, description='输出长度 N')
	burn_in: int | None = Field(default=None, gt=0, description='预热长度 M')
	seed: int = Field(default=0, ge=0, le=UINT64_MAX, description='随机种子')

	@model_validator(mode='after')
	def check_burn_in(self) -> 'SimulationConfig':
		"""M ≥ N"""
		if self.burn_in is not None and self.burn_in < self.length:
			raise ValueError(
				f'burn_in 必须不小于 length: burn_in={self.burn_in}, length={self.length}'
			)
		return self

	@property
	def effective_burn_in(self) -> int:
		"""实际使用的预热长度"""
		if self.burn_in is None:
			return default_burn_in(self.length)
		return self.burn_in

	def with_seed(self, seed: int) -> 'SimulationConfig':
		"""返回仅种子不同的新配置"""
		return self.model_copy(update={'seed': seed})


class SeriesMeta(BaseModel):
	"""生成一对序列的完整配置，写入 sidecar 元数据文件"""

	model_config = ConfigDict(frozen=True)

	pair: PairKind
	d1: float
	d2: float | None = None
	theta: float | None = None
	innovations: InnovationSpec
	length: int = Field(gt=0)
	burn_in: int = Field(gt=0)
	seed: int = Field(ge=0, le=UINT64_MAX)

	@model_validator(mode='after')
	def check_pair_parameters(self) -> 'SeriesMeta':
		"""ARFIMA 对需要 d2，AR 对需要 theta"""
		if self.pair == PairKind.ARFIMA_ARFIMA and self.d2 is None:
			raise ValueError('arfima_arfima 需要 d2')
		if self.pair == PairKind.ARFIMA_AR and self.theta is None:
			raise ValueError('arfima_ar 需要 theta')
		return self

	def to_records(self) -> dict[str, str]:
		"""转换为有序的 key = value 记录"""
		records: dict[str, str] = {'pair': self.pair.value, 'd1': repr(self.d1)}
		if self.pair == PairKind.ARFIMA_ARFIMA:
			records['d2'] = repr(self.d2)
		else:
			records['theta'] = repr(self.theta)
		records.update(
			{
				'sigma_e2': repr(self.innovations.sigma_e2),
				'sigma_v2': repr(self.innovations.sigma_v2),
				'sigma_ev': repr(self.innovations.sigma_ev),
				'N': str(self.length),
				'M': str(self.burn_in),
				'seed': str(self.seed),
			}
		)
		return records

	@classmethod
	def from_records(cls, records: dict[str, str]) -> 'SeriesMeta':
		"""从 key = value 记录恢复

		Raises:
			InvalidSpecError: 缺少必需的键
		"""
		records = {key.lower(): value for key, value in records.items()}
		try:
			pair = PairKind(records['pair'])
			return cls(
				pair=pair,
				d1=float(records['d1']),
				d2=float(records['d2']) if 'd2' in records else None,
				theta=float(records['theta']) if 'theta' in records else None,
				innovations=InnovationSpec(
					sigma_e2=float(records['sigma_e2']),
					sigma_v2=float(records['sigma_v2']),
					sigma_ev=float(records['sigma_ev']),
				),
				length=int(records['n']),
				burn_in=int(records['m']),
				seed=int(records['seed']),
			)
		except KeyError as e:
			raise InvalidSpecError(f'元数据缺少键: {e}') from e

	@property
	def processes(self) -> tuple[FracDiffOrder, ProcessSpec]:
		"""两条序列各自的过程描述"""
		first = FracDiffOrder(d=self.d1)
		if self.pair == PairKind.ARFIMA_ARFIMA:
			return first, FracDiffOrder(d=self.d2)  # type: ignore[arg-type]
		return first, ArCoefficient(theta=self.theta)  # type: ignore[arg-type]


class SeriesPair(BaseModel):
	"""等长的两条样本路径及其生成配置

	x、y 在构造时被复制并设为只读。
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	x: np.ndarray
	y: np.ndarray
	meta: SeriesMeta | None = None

	@field_validator('x', 'y', mode='before')
	@classmethod
	def to_readonly_array(cls, value: Any) -> np.ndarray:
		"""转换为一维只读 float 数组"""
		array = np.array(value, dtype=float)
		if array.ndim != 1:
			raise ValueError(f'序列必须是一维数组，收到维度: {array.ndim}')
		if array.size == 0:
			raise ValueError('序列不能为空')
		if not np.all(np.isfinite(array)):
			raise ValueError('序列包含非有限值')
		array.setflags(write=False)
		return array

	@model_validator(mode='after')
	def check_lengths(self) -> 'SeriesPair':
		"""len(x) == len(y)"""
		if self.x.shape != self.y.shape:
			raise ValueError(f'序列长度不一致: len(x)={self.x.size}, len(y)={self.y.size}')
		return self

	def __len__(self) -> int:
		return int(self.x.size)
