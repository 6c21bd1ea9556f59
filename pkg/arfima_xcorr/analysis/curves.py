"""
互相关曲线、谱点与精确求和结果的记录类型
"""

import math
from enum import Enum
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class CorrelationKind(str, Enum):
	"""互相关曲线的来源"""

	SAMPLE = 'sample'
	EXACT_TRUNCATED = 'exact_truncated'
	ASYMPTOTIC = 'asymptotic'


class CrossCorrelationCurve(BaseModel):
	"""互相关函数 ρ_xy(n) = corr(x_t, y_{t+n}) 在一组滞后上的取值

	Attributes:
		lags: 严格递增的整数滞后
		values: 对应的互相关值
		kind: 曲线来源
		normalization: 归一化所用的 (σ_x, σ_y)
	"""

	model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

	lags: np.ndarray
	values: np.ndarray
	kind: CorrelationKind
	normalization: tuple[float, float] | None = None

	@field_validator('lags', mode='before')
	@classmethod
	def to_lag_array(cls, value: Any) -> np.ndarray:
		"""转换为严格递增的一维整数数组"""
		array = np.array(value, dtype=np.int64)
		if array.ndim != 1:
			raise ValueError(f'lags 必须是一维数组，收到维度: {array.ndim}')
		if array.size > 1 and not np.all(np.diff(array) > 0):
			raise ValueError('lags 必须严格递增')
		array.setflags(write=False)
		return array

	@field_validator('values', mode='before')
	@classmethod
	def to_value_array(cls, value: Any) -> np.ndarray:
		"""转换为一维只读 float 数组"""
		array = np.array(value, dtype=float)
		if array.ndim != 1:
			raise ValueError(f'values 必须是一维数组，收到维度: {array.ndim}')
		array.setflags(write=False)
		return array

	@model_validator(mode='after')
	def check_shape_and_bounds(self) -> 'CrossCorrelationCurve':
		"""长度一致；样本互相关满足 |ρ| ≤ 1"""
		if self.lags.shape != self.values.shape:
			raise ValueError(
				f'lags 与 values 长度不一致: {self.lags.size} != {self.values.size}'
			)
		if self.kind == CorrelationKind.SAMPLE and np.any(np.abs(self.values) > 1.0):
			raise ValueError('样本互相关的绝对值不能超过 1')
		return self

	def __len__(self) -> int:
		return int(self.lags.size)

	def value_at(self, lag: int) -> float:
		"""取指定滞后的值

		Raises:
			KeyError: 曲线中没有该滞后
		"""
		index = np.searchsorted(self.lags, lag)
		if index >= self.lags.size or self.lags[index] != lag:
			raise KeyError(f'曲线中没有滞后 {lag}')
		return float(self.values[index])

	def restrict(self, lower: int, upper: int) -> 'CrossCorrelationCurve':
		"""截取 lower ≤ lag ≤ upper 的部分"""
		mask = (self.lags >= lower) & (self.lags <= upper)
		return CrossCorrelationCurve(
			lags=self.lags[mask],
			values=self.values[mask],
			kind=self.kind,
			normalization=self.normalization,
		)


class SpectrumPoint(BaseModel):
	"""互谱密度在单个频率上的取值"""

	model_config = ConfigDict(frozen=True)

	frequency: float = Field(gt=0.0, le=math.pi, description='频率 λ ∈ (0, π]')
	value: complex


class ExactCorrelation(BaseModel):
	"""截断求和得到的互相关

	Attributes:
		value: 截断到 K 项的归一化互相关
		truncation: 截断项数 K
		tail_bound: 被忽略余项的解析上界（绝对值）
		tail_estimate: 余项的积分估计（带符号），value + tail_estimate 为修正值
	"""

	model_config = ConfigDict(frozen=True)

	value: float
	truncation: int = Field(ge=1)
	tail_bound: float = Field(ge=0.0)
	tail_estimate: float = 0.0

	@property
	def corrected(self) -> float:
		"""加上余项估计后的值"""
		return self.value + self.tail_estimate

	def __float__(self) -> float:
		return self.value


class AsymptoticConstants(BaseModel):
	"""幂律渐近式 ρ_xy(n) ≈ C·n^{d1+d2−1} 的常数

	Attributes:
		forward: Γ(1−d1−d2)/(Γ(1−d2)Γ(d2))，适用于 n > 0
		backward: Γ(1−d1−d2)/(Γ(1−d1)Γ(d1))，即 (d2, d1) 互换后的常数，适用于 n < 0
	"""

	model_config = ConfigDict(frozen=True)

	forward: float
	backward: float
