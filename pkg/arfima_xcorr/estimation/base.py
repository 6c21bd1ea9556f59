"""
Hurst 估计器基类

所有估计器都继承 BaseHurstEstimator 并实现 estimate_pair()，
通过 register_estimator() 注册后，实验框架按 HurstMethod 选择。
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import TYPE_CHECKING, ClassVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import stats

from arfima_xcorr.errors import InsufficientPointsError
from arfima_xcorr.processes.types import SeriesPair

if TYPE_CHECKING:
	from arfima_xcorr.config import EstimationConfig

logger = logging.getLogger(__name__)

# 回归所需的最少点数
MIN_POINTS = 3


class HurstMethod(str, Enum):
	"""估计方法"""

	CCF_DECAY = 'ccf_decay'
	CROSS_PERIODOGRAM = 'cross_periodogram'


class LagSide(str, Enum):
	"""互相关衰减估计使用的滞后一侧

	auto：ARFIMA/AR 对取负滞后，其余取窗口内 |ρ̂| 较大的一侧。
	"""

	AUTO = 'auto'
	POSITIVE = 'positive'
	NEGATIVE = 'negative'


class HurstEstimate(BaseModel):
	"""一次 H_xy 估计的结果

	Attributes:
		h_xy: 估计的双变量 Hurst 指数
		method: 估计方法
		window: 拟合区间 (lower, upper)，滞后或频率
		slope: 对数-对数回归斜率
		intercept: 回归截距
		slope_stderr: 斜率的 OLS 标准误
		n_points: 参与回归的点数
	"""

	model_config = ConfigDict(frozen=True)

	h_xy: float
	method: HurstMethod
	window: tuple[float, float]
	slope: float
	intercept: float
	slope_stderr: float = Field(ge=0.0)
	n_points: int = Field(ge=MIN_POINTS)

	@model_validator(mode='after')
	def check_window(self) -> 'HurstEstimate':
		"""lower < upper"""
		lower, upper = self.window
		if not lower < upper:
			raise ValueError(f'窗口下界必须小于上界: {self.window}')
		return self

	def to_row(self) -> dict[str, str]:
		"""CSV 行 method,H_xy,slope_stderr,window_lo,window_hi,n_points"""
		return {
			'method': self.method.value,
			'H_xy': repr(self.h_xy),
			'slope_stderr': repr(self.slope_stderr),
			'window_lo': repr(float(self.window[0])),
			'window_hi': repr(float(self.window[1])),
			'n_points': str(self.n_points),
		}


class LogLogFit(BaseModel):
	"""log|y| 对 log x 的 OLS 拟合"""

	model_config = ConfigDict(frozen=True)

	slope: float
	intercept: float
	slope_stderr: float
	n_points: int


def fit_log_log(x: np.ndarray, y: np.ndarray) -> LogLogFit:
	"""对 log|y| 与 log x 做最小二乘

	Args:
		x: 正的自变量
		y: 非零因变量（取绝对值）

	Returns:
		LogLogFit

	Raises:
		InsufficientPointsError: 点数少于 3
	"""
	if x.size < MIN_POINTS:
		raise InsufficientPointsError(f'回归点数不足: {x.size} < {MIN_POINTS}')

	result = stats.linregress(np.log(x), np.log(np.abs(y)))
	stderr = float(result.stderr)
	if not np.isfinite(stderr):
		stderr = 0.0
	return LogLogFit(
		slope=float(result.slope),
		intercept=float(result.intercept),
		slope_stderr=stderr,
		n_points=int(x.size),
	)


class BaseHurstEstimator(ABC):
	"""Hurst 估计器抽象基类

	Attributes:
		method: 估计方法，注册表中的唯一键
		description: 方法说明
	"""

	method: ClassVar[HurstMethod]
	description: ClassVar[str]

	@abstractmethod
	def estimate_pair(self, pair: SeriesPair) -> HurstEstimate:
		"""从一对样本路径估计 H_xy

		Args:
			pair: 序列对

		Returns:
			HurstEstimate

		Raises:
			EstimationError: 估计失败
		"""
		...

	@classmethod
	@abstractmethod
	def from_config(cls, config: 'EstimationConfig') -> 'BaseHurstEstimator':
		"""按估计配置构造估计器"""
		...

	def __repr__(self) -> str:
		return f'{self.__class__.__name__}(method={self.method.value})'


_REGISTRY: dict[HurstMethod, type[BaseHurstEstimator]] = {}


def register_estimator(
	estimator_class: type[BaseHurstEstimator],
) -> type[BaseHurstEstimator]:
	"""注册估计器类，可作为装饰器使用

	Raises:
		ValueError: 方法已被注册
	"""
	method = estimator_class.method
	existing = _REGISTRY.get(method)
	if existing is not None and existing is not estimator_class:
		raise ValueError(f'估计方法 "{method.value}" 已被注册')
	_REGISTRY[method] = estimator_class
	logger.debug(f'Registered estimator: {method.value}')
	return estimator_class


def get_estimator_class(method: HurstMethod | str) -> type[BaseHurstEstimator]:
	"""按方法取估计器类

	Raises:
		KeyError: 方法未注册
	"""
	key = HurstMethod(method)
	try:
		return _REGISTRY[key]
	except KeyError:
		raise KeyError(f'未注册的估计方法: {key.value}') from None


def registered_methods() -> list[HurstMethod]:
	"""已注册的方法，按枚举定义顺序"""
	return [method for method in HurstMethod if method in _REGISTRY]


def build_estimators(
	methods: list[HurstMethod], config: 'EstimationConfig'
) -> dict[HurstMethod, BaseHurstEstimator]:
	"""按方法列表构造估计器，顺序与 methods 一致

	Args:
		methods: 估计方法
		config: 估计配置

	Returns:
		方法到估计器实例的字典
	"""
	return {method: get_estimator_class(method).from_config(config) for method in methods}
