"""
互周期图估计

I_xy(λ_j) = (2πN)^{−1}·X(λ_j)·conj(Y(λ_j))，λ_j = 2πj/N，j = 1..m。
|f_xy(λ)| ∝ λ^{−(d1+d2)}，对 log|I_xy| 关于 log λ 回归得到 Ĥ_xy = (1 − ŝ)/2。
"""

import logging
import math
from typing import TYPE_CHECKING

import numpy as np

from arfima_xcorr.errors import DomainError
from arfima_xcorr.estimation.base import (
	BaseHurstEstimator,
	HurstEstimate,
	HurstMethod,
	fit_log_log,
	register_estimator,
)
from arfima_xcorr.processes.types import SeriesPair

if TYPE_CHECKING:
	from arfima_xcorr.config import EstimationConfig

logger = logging.getLogger(__name__)

DEFAULT_BANDWIDTH_EXPONENT = 0.5


def default_bandwidth(length: int, exponent: float = DEFAULT_BANDWIDTH_EXPONENT) -> int:
	"""默认频率数 m = ⌊N^exponent⌋"""
	return math.floor(length**exponent)


def cross_periodogram(pair: SeriesPair, m: int) -> tuple[np.ndarray, np.ndarray]:
	"""最低 m 个 Fourier 频率上的互周期图

	Args:
		pair: 序列对（内部去均值）
		m: 频率数

	Returns:
		(λ_j, I_xy(λ_j))，j = 1..m
	"""
	length = len(pair)
	x = pair.x - pair.x.mean()
	y = pair.y - pair.y.mean()
	transform_x = np.fft.rfft(x)[1 : m + 1]
	transform_y = np.fft.rfft(y)[1 : m + 1]
	frequencies = 2.0 * np.pi * np.arange(1, m + 1) / length
	ordinates = transform_x * np.conj(transform_y) / (2.0 * np.pi * length)
	return frequencies, ordinates


def estimate_hxy_cross_periodogram(pair: SeriesPair, m: int | None = None) -> HurstEstimate:
	"""由互周期图在低频的幂律发散估计 H_xy

	Args:
		pair: 序列对
		m: 使用的最低频率数，3 ≤ m ≤ N/2，None 时取 ⌊N^{0.5}⌋

	Returns:
		HurstEstimate，method 为 cross_periodogram，window 为 (λ_1, λ_m)

	Raises:
		DomainError: m 超出范围
		InsufficientPointsError: 去掉零值后不足 3 个频率
	"""
	length = len(pair)
	bandwidth = default_bandwidth(length) if m is None else int(m)
	if not (3 <= bandwidth <= length // 2):
		raise DomainError(f'm 必须满足 3 ≤ m ≤ N/2: m={bandwidth}, N={length}')

	frequencies, ordinates = cross_periodogram(pair, bandwidth)
	magnitudes = np.abs(ordinates)
	usable = magnitudes > 0
	if not np.all(usable):
		logger.debug(f'Dropping {int(np.count_nonzero(~usable))} zero periodogram ordinates')

	fit = fit_log_log(frequencies[usable], magnitudes[usable])
	return HurstEstimate(
		h_xy=(1.0 - fit.slope) / 2.0,
		method=HurstMethod.CROSS_PERIODOGRAM,
		window=(float(frequencies[0]), float(frequencies[-1])),
		slope=fit.slope,
		intercept=fit.intercept,
		slope_stderr=fit.slope_stderr,
		n_points=fit.n_points,
	)


@register_estimator
class CrossPeriodogramEstimator(BaseHurstEstimator):
	"""最低 m 个 Fourier 频率上的互周期图回归"""

	method = HurstMethod.CROSS_PERIODOGRAM
	description = '在最低 m 个 Fourier 频率上回归 log|I_xy(λ)| 与 log λ'

	def __init__(
		self,
		m: int | None = None,
		bandwidth_exponent: float = DEFAULT_BANDWIDTH_EXPONENT,
	) -> None:
		"""初始化

		Args:
			m: 固定频率数，None 时取 ⌊N^bandwidth_exponent⌋
			bandwidth_exponent: 带宽指数
		"""
		self.m = m
		self.bandwidth_exponent = bandwidth_exponent

	@classmethod
	def from_config(cls, config: 'EstimationConfig') -> 'CrossPeriodogramEstimator':
		return cls(m=config.periodogram_m, bandwidth_exponent=config.bandwidth_exponent)

	def estimate_pair(self, pair: SeriesPair) -> HurstEstimate:
		bandwidth = self.m or default_bandwidth(len(pair), self.bandwidth_exponent)
		return estimate_hxy_cross_periodogram(pair, bandwidth)
