"""
样本互相关
"""

import math

import numpy as np

from arfima_xcorr.analysis.curves import CorrelationKind, CrossCorrelationCurve
from arfima_xcorr.errors import DegenerateInputError, DomainError
from arfima_xcorr.processes.types import SeriesPair


def sample_cross_correlation(pair: SeriesPair, max_lag: int) -> CrossCorrelationCurve:
	"""ρ̂_xy(n) = Σ_t (x_t − x̄)(y_{t+n} − ȳ)/(N·s_x·s_y)，n ∈ [−max_lag, max_lag]

	s_x、s_y 为有偏（除以 N）标准差，所有滞后的除数都是 N，因此 |ρ̂| ≤ 1。

	Args:
		pair: 序列对
		max_lag: 最大滞后，1 ≤ max_lag < N/4

	Returns:
		kind 为 sample 的 CrossCorrelationCurve

	Raises:
		DomainError: max_lag 超出范围
		DegenerateInputError: 任一序列方差为零
	"""
	length = len(pair)
	if max_lag < 1 or 4 * max_lag >= length:
		raise DomainError(f'max_lag 必须满足 1 ≤ max_lag < N/4: max_lag={max_lag}, N={length}')

	x = pair.x - pair.x.mean()
	y = pair.y - pair.y.mean()
	s_x = float(np.sqrt(np.mean(x * x)))
	s_y = float(np.sqrt(np.mean(y * y)))
	if s_x == 0 or s_y == 0:
		raise DegenerateInputError(f'序列方差为零: s_x={s_x}, s_y={s_y}')

	denominator = length * (s_x * s_y)
	lags = np.arange(-max_lag, max_lag + 1)
	values = np.empty(lags.size)
	for index, lag in enumerate(lags):
		if lag >= 0:
			values[index] = np.dot(x[: length - lag], y[lag:])
		else:
			values[index] = np.dot(x[-lag:], y[: length + lag])

	values = np.clip(values / denominator, -1.0, 1.0)
	return CrossCorrelationCurve(
		lags=lags,
		values=values,
		kind=CorrelationKind.SAMPLE,
		normalization=(s_x, s_y),
	)


def _sample_autocorrelation(series: np.ndarray) -> np.ndarray:
	"""有偏样本自相关 r(0..N−1)，补零到 2N 后用 FFT 计算"""
	length = series.size
	centered = series - series.mean()
	spectrum = np.fft.rfft(centered, n=2 * length)
	autocovariance = np.fft.irfft(spectrum.real**2 + spectrum.imag**2, n=2 * length)[:length]
	return autocovariance / autocovariance[0]


def null_correlation_stderr(pair: SeriesPair) -> float:
	"""x 与 y 相互独立时 ρ̂_xy(n) 的标准误

	Bartlett 公式 Var ρ̂_xy(n) ≈ N⁻¹·Σ_{|k|<N} r_x(k)·r_y(k)，r 为各自的样本自相关。
	求和取全部滞后。长记忆序列的自相关衰减很慢，标准误明显大于 N^{−1/2}；
	r_x、r_y 的傅里叶变换非负，所以和不为负。

	Raises:
		DegenerateInputError: 任一序列方差为零
	"""
	if np.ptp(pair.x) == 0 or np.ptp(pair.y) == 0:
		raise DegenerateInputError('序列方差为零，无法计算独立假设下的标准误')

	r_x = _sample_autocorrelation(pair.x)
	r_y = _sample_autocorrelation(pair.y)
	total = 2.0 * float(np.dot(r_x, r_y)) - 1.0
	return math.sqrt(max(total, np.finfo(float).eps) / len(pair))
