"""
过程对模拟

x 为截断 MA(∞) 的 ARFIMA(0,d,0)：每个输出样本使用权重 a_0..a_M，
新息流长度为 N+M，前 M 个样本作为预热丢弃。y 可以是另一个 ARFIMA 过程，
也可以是从 y_{−M} = 0 开始递推的 AR(1) 过程。
"""

import logging
from typing import Literal

import numpy as np
from scipy import signal

from arfima_xcorr.processes.innovations import generate_innovations
from arfima_xcorr.processes.types import (
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	PairKind,
	SeriesMeta,
	SeriesPair,
	SimulationConfig,
	as_ar_coefficient,
	as_frac_diff,
)
from arfima_xcorr.processes.weights import cached_arfima_weights

logger = logging.getLogger(__name__)

# N+M 超过该值时用频域乘法计算卷积
FFT_THRESHOLD = 4096

ConvolutionMethod = Literal['auto', 'direct', 'fft']


def moving_average(
	innovations: np.ndarray,
	weights: np.ndarray,
	method: ConvolutionMethod = 'auto',
) -> np.ndarray:
	"""因果滤波 out[j] = Σ_{n ≤ min(j, len(weights)−1)} w_n·e_{j−n}

	Args:
		innovations: 新息序列
		weights: MA 权重
		method: 'direct' 直接求和，'fft' 频域乘法，'auto' 按长度选择

	Returns:
		与 innovations 等长的滤波结果
	"""
	total = innovations.size
	if method == 'auto':
		method = 'fft' if total > FFT_THRESHOLD else 'direct'

	if method == 'direct':
		full = np.convolve(innovations, weights)
	else:
		full = signal.fftconvolve(innovations, weights)
	return full[:total]


def _arfima_path(
	order: float,
	innovations: np.ndarray,
	burn_in: int,
	length: int,
	method: ConvolutionMethod,
) -> np.ndarray:
	if order == 0:
		# 白噪声，直接取新息
		return innovations[burn_in : burn_in + length].copy()

	weights = cached_arfima_weights(order, burn_in)
	filtered = moving_average(innovations, weights, method)
	return filtered[burn_in : burn_in + length]


def simulate_arfima_pair(
	d1: float | FracDiffOrder,
	d2: float | FracDiffOrder,
	spec: InnovationSpec,
	cfg: SimulationConfig,
	method: ConvolutionMethod = 'auto',
) -> SeriesPair:
	"""模拟两条由相关新息驱动的 ARFIMA(0,d,0) 序列

	Args:
		d1: x 的分数差分阶数
		d2: y 的分数差分阶数
		spec: 新息二阶矩
		cfg: 模拟配置（N、M、种子）
		method: 卷积方式

	Returns:
		SeriesPair，meta 中记录完整生成配置
	"""
	first = as_frac_diff(d1)
	second = as_frac_diff(d2)
	burn_in = cfg.effective_burn_in
	length = cfg.length

	eps, nu = generate_innovations(spec, length + burn_in, cfg.seed)
	logger.debug(
		f'Simulating ARFIMA pair d1={first.d}, d2={second.d}, N={length}, M={burn_in}'
	)

	x = _arfima_path(first.d, eps, burn_in, length, method)
	y = _arfima_path(second.d, nu, burn_in, length, method)

	meta = SeriesMeta(
		pair=PairKind.ARFIMA_ARFIMA,
		d1=first.d,
		d2=second.d,
		innovations=spec,
		length=length,
		burn_in=burn_in,
		seed=cfg.seed,
	)
	return SeriesPair(x=x, y=y, meta=meta)


def simulate_arfima_ar_pair(
	d1: float | FracDiffOrder,
	theta: float | ArCoefficient,
	spec: InnovationSpec,
	cfg: SimulationConfig,
	method: ConvolutionMethod = 'auto',
) -> SeriesPair:
	"""模拟 ARFIMA(0,d,0) 与 AR(1) 序列对

	y_t = θ·y_{t−1} + ν_t，从 y_{−M} = 0 开始递推，丢弃前 M 个样本。

	Args:
		d1: x 的分数差分阶数
		theta: y 的 AR(1) 系数
		spec: 新息二阶矩
		cfg: 模拟配置
		method: x 的卷积方式

	Returns:
		SeriesPair
	"""
	first = as_frac_diff(d1)
	ar = as_ar_coefficient(theta)
	burn_in = cfg.effective_burn_in
	length = cfg.length

	eps, nu = generate_innovations(spec, length + burn_in, cfg.seed)
	logger.debug(
		f'Simulating ARFIMA/AR pair d1={first.d}, theta={ar.theta}, '
		f'N={length}, M={burn_in}'
	)

	x = _arfima_path(first.d, eps, burn_in, length, method)
	y_full = signal.lfilter([1.0], [1.0, -ar.theta], nu)
	y = y_full[burn_in : burn_in + length]

	meta = SeriesMeta(
		pair=PairKind.ARFIMA_AR,
		d1=first.d,
		theta=ar.theta,
		innovations=spec,
		length=length,
		burn_in=burn_in,
		seed=cfg.seed,
	)
	return SeriesPair(x=x, y=y, meta=meta)


def simulate_pair(meta: SeriesMeta) -> SeriesPair:
	"""按元数据重新生成序列对"""
	cfg = SimulationConfig(length=meta.length, burn_in=meta.burn_in, seed=meta.seed)
	if meta.pair == PairKind.ARFIMA_ARFIMA:
		return simulate_arfima_pair(meta.d1, meta.d2, meta.innovations, cfg)  # type: ignore[arg-type]
	return simulate_arfima_ar_pair(meta.d1, meta.theta, meta.innovations, cfg)  # type: ignore[arg-type]
