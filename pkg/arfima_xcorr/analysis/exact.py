"""
解析互相关

ARFIMA 对：ρ_xy(n) = σ_εν/(σ_xσ_y)·Σ_k a_k(d1)a_{n+k}(d2)，n < 0 时两个下标互换。
ARFIMA/AR 对：n ≤ 0 为 σ_εν/(σ_xσ_y)·Σ_k a_{|n|+k}(d1)θ^k（幂律分支），
n ≥ 0 为 σ_εν/(σ_xσ_y)·θ^n·Σ_k a_k(d1)θ^k。
无穷和在 K 项处截断，同时给出余项的解析上界和积分估计。
"""

import logging
import math
from collections.abc import Sequence

import numpy as np
from scipy import integrate, signal, special

from arfima_xcorr.analysis.curves import (
	AsymptoticConstants,
	CorrelationKind,
	CrossCorrelationCurve,
	ExactCorrelation,
)
from arfima_xcorr.analysis.special import log_upper_incomplete_gamma
from arfima_xcorr.errors import DomainError
from arfima_xcorr.processes.types import (
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	ProcessSpec,
	as_ar_coefficient,
	as_frac_diff,
)
from arfima_xcorr.processes.weights import arfima_weights

logger = logging.getLogger(__name__)

# ARFIMA 截断的下限，实际取 max(MIN_TRUNCATION, 1000·|n|)
MIN_TRUNCATION = 10**6

# AR 几何级数截断到 |θ|^K < AR_TAIL_TOLERANCE
AR_TAIL_TOLERANCE = 1e-18
MAX_AR_TRUNCATION = 10**7


def process_std(spec: ProcessSpec, innovation_variance: float) -> float:
	"""过程标准差

	ARFIMA(0,d,0)：σ_x = σ_ε·sqrt(Γ(1−2d))/Γ(1−d)；AR(1)：σ_y = σ_ν/sqrt(1−θ²)。

	Args:
		spec: 过程描述
		innovation_variance: 新息方差

	Returns:
		标准差
	"""
	return spec.std(innovation_variance)


def default_truncation(n: int) -> int:
	"""ARFIMA 精确和的默认截断 K = max(10⁶, 1000·|n|)"""
	return max(MIN_TRUNCATION, 1000 * abs(int(n)))


def _normalization(
	first: ProcessSpec, second: ProcessSpec, spec: InnovationSpec
) -> float:
	"""σ_εν/(σ_xσ_y)，σ_εν = 0 时为 0"""
	if spec.sigma_ev == 0:
		return 0.0
	sigma_x = first.std(spec.sigma_e2)
	sigma_y = second.std(spec.sigma_v2)
	return spec.sigma_ev / (sigma_x * sigma_y)


def _arfima_tail(
	lag: int, d1: float, d2: float, truncation: int, norm: float
) -> tuple[float, float]:
	"""ARFIMA 和第 K 项以后余项的 (上界, 积分估计)

	上界由 a_j(d) ≤ j^{d−1}/Γ(d) 与 Σ_{k≥K} k^{d1+d2−2} ≤ K^{d1+d2−2} + ∫_K^∞ 得到，
	d1, d2 > 0 时严格成立。积分估计用 a_j(d) ≈ j^{d−1}/Γ(d) 把余项写成
	∫_K^∞ k^{d1−1}(k+n)^{d2−1}dk/(Γ(d1)Γ(d2))，代换 k = K·u 后数值积分。
	"""
	if d1 == 0 or d2 == 0 or norm == 0:
		return 0.0, 0.0

	exponent = d1 + d2 - 1.0
	gamma_product = float(special.gamma(d1) * special.gamma(d2))
	bound = (
		abs(norm)
		* (truncation**exponent / (1.0 - d1 - d2) + truncation ** (exponent - 1.0))
		/ abs(gamma_product)
	)

	shift = abs(lag) / truncation
	if lag >= 0:

		def integrand(u: float) -> float:
			return u ** (d1 - 1.0) * (u + shift) ** (d2 - 1.0)
	else:

		def integrand(u: float) -> float:
			return (u + shift) ** (d1 - 1.0) * u ** (d2 - 1.0)

	integral, _ = integrate.quad(integrand, 1.0, np.inf, limit=200)
	estimate = norm * truncation**exponent * integral / gamma_product
	return bound, float(estimate)


def exact_cross_correlation_arfima(
	n: int,
	d1: float | FracDiffOrder,
	d2: float | FracDiffOrder,
	spec: InnovationSpec,
	truncation: int | None = None,
) -> ExactCorrelation:
	"""截断求和的 ARFIMA 对互相关

	Args:
		n: 滞后，ρ_xy(n) = corr(x_t, y_{t+n})
		d1: x 的分数差分阶数
		d2: y 的分数差分阶数
		spec: 新息二阶矩
		truncation: 求和项数 K，None 时取 max(10⁶, 1000·|n|)

	Returns:
		ExactCorrelation，含截断值、K、余项上界和余项估计

	Raises:
		DomainError: K < 1

	Example:
		>>> exact_cross_correlation_arfima(0, 0.0, 0.0, InnovationSpec()).value
		0.5
	"""
	first = as_frac_diff(d1)
	second = as_frac_diff(d2)
	lag = int(n)
	size = default_truncation(lag) if truncation is None else int(truncation)
	if size < 1:
		raise DomainError(f'截断项数必须 ≥ 1: {size}')

	norm = _normalization(first, second, spec)
	if norm == 0:
		return ExactCorrelation(value=0.0, truncation=size, tail_bound=0.0)

	shift = abs(lag)
	if lag >= 0:
		leading = arfima_weights(first, size - 1)
		shifted = arfima_weights(second, shift + size - 1)[shift:]
	else:
		leading = arfima_weights(second, size - 1)
		shifted = arfima_weights(first, shift + size - 1)[shift:]

	total = math.fsum(leading * shifted)
	bound, estimate = _arfima_tail(lag, first.d, second.d, size, norm)
	logger.debug(f'ARFIMA exact sum n={lag}, K={size}, tail bound={bound:.3e}')
	return ExactCorrelation(
		value=norm * total, truncation=size, tail_bound=bound, tail_estimate=estimate
	)


def _lag_array(lags: Sequence[int] | np.ndarray) -> np.ndarray:
	array = np.asarray(lags, dtype=np.int64)
	if array.ndim != 1 or array.size == 0:
		raise DomainError('lags 必须是非空一维整数序列')
	return array


def _one_sided_sums(
	leading: np.ndarray, trailing: np.ndarray, size: int, max_shift: int
) -> np.ndarray:
	"""s[m] = Σ_{k<K} leading[k]·trailing[k+m]，m = 0..max_shift"""
	method = 'fft' if size > 4096 else 'direct'
	return signal.correlate(
		trailing[: size + max_shift], leading[:size], mode='valid', method=method
	)


def exact_cross_correlation_curve_arfima(
	lags: Sequence[int] | np.ndarray,
	d1: float | FracDiffOrder,
	d2: float | FracDiffOrder,
	spec: InnovationSpec,
	truncation: int | None = None,
) -> CrossCorrelationCurve:
	"""在一组滞后上计算 ARFIMA 对的截断精确互相关

	所有滞后共用同一个 K，正负两侧各做一次 FFT 相关。

	Args:
		lags: 严格递增的滞后
		d1: x 的分数差分阶数
		d2: y 的分数差分阶数
		spec: 新息二阶矩
		truncation: 求和项数 K，None 时取 max(10⁶, 1000·max|n|)

	Returns:
		kind 为 exact_truncated 的 CrossCorrelationCurve
	"""
	first = as_frac_diff(d1)
	second = as_frac_diff(d2)
	lag_array = _lag_array(lags)
	max_lag = int(np.max(np.abs(lag_array)))
	size = default_truncation(max_lag) if truncation is None else int(truncation)
	if size < 1:
		raise DomainError(f'截断项数必须 ≥ 1: {size}')

	sigma_x = first.std(spec.sigma_e2)
	sigma_y = second.std(spec.sigma_v2)
	norm = _normalization(first, second, spec)
	values = np.zeros(lag_array.size)

	if norm != 0:
		weights_x = arfima_weights(first, size + max_lag)
		weights_y = arfima_weights(second, size + max_lag)
		forward = _one_sided_sums(weights_x, weights_y, size, max_lag)
		backward = _one_sided_sums(weights_y, weights_x, size, max_lag)
		positive = lag_array >= 0
		values[positive] = forward[lag_array[positive]]
		values[~positive] = backward[-lag_array[~positive]]
		values *= norm

	logger.debug(f'ARFIMA exact curve: {lag_array.size} lags, K={size}')
	return CrossCorrelationCurve(
		lags=lag_array,
		values=values,
		kind=CorrelationKind.EXACT_TRUNCATED,
		normalization=(sigma_x, sigma_y),
	)


def ar_truncation(theta: float) -> int:
	"""AR 几何级数的截断项数，使 |θ|^K < 1e−18"""
	magnitude = abs(theta)
	if magnitude == 0:
		return 1
	size = math.ceil(math.log(AR_TAIL_TOLERANCE) / math.log(magnitude)) + 1
	return min(size, MAX_AR_TRUNCATION)


def _ar_sums(
	order: FracDiffOrder, theta: float, size: int, max_shift: int
) -> np.ndarray:
	"""s[m] = Σ_{k<K} a_{m+k}(d1)θ^k，m = 0..max_shift"""
	powers = theta ** np.arange(size, dtype=float)
	weights = arfima_weights(order, size + max_shift)
	return _one_sided_sums(powers, weights, size, max_shift)


def exact_cross_correlation_arfima_ar(
	n: int,
	d1: float | FracDiffOrder,
	theta: float | ArCoefficient,
	spec: InnovationSpec,
	truncation: int | None = None,
) -> ExactCorrelation:
	"""截断求和的 ARFIMA/AR 对互相关

	Args:
		n: 滞后，ρ_xy(n) = corr(x_t, y_{t+n})；n ≤ 0 为 x 领先的幂律分支
		d1: x 的分数差分阶数
		theta: y 的 AR(1) 系数
		spec: 新息二阶矩
		truncation: 几何级数项数 K，None 时取使 |θ|^K < 1e−18 的最小值

	Returns:
		ExactCorrelation，tail_bound 为几何余项上界 |θ|^K/(1−|θ|)

	Raises:
		DomainError: K < 1
	"""
	order = as_frac_diff(d1)
	coefficient = as_ar_coefficient(theta)
	lag = int(n)
	size = ar_truncation(coefficient.theta) if truncation is None else int(truncation)
	if size < 1:
		raise DomainError(f'截断项数必须 ≥ 1: {size}')

	norm = _normalization(order, coefficient, spec)
	if norm == 0:
		return ExactCorrelation(value=0.0, truncation=size, tail_bound=0.0)

	magnitude = abs(coefficient.theta)
	powers = coefficient.theta ** np.arange(size, dtype=float)
	shift = max(-lag, 0)
	weights = arfima_weights(order, shift + size - 1)[shift:]
	total = math.fsum(weights * powers)
	bound = abs(norm) * magnitude**size / (1.0 - magnitude)

	if lag > 0:
		scale = coefficient.theta**lag
		total *= scale
		bound *= abs(scale)

	return ExactCorrelation(value=norm * total, truncation=size, tail_bound=bound)


def exact_cross_correlation_curve_arfima_ar(
	lags: Sequence[int] | np.ndarray,
	d1: float | FracDiffOrder,
	theta: float | ArCoefficient,
	spec: InnovationSpec,
	truncation: int | None = None,
) -> CrossCorrelationCurve:
	"""在一组滞后上计算 ARFIMA/AR 对的截断精确互相关

	Args:
		lags: 严格递增的滞后
		d1: x 的分数差分阶数
		theta: y 的 AR(1) 系数
		spec: 新息二阶矩
		truncation: 几何级数项数 K

	Returns:
		kind 为 exact_truncated 的 CrossCorrelationCurve
	"""
	order = as_frac_diff(d1)
	coefficient = as_ar_coefficient(theta)
	lag_array = _lag_array(lags)
	size = ar_truncation(coefficient.theta) if truncation is None else int(truncation)
	if size < 1:
		raise DomainError(f'截断项数必须 ≥ 1: {size}')

	sigma_x = order.std(spec.sigma_e2)
	sigma_y = coefficient.std(spec.sigma_v2)
	norm = _normalization(order, coefficient, spec)
	values = np.zeros(lag_array.size)

	if norm != 0:
		max_shift = int(max(-np.min(lag_array), 0))
		sums = _ar_sums(order, coefficient.theta, size, max_shift)
		negative = lag_array <= 0
		values[negative] = sums[-lag_array[negative]]
		positive = ~negative
		values[positive] = sums[0] * coefficient.theta ** lag_array[positive].astype(float)
		values *= norm

	return CrossCorrelationCurve(
		lags=lag_array,
		values=values,
		kind=CorrelationKind.EXACT_TRUNCATED,
		normalization=(sigma_x, sigma_y),
	)


def asymptotic_constants(
	d1: float | FracDiffOrder, d2: float | FracDiffOrder
) -> AsymptoticConstants:
	"""幂律渐近常数的 (d1, d2) 与 (d2, d1) 两种取值

	Raises:
		DomainError: d1 ≤ 0 或 d2 ≤ 0
	"""
	first = as_frac_diff(d1).d
	second = as_frac_diff(d2).d
	if first <= 0 or second <= 0:
		raise DomainError(f'渐近式要求 d1 > 0 且 d2 > 0: d1={first}, d2={second}')

	numerator = special.gamma(1.0 - first - second)
	return AsymptoticConstants(
		forward=float(numerator / (special.gamma(1.0 - second) * special.gamma(second))),
		backward=float(numerator / (special.gamma(1.0 - first) * special.gamma(first))),
	)


def asymptotic_cross_correlation_arfima(
	n: int,
	d1: float | FracDiffOrder,
	d2: float | FracDiffOrder,
	spec: InnovationSpec,
) -> float:
	"""ARFIMA 对互相关的幂律渐近式

	n > 0：σ_εν·Γ(1−d1−d2)/(σ_xσ_yΓ(1−d2)Γ(d2))·n^{d1+d2−1}；
	n < 0 时由 ρ_xy(−m) = ρ_yx(m) 使用 (d2, d1) 的常数。

	Args:
		n: 滞后，n ≠ 0
		d1: x 的分数差分阶数，d1 > 0
		d2: y 的分数差分阶数，d2 > 0
		spec: 新息二阶矩

	Returns:
		渐近值

	Raises:
		DomainError: n = 0 或 d 不为正
	"""
	first = as_frac_diff(d1)
	second = as_frac_diff(d2)
	lag = int(n)
	if lag == 0:
		raise DomainError('渐近式要求 n ≠ 0')

	constants = asymptotic_constants(first, second)
	norm = _normalization(first, second, spec)
	constant = constants.forward if lag > 0 else constants.backward
	return norm * constant * abs(lag) ** (first.d + second.d - 1.0)


def asymptotic_cross_correlation_arfima_ar(
	m: int,
	d1: float | FracDiffOrder,
	theta: float | ArCoefficient,
	spec: InnovationSpec,
) -> float:
	"""ARFIMA/AR 对幂律分支的渐近式 σ_εν/(σ_xσ_y)·m^{d1−1}/(Γ(d1)(1−θ))

	对应 ρ_xy(−m)，即 x 领先 m 期。

	Args:
		m: 领先期数，m ≥ 1
		d1: x 的分数差分阶数，d1 > 0
		theta: y 的 AR(1) 系数
		spec: 新息二阶矩

	Returns:
		渐近值

	Raises:
		DomainError: m < 1 或 d1 ≤ 0
	"""
	order = as_frac_diff(d1)
	coefficient = as_ar_coefficient(theta)
	if m < 1:
		raise DomainError(f'm 必须 ≥ 1: {m}')
	if order.d <= 0:
		raise DomainError(f'渐近式要求 d1 > 0: {order.d}')

	norm = _normalization(order, coefficient, spec)
	denominator = special.gamma(order.d) * (1.0 - coefficient.theta)
	return float(norm * m ** (order.d - 1.0) / denominator)


def closed_form_cross_correlation_arfima_ar(n: int, d1: float, theta: float) -> float:
	"""积分近似下的闭式 θ^{−n}·Γ(d1, −n·logθ)·(−logθ)^{−d1}

	与精确和只差一个正常数因子。在对数空间中计算，θ^{−n} 与 Γ(d1, x) 中的 e^{−x}
	相互抵消，大 n 不会溢出。d1 只要求为正（d1 = 1 时结果为 (−logθ)^{−1}）。

	Args:
		n: 滞后，n ≥ 1
		d1: 分数差分阶数，d1 > 0
		theta: AR(1) 系数，0 < θ < 1

	Returns:
		闭式值

	Raises:
		DomainError: 参数超出 0 < θ < 1、d1 > 0、n ≥ 1
	"""
	if not (0.0 < theta < 1.0):
		raise DomainError(f'闭式要求 0 < θ < 1: {theta}')
	if not d1 > 0:
		raise DomainError(f'闭式要求 d1 > 0: {d1}')
	if n < 1:
		raise DomainError(f'闭式要求 n ≥ 1: {n}')

	rate = -math.log(theta)
	x = n * rate
	return math.exp(x + log_upper_incomplete_gamma(d1, x) - d1 * math.log(rate))


def arfima_autocorrelation(k: int, d: float | FracDiffOrder) -> float:
	"""ARFIMA(0,d,0) 自相关 Γ(k+d)Γ(1−d)/(Γ(k−d+1)Γ(d))

	d = 0 时为 δ_{k0}。

	Args:
		k: 滞后（取绝对值）
		d: 分数差分阶数

	Returns:
		自相关系数
	"""
	order = as_frac_diff(d).d
	lag = abs(int(k))
	if lag == 0:
		return 1.0
	if order == 0:
		return 0.0

	log_magnitude = (
		special.gammaln(lag + order)
		+ special.gammaln(1.0 - order)
		- special.gammaln(lag - order + 1.0)
		- special.gammaln(order)
	)
	sign = special.gammasgn(order)
	return float(sign * math.exp(log_magnitude))
