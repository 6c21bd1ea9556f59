"""
ARFIMA(0,d,0) 的 MA(∞) 权重

a_n(d) = Γ(n+d)/(Γ(n+1)Γ(d))，由递推 a_0 = 1, a_n = a_{n−1}·(n−1+d)/n 计算。
d = 0 时 Γ(d) 有极点，约定 a_n(0) = δ_{n0}（白噪声）。
"""

import logging

import numpy as np
from scipy import special

from arfima_xcorr.cache import get_weight_cache
from arfima_xcorr.errors import DomainError
from arfima_xcorr.processes.types import FracDiffOrder, as_frac_diff

logger = logging.getLogger(__name__)


def _check_order(n_max: int) -> None:
	if n_max < 0:
		raise DomainError(f'n_max 不能为负数: {n_max}')


def arfima_weights(d: float | FracDiffOrder, n_max: int) -> np.ndarray:
	"""计算 [a_0(d), …, a_{n_max}(d)]

	Args:
		d: 分数差分阶数，−0.5 < d < 0.5
		n_max: 最大阶数

	Returns:
		长度为 n_max+1 的权重数组

	Example:
		>>> arfima_weights(0.4, 3)
		array([1.   , 0.4  , 0.28 , 0.224])
	"""
	order = as_frac_diff(d).d
	_check_order(n_max)

	weights = np.zeros(n_max + 1)
	weights[0] = 1.0
	if order == 0 or n_max == 0:
		return weights

	n = np.arange(1, n_max + 1, dtype=float)
	weights[1:] = np.cumprod((n - 1.0 + order) / n)
	return weights


def arfima_weights_gamma(d: float | FracDiffOrder, n_max: int) -> np.ndarray:
	"""按 Γ 函数比值直接计算权重

	使用 log-gamma 加符号，避免大 n 时溢出。用于校验递推结果。

	Args:
		d: 分数差分阶数
		n_max: 最大阶数

	Returns:
		长度为 n_max+1 的权重数组
	"""
	order = as_frac_diff(d).d
	_check_order(n_max)

	if order == 0:
		weights = np.zeros(n_max + 1)
		weights[0] = 1.0
		return weights

	n = np.arange(n_max + 1, dtype=float)
	log_magnitude = (
		special.gammaln(n + order) - special.gammaln(n + 1.0) - special.gammaln(order)
	)
	sign = special.gammasgn(n + order) * special.gammasgn(order)
	return sign * np.exp(log_magnitude)


def arfima_weight_asymptote(d: float | FracDiffOrder, j: int) -> float:
	"""权重的 Stirling 近似 a_j(d) ≈ j^{d−1}/Γ(d)

	Args:
		d: 分数差分阶数，不能为 0
		j: 阶数，j ≥ 1

	Returns:
		近似值

	Raises:
		DomainError: d = 0（Γ(d) 极点）或 j < 1
	"""
	order = as_frac_diff(d).d
	if order == 0:
		raise DomainError('d = 0 时 Γ(d) 有极点，渐近式无定义')
	if j < 1:
		raise DomainError(f'j 必须 ≥ 1: {j}')
	return float(j ** (order - 1.0) / special.gamma(order))


def cached_arfima_weights(d: float, n_max: int) -> np.ndarray:
	"""带缓存的 arfima_weights，返回只读数组

	Monte Carlo 副本之间共享同一组权重。
	"""
	return get_weight_cache().get_or_compute(
		'arfima', d, n_max, lambda: arfima_weights(d, n_max)
	)
