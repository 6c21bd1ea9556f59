"""
上不完全 Gamma 函数

Γ(s, x) = ∫_x^∞ t^{s−1}e^{−t}dt。x < s+1 时用级数求下不完全部分再从 Γ(s) 中减去，
否则用 Lentz 连分式，两种表示在 x = s+1 处切换。
"""

import math
import sys

from scipy import special

from arfima_xcorr.errors import DomainError

_EPS = sys.float_info.epsilon
_TINY = sys.float_info.min / _EPS
_ACCURACY = 1e-15
_MAX_ITERATIONS = 10_000


def _check_domain(s: float, x: float) -> None:
	if not (math.isfinite(s) and s > 0):
		raise DomainError(f's 必须为有限正数: {s}')
	if not (math.isfinite(x) and x >= 0):
		raise DomainError(f'x 必须为有限非负数: {x}')


def _lower_regularized_series(s: float, x: float) -> float:
	"""P(s, x) = γ(s, x)/Γ(s) 的级数表示"""
	term = 1.0 / s
	total = term
	denominator = s
	for _ in range(_MAX_ITERATIONS):
		denominator += 1.0
		term *= x / denominator
		total += term
		if abs(term) < abs(total) * _ACCURACY:
			return total * math.exp(-x + s * math.log(x) - special.gammaln(s))
	raise RuntimeError(f'不完全 Gamma 级数未收敛: s={s}, x={x}')


def _log_continued_fraction(s: float, x: float) -> float:
	"""log Γ(s, x) 的连分式表示（修正 Lentz 算法）"""
	b = x + 1.0 - s
	c = 1.0 / _TINY
	d = 1.0 / b
	h = d
	for i in range(1, _MAX_ITERATIONS + 1):
		an = -i * (i - s)
		b += 2.0
		d = an * d + b
		if abs(d) < _TINY:
			d = _TINY
		c = b + an / c
		if abs(c) < _TINY:
			c = _TINY
		d = 1.0 / d
		delta = d * c
		h *= delta
		if abs(delta - 1.0) < _ACCURACY:
			return -x + s * math.log(x) + math.log(h)
	raise RuntimeError(f'不完全 Gamma 连分式未收敛: s={s}, x={x}')


def log_upper_incomplete_gamma(s: float, x: float) -> float:
	"""log Γ(s, x)

	大 x 时 Γ(s, x) 会下溢，调用方应在对数空间组合结果。

	Args:
		s: 形状参数，s > 0
		x: 下限，x ≥ 0

	Returns:
		log Γ(s, x)

	Raises:
		DomainError: 参数超出定义域
	"""
	_check_domain(s, x)
	if x == 0:
		return float(special.gammaln(s))
	if x < s + 1.0:
		lower = _lower_regularized_series(s, x)
		return float(special.gammaln(s)) + math.log1p(-lower)
	return _log_continued_fraction(s, x)


def upper_incomplete_gamma(s: float, x: float) -> float:
	"""Γ(s, x) = ∫_x^∞ t^{s−1}e^{−t}dt

	Args:
		s: 形状参数，s > 0
		x: 下限，x ≥ 0

	Returns:
		上不完全 Gamma 函数值

	Raises:
		DomainError: 参数超出定义域

	Example:
		>>> upper_incomplete_gamma(1.0, 2.0)  # e^{−2}
		0.1353352832366127
	"""
	return math.exp(log_upper_incomplete_gamma(s, x))
