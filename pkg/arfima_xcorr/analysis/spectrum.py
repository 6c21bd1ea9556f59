"""
互谱密度

f_xy(λ) = (σ_εν/2π)·A(e^{iλ})·B(e^{−iλ})，A、B 为两条序列的 MA 传递函数，
其逆 Fourier 变换给出 γ_xy(n) = cov(x_t, y_{t+n})。复数幂取主值分支。
"""

import math
from collections.abc import Callable, Sequence

import numpy as np
from scipy import integrate

from arfima_xcorr.analysis.curves import SpectrumPoint
from arfima_xcorr.errors import DomainError, InvalidSpecError
from arfima_xcorr.processes.types import (
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	PairKind,
	as_ar_coefficient,
	as_frac_diff,
)

SpectrumFunction = Callable[[float], complex]


def _check_frequency(lam: float) -> None:
	if not (0.0 < lam <= math.pi):
		raise DomainError(f'频率必须在 (0, π] 内: {lam}')


def cross_spectrum_arfima(
	d1: float | FracDiffOrder,
	d2: float | FracDiffOrder,
	spec: InnovationSpec,
	lam: float,
) -> complex:
	"""两个 ARFIMA(0,d,0) 过程的互谱 (σ_εν/2π)(1−e^{iλ})^{−d1}(1−e^{−iλ})^{−d2}

	Args:
		d1: x 的分数差分阶数
		d2: y 的分数差分阶数
		spec: 新息二阶矩
		lam: 频率，0 < λ ≤ π

	Returns:
		互谱密度（复数）

	Raises:
		DomainError: λ 不在 (0, π] 内

	Example:
		>>> cross_spectrum_arfima(0.4, 0.2, InnovationSpec(sigma_ev=1.0), math.pi)
		(0.1050...+...j)  # 虚部为舍入误差
	"""
	_check_frequency(lam)
	first = as_frac_diff(d1).d
	second = as_frac_diff(d2).d
	phase = complex(math.cos(lam), math.sin(lam))
	value = (1.0 - phase) ** (-first) * (1.0 - phase.conjugate()) ** (-second)
	return spec.sigma_ev / (2.0 * math.pi) * value


def cross_spectrum_arfima_ar(
	d1: float | FracDiffOrder,
	theta: float | ArCoefficient,
	spec: InnovationSpec,
	lam: float,
) -> complex:
	"""ARFIMA(0,d,0) 与 AR(1) 的互谱 (σ_εν/2π)(1−e^{iλ})^{−d1}(1−θe^{−iλ})^{−1}

	与 cross_spectrum_arfima 使用同一滞后方向，θ = 0 时与 d2 = 0 的 ARFIMA 互谱完全相同。

	Args:
		d1: x 的分数差分阶数
		theta: y 的 AR(1) 系数
		spec: 新息二阶矩
		lam: 频率，0 < λ ≤ π

	Returns:
		互谱密度（复数）

	Raises:
		DomainError: λ 不在 (0, π] 内
	"""
	_check_frequency(lam)
	order = as_frac_diff(d1).d
	coefficient = as_ar_coefficient(theta).theta
	phase = complex(math.cos(lam), math.sin(lam))
	value = (1.0 - phase) ** (-order) / (1.0 - coefficient * phase.conjugate())
	return spec.sigma_ev / (2.0 * math.pi) * value


def spectrum_curve(
	pair: PairKind,
	lambdas: Sequence[float] | np.ndarray,
	spec: InnovationSpec,
	d1: float,
	d2: float | None = None,
	theta: float | None = None,
) -> list[SpectrumPoint]:
	"""在一组频率上计算互谱

	Args:
		pair: 过程对类型
		lambdas: 频率列表，每个都在 (0, π] 内
		spec: 新息二阶矩
		d1: x 的分数差分阶数
		d2: y 的分数差分阶数（arfima_arfima）
		theta: y 的 AR(1) 系数（arfima_ar）

	Returns:
		SpectrumPoint 列表，顺序与 lambdas 一致

	Raises:
		InvalidSpecError: 缺少过程对所需的参数
	"""
	if pair == PairKind.ARFIMA_ARFIMA:
		if d2 is None:
			raise InvalidSpecError('arfima_arfima 需要 d2')
		second = as_frac_diff(d2)
		return [
			SpectrumPoint(
				frequency=float(lam),
				value=cross_spectrum_arfima(d1, second, spec, float(lam)),
			)
			for lam in lambdas
		]

	if theta is None:
		raise InvalidSpecError('arfima_ar 需要 theta')
	coefficient = as_ar_coefficient(theta)
	return [
		SpectrumPoint(
			frequency=float(lam),
			value=cross_spectrum_arfima_ar(d1, coefficient, spec, float(lam)),
		)
		for lam in lambdas
	]


def inverse_fourier_cross_correlation(
	n: int,
	spectrum: SpectrumFunction,
	sigma_x: float,
	sigma_y: float,
	limit: int = 400,
) -> float:
	"""互谱的数值逆 Fourier 变换 ρ_xy(n) = 2Re∫_0^π f(λ)e^{inλ}dλ/(σ_xσ_y)

	λ = 0 处的奇点 λ^{−(d1+d2)} 可积；代换 λ = πu² 把网格向原点加密，
	变换后的被积函数在 u → 0 时有界（d1+d2 < 0.5）或弱奇异。

	Args:
		n: 滞后
		spectrum: 频率到互谱值的函数
		sigma_x: x 的标准差
		sigma_y: y 的标准差
		limit: 自适应求积的最大子区间数

	Returns:
		归一化互相关

	Raises:
		DomainError: 标准差不为正
	"""
	if sigma_x <= 0 or sigma_y <= 0:
		raise DomainError(f'标准差必须为正: sigma_x={sigma_x}, sigma_y={sigma_y}')

	def integrand(u: float) -> float:
		lam = math.pi * u * u
		rotated = spectrum(lam) * complex(math.cos(n * lam), math.sin(n * lam))
		return 2.0 * math.pi * u * rotated.real

	value, _ = integrate.quad(integrand, 0.0, 1.0, limit=limit, epsabs=1e-13, epsrel=1e-10)
	return 2.0 * value / (sigma_x * sigma_y)
