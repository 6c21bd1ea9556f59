"""
互相关衰减估计

在滞后窗口内对 log|ρ(n)| 关于 log|n| 做 OLS，ρ ∝ n^{2H−2} 给出 Ĥ_xy = 1 + ŝ/2。
窗口内的值必须基本同号，否则尾部被噪声主导，拒绝估计。
"""

import logging
from typing import TYPE_CHECKING

import numpy as np

from arfima_xcorr.analysis.curves import CrossCorrelationCurve
from arfima_xcorr.analysis.sample import null_correlation_stderr, sample_cross_correlation
from arfima_xcorr.errors import DomainError, InsufficientPointsError, SignInstabilityError
from arfima_xcorr.estimation.base import (
	MIN_POINTS,
	BaseHurstEstimator,
	HurstEstimate,
	HurstMethod,
	LagSide,
	fit_log_log,
	register_estimator,
)
from arfima_xcorr.processes.types import PairKind, SeriesPair

if TYPE_CHECKING:
	from arfima_xcorr.config import EstimationConfig

logger = logging.getLogger(__name__)

DEFAULT_SIGN_THRESHOLD = 0.9
DEFAULT_LOG_POINTS = 20
DEFAULT_WINDOW_START = 10
MAX_WINDOW_END = 1000
DEFAULT_SIGNIFICANCE = 3.0


def default_ccf_window(length: int) -> tuple[int, int]:
	"""默认滞后窗口 [10, min(N/50, 1000)]"""
	return DEFAULT_WINDOW_START, min(length // 50, MAX_WINDOW_END)


def log_spaced_lags(lower: int, upper: int, count: int) -> np.ndarray:
	"""[lower, upper] 内近似对数等距的不重复整数（lower, upper > 0）"""
	grid = np.geomspace(lower, upper, count)
	return np.unique(np.rint(grid).astype(np.int64))


def _check_window(window: tuple[int, int]) -> tuple[int, int]:
	lower, upper = int(window[0]), int(window[1])
	if not lower < upper:
		raise DomainError(f'窗口下界必须小于上界: {window}')
	if not (lower > 0 or upper < 0):
		raise DomainError(f'窗口必须完全在正滞后或负滞后一侧: {window}')
	return lower, upper


def estimate_hxy_ccf_decay(
	curve: CrossCorrelationCurve,
	window: tuple[int, int],
	n_points: int | None = None,
	sign_threshold: float = DEFAULT_SIGN_THRESHOLD,
) -> HurstEstimate:
	"""从互相关曲线的幂律衰减估计 H_xy

	Args:
		curve: 互相关曲线（样本、精确或渐近）
		window: 滞后窗口 (n_min, n_max)，两端同为正或同为负
		n_points: 在 |窗口| 内取的对数等距滞后数，None 时使用窗口内全部滞后
		sign_threshold: 同号比例下限

	Returns:
		HurstEstimate，method 为 ccf_decay

	Raises:
		DomainError: 窗口不合法
		InsufficientPointsError: 非零值少于 3 个
		SignInstabilityError: 同号比例低于 sign_threshold

	Example:
		>>> lags = np.arange(1, 1001)
		>>> curve = CrossCorrelationCurve(lags=lags, values=0.3 * lags**-0.4, kind='asymptotic')
		>>> round(estimate_hxy_ccf_decay(curve, (10, 1000)).h_xy, 12)
		0.8
	"""
	lower, upper = _check_window(window)
	part = curve.restrict(lower, upper)
	lags = part.lags
	values = part.values

	if n_points is not None:
		sign = 1 if lower > 0 else -1
		magnitudes = sorted((abs(lower), abs(upper)))
		selected = np.isin(lags, sign * log_spaced_lags(magnitudes[0], magnitudes[1], n_points))
		lags = lags[selected]
		values = values[selected]

	nonzero = values != 0
	lags = lags[nonzero]
	values = values[nonzero]
	if lags.size < MIN_POINTS:
		raise InsufficientPointsError(
			f'窗口 {window} 内非零值不足: {lags.size} < {MIN_POINTS}'
		)

	positive = int(np.count_nonzero(values > 0))
	agreement = max(positive, values.size - positive) / values.size
	if agreement < sign_threshold:
		raise SignInstabilityError(
			f'窗口 {window} 内互相关符号不一致: 同号比例 {agreement:.2f} < {sign_threshold}'
		)

	fit = fit_log_log(np.abs(lags).astype(float), values)
	return HurstEstimate(
		h_xy=1.0 + fit.slope / 2.0,
		method=HurstMethod.CCF_DECAY,
		window=(float(lower), float(upper)),
		slope=fit.slope,
		intercept=fit.intercept,
		slope_stderr=fit.slope_stderr,
		n_points=fit.n_points,
	)


@register_estimator
class CcfDecayEstimator(BaseHurstEstimator):
	"""样本互相关 + 幂律衰减回归

	回归之前先检查滞后 0 的样本互相关是否显著偏离独立假设。两条独立的长记忆序列
	也会给出在整个窗口内保持同号的伪互相关，仅靠同号比例无法识别 σ_εν = 0。
	"""

	method = HurstMethod.CCF_DECAY
	description = '在对数等距的滞后窗口上回归 log|ρ̂(n)| 与 log|n|'

	def __init__(
		self,
		window: tuple[int, int] | None = None,
		n_points: int | None = DEFAULT_LOG_POINTS,
		sign_threshold: float = DEFAULT_SIGN_THRESHOLD,
		side: LagSide = LagSide.AUTO,
		significance: float = DEFAULT_SIGNIFICANCE,
	) -> None:
		"""初始化

		Args:
			window: 滞后窗口 (|n|_min, |n|_max)，None 时按 N 取默认值
			n_points: 窗口内的对数等距滞后数
			sign_threshold: 同号比例下限
			side: 使用的滞后一侧
			significance: |ρ̂(0)| 与独立假设标准误之比的下限，0 表示不检查
		"""
		self.window = window
		self.n_points = n_points
		self.sign_threshold = sign_threshold
		self.side = LagSide(side)
		self.significance = significance

	@classmethod
	def from_config(cls, config: 'EstimationConfig') -> 'CcfDecayEstimator':
		return cls(
			window=config.ccf_window,
			n_points=config.ccf_log_points,
			sign_threshold=config.sign_threshold,
			side=config.ccf_side,
			significance=config.ccf_significance,
		)

	def resolve_window(self, pair: SeriesPair) -> tuple[int, int]:
		"""确定窗口的 |n| 范围

		Raises:
			InsufficientPointsError: 序列太短，默认窗口为空
		"""
		lower, upper = self.window or default_ccf_window(len(pair))
		if upper <= lower:
			raise InsufficientPointsError(
				f'序列太短，默认滞后窗口为空: N={len(pair)}, window=({lower}, {upper})'
			)
		return lower, upper

	def resolve_side(
		self, pair: SeriesPair, curve: CrossCorrelationCurve, window: tuple[int, int]
	) -> LagSide:
		"""确定使用的滞后一侧

		ARFIMA/AR 对的正滞后一侧按 θ^n 衰减，固定取负滞后；ARFIMA 对两侧都是幂律，
		常数较大的一侧噪声占比更小。
		"""
		if self.side != LagSide.AUTO:
			return self.side
		if pair.meta is not None and pair.meta.pair == PairKind.ARFIMA_AR:
			return LagSide.NEGATIVE

		lower, upper = window
		magnitudes = np.abs(curve.values)
		positive = magnitudes[(curve.lags >= lower) & (curve.lags <= upper)].mean()
		negative = magnitudes[(curve.lags >= -upper) & (curve.lags <= -lower)].mean()
		return LagSide.NEGATIVE if negative > positive else LagSide.POSITIVE

	def check_significance(self, pair: SeriesPair, curve: CrossCorrelationCurve) -> None:
		"""|ρ̂(0)| 不超过 significance 倍独立假设标准误时拒绝估计

		Raises:
			SignInstabilityError: 滞后 0 的互相关与零无法区分
		"""
		if self.significance <= 0:
			return
		stderr = null_correlation_stderr(pair)
		score = abs(curve.value_at(0)) / stderr
		logger.debug(f'Lag-0 cross-correlation z-score {score:.2f} (stderr={stderr:.4g})')
		if score < self.significance:
			raise SignInstabilityError(
				f'滞后 0 的互相关不显著: |ρ̂(0)|/se = {score:.2f} < {self.significance}，'
				'互相关被噪声主导'
			)

	def estimate_pair(self, pair: SeriesPair) -> HurstEstimate:
		lower, upper = self.resolve_window(pair)
		curve = sample_cross_correlation(pair, upper)
		self.check_significance(pair, curve)
		side = self.resolve_side(pair, curve, (lower, upper))
		window = (-upper, -lower) if side == LagSide.NEGATIVE else (lower, upper)
		return estimate_hxy_ccf_decay(curve, window, self.n_points, self.sign_threshold)
