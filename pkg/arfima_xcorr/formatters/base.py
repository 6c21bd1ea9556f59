"""
格式化器基类

定义了所有格式化器必须实现的接口。
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
	from arfima_xcorr.analysis.curves import CrossCorrelationCurve, SpectrumPoint
	from arfima_xcorr.estimation.base import HurstEstimate
	from arfima_xcorr.harness.claims import ClaimSummary
	from arfima_xcorr.harness.single import RunReport
	from arfima_xcorr.harness.sweep import SweepResult
	from arfima_xcorr.processes.types import SeriesPair


# 互相关曲线的列
CURVE_COLUMNS = ('lag', 'value', 'kind')

# 互谱的列
SPECTRUM_COLUMNS = ('lambda', 're', 'im')

# HurstEstimate 的列
ESTIMATE_COLUMNS = ('method', 'H_xy', 'slope_stderr', 'window_lo', 'window_hi', 'n_points')

# SweepResult 的列
SWEEP_COLUMNS = (
	'cell',
	'pair',
	'd1',
	'd2',
	'theta',
	'sigma_ev',
	'estimator',
	'replicas',
	'n_ok',
	'n_failed',
	'mean',
	'std',
	'theory',
	'comparable',
	'failures',
	'values',
)


def format_float(value: float | None) -> str:
	"""浮点数的最短往返表示，None 写为空串，NaN 写为 nan"""
	if value is None:
		return ''
	return repr(float(value))


class BaseFormatter(ABC):
	"""格式化器基类

	所有格式化器都应继承此基类并实现相应的格式化方法。
	同一输入总是得到逐字节相同的输出，不写入时间戳或绝对路径。

	Attributes:
		max_length: 最大输出长度（字符数），0 表示不限制
	"""

	def __init__(self, max_length: int = 0) -> None:
		"""初始化格式化器

		Args:
			max_length: 最大输出长度（字符数），0 表示不限制
		"""
		self.max_length = max_length

	@abstractmethod
	def format_series(self, pair: 'SeriesPair') -> str:
		"""格式化序列对（列 x,y）"""
		...

	@abstractmethod
	def format_curve(self, curve: 'CrossCorrelationCurve') -> str:
		"""格式化互相关曲线（列 lag,value,kind）"""
		...

	@abstractmethod
	def format_spectrum(self, points: 'list[SpectrumPoint]') -> str:
		"""格式化互谱（列 lambda,re,im）"""
		...

	@abstractmethod
	def format_estimates(self, estimates: 'list[HurstEstimate]') -> str:
		"""格式化 Hurst 估计结果"""
		...

	@abstractmethod
	def format_report(self, report: 'RunReport') -> str:
		"""格式化单次运行报告"""
		...

	@abstractmethod
	def format_sweep(self, result: 'SweepResult') -> str:
		"""格式化扫描结果"""
		...

	@abstractmethod
	def format_claims(self, summary: 'ClaimSummary') -> str:
		"""格式化断言验证结果"""
		...

	def truncate(self, text: str) -> str:
		"""截断文本到最大长度

		如果 max_length 为 0，则不进行截断。

		Args:
			text: 要截断的文本

		Returns:
			截断后的文本
		"""
		if self.max_length <= 0 or len(text) <= self.max_length:
			return text

		truncated = text[: self.max_length]
		truncated += f'\n... (输出已截断，总长度: {len(text)} 字符)\n'
		return truncated
