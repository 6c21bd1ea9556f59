"""
JSON 格式化器

将结果转换为结构化的 JSON 输出，适合程序化处理。
"""

import json
from typing import TYPE_CHECKING, Any

from arfima_xcorr.formatters.base import BaseFormatter

if TYPE_CHECKING:
	from arfima_xcorr.analysis.curves import CrossCorrelationCurve, SpectrumPoint
	from arfima_xcorr.estimation.base import HurstEstimate
	from arfima_xcorr.harness.claims import ClaimSummary
	from arfima_xcorr.harness.single import RunReport
	from arfima_xcorr.harness.sweep import SweepResult
	from arfima_xcorr.processes.types import SeriesPair


class JsonFormatter(BaseFormatter):
	"""JSON 格式化器

	键顺序与模型字段一致，NaN 按 json 模块的默认方式写为 NaN。
	"""

	def _dump(self, data: Any) -> str:
		return self.truncate(json.dumps(data, indent=2, ensure_ascii=False) + '\n')

	def format_series(self, pair: 'SeriesPair') -> str:
		"""格式化序列对为 JSON

		Args:
			pair: 序列对

		Returns:
			包含 x、y、N 和元数据的 JSON
		"""
		return self._dump(
			{
				'N': len(pair),
				'x': pair.x.tolist(),
				'y': pair.y.tolist(),
				'meta': pair.meta.model_dump(mode='json') if pair.meta is not None else None,
			}
		)

	def format_curve(self, curve: 'CrossCorrelationCurve') -> str:
		return self._dump(
			{
				'kind': curve.kind.value,
				'normalization': list(curve.normalization) if curve.normalization else None,
				'lags': curve.lags.tolist(),
				'values': curve.values.tolist(),
			}
		)

	def format_spectrum(self, points: 'list[SpectrumPoint]') -> str:
		return self._dump(
			{
				'points': [
					{
						'lambda': point.frequency,
						're': point.value.real,
						'im': point.value.imag,
					}
					for point in points
				],
				'total': len(points),
			}
		)

	def format_estimates(self, estimates: 'list[HurstEstimate]') -> str:
		return self._dump({'estimates': [estimate.model_dump(mode='json') for estimate in estimates]})

	def format_report(self, report: 'RunReport') -> str:
		"""格式化单次运行报告为 JSON

		Args:
			report: 单次运行报告

		Returns:
			JSON 格式的报告，只含相对文件名
		"""
		return self._dump(report.model_dump(mode='json'))

	def format_sweep(self, result: 'SweepResult') -> str:
		return self._dump(
			{'cells': [cell.model_dump(mode='json') for cell in result.cells], 'total': len(result)}
		)

	def format_claims(self, summary: 'ClaimSummary') -> str:
		return self._dump(
			{
				'passed': summary.passed,
				'claims': [outcome.model_dump(mode='json') for outcome in summary.outcomes],
			}
		)
