"""
CSV 格式化器

结果文件的默认格式。浮点数使用最短往返表示，行尾固定为 '\\n'。
"""

import csv
import io
from collections.abc import Iterable, Sequence
from typing import TYPE_CHECKING

from arfima_xcorr.formatters.base import (
	CURVE_COLUMNS,
	ESTIMATE_COLUMNS,
	SPECTRUM_COLUMNS,
	SWEEP_COLUMNS,
	BaseFormatter,
	format_float,
)

if TYPE_CHECKING:
	from arfima_xcorr.analysis.curves import CrossCorrelationCurve, SpectrumPoint
	from arfima_xcorr.estimation.base import HurstEstimate
	from arfima_xcorr.harness.claims import ClaimSummary
	from arfima_xcorr.harness.single import RunReport
	from arfima_xcorr.harness.sweep import CellResult, SweepResult
	from arfima_xcorr.processes.types import SeriesPair

CLAIM_COLUMNS = ('status', 'claim', 'group', 'measured', 'expected', 'tolerance')


def format_failures(failures: dict[str, int]) -> str:
	"""失败计数写为 Name:count;Name:count"""
	return ';'.join(f'{name}:{count}' for name, count in sorted(failures.items()))


def format_values(values: Sequence[float]) -> str:
	"""副本值写为 ';' 分隔，失败为 nan"""
	return ';'.join(format_float(value) for value in values)


def sweep_row(cell: 'CellResult') -> list[str]:
	"""扫描结果的一行，列顺序同 SWEEP_COLUMNS"""
	return [
		str(cell.cell),
		cell.pair.value,
		format_float(cell.d1),
		format_float(cell.d2),
		format_float(cell.theta),
		format_float(cell.sigma_ev),
		cell.estimator.value,
		str(cell.replicas),
		str(cell.n_ok),
		str(cell.n_failed),
		format_float(cell.mean),
		format_float(cell.std),
		format_float(cell.theory),
		'true' if cell.comparable else 'false',
		format_failures(cell.failures),
		format_values(cell.values),
	]


class CsvFormatter(BaseFormatter):
	"""CSV 格式化器"""

	def _write(self, header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
		buffer = io.StringIO()
		writer = csv.writer(buffer, lineterminator='\n')
		writer.writerow(header)
		writer.writerows(rows)
		return self.truncate(buffer.getvalue())

	def format_series(self, pair: 'SeriesPair') -> str:
		return self._write(
			('x', 'y'),
			([format_float(x), format_float(y)] for x, y in zip(pair.x, pair.y, strict=True)),
		)

	def format_curve(self, curve: 'CrossCorrelationCurve') -> str:
		kind = curve.kind.value
		return self._write(
			CURVE_COLUMNS,
			(
				[str(int(lag)), format_float(value), kind]
				for lag, value in zip(curve.lags, curve.values, strict=True)
			),
		)

	def format_spectrum(self, points: 'list[SpectrumPoint]') -> str:
		return self._write(
			SPECTRUM_COLUMNS,
			(
				[
					format_float(point.frequency),
					format_float(point.value.real),
					format_float(point.value.imag),
				]
				for point in points
			),
		)

	def format_estimates(self, estimates: 'list[HurstEstimate]') -> str:
		return self._write(
			ESTIMATE_COLUMNS,
			([estimate.to_row()[column] for column in ESTIMATE_COLUMNS] for estimate in estimates),
		)

	def format_report(self, report: 'RunReport') -> str:
		"""报告写为 key,value 两列"""
		rows = [[key, value] for key, value in report.meta.to_records().items()]
		rows.append(['theory', format_float(report.theory)])
		rows.append(['max_lag', str(report.max_lag)])
		for outcome in report.outcomes:
			if outcome.estimate is not None:
				rows.append([outcome.method.value, format_float(outcome.estimate.h_xy)])
			else:
				rows.append([outcome.method.value, f'{outcome.error}: {outcome.message}'])
		return self._write(('key', 'value'), rows)

	def format_sweep(self, result: 'SweepResult') -> str:
		return self._write(SWEEP_COLUMNS, (sweep_row(cell) for cell in result.cells))

	def format_claims(self, summary: 'ClaimSummary') -> str:
		return self._write(
			CLAIM_COLUMNS,
			(
				[
					outcome.status.value,
					outcome.claim,
					outcome.group,
					format_float(outcome.measured),
					format_float(outcome.expected),
					format_float(outcome.tolerance),
				]
				for outcome in summary.outcomes
			),
		)
