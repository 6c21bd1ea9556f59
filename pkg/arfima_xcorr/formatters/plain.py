"""
纯文本格式化器

供命令行在终端上显示摘要，断言结果每条一行。
"""

from typing import TYPE_CHECKING

from arfima_xcorr.formatters.base import BaseFormatter, format_float

if TYPE_CHECKING:
	from arfima_xcorr.analysis.curves import CrossCorrelationCurve, SpectrumPoint
	from arfima_xcorr.estimation.base import HurstEstimate
	from arfima_xcorr.harness.claims import ClaimSummary
	from arfima_xcorr.harness.single import RunReport
	from arfima_xcorr.harness.sweep import SweepResult
	from arfima_xcorr.processes.types import SeriesPair


def _estimate_line(estimate: 'HurstEstimate') -> str:
	lower, upper = estimate.window
	return (
		f'{estimate.method.value}: H_xy={estimate.h_xy:.4f} '
		f'(stderr={estimate.slope_stderr:.4f}, window=[{lower:g}, {upper:g}], '
		f'points={estimate.n_points})'
	)


class PlainTextFormatter(BaseFormatter):
	"""纯文本格式化器

	不包含任何特殊格式标记，数值保留 4 位小数。
	"""

	def format_series(self, pair: 'SeriesPair') -> str:
		lines = [f'Series pair: N={len(pair)}']
		if pair.meta is not None:
			lines.extend(f'  {key} = {value}' for key, value in pair.meta.to_records().items())
		lines.append(f'  mean(x)={pair.x.mean():.4f}, mean(y)={pair.y.mean():.4f}')
		lines.append(f'  std(x)={pair.x.std():.4f}, std(y)={pair.y.std():.4f}')
		return self.truncate('\n'.join(lines))

	def format_curve(self, curve: 'CrossCorrelationCurve') -> str:
		lines = [f'Cross-correlation ({curve.kind.value}), {len(curve)} lags:']
		lines.extend(
			f'  {int(lag):>6d}  {value: .6f}'
			for lag, value in zip(curve.lags, curve.values, strict=True)
		)
		return self.truncate('\n'.join(lines))

	def format_spectrum(self, points: 'list[SpectrumPoint]') -> str:
		lines = [f'Cross-spectrum, {len(points)} frequencies:']
		lines.extend(
			f'  lambda={point.frequency:.6f}  re={point.value.real: .6g}  im={point.value.imag: .6g}'
			for point in points
		)
		return self.truncate('\n'.join(lines))

	def format_estimates(self, estimates: 'list[HurstEstimate]') -> str:
		if not estimates:
			return 'No estimates.'
		return self.truncate('\n'.join(_estimate_line(estimate) for estimate in estimates))

	def format_report(self, report: 'RunReport') -> str:
		"""格式化单次运行报告

		Args:
			report: 单次运行报告

		Returns:
			理论值、各估计器结果和写出的文件列表
		"""
		meta = report.meta
		second = f'd2={meta.d2}' if meta.d2 is not None else f'theta={meta.theta}'
		lines = [
			f'Run: {meta.pair.value} d1={meta.d1} {second} '
			f'sigma_ev={meta.innovations.sigma_ev} N={meta.length} seed={meta.seed}',
			f'Theory: H_xy={report.theory:.4f}',
			'',
		]
		for outcome in report.outcomes:
			if outcome.estimate is not None:
				lines.append(_estimate_line(outcome.estimate))
			else:
				lines.append(f'{outcome.method.value}: FAILED {outcome.error}: {outcome.message}')
		lines.append('')
		lines.append(f'Files: {", ".join(report.files)}')
		return self.truncate('\n'.join(lines))

	def format_sweep(self, result: 'SweepResult') -> str:
		if not result.cells:
			return 'Empty sweep.'

		lines = ['cell  estimator          ok/R      mean      std     theory']
		for cell in result.cells:
			flag = '' if cell.comparable else '  (not comparable)'
			lines.append(
				f'{cell.cell:>4d}  {cell.estimator.value:<17s}  '
				f'{cell.n_ok:>3d}/{cell.replicas:<3d}  {cell.mean:8.4f} {cell.std:8.4f}  '
				f'{cell.theory:8.4f}{flag}'
			)
		lines.append('')
		lines.append(f'Total rows: {len(result)}')
		return self.truncate('\n'.join(lines))

	def format_claims(self, summary: 'ClaimSummary') -> str:
		"""每条断言一行：<STATUS> <claim> <group> measured=… expected=… tol=…"""
		lines = [
			f'{outcome.status.value} {outcome.claim} {outcome.group} '
			f'measured={format_float(outcome.measured)} '
			f'expected={format_float(outcome.expected)} '
			f'tol={format_float(outcome.tolerance)}'
			for outcome in summary.outcomes
		]
		return '\n'.join(lines) + '\n' if lines else ''
