"""
单次运行

模拟一对序列，写出序列、样本互相关、同参数的精确与渐近互相关曲线、两种估计结果，
以及汇总报告。相同配置与种子的两次运行产生逐字节相同的文件。
"""

import logging
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from arfima_xcorr.analysis.curves import CorrelationKind, CrossCorrelationCurve
from arfima_xcorr.analysis.exact import (
	asymptotic_cross_correlation_arfima,
	asymptotic_cross_correlation_arfima_ar,
	exact_cross_correlation_curve_arfima,
	exact_cross_correlation_curve_arfima_ar,
)
from arfima_xcorr.analysis.sample import sample_cross_correlation
from arfima_xcorr.config import EstimationConfig
from arfima_xcorr.errors import CrossMemoryError
from arfima_xcorr.estimation.base import HurstEstimate, HurstMethod, build_estimators
from arfima_xcorr.estimation.ccf_decay import default_ccf_window
from arfima_xcorr.estimation.relations import theoretical_hxy_for
from arfima_xcorr.formatters import CsvFormatter, JsonFormatter
from arfima_xcorr.harness.io import write_artifact, write_series_pair
from arfima_xcorr.performance import PerformanceMonitor, get_global_monitor
from arfima_xcorr.processes.simulation import simulate_pair
from arfima_xcorr.processes.types import (
	InnovationSpec,
	PairKind,
	SeriesMeta,
	SeriesPair,
	SimulationConfig,
)

logger = logging.getLogger(__name__)

SERIES_FILE = 'series.csv'
CCF_FILE = 'ccf.csv'
EXACT_FILE = 'exact.csv'
ASYMPTOTIC_FILE = 'asymptotic.csv'
ESTIMATES_FILE = 'estimates.csv'
REPORT_FILE = 'report.json'

# 未指定 max_lag 且默认窗口为空时使用的上限
FALLBACK_MAX_LAG = 100


class RunConfig(BaseModel):
	"""单次运行配置"""

	model_config = ConfigDict(frozen=True)

	pair: PairKind = PairKind.ARFIMA_ARFIMA
	d1: float
	d2: float | None = None
	theta: float | None = None
	innovations: InnovationSpec = Field(default_factory=InnovationSpec)
	simulation: SimulationConfig
	max_lag: int | None = Field(default=None, ge=1, description='样本与解析曲线的最大滞后')
	estimation: EstimationConfig = Field(default_factory=EstimationConfig)
	output_dir: Path = Path('results')

	@model_validator(mode='after')
	def check_pair(self) -> 'RunConfig':
		"""arfima_arfima 需要 d2，arfima_ar 需要 theta"""
		if self.pair == PairKind.ARFIMA_ARFIMA and self.d2 is None:
			raise ValueError('arfima_arfima 需要 d2')
		if self.pair == PairKind.ARFIMA_AR and self.theta is None:
			raise ValueError('arfima_ar 需要 theta')
		return self

	@property
	def meta(self) -> SeriesMeta:
		"""本次模拟的完整生成配置"""
		return SeriesMeta(
			pair=self.pair,
			d1=self.d1,
			d2=self.d2 if self.pair == PairKind.ARFIMA_ARFIMA else None,
			theta=self.theta if self.pair == PairKind.ARFIMA_AR else None,
			innovations=self.innovations,
			length=self.simulation.length,
			burn_in=self.simulation.effective_burn_in,
			seed=self.simulation.seed,
		)

	@property
	def effective_max_lag(self) -> int:
		"""max_lag，未指定时取估计窗口上界（不超过 N/4）"""
		if self.max_lag is not None:
			return self.max_lag
		length = self.simulation.length
		upper = (self.estimation.ccf_window or default_ccf_window(length))[1]
		if upper <= 0:
			upper = FALLBACK_MAX_LAG
		return max(1, min(upper, (length - 1) // 4))


class EstimatorOutcome(BaseModel):
	"""单个估计器的结果：成功时有 estimate，失败时有异常类名和消息"""

	model_config = ConfigDict(frozen=True)

	method: HurstMethod
	estimate: HurstEstimate | None = None
	error: str | None = None
	message: str | None = None

	@property
	def ok(self) -> bool:
		return self.estimate is not None


class RunReport(BaseModel):
	"""单次运行报告

	Attributes:
		meta: 生成配置
		theory: 理论 H_xy
		max_lag: 曲线的最大滞后
		outcomes: 每个估计器的结果
		files: 写出的文件名（相对于输出目录）
	"""

	model_config = ConfigDict(frozen=True)

	meta: SeriesMeta
	theory: float
	max_lag: int
	outcomes: list[EstimatorOutcome]
	files: list[str]

	def outcome(self, method: HurstMethod) -> EstimatorOutcome | None:
		"""取指定方法的结果"""
		for outcome in self.outcomes:
			if outcome.method == method:
				return outcome
		return None

	@property
	def estimates(self) -> list[HurstEstimate]:
		"""成功的估计"""
		return [outcome.estimate for outcome in self.outcomes if outcome.estimate is not None]


def exact_curve_for(meta: SeriesMeta, lags: np.ndarray) -> CrossCorrelationCurve:
	"""与序列同参数的截断精确互相关曲线"""
	if meta.pair == PairKind.ARFIMA_ARFIMA:
		return exact_cross_correlation_curve_arfima(lags, meta.d1, meta.d2, meta.innovations)  # type: ignore[arg-type]
	return exact_cross_correlation_curve_arfima_ar(lags, meta.d1, meta.theta, meta.innovations)  # type: ignore[arg-type]


def asymptotic_curve_for(meta: SeriesMeta, max_lag: int) -> CrossCorrelationCurve | None:
	"""与序列同参数的渐近互相关曲线，参数不在渐近式的有效区域时返回 None

	ARFIMA 对取全部非零滞后；ARFIMA/AR 对只有 x 领先一侧（负滞后）是幂律。
	"""
	first, second = meta.processes
	if meta.pair == PairKind.ARFIMA_ARFIMA:
		if meta.d1 <= 0 or meta.d2 is None or meta.d2 <= 0:
			return None
		lags = np.concatenate([np.arange(-max_lag, 0), np.arange(1, max_lag + 1)])
		values = [
			asymptotic_cross_correlation_arfima(int(lag), meta.d1, meta.d2, meta.innovations)
			for lag in lags
		]
	else:
		if meta.d1 <= 0 or meta.theta is None:
			return None
		lags = np.arange(-max_lag, 0)
		values = [
			asymptotic_cross_correlation_arfima_ar(int(-lag), meta.d1, meta.theta, meta.innovations)
			for lag in lags
		]

	return CrossCorrelationCurve(
		lags=lags,
		values=values,
		kind=CorrelationKind.ASYMPTOTIC,
		normalization=(
			first.std(meta.innovations.sigma_e2),
			second.std(meta.innovations.sigma_v2),
		),
	)


def estimate_all(
	pair: SeriesPair, methods: list[HurstMethod], estimation: EstimationConfig
) -> list[EstimatorOutcome]:
	"""依次运行每个估计器，失败只记录，不中断"""
	outcomes = []
	for method, estimator in build_estimators(methods, estimation).items():
		try:
			outcomes.append(
				EstimatorOutcome(method=method, estimate=estimator.estimate_pair(pair))
			)
		except CrossMemoryError as e:
			logger.warning(f'Estimator {method.value} failed: {type(e).__name__}: {e}')
			outcomes.append(
				EstimatorOutcome(method=method, error=type(e).__name__, message=str(e))
			)
	return outcomes


def run_single(
	config: RunConfig, monitor: PerformanceMonitor | None = None
) -> RunReport:
	"""单次运行并写出全部结果文件

	Args:
		config: 运行配置
		monitor: 性能监控器，None 使用全局实例

	Returns:
		RunReport

	Raises:
		ArtifactIOError: 写文件失败（消息包含路径）
	"""
	monitor = monitor or get_global_monitor()
	meta = config.meta
	output_dir = config.output_dir
	csv_formatter = CsvFormatter()
	files: list[str] = []

	with monitor.measure('simulate'):
		pair = simulate_pair(meta)
	write_series_pair(pair, output_dir / SERIES_FILE, csv_formatter)
	files.extend([SERIES_FILE, SERIES_FILE + '.meta'])

	max_lag = config.effective_max_lag
	with monitor.measure('sample_ccf'):
		sample = sample_cross_correlation(pair, max_lag)
	write_artifact(output_dir / CCF_FILE, csv_formatter.format_curve(sample))
	files.append(CCF_FILE)

	with monitor.measure('exact_curve'):
		exact = exact_curve_for(meta, np.arange(-max_lag, max_lag + 1))
	write_artifact(output_dir / EXACT_FILE, csv_formatter.format_curve(exact))
	files.append(EXACT_FILE)

	asymptotic = asymptotic_curve_for(meta, max_lag)
	if asymptotic is not None:
		write_artifact(output_dir / ASYMPTOTIC_FILE, csv_formatter.format_curve(asymptotic))
		files.append(ASYMPTOTIC_FILE)
	else:
		logger.info('Asymptotic curve skipped: parameters outside its validity region')

	with monitor.measure('estimate'):
		outcomes = estimate_all(pair, config.estimation.methods, config.estimation)

	files.extend([ESTIMATES_FILE, REPORT_FILE])
	report = RunReport(
		meta=meta,
		theory=theoretical_hxy_for(meta.pair, meta.d1, meta.d2, meta.theta),
		max_lag=max_lag,
		outcomes=outcomes,
		files=files,
	)
	write_artifact(output_dir / ESTIMATES_FILE, csv_formatter.format_estimates(report.estimates))
	write_artifact(output_dir / REPORT_FILE, JsonFormatter().format_report(report))
	logger.info(f'Run finished, results written to {output_dir}')
	return report
