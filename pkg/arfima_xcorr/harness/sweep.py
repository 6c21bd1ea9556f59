"""
Monte Carlo 扫描

参数网格的每个单元运行 R 个副本，副本 r 在单元 c 中使用种子 split_seed(base_seed, c, r)。
副本是并行单位，结果按 (cell, replica) 归并，与执行顺序和并行度无关。
"""

import itertools
import logging
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from arfima_xcorr.config import (
	EstimationConfig,
	load_key_value_file,
	split_list,
)
from arfima_xcorr.errors import ArtifactIOError, CrossMemoryError, InvalidSpecError
from arfima_xcorr.estimation.base import HurstMethod, build_estimators
from arfima_xcorr.estimation.relations import theoretical_hxy_for
from arfima_xcorr.performance import PerformanceMonitor, get_global_monitor
from arfima_xcorr.processes.innovations import split_seed
from arfima_xcorr.processes.simulation import simulate_pair
from arfima_xcorr.processes.types import (
	UINT64_MAX,
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	PairKind,
	SeriesMeta,
	default_burn_in,
)

logger = logging.getLogger(__name__)

# 扫描配置文件允许的键
SWEEP_KEYS = {
	'pair',
	'd1',
	'd2',
	'theta',
	'sigma_ev',
	'sigma_e2',
	'sigma_v2',
	'n',
	'burn_in',
	'replicas',
	'base_seed',
	'estimators',
	'output',
}

_LIST_KEYS = {'d1', 'd2', 'theta', 'sigma_ev', 'estimators'}


class SweepConfig(BaseModel):
	"""扫描配置

	Attributes:
		pair: 过程对类型
		d1: x 的 d 网格
		d2: y 的 d 网格（arfima_arfima）
		theta: y 的 θ 网格（arfima_ar）
		sigma_ev: 新息协方差网格
		sigma_e2: ε 的方差
		sigma_v2: ν 的方差
		n: 序列长度 N
		burn_in: 预热长度 M，None 表示 max(N, 2¹⁴)
		replicas: 每个单元的副本数 R
		base_seed: 基础种子
		estimators: 估计方法
		output: 结果 CSV 路径
	"""

	model_config = ConfigDict(frozen=True)

	pair: PairKind = PairKind.ARFIMA_ARFIMA
	d1: list[float] = Field(min_length=1)
	d2: list[float] = Field(default_factory=list)
	theta: list[float] = Field(default_factory=list)
	sigma_ev: list[float] = Field(default_factory=lambda: [0.5], min_length=1)
	sigma_e2: float = Field(default=1.0, ge=0.0)
	sigma_v2: float = Field(default=1.0, ge=0.0)
	n: int = Field(default=2**16, gt=0)
	burn_in: int | None = Field(default=None, gt=0)
	replicas: int = Field(default=100, ge=1)
	base_seed: int = Field(default=0, ge=0, le=UINT64_MAX)
	estimators: list[HurstMethod] = Field(default_factory=lambda: list(HurstMethod))
	output: Path | None = None

	@field_validator('d1', 'd2')
	@classmethod
	def check_orders(cls, values: list[float]) -> list[float]:
		"""每个 d 都在平稳区间内"""
		for value in values:
			FracDiffOrder(d=value)
		return values

	@field_validator('theta')
	@classmethod
	def check_coefficients(cls, values: list[float]) -> list[float]:
		"""每个 θ 都满足 |θ| < 1"""
		for value in values:
			ArCoefficient(theta=value)
		return values

	@model_validator(mode='after')
	def check_grids(self) -> 'SweepConfig':
		"""过程对所需的网格非空，协方差网格在 PSD 范围内，M ≥ N"""
		if self.pair == PairKind.ARFIMA_ARFIMA and not self.d2:
			raise ValueError('arfima_arfima 扫描需要 d2 网格')
		if self.pair == PairKind.ARFIMA_AR and not self.theta:
			raise ValueError('arfima_ar 扫描需要 theta 网格')
		if not self.estimators:
			raise ValueError('至少需要一个估计方法')
		for value in self.sigma_ev:
			InnovationSpec(sigma_e2=self.sigma_e2, sigma_v2=self.sigma_v2, sigma_ev=value)
		if self.burn_in is not None and self.burn_in < self.n:
			raise ValueError(f'burn_in 必须不小于 n: burn_in={self.burn_in}, n={self.n}')
		return self

	@classmethod
	def from_records(cls, records: dict[str, str], **overrides: Any) -> 'SweepConfig':
		"""从 key = value 记录构造，overrides 中非 None 的值优先

		Raises:
			InvalidSpecError: 值无法解析
		"""
		data: dict[str, Any] = {}
		for key, value in records.items():
			data[key] = split_list(value) if key in _LIST_KEYS else value
		data.update({key: value for key, value in overrides.items() if value is not None})
		try:
			return cls.model_validate(data)
		except ValueError as e:
			raise InvalidSpecError(f'扫描配置不合法: {e}') from e

	@classmethod
	def from_file(cls, path: Path | str, **overrides: Any) -> 'SweepConfig':
		"""读取 key = value 扫描配置文件

		Raises:
			ArtifactIOError: 文件无法读取
			InvalidSpecError: 内容不合法
		"""
		try:
			records = load_key_value_file(path, SWEEP_KEYS)
		except OSError as e:
			raise ArtifactIOError(f'读取扫描配置 {path} 失败: {e}') from e
		return cls.from_records(records, **overrides)

	@property
	def effective_burn_in(self) -> int:
		return self.burn_in if self.burn_in is not None else default_burn_in(self.n)

	def cells(self) -> list['SweepCell']:
		"""按固定顺序展开网格：d1、d2 或 θ、σ_εν"""
		is_arfima = self.pair == PairKind.ARFIMA_ARFIMA
		second_grid = self.d2 if is_arfima else self.theta
		cells = []
		for index, (d1, second, sigma_ev) in enumerate(
			itertools.product(self.d1, second_grid, self.sigma_ev)
		):
			cells.append(
				SweepCell(
					cell=index,
					pair=self.pair,
					d1=d1,
					d2=second if is_arfima else None,
					theta=None if is_arfima else second,
					innovations=InnovationSpec(
						sigma_e2=self.sigma_e2, sigma_v2=self.sigma_v2, sigma_ev=sigma_ev
					),
				)
			)
		return cells


class SweepCell(BaseModel):
	"""网格中的一个参数点"""

	model_config = ConfigDict(frozen=True)

	cell: int = Field(ge=0)
	pair: PairKind
	d1: float
	d2: float | None = None
	theta: float | None = None
	innovations: InnovationSpec

	@property
	def sigma_ev(self) -> float:
		return self.innovations.sigma_ev

	@property
	def theory(self) -> float:
		"""理论 H_xy = (H_x + H_y)/2"""
		return theoretical_hxy_for(self.pair, self.d1, self.d2, self.theta)

	def meta(self, length: int, burn_in: int, seed: int) -> SeriesMeta:
		"""副本的生成配置"""
		return SeriesMeta(
			pair=self.pair,
			d1=self.d1,
			d2=self.d2,
			theta=self.theta,
			innovations=self.innovations,
			length=length,
			burn_in=burn_in,
			seed=seed,
		)


class ReplicaOutcome(BaseModel):
	"""单个副本的结果：每个方法一个 Ĥ_xy（失败为 None）和失败的异常类名"""

	cell: int
	replica: int
	values: dict[HurstMethod, float | None]
	errors: dict[HurstMethod, str]
	durations: dict[str, float] = Field(default_factory=dict)


class ReplicaTask(BaseModel):
	"""可在工作进程中执行的副本任务"""

	cell: int
	replica: int
	meta: SeriesMeta
	methods: list[HurstMethod]
	estimation: EstimationConfig


def run_replica(task: ReplicaTask) -> ReplicaOutcome:
	"""模拟一对序列并用每个方法估计 H_xy

	估计失败只记录异常类名，不向外抛出。
	"""
	durations: dict[str, float] = {}
	start = time.perf_counter()
	pair = simulate_pair(task.meta)
	durations['simulate'] = time.perf_counter() - start

	values: dict[HurstMethod, float | None] = {}
	errors: dict[HurstMethod, str] = {}
	for method, estimator in build_estimators(task.methods, task.estimation).items():
		start = time.perf_counter()
		try:
			values[method] = estimator.estimate_pair(pair).h_xy
		except CrossMemoryError as e:
			values[method] = None
			errors[method] = type(e).__name__
		durations[f'estimate.{method.value}'] = time.perf_counter() - start

	return ReplicaOutcome(
		cell=task.cell,
		replica=task.replica,
		values=values,
		errors=errors,
		durations=durations,
	)


def summarize(values: list[float]) -> tuple[float, float]:
	"""成功副本（非 NaN）的均值和标准差

	R ≥ 2 时标准差取 ddof = 1，只有一个成功值时为 0.0，全部失败时均为 NaN。
	"""
	finite = np.asarray([value for value in values if not math.isnan(value)], dtype=float)
	if finite.size == 0:
		return math.nan, math.nan
	mean = float(np.mean(finite))
	std = float(np.std(finite, ddof=1)) if finite.size > 1 else 0.0
	return mean, std


class CellResult(BaseModel):
	"""一个 (单元, 估计方法) 的汇总

	values 按副本序号排列，失败的副本为 NaN。
	"""

	model_config = ConfigDict(frozen=True)

	cell: int
	pair: PairKind
	d1: float
	d2: float | None = None
	theta: float | None = None
	sigma_ev: float
	estimator: HurstMethod
	replicas: int = Field(ge=1)
	n_ok: int = Field(ge=0)
	n_failed: int = Field(ge=0)
	mean: float
	std: float
	theory: float
	comparable: bool
	failures: dict[str, int] = Field(default_factory=dict)
	values: list[float]

	@classmethod
	def aggregate(
		cls,
		cell: SweepCell,
		estimator: HurstMethod,
		values: list[float],
		failures: dict[str, int],
		min_success_fraction: float,
	) -> 'CellResult':
		"""由副本值汇总"""
		n_ok = sum(1 for value in values if not math.isnan(value))
		mean, std = summarize(values)
		return cls(
			cell=cell.cell,
			pair=cell.pair,
			d1=cell.d1,
			d2=cell.d2,
			theta=cell.theta,
			sigma_ev=cell.sigma_ev,
			estimator=estimator,
			replicas=len(values),
			n_ok=n_ok,
			n_failed=len(values) - n_ok,
			mean=mean,
			std=std,
			theory=cell.theory,
			comparable=n_ok >= min_success_fraction * len(values),
			failures=dict(sorted(failures.items())),
			values=values,
		)

	@property
	def success_fraction(self) -> float:
		return self.n_ok / self.replicas


class SweepResult(BaseModel):
	"""扫描结果，按 (cell, estimator) 排序"""

	model_config = ConfigDict(frozen=True)

	cells: list[CellResult]

	def __len__(self) -> int:
		return len(self.cells)


def _execute(tasks: list[ReplicaTask], jobs: int) -> list[ReplicaOutcome]:
	if jobs <= 1:
		return [run_replica(task) for task in tasks]

	chunksize = max(1, len(tasks) // (jobs * 4))
	with ProcessPoolExecutor(max_workers=jobs) as executor:
		return list(executor.map(run_replica, tasks, chunksize=chunksize))


def run_sweep(
	sweep: SweepConfig,
	estimation: EstimationConfig | None = None,
	jobs: int = 1,
	monitor: PerformanceMonitor | None = None,
) -> SweepResult:
	"""运行 Monte Carlo 扫描

	Args:
		sweep: 扫描配置
		estimation: 估计参数，None 使用默认值
		jobs: 并行进程数，1 表示串行
		monitor: 性能监控器，None 使用全局实例

	Returns:
		SweepResult，与 jobs 无关
	"""
	estimation = estimation or EstimationConfig()
	monitor = monitor or get_global_monitor()
	cells = sweep.cells()
	burn_in = sweep.effective_burn_in

	tasks = [
		ReplicaTask(
			cell=cell.cell,
			replica=replica,
			meta=cell.meta(sweep.n, burn_in, split_seed(sweep.base_seed, cell.cell, replica)),
			methods=sweep.estimators,
			estimation=estimation,
		)
		for cell in cells
		for replica in range(sweep.replicas)
	]
	logger.info(
		f'Running sweep: {len(cells)} cells x {sweep.replicas} replicas, '
		f'N={sweep.n}, jobs={jobs}'
	)

	with monitor.measure('sweep'):
		outcomes = _execute(tasks, jobs)

	by_key = {(outcome.cell, outcome.replica): outcome for outcome in outcomes}
	for outcome in outcomes:
		for name, duration in outcome.durations.items():
			monitor.record_operation(f'replica.{name}', duration)

	results = []
	for cell in cells:
		for method in sweep.estimators:
			values: list[float] = []
			failures: Counter[str] = Counter()
			for replica in range(sweep.replicas):
				outcome = by_key[(cell.cell, replica)]
				value = outcome.values.get(method)
				values.append(math.nan if value is None else value)
				if method in outcome.errors:
					failures[outcome.errors[method]] += 1

			result = CellResult.aggregate(
				cell, method, values, dict(failures), estimation.min_success_fraction
			)
			if not result.comparable:
				logger.warning(
					f'Cell {cell.cell} ({method.value}) not comparable to theory: '
					f'{result.n_ok}/{result.replicas} replicas succeeded'
				)
			results.append(result)
		logger.info(f'Cell {cell.cell} done (d1={cell.d1}, sigma_ev={cell.sigma_ev})')

	return SweepResult(cells=results)
