"""
扫描结果的断言验证

每条断言输出一行 PASS / FAIL / SKIP，附测量值、期望值和容差。
失败是数据而不是异常：verify_claims 从不抛出。
"""

import logging
import math
from collections import defaultdict
from collections.abc import Callable, Hashable
from enum import Enum

from pydantic import BaseModel, ConfigDict

from arfima_xcorr.config import ClaimTolerances
from arfima_xcorr.errors import SignInstabilityError
from arfima_xcorr.estimation.base import HurstMethod
from arfima_xcorr.harness.sweep import CellResult, SweepResult, summarize
from arfima_xcorr.processes.types import PairKind

logger = logging.getLogger(__name__)


class ClaimStatus(str, Enum):
	"""断言状态"""

	PASS = 'PASS'
	FAIL = 'FAIL'
	SKIP = 'SKIP'


class ClaimOutcome(BaseModel):
	"""一条断言的结果

	Attributes:
		claim: 断言名（theory、theta、sigma_ev、null、integrity）
		group: 单元或分组标签，不含空白
		status: 状态
		measured: 测量值
		expected: 期望值
		tolerance: 容差
	"""

	model_config = ConfigDict(frozen=True)

	claim: str
	group: str
	status: ClaimStatus
	measured: float
	expected: float
	tolerance: float


class ClaimSummary(BaseModel):
	"""全部断言的结果"""

	model_config = ConfigDict(frozen=True)

	outcomes: list[ClaimOutcome]

	@property
	def passed(self) -> bool:
		"""没有 FAIL"""
		return all(outcome.status != ClaimStatus.FAIL for outcome in self.outcomes)

	def count(self, status: ClaimStatus) -> int:
		return sum(1 for outcome in self.outcomes if outcome.status == status)


def _label(**parts: object) -> str:
	return ','.join(f'{key}={value}' for key, value in parts.items())


def _cell_label(cell: CellResult) -> str:
	return _label(cell=cell.cell, estimator=cell.estimator.value)


def _check(
	claim: str, group: str, measured: float, expected: float, tolerance: float, ok: bool
) -> ClaimOutcome:
	return ClaimOutcome(
		claim=claim,
		group=group,
		status=ClaimStatus.PASS if ok else ClaimStatus.FAIL,
		measured=measured,
		expected=expected,
		tolerance=tolerance,
	)


def _skip(claim: str, group: str, measured: float, expected: float, tolerance: float) -> ClaimOutcome:
	return ClaimOutcome(
		claim=claim,
		group=group,
		status=ClaimStatus.SKIP,
		measured=measured,
		expected=expected,
		tolerance=tolerance,
	)


def check_theory(cells: list[CellResult], tolerances: ClaimTolerances) -> list[ClaimOutcome]:
	"""σ_εν ≠ 0 的可比单元：|mean − theory| < tol"""
	outcomes = []
	for cell in cells:
		if cell.sigma_ev == 0:
			continue
		tolerance = tolerances.theory_tolerance(cell.estimator)
		if not cell.comparable:
			outcomes.append(
				_skip('theory', _cell_label(cell), cell.mean, cell.theory, tolerance)
			)
			continue
		deviation = abs(cell.mean - cell.theory)
		outcomes.append(
			_check(
				'theory', _cell_label(cell), cell.mean, cell.theory, tolerance, deviation < tolerance
			)
		)
	return outcomes


def _spread_claims(
	claim: str,
	cells: list[CellResult],
	key: Callable[[CellResult], Hashable],
	label: Callable[[CellResult], str],
	varying: Callable[[CellResult], float | None],
	tolerance: float,
) -> list[ClaimOutcome]:
	"""分组内均值的极差 < tol，组内只有一个不同的参数值时不产生断言"""
	groups: dict[Hashable, list[CellResult]] = defaultdict(list)
	for cell in cells:
		if cell.sigma_ev != 0 and cell.comparable:
			groups[key(cell)].append(cell)

	outcomes = []
	for members in groups.values():
		if len({varying(cell) for cell in members}) < 2:
			continue
		means = [cell.mean for cell in members]
		spread = max(means) - min(means)
		outcomes.append(_check(claim, label(members[0]), spread, 0.0, tolerance, spread < tolerance))
	return outcomes


def check_theta_invariance(
	cells: list[CellResult], tolerances: ClaimTolerances
) -> list[ClaimOutcome]:
	"""arfima_ar 单元按 (d1, σ_εν, estimator) 分组，跨 θ 的均值极差"""
	return _spread_claims(
		'theta',
		[cell for cell in cells if cell.pair == PairKind.ARFIMA_AR],
		key=lambda cell: (cell.d1, cell.sigma_ev, cell.estimator),
		label=lambda cell: _label(
			d1=cell.d1, sigma_ev=cell.sigma_ev, estimator=cell.estimator.value
		),
		varying=lambda cell: cell.theta,
		tolerance=tolerances.theta_invariance,
	)


def check_sigma_ev_invariance(
	cells: list[CellResult], tolerances: ClaimTolerances
) -> list[ClaimOutcome]:
	"""按 (pair, d1, d2, θ, estimator) 分组，跨 σ_εν ≠ 0 的均值极差"""
	return _spread_claims(
		'sigma_ev',
		cells,
		key=lambda cell: (cell.pair, cell.d1, cell.d2, cell.theta, cell.estimator),
		label=lambda cell: _label(
			pair=cell.pair.value,
			d1=cell.d1,
			d2=cell.d2,
			theta=cell.theta,
			estimator=cell.estimator.value,
		),
		varying=lambda cell: cell.sigma_ev,
		tolerance=tolerances.sigma_ev_invariance,
	)


def check_null(cells: list[CellResult], tolerances: ClaimTolerances) -> list[ClaimOutcome]:
	"""σ_εν = 0 单元：ccf_decay 的符号不稳定比例 ≥ 阈值

	互周期图只看 |I_xy|，对 σ_εν = 0 不敏感，这些单元输出 SKIP。
	"""
	threshold = tolerances.null_sign_instability
	outcomes = []
	for cell in cells:
		if cell.sigma_ev != 0:
			continue
		unstable = cell.failures.get(SignInstabilityError.__name__, 0) / cell.replicas
		if cell.estimator == HurstMethod.CCF_DECAY:
			outcomes.append(
				_check('null', _cell_label(cell), unstable, threshold, threshold, unstable >= threshold)
			)
		else:
			outcomes.append(_skip('null', _cell_label(cell), cell.mean, 0.5, threshold))
	return outcomes


def _same(first: float, second: float, tolerance: float) -> bool:
	if math.isnan(first) or math.isnan(second):
		return math.isnan(first) and math.isnan(second)
	return abs(first - second) <= tolerance


def check_integrity(cells: list[CellResult], tolerances: ClaimTolerances) -> list[ClaimOutcome]:
	"""每个单元：副本数、成功/失败计数一致，均值和标准差可由副本值重算"""
	tolerance = tolerances.integrity
	outcomes = []
	for cell in cells:
		failed = sum(1 for value in cell.values if math.isnan(value))
		counts_ok = (
			len(cell.values) == cell.replicas
			and cell.n_ok + cell.n_failed == cell.replicas
			and failed == cell.n_failed
			and sum(cell.failures.values()) == cell.n_failed
		)
		mean, std = summarize(cell.values)
		stats_ok = _same(mean, cell.mean, tolerance) and _same(std, cell.std, tolerance)
		deviation = 0.0
		if not (math.isnan(mean) or math.isnan(cell.mean)):
			deviation = max(abs(mean - cell.mean), abs(std - cell.std))
		if not counts_ok:
			deviation = math.inf
		outcomes.append(
			_check(
				'integrity', _cell_label(cell), deviation, 0.0, tolerance, counts_ok and stats_ok
			)
		)
	return outcomes


def verify_claims(
	result: SweepResult, tolerances: ClaimTolerances | None = None
) -> ClaimSummary:
	"""对扫描结果逐条检查断言

	Args:
		result: 扫描结果，至少一个单元
		tolerances: 容差，None 使用默认值

	Returns:
		ClaimSummary，passed 为 False 表示至少一条 FAIL
	"""
	tolerances = tolerances or ClaimTolerances()
	cells = result.cells
	outcomes = [
		*check_integrity(cells, tolerances),
		*check_theory(cells, tolerances),
		*check_theta_invariance(cells, tolerances),
		*check_sigma_ev_invariance(cells, tolerances),
		*check_null(cells, tolerances),
	]
	summary = ClaimSummary(outcomes=outcomes)
	logger.info(
		f'Verified {len(outcomes)} claims: {summary.count(ClaimStatus.PASS)} passed, '
		f'{summary.count(ClaimStatus.FAIL)} failed, {summary.count(ClaimStatus.SKIP)} skipped'
	)
	return summary
