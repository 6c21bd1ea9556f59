"""
Pytest 配置和共享 fixtures
"""

import math
from collections.abc import Callable

import pytest

from arfima_xcorr.cache import get_weight_cache
from arfima_xcorr.estimation.base import HurstMethod
from arfima_xcorr.harness.sweep import CellResult, SweepResult, summarize
from arfima_xcorr.processes.simulation import simulate_arfima_ar_pair, simulate_arfima_pair
from arfima_xcorr.processes.types import (
	InnovationSpec,
	PairKind,
	SeriesPair,
	SimulationConfig,
)

CellFactory = Callable[..., CellResult]


@pytest.fixture(autouse=True)
def clear_weight_cache() -> None:
	"""每个测试使用空的权重缓存"""
	get_weight_cache().clear()


@pytest.fixture
def innovation_spec() -> InnovationSpec:
	"""σ_ε² = σ_ν² = 1，σ_εν = 0.5"""
	return InnovationSpec(sigma_e2=1.0, sigma_v2=1.0, sigma_ev=0.5)


@pytest.fixture
def small_config() -> SimulationConfig:
	"""N = 2¹²，M = 2¹²，固定种子"""
	return SimulationConfig(length=2**12, burn_in=2**12, seed=20240601)


@pytest.fixture
def arfima_pair(innovation_spec: InnovationSpec, small_config: SimulationConfig) -> SeriesPair:
	"""d1 = 0.4，d2 = 0.2 的 ARFIMA 序列对"""
	return simulate_arfima_pair(0.4, 0.2, innovation_spec, small_config)


@pytest.fixture
def ar_pair(innovation_spec: InnovationSpec, small_config: SimulationConfig) -> SeriesPair:
	"""d1 = 0.4，θ = 0.5 的 ARFIMA/AR 序列对"""
	return simulate_arfima_ar_pair(0.4, 0.5, innovation_spec, small_config)


@pytest.fixture
def make_cell() -> CellFactory:
	"""按副本值构造一致的 CellResult"""

	def factory(
		values: list[float],
		cell: int = 0,
		pair: PairKind = PairKind.ARFIMA_ARFIMA,
		d1: float = 0.4,
		d2: float | None = 0.2,
		theta: float | None = None,
		sigma_ev: float = 0.5,
		estimator: HurstMethod = HurstMethod.CROSS_PERIODOGRAM,
		failures: dict[str, int] | None = None,
		theory: float | None = None,
	) -> CellResult:
		n_ok = sum(1 for value in values if not math.isnan(value))
		n_failed = len(values) - n_ok
		if failures is None:
			failures = {'EstimationError': n_failed} if n_failed else {}
		if theory is None:
			second = (d2 if d2 is not None else 0.0) + 0.5
			theory = (d1 + 0.5 + second) / 2.0
		mean, std = summarize(values)
		return CellResult(
			cell=cell,
			pair=pair,
			d1=d1,
			d2=d2,
			theta=theta,
			sigma_ev=sigma_ev,
			estimator=estimator,
			replicas=len(values),
			n_ok=n_ok,
			n_failed=n_failed,
			mean=mean,
			std=std,
			theory=theory,
			comparable=n_ok >= 0.8 * len(values),
			failures=failures,
			values=values,
		)

	return factory


@pytest.fixture
def sweep_result(make_cell: CellFactory) -> SweepResult:
	"""两个估计方法、一个 σ_εν = 0 零假设单元的小型扫描结果"""
	return SweepResult(
		cells=[
			make_cell([0.79, 0.81, 0.80, 0.82], cell=0),
			make_cell(
				[0.75, 0.85, math.nan, 0.80],
				cell=0,
				estimator=HurstMethod.CCF_DECAY,
				failures={'SignInstabilityError': 1},
			),
			make_cell([0.71, 0.69, 0.70, 0.70], cell=1, sigma_ev=0.0),
			make_cell(
				[math.nan, math.nan, math.nan, math.nan],
				cell=1,
				sigma_ev=0.0,
				estimator=HurstMethod.CCF_DECAY,
				failures={'SignInstabilityError': 4},
			),
		]
	)
