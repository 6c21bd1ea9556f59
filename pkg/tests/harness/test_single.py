"""
测试单次运行
"""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from arfima_xcorr.analysis.curves import CorrelationKind
from arfima_xcorr.config import EstimationConfig
from arfima_xcorr.estimation.base import HurstMethod
from arfima_xcorr.harness.io import read_csv_rows, read_series_pair
from arfima_xcorr.harness.single import (
	ASYMPTOTIC_FILE,
	CCF_FILE,
	ESTIMATES_FILE,
	EXACT_FILE,
	REPORT_FILE,
	SERIES_FILE,
	RunConfig,
	asymptotic_curve_for,
	run_single,
)
from arfima_xcorr.performance import PerformanceMonitor
from arfima_xcorr.processes.types import InnovationSpec, PairKind, SimulationConfig


def run_config(output_dir: Path, **overrides: object) -> RunConfig:
	data: dict[str, object] = {
		'd1': 0.4,
		'd2': 0.2,
		'innovations': InnovationSpec(sigma_ev=0.5),
		'simulation': SimulationConfig(length=2**12, burn_in=2**12, seed=99),
		'max_lag': 40,
		'output_dir': output_dir,
	}
	data.update(overrides)
	return RunConfig.model_validate(data)


class TestRunConfig:
	"""测试 RunConfig 类"""

	def test_requires_second_parameter(self, tmp_path: Path) -> None:
		"""测试 arfima_arfima 需要 d2，arfima_ar 需要 θ"""
		with pytest.raises(ValidationError):
			run_config(tmp_path, d2=None)
		with pytest.raises(ValidationError):
			run_config(tmp_path, pair=PairKind.ARFIMA_AR)

	def test_meta_drops_unused_parameter(self, tmp_path: Path) -> None:
		"""测试元数据只保留过程对用到的参数"""
		meta = run_config(tmp_path, pair=PairKind.ARFIMA_AR, theta=0.5).meta

		assert meta.d2 is None
		assert meta.theta == 0.5
		assert meta.seed == 99

	def test_effective_max_lag(self, tmp_path: Path) -> None:
		"""测试未指定 max_lag 时取估计窗口上界"""
		assert run_config(tmp_path, max_lag=None).effective_max_lag == 81
		custom = run_config(
			tmp_path, max_lag=None, estimation=EstimationConfig(ccf_window=(5, 30))
		)
		assert custom.effective_max_lag == 30


class TestRunSingle:
	"""测试 run_single"""

	def test_writes_files(self, tmp_path: Path) -> None:
		"""测试写出全部结果文件，报告中的理论值为 0.8"""
		report = run_single(run_config(tmp_path), PerformanceMonitor())

		for name in report.files:
			assert (tmp_path / name).exists()
		assert set(report.files) >= {
			SERIES_FILE,
			CCF_FILE,
			EXACT_FILE,
			ASYMPTOTIC_FILE,
			ESTIMATES_FILE,
			REPORT_FILE,
		}
		assert report.theory == pytest.approx(0.8)
		assert report.max_lag == 40
		assert len(read_csv_rows(tmp_path / CCF_FILE, ('lag', 'value', 'kind'))) == 81
		assert len(read_series_pair(tmp_path / SERIES_FILE)) == 2**12

		payload = json.loads((tmp_path / REPORT_FILE).read_text(encoding='utf-8'))
		assert payload['theory'] == pytest.approx(0.8)

	def test_periodogram_succeeds(self, tmp_path: Path) -> None:
		"""测试互周期图估计成功并写入 estimates.csv"""
		report = run_single(run_config(tmp_path), PerformanceMonitor())
		outcome = report.outcome(HurstMethod.CROSS_PERIODOGRAM)

		assert outcome is not None
		assert outcome.ok
		rows = read_csv_rows(tmp_path / ESTIMATES_FILE, ('method', 'H_xy'))
		assert 'cross_periodogram' in [row['method'] for row in rows]

	def test_deterministic(self, tmp_path: Path) -> None:
		"""测试相同配置两次运行产生逐字节相同的文件"""
		first = run_single(run_config(tmp_path / 'a'), PerformanceMonitor())
		run_single(run_config(tmp_path / 'b'), PerformanceMonitor())

		for name in first.files:
			assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()

	def test_null_run_records_failure(self, tmp_path: Path) -> None:
		"""测试独立白噪声时 ccf_decay 失败只被记录，不中断运行"""
		config = run_config(
			tmp_path,
			d1=0.0,
			d2=0.0,
			innovations=InnovationSpec(sigma_ev=0.0),
			max_lag=None,
		)
		report = run_single(config, PerformanceMonitor())
		outcome = report.outcome(HurstMethod.CCF_DECAY)

		assert outcome is not None
		assert not outcome.ok
		assert outcome.error == 'SignInstabilityError'
		assert ASYMPTOTIC_FILE not in report.files
		assert report.theory == pytest.approx(0.5)

	def test_ar_pair(self, tmp_path: Path) -> None:
		"""测试 ARFIMA/AR 对的渐近曲线只在负滞后"""
		config = run_config(tmp_path, pair=PairKind.ARFIMA_AR, theta=0.5, max_lag=20)
		report = run_single(config, PerformanceMonitor())
		curve = asymptotic_curve_for(report.meta, 20)

		assert curve is not None
		assert curve.kind == CorrelationKind.ASYMPTOTIC
		assert int(curve.lags[-1]) == -1
		assert report.theory == pytest.approx(0.7)

	def test_monitor(self, tmp_path: Path) -> None:
		"""测试记录各阶段耗时"""
		monitor = PerformanceMonitor()
		run_single(run_config(tmp_path), monitor)

		for name in ('simulate', 'sample_ccf', 'exact_curve', 'estimate'):
			assert monitor.timings[name].calls == 1
