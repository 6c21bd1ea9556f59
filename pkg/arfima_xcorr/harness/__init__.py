"""
实验框架

单次运行、Monte Carlo 扫描、断言验证和结果文件读写。
"""

from arfima_xcorr.harness.claims import (
	ClaimOutcome,
	ClaimStatus,
	ClaimSummary,
	verify_claims,
)
from arfima_xcorr.harness.io import (
	read_series_pair,
	read_sweep_result,
	write_artifact,
	write_series_pair,
	write_sweep_result,
)
from arfima_xcorr.harness.single import (
	EstimatorOutcome,
	RunConfig,
	RunReport,
	run_single,
)
from arfima_xcorr.harness.sweep import (
	CellResult,
	SweepCell,
	SweepConfig,
	SweepResult,
	run_sweep,
)

__all__: list[str] = [
	'CellResult',
	'ClaimOutcome',
	'ClaimStatus',
	'ClaimSummary',
	'EstimatorOutcome',
	'RunConfig',
	'RunReport',
	'SweepCell',
	'SweepConfig',
	'SweepResult',
	'read_series_pair',
	'read_sweep_result',
	'run_single',
	'run_sweep',
	'verify_claims',
	'write_artifact',
	'write_series_pair',
	'write_sweep_result',
]
