"""
simulate 子命令
"""

import argparse
import sys
from pathlib import Path

from arfima_xcorr.commands.base import (
	BaseCommand,
	add_estimation_arguments,
	add_process_arguments,
	add_simulation_arguments,
	estimation_config_from_args,
	innovation_spec_from_args,
	log_run_statistics,
	simulation_config_from_args,
)
from arfima_xcorr.config import HarnessConfig
from arfima_xcorr.harness.single import RunConfig, run_single
from arfima_xcorr.performance import PerformanceMonitor


class SimulateCommand(BaseCommand):
	"""模拟一对序列并写出全部单次运行结果

	输出目录中包含 series.csv（及 .meta）、ccf.csv、exact.csv、
	asymptotic.csv（参数在渐近区域内时）、estimates.csv 和 report.json。
	"""

	name = 'simulate'
	description = '模拟一对序列，写出序列、样本与解析互相关、两种 H_xy 估计和报告'

	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		add_process_arguments(parser)
		add_simulation_arguments(parser)
		add_estimation_arguments(parser)
		parser.add_argument('--max-lag', type=int, help='互相关曲线的最大滞后')
		parser.add_argument('--out', type=Path, help='输出目录（默认 results）')

	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		run_config = RunConfig(
			pair=args.pair,
			d1=args.d1,
			d2=args.d2,
			theta=args.theta,
			innovations=innovation_spec_from_args(args),
			simulation=simulation_config_from_args(args, config),
			max_lag=args.max_lag,
			estimation=estimation_config_from_args(args, config),
			output_dir=args.out or config.output_dir,
		)
		monitor = PerformanceMonitor(enabled=config.performance.monitoring_enabled)
		report = run_single(run_config, monitor)
		sys.stdout.write(self.get_formatter(config).format_report(report) + '\n')
		log_run_statistics(monitor, config)
		return 0
