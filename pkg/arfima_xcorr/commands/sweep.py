"""
sweep 与 verify 子命令
"""

import argparse
import logging
import sys
from pathlib import Path

from arfima_xcorr.commands.base import (
	BaseCommand,
	add_estimation_arguments,
	estimation_config_from_args,
	log_run_statistics,
	parse_float_list,
	write_output,
)
from arfima_xcorr.config import HarnessConfig
from arfima_xcorr.formatters import CsvFormatter
from arfima_xcorr.harness.claims import verify_claims
from arfima_xcorr.harness.io import read_sweep_result, write_sweep_result
from arfima_xcorr.harness.sweep import SweepConfig, run_sweep
from arfima_xcorr.performance import PerformanceMonitor
from arfima_xcorr.processes.types import PairKind

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_FILE = 'sweep.csv'


class SweepCommand(BaseCommand):
	"""运行 Monte Carlo 扫描

	网格来自 --config 指定的 key = value 文件，命令行给出的值优先。
	"""

	name = 'sweep'
	description = '在参数网格上运行 Monte Carlo 扫描，写出 SweepResult CSV'

	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		parser.add_argument('--config', type=Path, help='key = value 扫描配置文件')
		parser.add_argument('--pair', choices=[kind.value for kind in PairKind])
		parser.add_argument('--d1', type=parse_float_list, help='x 的 d 网格，如 0.1,0.4')
		parser.add_argument('--d2', type=parse_float_list, help='y 的 d 网格')
		parser.add_argument('--theta', type=parse_float_list, help='y 的 θ 网格')
		parser.add_argument('--sigma-ev', type=parse_float_list, help='σ_εν 网格')
		parser.add_argument('--sigma-e2', type=float, help='ε 的方差')
		parser.add_argument('--sigma-v2', type=float, help='ν 的方差')
		parser.add_argument('--n', type=int, help='序列长度 N')
		parser.add_argument('--burn-in', type=int, help='预热长度 M')
		parser.add_argument('--replicas', type=int, help='每个单元的副本数 R')
		parser.add_argument('--seed', type=int, help='基础种子')
		add_estimation_arguments(parser)
		parser.add_argument('--jobs', type=int, help='并行进程数')
		parser.add_argument('--out', type=Path, help='SweepResult CSV 路径')

	def load_sweep(self, args: argparse.Namespace) -> SweepConfig:
		"""合并配置文件与命令行参数"""
		overrides = {
			'pair': args.pair,
			'd1': args.d1,
			'd2': args.d2,
			'theta': args.theta,
			'sigma_ev': args.sigma_ev,
			'sigma_e2': args.sigma_e2,
			'sigma_v2': args.sigma_v2,
			'n': args.n,
			'burn_in': args.burn_in,
			'replicas': args.replicas,
			'base_seed': args.seed,
			'estimators': args.estimators,
			'output': args.out,
		}
		if args.config is not None:
			return SweepConfig.from_file(args.config, **overrides)
		return SweepConfig.from_records({}, **overrides)

	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		sweep = self.load_sweep(args)
		jobs = args.jobs or config.jobs
		estimation = estimation_config_from_args(args, config)
		effective = config.model_copy(
			update={
				'jobs': jobs,
				'estimation': estimation,
				'simulation': config.simulation.model_copy(update={'n': sweep.n}),
			}
		)
		for warning in effective.validate_config(replicas=sweep.replicas):
			logger.warning(warning)

		monitor = PerformanceMonitor(enabled=config.performance.monitoring_enabled)
		result = run_sweep(
			sweep,
			estimation=estimation,
			jobs=jobs,
			monitor=monitor,
		)
		output = sweep.output or config.output_dir / DEFAULT_SWEEP_FILE
		write_sweep_result(result, output)
		logger.info(f'Sweep result written to {output}')

		sys.stdout.write(self.get_formatter(config).format_sweep(result) + '\n')
		log_run_statistics(monitor, config)
		return 0


class VerifyCommand(BaseCommand):
	"""读取 SweepResult CSV，逐条检查断言

	任一断言为 FAIL 时退出码为 1。
	"""

	name = 'verify'
	description = '检查扫描结果：理论值、θ 与 σ_εν 不变性、零假设、数据完整性'

	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		parser.add_argument('result', type=Path, help='SweepResult CSV')
		parser.add_argument('--out', type=Path, help='另存断言结果 CSV')

	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		summary = verify_claims(read_sweep_result(args.result), config.tolerances)
		sys.stdout.write(self.get_formatter(config).format_claims(summary))
		if args.out is not None:
			write_output(CsvFormatter().format_claims(summary), args.out)
		return 0 if summary.passed else 1
