"""
命令基类

所有子命令都应继承此基类并实现 add_arguments() 和 execute() 方法，
由 CommandRegistry 注册后挂到命令行解析器上。
"""

import argparse
import logging
import sys
from abc import ABC, abstractmethod
from pathlib import Path
from typing import ClassVar

from arfima_xcorr.cache import get_weight_cache
from arfima_xcorr.config import EstimationConfig, HarnessConfig, OutputFormat, split_list
from arfima_xcorr.estimation.base import HurstMethod, LagSide
from arfima_xcorr.formatters import (
	BaseFormatter,
	CsvFormatter,
	JsonFormatter,
	PlainTextFormatter,
)
from arfima_xcorr.harness.io import write_artifact
from arfima_xcorr.performance import PerformanceMonitor
from arfima_xcorr.processes.types import InnovationSpec, PairKind, SimulationConfig

logger = logging.getLogger(__name__)


def parse_window(text: str) -> tuple[int, int]:
	"""解析 '--window lo,hi'"""
	parts = split_list(text)
	try:
		lower, upper = (int(part) for part in parts)
	except ValueError as e:
		raise argparse.ArgumentTypeError(f'窗口格式应为 lo,hi，收到: {text!r}') from e
	return lower, upper


def parse_float_list(text: str) -> list[float]:
	"""解析逗号分隔的浮点数网格"""
	try:
		return [float(item) for item in split_list(text)]
	except ValueError as e:
		raise argparse.ArgumentTypeError(f'无法解析数值列表: {text!r}') from e


def parse_methods(text: str) -> list[HurstMethod]:
	"""解析逗号分隔的估计方法"""
	try:
		return [HurstMethod(item) for item in split_list(text)]
	except ValueError as e:
		choices = ', '.join(method.value for method in HurstMethod)
		raise argparse.ArgumentTypeError(f'未知的估计方法: {text!r}（可选: {choices}）') from e


def add_innovation_arguments(parser: argparse.ArgumentParser) -> None:
	"""--sigma-e2 / --sigma-v2"""
	parser.add_argument('--sigma-e2', type=float, default=1.0, help='ε 的方差 σ_ε²')
	parser.add_argument('--sigma-v2', type=float, default=1.0, help='ν 的方差 σ_ν²')


def add_process_arguments(parser: argparse.ArgumentParser) -> None:
	"""单个过程对的参数"""
	parser.add_argument(
		'--pair',
		choices=[kind.value for kind in PairKind],
		default=PairKind.ARFIMA_ARFIMA.value,
		help='过程对类型',
	)
	parser.add_argument('--d1', type=float, required=True, help='x 的分数差分阶数')
	parser.add_argument('--d2', type=float, help='y 的分数差分阶数（arfima_arfima）')
	parser.add_argument('--theta', type=float, help='y 的 AR(1) 系数（arfima_ar）')
	add_innovation_arguments(parser)
	parser.add_argument('--sigma-ev', type=float, default=0.5, help='新息协方差 σ_εν')


def add_simulation_arguments(parser: argparse.ArgumentParser) -> None:
	"""--n / --burn-in / --seed，未给出时取 HarnessConfig.simulation"""
	parser.add_argument('--n', type=int, help='序列长度 N')
	parser.add_argument('--burn-in', type=int, help='预热长度 M（默认 max(N, 2^14)）')
	parser.add_argument('--seed', type=int, help='随机种子')


def add_estimation_arguments(parser: argparse.ArgumentParser) -> None:
	"""--window / --side / --m / --estimators"""
	parser.add_argument(
		'--window', type=parse_window, help='ccf_decay 的滞后窗口 |n| 范围 lo,hi'
	)
	parser.add_argument(
		'--side',
		choices=[side.value for side in LagSide],
		help='ccf_decay 使用的滞后一侧（默认 auto）',
	)
	parser.add_argument('--m', type=int, help='cross_periodogram 的频率数')
	parser.add_argument(
		'--estimators',
		type=parse_methods,
		help='逗号分隔的估计方法（默认全部）',
	)


def innovation_spec_from_args(args: argparse.Namespace) -> InnovationSpec:
	return InnovationSpec(
		sigma_e2=args.sigma_e2, sigma_v2=args.sigma_v2, sigma_ev=args.sigma_ev
	)


def simulation_config_from_args(
	args: argparse.Namespace, config: HarnessConfig
) -> SimulationConfig:
	"""命令行优先，其余取配置默认值"""
	defaults = config.simulation
	return SimulationConfig(
		length=args.n if args.n is not None else defaults.n,
		burn_in=args.burn_in if args.burn_in is not None else defaults.burn_in,
		seed=args.seed if args.seed is not None else defaults.base_seed,
	)


def estimation_config_from_args(
	args: argparse.Namespace, config: HarnessConfig
) -> EstimationConfig:
	"""在配置的估计参数上覆盖命令行给出的值"""
	updates = {
		'ccf_window': args.window,
		'ccf_side': args.side,
		'periodogram_m': args.m,
		'methods': args.estimators,
	}
	updates = {key: value for key, value in updates.items() if value is not None}
	return EstimationConfig.model_validate(
		{**config.estimation.model_dump(), **updates}
	)


class BaseCommand(ABC):
	"""子命令抽象基类

	Attributes:
		name: 子命令名，必须唯一
		description: 子命令说明，显示在 --help 中
	"""

	name: ClassVar[str]
	description: ClassVar[str]

	def get_formatter(self, config: HarnessConfig) -> BaseFormatter:
		"""根据配置获取终端摘要的格式化器"""
		if config.output_format == OutputFormat.JSON:
			return JsonFormatter()
		if config.output_format == OutputFormat.CSV:
			return CsvFormatter()
		return PlainTextFormatter()

	@abstractmethod
	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		"""向子命令解析器添加参数"""
		...

	@abstractmethod
	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		"""执行子命令

		Args:
			args: 解析后的命令行参数
			config: 实验框架配置

		Returns:
			进程退出码，0 表示成功

		Raises:
			CrossMemoryError: 参数或数据不合法
			ArtifactIOError: 结果文件读写失败
		"""
		raise NotImplementedError('子类必须实现 execute() 方法')


class CommandRegistry:
	"""子命令注册表

	Attributes:
		commands: 按注册顺序排列的子命令
	"""

	def __init__(self) -> None:
		self.commands: dict[str, BaseCommand] = {}

	def register(self, command: BaseCommand) -> None:
		"""注册子命令

		Raises:
			TypeError: command 不是 BaseCommand 的实例
			ValueError: 子命令名重复
		"""
		if not isinstance(command, BaseCommand):
			raise TypeError(
				f'command 必须是 BaseCommand 的实例，收到: {type(command).__name__}'
			)
		if command.name in self.commands:
			raise ValueError(f'子命令名称重复: {command.name}')
		self.commands[command.name] = command
		logger.debug(f'Registered command {command.name}')

	def get(self, name: str) -> BaseCommand:
		"""按名称取子命令

		Raises:
			KeyError: 未注册
		"""
		try:
			return self.commands[name]
		except KeyError:
			raise KeyError(f'未注册的子命令: {name}') from None

	def attach(self, parser: argparse.ArgumentParser) -> None:
		"""为每个子命令创建子解析器"""
		subparsers = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')
		for command in self.commands.values():
			subparser = subparsers.add_parser(
				command.name, help=command.description, description=command.description
			)
			command.add_arguments(subparser)


def write_output(text: str, path: Path | None) -> None:
	"""写到文件，path 为 None 时写到标准输出"""
	if path is None:
		sys.stdout.write(text if text.endswith('\n') else text + '\n')
		return
	write_artifact(path, text)
	logger.info(f'Wrote {path}')


def log_run_statistics(monitor: PerformanceMonitor, config: HarnessConfig) -> None:
	"""输出各阶段耗时与 MA 权重缓存命中情况"""
	monitor.log_summary(
		config.performance.slow_operation_threshold, config.performance.report_limit
	)
	stats = get_weight_cache().get_stats()
	logger.info(
		f'Weight cache: size={stats["size"]}/{stats["max_size"]}, '
		f'hit_rate={stats["hit_rate"]:.2%}, evictions={stats["evictions"]}'
	)
