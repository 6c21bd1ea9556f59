"""
命令行入口

arfima-xcorr <COMMAND> [options]，子命令见 build_registry()。
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from arfima_xcorr import __version__
from arfima_xcorr.cache import configure_weight_cache
from arfima_xcorr.commands import (
	CommandRegistry,
	EstimateCommand,
	SimulateCommand,
	SpectrumCommand,
	SweepCommand,
	VerifyCommand,
	XcorrCommand,
)
from arfima_xcorr.config import HarnessConfig, LogLevel, OutputFormat
from arfima_xcorr.errors import ArtifactIOError, CrossMemoryError

logger = logging.getLogger(__name__)

# 参数、数据或文件错误时的退出码；verify 断言失败返回 1
EXIT_ERROR = 2

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def build_registry() -> CommandRegistry:
	"""注册内置子命令"""
	registry = CommandRegistry()
	registry.register(SimulateCommand())
	registry.register(XcorrCommand())
	registry.register(SpectrumCommand())
	registry.register(EstimateCommand())
	registry.register(SweepCommand())
	registry.register(VerifyCommand())
	return registry


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
	"""顶层解析器：全局选项 + 每个子命令的子解析器"""
	parser = argparse.ArgumentParser(
		prog='arfima-xcorr',
		description='ARFIMA / AR(1) 过程对的互相关分析与双变量 Hurst 指数验证',
	)
	parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
	parser.add_argument(
		'--log-level',
		choices=[level.value for level in LogLevel],
		default=LogLevel.INFO.value,
		help='日志级别（默认 INFO）',
	)
	parser.add_argument('--debug', action='store_true', help='调试模式（日志级别 DEBUG）')
	parser.add_argument(
		'--format',
		dest='output_format',
		choices=[output.value for output in OutputFormat],
		default=OutputFormat.PLAIN.value,
		help='终端摘要格式（结果文件总是 CSV）',
	)
	registry.attach(parser)
	return parser


def configure_logging(level: LogLevel) -> None:
	"""配置根日志记录器，日志写到标准错误"""
	logging.basicConfig(
		level=getattr(logging, level.value), format=LOG_FORMAT, stream=sys.stderr, force=True
	)


def main(argv: Sequence[str] | None = None) -> int:
	"""命令行主函数

	Args:
		argv: 命令行参数，None 使用 sys.argv[1:]

	Returns:
		退出码：0 成功，1 verify 断言失败或估计全部失败，2 参数/数据/文件错误
	"""
	registry = build_registry()
	args = build_parser(registry).parse_args(argv)
	config = HarnessConfig(
		debug=args.debug,
		log_level=LogLevel(args.log_level),
		output_format=OutputFormat(args.output_format),
	)
	configure_logging(config.effective_log_level)
	configure_weight_cache(config.cache.weight_cache_size)

	command = registry.get(args.command)
	logger.debug(f'Running command {command.name}')
	try:
		return command.execute(args, config)
	except (CrossMemoryError, ValidationError) as e:
		logger.error(f'{command.name}: {e}')
	except ArtifactIOError as e:
		logger.error(f'{command.name}: 文件读写失败: {e}')
	return EXIT_ERROR


if __name__ == '__main__':
	sys.exit(main())
