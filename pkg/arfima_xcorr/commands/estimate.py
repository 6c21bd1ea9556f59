"""
estimate 子命令
"""

import argparse
import logging
from pathlib import Path

from arfima_xcorr.commands.base import (
	BaseCommand,
	add_estimation_arguments,
	estimation_config_from_args,
	write_output,
)
from arfima_xcorr.config import HarnessConfig
from arfima_xcorr.estimation.base import HurstMethod, LagSide
from arfima_xcorr.formatters import CsvFormatter
from arfima_xcorr.harness.io import read_series_pair
from arfima_xcorr.harness.single import estimate_all

logger = logging.getLogger(__name__)


class EstimateCommand(BaseCommand):
	"""读取序列 CSV，写出每个估计器的 HurstEstimate

	失败的估计器只记录警告；全部失败时退出码为 1。
	"""

	name = 'estimate'
	description = '读取序列对 CSV，用 ccf_decay 和 cross_periodogram 估计 H_xy'

	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		parser.add_argument('series', type=Path, help='序列对 CSV（列 x,y）')
		add_estimation_arguments(parser)
		parser.add_argument('--out', type=Path, help='输出 CSV（默认标准输出）')

	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		pair = read_series_pair(args.series)
		estimation = estimation_config_from_args(args, config)
		if (
			pair.meta is None
			and estimation.ccf_side == LagSide.AUTO
			and HurstMethod.CCF_DECAY in estimation.methods
		):
			logger.warning(
				f'No metadata sidecar for {args.series}; ccf_decay picks the lag side '
				'with the larger |ρ̂|, pass --side to fix it'
			)
		outcomes = estimate_all(pair, estimation.methods, estimation)
		estimates = [outcome.estimate for outcome in outcomes if outcome.estimate is not None]
		write_output(CsvFormatter().format_estimates(estimates), args.out)
		if not estimates:
			logger.error(f'All estimators failed for {args.series}')
			return 1
		return 0
