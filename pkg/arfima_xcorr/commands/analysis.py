"""
xcorr 与 spectrum 子命令

两者都输出 CSV：写到 --out 指定的文件，未指定时写到标准输出。
"""

import argparse
import logging
from pathlib import Path

import numpy as np

from arfima_xcorr.analysis.sample import sample_cross_correlation
from arfima_xcorr.analysis.spectrum import spectrum_curve
from arfima_xcorr.commands.base import (
	BaseCommand,
	add_process_arguments,
	innovation_spec_from_args,
	write_output,
)
from arfima_xcorr.config import HarnessConfig
from arfima_xcorr.errors import InvalidSpecError
from arfima_xcorr.formatters import CsvFormatter
from arfima_xcorr.harness.io import read_series_pair
from arfima_xcorr.harness.single import FALLBACK_MAX_LAG
from arfima_xcorr.processes.types import PairKind

logger = logging.getLogger(__name__)

DEFAULT_SPECTRUM_POINTS = 256


def spectrum_grid(points: int) -> np.ndarray:
	"""(0, π] 上的等距网格 λ_j = πj/points，j = 1..points"""
	return np.pi * np.arange(1, points + 1) / points


class XcorrCommand(BaseCommand):
	"""读取序列 CSV，写出样本互相关"""

	name = 'xcorr'
	description = '读取序列对 CSV，计算 -max_lag..max_lag 的样本互相关'

	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		parser.add_argument('series', type=Path, help='序列对 CSV（列 x,y）')
		parser.add_argument(
			'--max-lag', type=int, help=f'最大滞后（默认 min({FALLBACK_MAX_LAG}, (N-1)/4)）'
		)
		parser.add_argument('--out', type=Path, help='输出 CSV（默认标准输出）')

	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		pair = read_series_pair(args.series)
		max_lag = args.max_lag or max(1, min(FALLBACK_MAX_LAG, (len(pair) - 1) // 4))
		curve = sample_cross_correlation(pair, max_lag)
		write_output(CsvFormatter().format_curve(curve), args.out)
		return 0


class SpectrumCommand(BaseCommand):
	"""在 (0, π] 的等距网格上写出解析互谱"""

	name = 'spectrum'
	description = '在 (0, π] 的等距频率网格上计算解析互谱 f_xy(λ)'

	def add_arguments(self, parser: argparse.ArgumentParser) -> None:
		add_process_arguments(parser)
		parser.add_argument(
			'--points',
			type=int,
			default=DEFAULT_SPECTRUM_POINTS,
			help=f'频率点数（默认 {DEFAULT_SPECTRUM_POINTS}）',
		)
		parser.add_argument('--out', type=Path, help='输出 CSV（默认标准输出）')

	def execute(self, args: argparse.Namespace, config: HarnessConfig) -> int:
		if args.points < 1:
			raise InvalidSpecError(f'--points 必须为正: {args.points}')
		points = spectrum_curve(
			PairKind(args.pair),
			spectrum_grid(args.points),
			innovation_spec_from_args(args),
			args.d1,
			d2=args.d2,
			theta=args.theta,
		)
		logger.debug(f'Evaluated cross-spectrum at {len(points)} frequencies')
		write_output(CsvFormatter().format_spectrum(points), args.out)
		return 0
