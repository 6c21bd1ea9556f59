"""
命令行子命令

每个子命令是一个 BaseCommand，由 CommandRegistry 注册。
"""

from arfima_xcorr.commands.analysis import SpectrumCommand, XcorrCommand
from arfima_xcorr.commands.base import BaseCommand, CommandRegistry
from arfima_xcorr.commands.estimate import EstimateCommand
from arfima_xcorr.commands.run import SimulateCommand
from arfima_xcorr.commands.sweep import SweepCommand, VerifyCommand

__all__: list[str] = [
	'BaseCommand',
	'CommandRegistry',
	'EstimateCommand',
	'SimulateCommand',
	'SpectrumCommand',
	'SweepCommand',
	'VerifyCommand',
	'XcorrCommand',
]
