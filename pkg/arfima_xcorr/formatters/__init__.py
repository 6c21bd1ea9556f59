"""
输出格式化模块

提供多种格式化器，用于将序列、曲线、估计和扫描结果转换为不同格式的输出。
"""

from arfima_xcorr.formatters.base import BaseFormatter, format_float
from arfima_xcorr.formatters.csv import CsvFormatter
from arfima_xcorr.formatters.json import JsonFormatter
from arfima_xcorr.formatters.plain import PlainTextFormatter

__all__: list[str] = [
	'BaseFormatter',
	'CsvFormatter',
	'JsonFormatter',
	'PlainTextFormatter',
	'format_float',
]
