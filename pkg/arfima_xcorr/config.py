"""
实验框架配置管理

pydantic 配置树（日志、模拟默认值、估计参数、验证容差、性能监控、缓存），
以及扁平 key = value 配置文件的解析。
"""

import logging
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field, model_validator

from arfima_xcorr.errors import InvalidSpecError
from arfima_xcorr.estimation.base import HurstMethod, LagSide
from arfima_xcorr.processes.types import UINT64_MAX

logger = logging.getLogger(__name__)


class LogLevel(str, Enum):
	"""日志级别"""

	DEBUG = 'DEBUG'
	INFO = 'INFO'
	WARNING = 'WARNING'
	ERROR = 'ERROR'
	CRITICAL = 'CRITICAL'


class OutputFormat(str, Enum):
	"""终端摘要的输出格式"""

	PLAIN = 'plain'
	JSON = 'json'
	CSV = 'csv'


class SimulationDefaults(BaseModel):
	"""模拟默认值"""

	n: int = Field(default=2**16, description='序列长度 N', gt=0)
	burn_in: int | None = Field(
		default=None, description='预热长度 M，None 表示 max(N, 2¹⁴)', gt=0
	)
	base_seed: int = Field(default=0, description='基础随机种子', ge=0, le=UINT64_MAX)


class EstimationConfig(BaseModel):
	"""Hurst 估计参数"""

	methods: list[HurstMethod] = Field(
		default_factory=lambda: list(HurstMethod), description='启用的估计方法'
	)
	ccf_window: tuple[int, int] | None = Field(
		default=None, description='互相关衰减的滞后窗口 |n|，None 表示 [10, min(N/50, 1000)]'
	)
	ccf_log_points: int = Field(default=20, description='窗口内的对数等距滞后数', ge=3)
	ccf_side: LagSide = Field(default=LagSide.AUTO, description='互相关衰减使用的滞后一侧')
	ccf_significance: float = Field(
		default=3.0,
		description='滞后 0 互相关相对独立假设标准误的 z 值下限，0 表示不检查',
		ge=0.0,
	)
	sign_threshold: float = Field(
		default=0.9, description='窗口内同号比例下限', gt=0.5, le=1.0
	)
	periodogram_m: int | None = Field(
		default=None, description='互周期图的频率数，None 表示 ⌊N^exponent⌋', ge=3
	)
	bandwidth_exponent: float = Field(
		default=0.5, description='互周期图带宽指数', gt=0.0, lt=1.0
	)
	min_success_fraction: float = Field(
		default=0.8, description='单元可与理论比较所需的成功比例', gt=0.0, le=1.0
	)

	@model_validator(mode='after')
	def check_window(self) -> 'EstimationConfig':
		"""窗口为正且下界小于上界"""
		if self.ccf_window is not None:
			lower, upper = self.ccf_window
			if not 0 < lower < upper:
				raise ValueError(f'ccf_window 必须满足 0 < lower < upper: {self.ccf_window}')
		return self


class ClaimTolerances(BaseModel):
	"""verify 各项断言的容差"""

	theory_cross_periodogram: float = Field(default=0.05, gt=0.0)
	theory_ccf_decay: float = Field(default=0.10, gt=0.0)
	theta_invariance: float = Field(default=0.05, gt=0.0)
	sigma_ev_invariance: float = Field(default=0.05, gt=0.0)
	null_sign_instability: float = Field(
		default=0.9, description='σ_εν = 0 时符号不稳定的最低比例', gt=0.0, le=1.0
	)
	integrity: float = Field(default=1e-12, description='均值与标准差重算的容差', gt=0.0)

	def theory_tolerance(self, method: HurstMethod) -> float:
		"""按估计方法取理论值比较的容差"""
		if method == HurstMethod.CCF_DECAY:
			return self.theory_ccf_decay
		return self.theory_cross_periodogram


class PerformanceConfig(BaseModel):
	"""性能监控配置"""

	monitoring_enabled: bool = Field(default=True, description='是否启用性能监控')
	slow_operation_threshold: float = Field(
		default=1.0, description='慢操作阈值（秒）', ge=0.0
	)
	report_limit: int = Field(default=5, description='结束时报告的慢操作数', ge=0)


class CacheConfig(BaseModel):
	"""缓存配置"""

	weight_cache_size: int = Field(default=32, description='MA 权重缓存条目数', ge=1)


class HarnessConfig(BaseModel):
	"""实验框架配置"""

	debug: bool = Field(default=False, description='是否启用调试模式')
	log_level: LogLevel = Field(default=LogLevel.INFO, description='日志级别')
	jobs: int = Field(default=1, description='并行进程数', ge=1)
	output_format: OutputFormat = Field(default=OutputFormat.PLAIN, description='终端摘要格式')
	output_dir: Path = Field(default=Path('results'), description='输出目录')

	simulation: SimulationDefaults = Field(default_factory=SimulationDefaults)
	estimation: EstimationConfig = Field(default_factory=EstimationConfig)
	tolerances: ClaimTolerances = Field(default_factory=ClaimTolerances)
	performance: PerformanceConfig = Field(default_factory=PerformanceConfig)
	cache: CacheConfig = Field(default_factory=CacheConfig)

	@property
	def effective_log_level(self) -> LogLevel:
		"""debug 模式下强制为 DEBUG"""
		return LogLevel.DEBUG if self.debug else self.log_level

	def validate_config(self, replicas: int | None = None) -> list[str]:
		"""验证配置并返回警告列表

		Args:
			replicas: 本次运行的副本数，用于检查并行度

		Returns:
			配置警告列表
		"""
		warnings = []
		n = self.simulation.n

		if n // 50 <= 10 and self.estimation.ccf_window is None:
			warnings.append(
				f'N={n} is too short for the default CCF window [10, N/50]; '
				'ccf_decay will fail'
			)

		if self.estimation.ccf_window is not None:
			upper = self.estimation.ccf_window[1]
			if 4 * upper >= n:
				warnings.append(f'CCF window upper bound {upper} must stay below N/4={n / 4}')

		if self.estimation.periodogram_m is not None and self.estimation.periodogram_m > n // 2:
			warnings.append(
				f'periodogram m={self.estimation.periodogram_m} exceeds N/2={n // 2}'
			)

		if replicas is not None and self.jobs > replicas:
			warnings.append(f'jobs={self.jobs} exceeds replicas={replicas}')

		if not self.estimation.methods:
			warnings.append('No estimation method enabled')

		return warnings


def normalize_key(key: str) -> str:
	"""键名不区分大小写，'-' 视为 '_'"""
	return key.strip().lower().replace('-', '_')


def split_list(value: str) -> list[str]:
	"""把逗号分隔的值拆成列表，忽略空项"""
	return [item.strip() for item in value.split(',') if item.strip()]


def parse_key_value_lines(
	lines: list[str],
	source: str = '<string>',
	allowed_keys: set[str] | None = None,
) -> dict[str, str]:
	"""解析 key = value 文本

	语法：空行、以 '#' 开头的注释行、或 key = value。值原样保留（去掉首尾空白），
	列表值由调用方用 split_list 拆分。

	Args:
		lines: 文本行
		source: 出错时报告的来源（通常是文件路径）
		allowed_keys: 允许的键（已规范化），None 表示不限制

	Returns:
		规范化键到值的有序字典

	Raises:
		InvalidSpecError: 行格式错误、键未知或重复
	"""
	records: dict[str, str] = {}
	for number, raw in enumerate(lines, start=1):
		line = raw.strip()
		if not line or line.startswith('#'):
			continue

		key, separator, value = line.partition('=')
		if not separator:
			raise InvalidSpecError(f'{source}:{number}: 缺少 "=": {line!r}')

		name = normalize_key(key)
		if not name:
			raise InvalidSpecError(f'{source}:{number}: 键名为空')
		if allowed_keys is not None and name not in allowed_keys:
			raise InvalidSpecError(f'{source}:{number}: 未知的键 "{name}"')
		if name in records:
			raise InvalidSpecError(f'{source}:{number}: 键 "{name}" 重复')

		records[name] = value.strip()

	return records


def load_key_value_file(
	path: Path | str, allowed_keys: set[str] | None = None
) -> dict[str, str]:
	"""读取 key = value 配置文件

	Args:
		path: 文件路径
		allowed_keys: 允许的键

	Returns:
		规范化键到值的字典

	Raises:
		OSError: 文件无法读取
		InvalidSpecError: 内容不合法
	"""
	file_path = Path(path)
	text = file_path.read_text(encoding='utf-8')
	logger.debug(f'Loaded key-value file {file_path}')
	return parse_key_value_lines(text.splitlines(), str(file_path), allowed_keys)


def format_key_value_lines(records: dict[str, str]) -> str:
	"""把记录写成 key = value 文本，顺序与字典一致"""
	return ''.join(f'{key} = {value}\n' for key, value in records.items())
