"""
阶段耗时统计

记录模拟、分析与估计各阶段的耗时。耗时只进入日志，不写入任何结果文件。
"""

import logging
import time
from collections.abc import Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass
from types import MappingProxyType

logger = logging.getLogger(__name__)


@dataclass
class StageTiming:
	"""单个阶段的累计耗时（秒）"""

	calls: int = 0
	total: float = 0.0
	shortest: float = float('inf')
	longest: float = 0.0
	failures: int = 0

	@property
	def mean(self) -> float:
		return self.total / self.calls if self.calls else 0.0

	def add(self, duration: float, success: bool = True) -> None:
		self.calls += 1
		self.total += duration
		self.shortest = min(self.shortest, duration)
		self.longest = max(self.longest, duration)
		self.failures += 0 if success else 1


class PerformanceMonitor:
	"""按阶段名累计耗时

	并行运行时各工作进程只返回耗时，由主进程调用 record_operation() 汇总。
	enabled 为 False 时所有记录都被忽略。
	"""

	def __init__(self, enabled: bool = True) -> None:
		self.enabled = enabled
		self._timings: dict[str, StageTiming] = {}

	@property
	def timings(self) -> Mapping[str, StageTiming]:
		"""只读视图，键为阶段名"""
		return MappingProxyType(self._timings)

	def record_operation(self, stage: str, duration: float, success: bool = True) -> None:
		if self.enabled:
			self._timings.setdefault(stage, StageTiming()).add(duration, success)

	@contextmanager
	def measure(self, stage: str) -> Iterator[None]:
		"""记录 with 块的耗时，异常照常抛出并计为一次失败

		Example:
			>>> monitor = PerformanceMonitor()
			>>> with monitor.measure('simulate'):
			...     pair = simulate_pair(meta)
		"""
		start = time.perf_counter()
		success = False
		try:
			yield
			success = True
		finally:
			if not success:
				logger.debug(f'Stage {stage} raised after {time.perf_counter() - start:.3f}s')
			self.record_operation(stage, time.perf_counter() - start, success)

	def get_slow_operations(
		self, threshold: float = 1.0, limit: int = 10
	) -> list[tuple[str, StageTiming]]:
		"""平均耗时不低于 threshold 的阶段，按平均耗时降序取前 limit 个"""
		slow = [(name, timing) for name, timing in self._timings.items() if timing.mean >= threshold]
		return sorted(slow, key=lambda item: item[1].mean, reverse=True)[:limit]

	def log_summary(self, threshold: float = 1.0, limit: int = 5) -> None:
		"""以 INFO 级别输出各阶段耗时和慢阶段"""
		for name in sorted(self._timings):
			timing = self._timings[name]
			logger.info(
				f'{name}: calls={timing.calls}, total={timing.total:.3f}s, '
				f'avg={timing.mean:.4f}s, failures={timing.failures}'
			)
		for name, timing in self.get_slow_operations(threshold, limit):
			logger.info(f'Slow operation {name}: avg={timing.mean:.3f}s')


_global_monitor = PerformanceMonitor()


def get_global_monitor() -> PerformanceMonitor:
	"""库函数未传入监控器时使用的共享实例"""
	return _global_monitor
