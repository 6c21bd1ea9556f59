"""
MA 权重缓存

Monte Carlo 扫描中同一组 (d, n_max) 的 MA(∞) 权重会被成百上千个副本重复使用，
这里提供线程安全的 LRU 缓存，缓存的数组均为只读。
"""

import logging
import threading
from collections import OrderedDict
from collections.abc import Callable, Hashable
from dataclasses import dataclass
from typing import Any

import numpy as np

logger = logging.getLogger(__name__)


@dataclass
class CacheStats:
	"""缓存统计信息"""

	hits: int = 0
	misses: int = 0
	evictions: int = 0
	total_sets: int = 0
	total_gets: int = 0

	@property
	def hit_rate(self) -> float:
		"""缓存命中率"""
		if self.total_gets == 0:
			return 0.0
		return self.hits / self.total_gets

	def reset(self) -> None:
		"""重置统计信息"""
		self.hits = 0
		self.misses = 0
		self.evictions = 0
		self.total_sets = 0
		self.total_gets = 0


class LRUCache:
	"""LRU (Least Recently Used) 缓存实现

	当缓存达到最大容量时，自动移除最久未使用的条目。所有操作都在锁内完成，
	可以在多个线程之间共享。

	Example:
		>>> cache = LRUCache(max_size=8)
		>>> cache.set(('arfima', 0.4, 1024), weights)
		>>> cached = cache.get(('arfima', 0.4, 1024))
	"""

	def __init__(self, max_size: int = 64) -> None:
		"""初始化 LRU 缓存

		Args:
			max_size: 最大缓存条目数
		"""
		if max_size <= 0:
			raise ValueError(f'max_size 必须大于 0: {max_size}')

		self.max_size = max_size
		self._cache: OrderedDict[Hashable, Any] = OrderedDict()
		self._stats = CacheStats()
		self._lock = threading.Lock()

	def get(self, key: Hashable) -> Any | None:
		"""获取缓存值

		Args:
			key: 缓存键

		Returns:
			缓存的值，不存在时返回 None
		"""
		with self._lock:
			self._stats.total_gets += 1
			if key not in self._cache:
				self._stats.misses += 1
				return None

			self._cache.move_to_end(key)
			self._stats.hits += 1
			return self._cache[key]

	def set(self, key: Hashable, value: Any) -> None:
		"""设置缓存值

		Args:
			key: 缓存键
			value: 要缓存的值
		"""
		with self._lock:
			if key in self._cache:
				self._cache[key] = value
				self._cache.move_to_end(key)
			else:
				while len(self._cache) >= self.max_size:
					evicted, _ = self._cache.popitem(last=False)
					self._stats.evictions += 1
					logger.debug(f'Evicted LRU cache entry: {evicted}')
				self._cache[key] = value
			self._stats.total_sets += 1

	def get_or_compute(self, key: Hashable, factory: Callable[[], Any]) -> Any:
		"""获取缓存值，不存在时调用 factory 计算并写入

		factory 在锁外执行，两个线程可能同时计算同一个键，结果相同，后写入者覆盖。

		Args:
			key: 缓存键
			factory: 无参计算函数

		Returns:
			缓存或新计算的值
		"""
		value = self.get(key)
		if value is not None:
			return value

		value = factory()
		self.set(key, value)
		return value

	def clear(self) -> None:
		"""清空所有缓存"""
		with self._lock:
			self._cache.clear()
			self._stats.reset()

	def get_stats(self) -> dict[str, Any]:
		"""获取缓存统计信息

		Returns:
			统计信息字典
		"""
		with self._lock:
			return {
				'hits': self._stats.hits,
				'misses': self._stats.misses,
				'hit_rate': self._stats.hit_rate,
				'evictions': self._stats.evictions,
				'total_sets': self._stats.total_sets,
				'total_gets': self._stats.total_gets,
				'size': len(self._cache),
				'max_size': self.max_size,
			}

	def __len__(self) -> int:
		"""返回当前缓存条目数量"""
		with self._lock:
			return len(self._cache)


class WeightCache:
	"""MA 权重向量缓存

	包装 LRUCache，只缓存只读的 numpy 数组。键中的 d 以 float 保存，
	同一 d 的不同 n_max 分别缓存。
	"""

	def __init__(self, max_size: int = 32) -> None:
		self.cache = LRUCache(max_size=max_size)

	def get_or_compute(
		self, kind: str, parameter: float, n_max: int, factory: Callable[[], np.ndarray]
	) -> np.ndarray:
		"""获取权重向量，不存在时计算并缓存

		Args:
			kind: 权重类型，例如 'arfima'
			parameter: 过程参数（d 或 θ）
			n_max: 最大阶数
			factory: 计算权重的无参函数

		Returns:
			只读权重数组
		"""
		key = (kind, float(parameter), int(n_max))

		def _compute() -> np.ndarray:
			weights = np.asarray(factory(), dtype=float)
			weights.setflags(write=False)
			return weights

		return self.cache.get_or_compute(key, _compute)

	def clear(self) -> None:
		"""清空缓存"""
		self.cache.clear()

	def get_stats(self) -> dict[str, Any]:
		"""获取缓存统计信息"""
		return self.cache.get_stats()


_global_weight_cache = WeightCache()


def get_weight_cache() -> WeightCache:
	"""获取全局权重缓存

	Returns:
		全局 WeightCache 实例
	"""
	return _global_weight_cache


def configure_weight_cache(max_size: int) -> WeightCache:
	"""按配置重建全局权重缓存

	Args:
		max_size: 最大条目数

	Returns:
		新的全局 WeightCache 实例
	"""
	global _global_weight_cache
	if max_size != _global_weight_cache.cache.max_size:
		_global_weight_cache.clear()
		_global_weight_cache = WeightCache(max_size=max_size)
	return _global_weight_cache
