"""
相关高斯新息与种子拆分
"""

import numpy as np

from arfima_xcorr.errors import DomainError
from arfima_xcorr.processes.types import UINT64_MAX, InnovationSpec


def split_seed(base_seed: int, *keys: int) -> int:
	"""从基础种子派生子流种子

	使用 numpy SeedSequence，keys 作为 spawn_key，取生成状态的第一个 64 位字。
	同一 (base_seed, keys) 总是得到同一个种子，不同 keys 给出独立的子流，
	与调用顺序无关。

	Args:
		base_seed: 基础种子，0 ≤ base_seed < 2⁶⁴
		*keys: 非负整数键，例如 (cell, replica)

	Returns:
		64 位无符号种子
	"""
	if not 0 <= base_seed <= UINT64_MAX:
		raise DomainError(f'base_seed 超出 64 位无符号整数范围: {base_seed}')
	if any(key < 0 for key in keys):
		raise DomainError(f'种子键必须非负: {keys}')

	sequence = np.random.SeedSequence(entropy=base_seed, spawn_key=tuple(keys))
	return int(sequence.generate_state(1, dtype=np.uint64)[0])


def generate_innovations(
	spec: InnovationSpec, count: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
	"""生成 i.i.d. 二元高斯新息 (ε, ν)

	每一期的 (ε_t, ν_t) 由同一对标准正态变量经下三角因子 L 变换得到：
	ε = L₀₀·z₀，ν = L₁₀·z₀ + L₁₁·z₁。随机数生成器为 PCG64（numpy default_rng）。

	Args:
		spec: 新息二阶矩
		count: 期数
		seed: 随机种子

	Returns:
		(ε, ν) 两个长度为 count 的数组

	Raises:
		InvalidSpecError: σ_ε = 0 而 σ_εν ≠ 0
	"""
	if count <= 0:
		raise DomainError(f'count 必须为正整数: {count}')

	factor = spec.cholesky_factor()
	rng = np.random.default_rng(seed)
	normals = rng.standard_normal(size=(count, 2))

	eps = factor[0, 0] * normals[:, 0]
	nu = factor[1, 0] * normals[:, 0] + factor[1, 1] * normals[:, 1]
	return eps, nu
