"""
ARFIMA Cross-Correlation

模拟由相关新息驱动的 ARFIMA / AR(1) 过程对，解析计算精确与渐近互相关、互谱，
从样本路径估计双变量 Hurst 指数 H_xy，并以 Monte Carlo 扫描验证
H_xy = (H_x + H_y)/2 与短记忆强度无关。
"""

__version__ = '1.0.0'
__license__ = 'MIT'

from arfima_xcorr.errors import (
	ArtifactIOError,
	CrossMemoryError,
	DegenerateInputError,
	DomainError,
	EstimationError,
	InsufficientPointsError,
	InvalidSpecError,
	SignInstabilityError,
)
from arfima_xcorr.processes.types import (
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	PairKind,
	SeriesPair,
)

__all__: list[str] = [
	'__version__',
	'ArCoefficient',
	'ArtifactIOError',
	'CrossMemoryError',
	'DegenerateInputError',
	'DomainError',
	'EstimationError',
	'FracDiffOrder',
	'InnovationSpec',
	'InsufficientPointsError',
	'InvalidSpecError',
	'PairKind',
	'SeriesPair',
	'SignInstabilityError',
]
