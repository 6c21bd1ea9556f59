"""
过程模块

ARFIMA(0,d,0) 与 AR(1) 过程的类型、MA 权重、相关新息和样本路径模拟。
"""

from arfima_xcorr.processes.innovations import generate_innovations, split_seed
from arfima_xcorr.processes.simulation import (
	moving_average,
	simulate_arfima_ar_pair,
	simulate_arfima_pair,
	simulate_pair,
)
from arfima_xcorr.processes.types import (
	ArCoefficient,
	FracDiffOrder,
	InnovationSpec,
	PairKind,
	ProcessSpec,
	SeriesMeta,
	SeriesPair,
	SimulationConfig,
	default_burn_in,
)
from arfima_xcorr.processes.weights import (
	arfima_weight_asymptote,
	arfima_weights,
	arfima_weights_gamma,
)

__all__: list[str] = [
	'ArCoefficient',
	'FracDiffOrder',
	'InnovationSpec',
	'PairKind',
	'ProcessSpec',
	'SeriesMeta',
	'SeriesPair',
	'SimulationConfig',
	'arfima_weight_asymptote',
	'arfima_weights',
	'arfima_weights_gamma',
	'default_burn_in',
	'generate_innovations',
	'moving_average',
	'simulate_arfima_ar_pair',
	'simulate_arfima_pair',
	'simulate_pair',
	'split_seed',
]
