"""
Hurst 估计模块

H / d / γ 换算、理论 H_xy，以及滞后域（互相关衰减）和频域（互周期图）两种估计器。
"""

from arfima_xcorr.estimation.base import (
	BaseHurstEstimator,
	HurstEstimate,
	HurstMethod,
	LagSide,
	fit_log_log,
	get_estimator_class,
	register_estimator,
	registered_methods,
)
from arfima_xcorr.estimation.ccf_decay import (
	CcfDecayEstimator,
	default_ccf_window,
	estimate_hxy_ccf_decay,
	log_spaced_lags,
)
from arfima_xcorr.estimation.periodogram import (
	CrossPeriodogramEstimator,
	cross_periodogram,
	default_bandwidth,
	estimate_hxy_cross_periodogram,
)
from arfima_xcorr.estimation.relations import (
	HurstRelation,
	combine_hurst,
	hurst_from_gamma,
	theoretical_hxy,
	theoretical_hxy_for,
)

__all__: list[str] = [
	'BaseHurstEstimator',
	'CcfDecayEstimator',
	'CrossPeriodogramEstimator',
	'HurstEstimate',
	'HurstMethod',
	'HurstRelation',
	'LagSide',
	'combine_hurst',
	'cross_periodogram',
	'default_bandwidth',
	'default_ccf_window',
	'estimate_hxy_ccf_decay',
	'estimate_hxy_cross_periodogram',
	'fit_log_log',
	'get_estimator_class',
	'hurst_from_gamma',
	'log_spaced_lags',
	'register_estimator',
	'registered_methods',
	'theoretical_hxy',
	'theoretical_hxy_for',
]
