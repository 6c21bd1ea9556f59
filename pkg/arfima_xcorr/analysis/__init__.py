"""
互相关分析模块

精确（截断求和）、渐近和样本互相关，互谱密度，以及闭式所需的上不完全 Gamma 函数。
"""

from arfima_xcorr.analysis.curves import (
	AsymptoticConstants,
	CorrelationKind,
	CrossCorrelationCurve,
	ExactCorrelation,
	SpectrumPoint,
)
from arfima_xcorr.analysis.exact import (
	arfima_autocorrelation,
	asymptotic_constants,
	asymptotic_cross_correlation_arfima,
	asymptotic_cross_correlation_arfima_ar,
	closed_form_cross_correlation_arfima_ar,
	default_truncation,
	exact_cross_correlation_arfima,
	exact_cross_correlation_arfima_ar,
	exact_cross_correlation_curve_arfima,
	exact_cross_correlation_curve_arfima_ar,
	process_std,
)
from arfima_xcorr.analysis.sample import null_correlation_stderr, sample_cross_correlation
from arfima_xcorr.analysis.special import (
	log_upper_incomplete_gamma,
	upper_incomplete_gamma,
)
from arfima_xcorr.analysis.spectrum import (
	cross_spectrum_arfima,
	cross_spectrum_arfima_ar,
	inverse_fourier_cross_correlation,
	spectrum_curve,
)

__all__: list[str] = [
	'AsymptoticConstants',
	'CorrelationKind',
	'CrossCorrelationCurve',
	'ExactCorrelation',
	'SpectrumPoint',
	'arfima_autocorrelation',
	'asymptotic_constants',
	'asymptotic_cross_correlation_arfima',
	'asymptotic_cross_correlation_arfima_ar',
	'closed_form_cross_correlation_arfima_ar',
	'cross_spectrum_arfima',
	'cross_spectrum_arfima_ar',
	'default_truncation',
	'exact_cross_correlation_arfima',
	'exact_cross_correlation_arfima_ar',
	'exact_cross_correlation_curve_arfima',
	'exact_cross_correlation_curve_arfima_ar',
	'inverse_fourier_cross_correlation',
	'log_upper_incomplete_gamma',
	'null_correlation_stderr',
	'process_std',
	'sample_cross_correlation',
	'spectrum_curve',
	'upper_incomplete_gamma',
]
