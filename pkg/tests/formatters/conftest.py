"""
格式化器测试的共享 fixtures
"""

import pytest

from arfima_xcorr.analysis.curves import CrossCorrelationCurve, SpectrumPoint
from arfima_xcorr.estimation.base import HurstEstimate, HurstMethod
from arfima_xcorr.harness.claims import ClaimOutcome, ClaimStatus, ClaimSummary


@pytest.fixture
def sample_curve() -> CrossCorrelationCurve:
	"""三个滞后的样本曲线"""
	return CrossCorrelationCurve(lags=[-1, 0, 1], values=[0.25, 0.5, 0.125], kind='sample')


@pytest.fixture
def sample_spectrum() -> list[SpectrumPoint]:
	"""两个频率的互谱"""
	return [
		SpectrumPoint(frequency=0.5, value=complex(1.5, -0.25)),
		SpectrumPoint(frequency=1.0, value=complex(0.75, 0.0)),
	]


@pytest.fixture
def sample_estimate() -> HurstEstimate:
	"""互相关衰减估计"""
	return HurstEstimate(
		h_xy=0.8,
		method=HurstMethod.CCF_DECAY,
		window=(10, 100),
		slope=-0.4,
		intercept=-1.0,
		slope_stderr=0.02,
		n_points=20,
	)


@pytest.fixture
def sample_claims() -> ClaimSummary:
	"""一条通过、一条失败的断言"""
	return ClaimSummary(
		outcomes=[
			ClaimOutcome(
				claim='theory',
				group='cell=0,estimator=ccf_decay',
				status=ClaimStatus.PASS,
				measured=0.81,
				expected=0.8,
				tolerance=0.1,
			),
			ClaimOutcome(
				claim='theta',
				group='d1=0.4,sigma_ev=0.5,estimator=ccf_decay',
				status=ClaimStatus.FAIL,
				measured=0.125,
				expected=0.0,
				tolerance=0.05,
			),
		]
	)
