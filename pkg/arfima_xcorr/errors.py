"""
异常定义

计算相关的异常都派生自 ValueError，调用方可以继续按 ValueError 捕获；
结果文件读写失败为 OSError 的子类 ArtifactIOError。
"""


class CrossMemoryError(ValueError):
	"""arfima_xcorr 所有异常的基类"""


class InvalidSpecError(CrossMemoryError):
	"""新息、过程或模拟参数不合法"""


class DomainError(CrossMemoryError):
	"""参数超出解析公式或特殊函数的有效区域"""


class DegenerateInputError(CrossMemoryError):
	"""退化输入，例如方差为零的序列"""


class EstimationError(CrossMemoryError):
	"""Hurst 指数估计失败的基类"""


class SignInstabilityError(EstimationError):
	"""窗口内互相关符号不一致，尾部被噪声主导"""


class InsufficientPointsError(EstimationError):
	"""可用于回归的点少于 3 个"""


class ArtifactIOError(OSError):
	"""结果文件读写失败，消息中包含文件路径"""
