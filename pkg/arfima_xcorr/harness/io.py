"""
结果文件读写

所有写入都经过 write_artifact()，读写失败统一转换为带路径的 ArtifactIOError。
"""

import csv
import io
import logging
from pathlib import Path

from arfima_xcorr.config import format_key_value_lines, load_key_value_file
from arfima_xcorr.errors import ArtifactIOError, InvalidSpecError
from arfima_xcorr.estimation.base import HurstMethod
from arfima_xcorr.formatters import CsvFormatter
from arfima_xcorr.formatters.base import SWEEP_COLUMNS
from arfima_xcorr.harness.sweep import CellResult, SweepResult
from arfima_xcorr.processes.types import PairKind, SeriesMeta, SeriesPair

logger = logging.getLogger(__name__)

META_SUFFIX = '.meta'


def meta_path(path: Path | str) -> Path:
	"""序列文件对应的 sidecar 元数据路径 <path>.meta"""
	file_path = Path(path)
	return file_path.with_name(file_path.name + META_SUFFIX)


def write_artifact(path: Path | str, text: str) -> Path:
	"""写入文本文件，必要时创建父目录

	Raises:
		ArtifactIOError: 写入失败
	"""
	file_path = Path(path)
	try:
		file_path.parent.mkdir(parents=True, exist_ok=True)
		with file_path.open('w', encoding='utf-8', newline='') as handle:
			handle.write(text)
	except OSError as e:
		raise ArtifactIOError(f'写入 {file_path} 失败: {e}') from e
	logger.debug(f'Wrote {file_path}')
	return file_path


def read_artifact(path: Path | str) -> str:
	"""读取文本文件

	Raises:
		ArtifactIOError: 读取失败
	"""
	file_path = Path(path)
	try:
		return file_path.read_text(encoding='utf-8')
	except OSError as e:
		raise ArtifactIOError(f'读取 {file_path} 失败: {e}') from e


def read_csv_rows(path: Path | str, required: tuple[str, ...]) -> list[dict[str, str]]:
	"""读取带表头的 CSV

	Args:
		path: 文件路径
		required: 必须存在的列

	Returns:
		每行一个字典

	Raises:
		ArtifactIOError: 读取失败
		InvalidSpecError: 缺少必需的列
	"""
	reader = csv.DictReader(io.StringIO(read_artifact(path)))
	columns = reader.fieldnames or []
	missing = [column for column in required if column not in columns]
	if missing:
		raise InvalidSpecError(f'{path}: 缺少列 {", ".join(missing)}')
	return list(reader)


def write_series_pair(
	pair: SeriesPair, path: Path | str, formatter: CsvFormatter | None = None
) -> Path:
	"""写出序列对 CSV（列 x,y）和 sidecar 元数据

	Args:
		pair: 序列对，meta 存在时写出 <path>.meta
		path: CSV 路径
		formatter: CSV 格式化器

	Returns:
		CSV 路径
	"""
	formatter = formatter or CsvFormatter()
	file_path = write_artifact(path, formatter.format_series(pair))
	if pair.meta is not None:
		write_artifact(meta_path(file_path), format_key_value_lines(pair.meta.to_records()))
	return file_path


def read_series_pair(path: Path | str) -> SeriesPair:
	"""读取序列对 CSV，sidecar 存在时一并恢复元数据

	Raises:
		ArtifactIOError: 读取失败
		InvalidSpecError: 内容不合法
	"""
	rows = read_csv_rows(path, ('x', 'y'))
	try:
		x = [float(row['x']) for row in rows]
		y = [float(row['y']) for row in rows]
	except (TypeError, ValueError) as e:
		raise InvalidSpecError(f'{path}: 无法解析数值: {e}') from e

	sidecar = meta_path(path)
	meta = None
	if sidecar.exists():
		try:
			records = load_key_value_file(sidecar)
		except OSError as e:
			raise ArtifactIOError(f'读取 {sidecar} 失败: {e}') from e
		meta = SeriesMeta.from_records(records)
		if meta.length != len(x):
			raise InvalidSpecError(
				f'{sidecar}: 元数据中的 N={meta.length} 与序列长度 {len(x)} 不一致'
			)

	try:
		return SeriesPair(x=x, y=y, meta=meta)
	except ValueError as e:
		raise InvalidSpecError(f'{path}: {e}') from e


def write_sweep_result(
	result: SweepResult, path: Path | str, formatter: CsvFormatter | None = None
) -> Path:
	"""写出扫描结果 CSV（列见 SWEEP_COLUMNS）"""
	formatter = formatter or CsvFormatter()
	return write_artifact(path, formatter.format_sweep(result))


def _optional_float(text: str) -> float | None:
	return float(text) if text else None


def _parse_failures(text: str) -> dict[str, int]:
	failures: dict[str, int] = {}
	for item in text.split(';'):
		if not item:
			continue
		name, _, count = item.partition(':')
		failures[name] = int(count)
	return failures


def _parse_values(text: str) -> list[float]:
	return [float(item) for item in text.split(';')] if text else []


def read_sweep_result(path: Path | str) -> SweepResult:
	"""读取 write_sweep_result 写出的扫描结果

	Raises:
		ArtifactIOError: 读取失败
		InvalidSpecError: 缺少列或值无法解析
	"""
	cells = []
	for number, row in enumerate(read_csv_rows(path, SWEEP_COLUMNS), start=2):
		try:
			cells.append(
				CellResult(
					cell=int(row['cell']),
					pair=PairKind(row['pair']),
					d1=float(row['d1']),
					d2=_optional_float(row['d2']),
					theta=_optional_float(row['theta']),
					sigma_ev=float(row['sigma_ev']),
					estimator=HurstMethod(row['estimator']),
					replicas=int(row['replicas']),
					n_ok=int(row['n_ok']),
					n_failed=int(row['n_failed']),
					mean=float(row['mean']),
					std=float(row['std']),
					theory=float(row['theory']),
					comparable=row['comparable'].strip().lower() == 'true',
					failures=_parse_failures(row['failures']),
					values=_parse_values(row['values']),
				)
			)
		except (TypeError, ValueError) as e:
			raise InvalidSpecError(f'{path}:{number}: 无法解析扫描结果行: {e}') from e

	if not cells:
		raise InvalidSpecError(f'{path}: 扫描结果为空')
	logger.debug(f'Read {len(cells)} sweep rows from {path}')
	return SweepResult(cells=cells)
