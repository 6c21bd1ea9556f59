"""
测试结果文件读写
"""

from pathlib import Path

import numpy as np
import pytest
from pytest_mock import MockerFixture

from arfima_xcorr.errors import ArtifactIOError, InvalidSpecError
from arfima_xcorr.formatters import CsvFormatter
from arfima_xcorr.harness.io import (
	meta_path,
	read_csv_rows,
	read_series_pair,
	read_sweep_result,
	write_artifact,
	write_series_pair,
	write_sweep_result,
)
from arfima_xcorr.harness.sweep import SweepResult
from arfima_xcorr.processes.types import SeriesPair


class TestWriteArtifact:
	"""测试 write_artifact"""

	def test_creates_parent(self, tmp_path: Path) -> None:
		"""测试自动创建父目录"""
		path = write_artifact(tmp_path / 'a' / 'b' / 'out.csv', 'x\n1\n')

		assert path.read_text(encoding='utf-8') == 'x\n1\n'

	def test_write_failure(self, tmp_path: Path, mocker: MockerFixture) -> None:
		"""测试写入失败转换为带路径的 ArtifactIOError"""
		mocker.patch.object(Path, 'open', side_effect=PermissionError('denied'))
		target = tmp_path / 'out.csv'

		with pytest.raises(ArtifactIOError, match='out.csv'):
			write_artifact(target, 'x\n')

	def test_error_is_os_error(self, tmp_path: Path) -> None:
		"""测试读取不存在的文件得到 OSError 子类"""
		with pytest.raises(OSError):
			read_csv_rows(tmp_path / 'missing.csv', ('x',))

	def test_meta_path(self) -> None:
		"""测试 sidecar 路径"""
		assert meta_path('out/series.csv') == Path('out/series.csv.meta')


class TestSeriesPairFiles:
	"""测试序列对的读写"""

	def test_roundtrip(self, arfima_pair: SeriesPair, tmp_path: Path) -> None:
		"""测试数值逐位保留，元数据一并恢复"""
		path = write_series_pair(arfima_pair, tmp_path / 'series.csv')
		restored = read_series_pair(path)

		np.testing.assert_array_equal(restored.x, arfima_pair.x)
		np.testing.assert_array_equal(restored.y, arfima_pair.y)
		assert restored.meta == arfima_pair.meta
		assert meta_path(path).read_text(encoding='utf-8').startswith('pair = arfima_arfima\n')

	def test_without_meta(self, tmp_path: Path) -> None:
		"""测试没有元数据的序列对"""
		path = write_series_pair(SeriesPair(x=[1.0, 2.0], y=[0.5, -0.5]), tmp_path / 's.csv')
		restored = read_series_pair(path)

		assert restored.meta is None
		assert not meta_path(path).exists()

	def test_missing_column(self, tmp_path: Path) -> None:
		"""测试缺少 y 列"""
		path = tmp_path / 's.csv'
		path.write_text('x\n1.0\n', encoding='utf-8')

		with pytest.raises(InvalidSpecError, match='缺少列'):
			read_series_pair(path)

	def test_bad_value(self, tmp_path: Path) -> None:
		"""测试无法解析的数值"""
		path = tmp_path / 's.csv'
		path.write_text('x,y\n1.0,abc\n', encoding='utf-8')

		with pytest.raises(InvalidSpecError):
			read_series_pair(path)

	def test_length_mismatch_with_meta(self, ar_pair: SeriesPair, tmp_path: Path) -> None:
		"""测试元数据中的 N 与序列长度不一致"""
		path = write_series_pair(ar_pair, tmp_path / 'series.csv')
		lines = path.read_text(encoding='utf-8').splitlines(keepends=True)
		path.write_text(''.join(lines[:-1]), encoding='utf-8')

		with pytest.raises(InvalidSpecError, match='N='):
			read_series_pair(path)


class TestSweepResultFiles:
	"""测试扫描结果的读写"""

	def test_roundtrip(self, sweep_result: SweepResult, tmp_path: Path) -> None:
		"""测试写出再读入得到相同的文本，NaN 与失败计数保留"""
		path = write_sweep_result(sweep_result, tmp_path / 'sweep.csv')
		restored = read_sweep_result(path)
		formatter = CsvFormatter()

		assert formatter.format_sweep(restored) == formatter.format_sweep(sweep_result)
		assert restored.cells[3].failures == {'SignInstabilityError': 4}
		assert restored.cells[0].d2 == 0.2
		assert restored.cells[0].theta is None

	def test_header_only(self, tmp_path: Path) -> None:
		"""测试只有表头的文件"""
		path = write_sweep_result(SweepResult(cells=[]), tmp_path / 'sweep.csv')

		with pytest.raises(InvalidSpecError, match='为空'):
			read_sweep_result(path)

	def test_bad_row(self, sweep_result: SweepResult, tmp_path: Path) -> None:
		"""测试无法解析的行报告行号"""
		path = write_sweep_result(sweep_result, tmp_path / 'sweep.csv')
		text = path.read_text(encoding='utf-8').replace('cross_periodogram', 'wavelet', 1)
		path.write_text(text, encoding='utf-8')

		with pytest.raises(InvalidSpecError, match=':2:'):
			read_sweep_result(path)
