"""
测试命令行入口
"""

import csv
import io
from collections.abc import Callable
from pathlib import Path

import pytest

from arfima_xcorr import __version__
from arfima_xcorr.cli import EXIT_ERROR, build_parser, build_registry, main
from arfima_xcorr.harness.io import write_sweep_result
from arfima_xcorr.harness.sweep import CellResult, SweepResult


def simulate(output_dir: Path) -> int:
	return main(
		[
			'simulate',
			'--d1', '0.4',
			'--d2', '0.2',
			'--n', '4096',
			'--burn-in', '4096',
			'--seed', '3',
			'--max-lag', '40',
			'--out', str(output_dir),
		]
	)


class TestParser:
	"""测试参数解析器"""

	def test_commands_registered(self) -> None:
		"""测试六个子命令按顺序注册"""
		assert list(build_registry().commands) == [
			'simulate',
			'xcorr',
			'spectrum',
			'estimate',
			'sweep',
			'verify',
		]

	def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
		"""测试 --version"""
		with pytest.raises(SystemExit) as exc_info:
			build_parser(build_registry()).parse_args(['--version'])

		assert exc_info.value.code == 0
		assert __version__ in capsys.readouterr().out

	def test_missing_command(self) -> None:
		"""测试缺少子命令"""
		with pytest.raises(SystemExit):
			main([])


class TestSpectrumCommand:
	"""测试 spectrum 子命令"""

	def test_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
		"""测试输出 lambda,re,im 表"""
		assert main(['spectrum', '--d1', '0.3', '--d2', '0.1', '--points', '4']) == 0

		lines = capsys.readouterr().out.splitlines()
		assert lines[0] == 'lambda,re,im'
		assert len(lines) == 5

	def test_invalid_covariance(self) -> None:
		"""测试协方差超出 PSD 范围时退出码为 2"""
		assert main(['spectrum', '--d1', '0.3', '--d2', '0.1', '--sigma-ev', '2.0']) == EXIT_ERROR

	def test_missing_theta(self) -> None:
		"""测试 arfima_ar 缺少 θ"""
		assert main(['spectrum', '--pair', 'arfima_ar', '--d1', '0.3']) == EXIT_ERROR


class TestSingleRunCommands:
	"""测试 simulate、xcorr 和 estimate 子命令"""

	def test_simulate(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
		"""测试写出结果目录并打印报告"""
		assert simulate(tmp_path) == 0

		assert (tmp_path / 'series.csv').exists()
		assert (tmp_path / 'series.csv.meta').exists()
		assert (tmp_path / 'report.json').exists()
		assert 'Theory: H_xy=0.8000' in capsys.readouterr().out

	def test_xcorr(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
		"""测试由序列文件计算样本互相关"""
		simulate(tmp_path)
		capsys.readouterr()

		assert main(['xcorr', str(tmp_path / 'series.csv'), '--max-lag', '5']) == 0
		rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
		assert [int(row['lag']) for row in rows] == list(range(-5, 6))
		assert {row['kind'] for row in rows} == {'sample'}

	def test_estimate(self, tmp_path: Path) -> None:
		"""测试估计结果写到文件"""
		simulate(tmp_path)
		out = tmp_path / 'estimates_cli.csv'

		code = main(
			['estimate', str(tmp_path / 'series.csv'), '--estimators', 'cross_periodogram', '--out', str(out)]
		)

		assert code == 0
		assert out.read_text(encoding='utf-8').splitlines()[1].startswith('cross_periodogram,')

	def test_estimate_without_sidecar_warns(
		self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
	) -> None:
		"""测试没有元数据文件且未指定 --side 时给出警告"""
		simulate(tmp_path)
		plain = tmp_path / 'plain.csv'
		plain.write_text((tmp_path / 'series.csv').read_text(encoding='utf-8'), encoding='utf-8')
		capsys.readouterr()

		assert main(['estimate', str(plain), '--out', str(tmp_path / 'a.csv')]) == 0
		assert 'No metadata sidecar' in capsys.readouterr().err

		code = main(
			['estimate', str(plain), '--side', 'negative', '--out', str(tmp_path / 'b.csv')]
		)
		assert code == 0
		assert 'No metadata sidecar' not in capsys.readouterr().err

	def test_estimate_invalid_side(self, tmp_path: Path) -> None:
		"""测试 --side 只接受 auto/positive/negative"""
		with pytest.raises(SystemExit):
			main(['estimate', str(tmp_path / 'series.csv'), '--side', 'both'])

	def test_estimate_missing_file(self, tmp_path: Path) -> None:
		"""测试文件不存在时退出码为 2"""
		assert main(['estimate', str(tmp_path / 'missing.csv')]) == EXIT_ERROR

	def test_estimate_all_failed(self, tmp_path: Path) -> None:
		"""测试全部估计器失败时退出码为 1"""
		series = tmp_path / 'short.csv'
		series.write_text('x,y\n' + ''.join(f'{i % 7}.0,{i % 5}.0\n' for i in range(400)), encoding='utf-8')

		assert main(['estimate', str(series), '--estimators', 'ccf_decay']) == 1


class TestSweepCommands:
	"""测试 sweep 和 verify 子命令"""

	def test_sweep(self, tmp_path: Path) -> None:
		"""测试命令行网格运行并写出结果"""
		out = tmp_path / 'sweep.csv'
		code = main(
			[
				'sweep',
				'--d1', '0.3',
				'--d2', '0.1',
				'--n', '512',
				'--burn-in', '1024',
				'--replicas', '2',
				'--estimators', 'cross_periodogram',
				'--out', str(out),
			]
		)

		assert code == 0
		rows = list(csv.DictReader(io.StringIO(out.read_text(encoding='utf-8'))))
		assert len(rows) == 1
		assert rows[0]['replicas'] == '2'

	def test_sweep_validates_estimation_overrides(
		self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
	) -> None:
		"""测试配置检查看到命令行给出的窗口"""
		code = main(
			[
				'sweep',
				'--d1', '0.3',
				'--d2', '0.1',
				'--n', '512',
				'--burn-in', '1024',
				'--replicas', '1',
				'--estimators', 'cross_periodogram',
				'--window', '10,200',
				'--out', str(tmp_path / 'sweep.csv'),
			]
		)

		assert code == 0
		err = capsys.readouterr().err
		assert 'CCF window upper bound 200' in err
		assert 'too short for the default CCF window' not in err

	def test_sweep_from_config_file(self, tmp_path: Path) -> None:
		"""测试读取配置文件，命令行覆盖副本数"""
		out = tmp_path / 'sweep.csv'
		config = tmp_path / 'sweep.txt'
		config.write_text(
			f'd1 = 0.2\nd2 = 0.2\nsigma_ev = 0.0, 0.5\nn = 512\nburn_in = 512\n'
			f'replicas = 50\nestimators = cross_periodogram\noutput = {out}\n',
			encoding='utf-8',
		)

		assert main(['sweep', '--config', str(config), '--replicas', '1']) == 0
		rows = list(csv.DictReader(io.StringIO(out.read_text(encoding='utf-8'))))
		assert [row['sigma_ev'] for row in rows] == ['0.0', '0.5']
		assert {row['replicas'] for row in rows} == {'1'}

	def test_sweep_invalid_config(self, tmp_path: Path) -> None:
		"""测试配置中的未知键"""
		config = tmp_path / 'sweep.txt'
		config.write_text('d1 = 0.2\nbeta = 1\n', encoding='utf-8')

		assert main(['sweep', '--config', str(config)]) == EXIT_ERROR

	def test_verify_pass(
		self, sweep_result: SweepResult, tmp_path: Path, capsys: pytest.CaptureFixture[str]
	) -> None:
		"""测试全部通过时退出码为 0"""
		path = write_sweep_result(sweep_result, tmp_path / 'sweep.csv')
		claims = tmp_path / 'claims.csv'

		assert main(['verify', str(path), '--out', str(claims)]) == 0
		lines = capsys.readouterr().out.splitlines()
		assert len(lines) == 8
		assert all(line.split()[0] in {'PASS', 'SKIP'} for line in lines)
		assert claims.read_text(encoding='utf-8').startswith('status,claim,group')

	def test_verify_fail(self, make_cell: Callable[..., CellResult], tmp_path: Path) -> None:
		"""测试存在 FAIL 时退出码为 1"""
		cell = make_cell([0.60, 0.61, 0.59, 0.60])
		path = write_sweep_result(SweepResult(cells=[cell]), tmp_path / 'sweep.csv')

		assert main(['verify', str(path)]) == 1

	def test_verify_json(
		self, sweep_result: SweepResult, tmp_path: Path, capsys: pytest.CaptureFixture[str]
	) -> None:
		"""测试 --format json"""
		path = write_sweep_result(sweep_result, tmp_path / 'sweep.csv')

		assert main(['--format', 'json', 'verify', str(path)]) == 0
		assert '"passed": true' in capsys.readouterr().out
