import pytest

from qspt.auxiliary.time import Stopwatch, Timedelta
from qspt.config.configparser import Config
from qspt.series.laurent import ArithmeticMode


def test_human_readable_durations():
    assert Timedelta(seconds=2).to_human_readable_format() == '2 secs'
    assert Timedelta(seconds=90).to_human_readable_format() == '1 min'
    assert Timedelta(hours=2).to_human_readable_format() == '2 hours'
    assert Timedelta.from_milliseconds(1500).to_milliseconds() == 1500


def test_stopwatch():
    with Stopwatch() as stopwatch:
        pass
    assert stopwatch.elapsed_ms() >= 0
    assert stopwatch.elapsed() == stopwatch.elapsed()


def test_config_defaults(tmp_path):
    extra = tmp_path / 'extra.ini'
    extra.write_text('[Arithmetic]\nmode: reduced\nreduced_exponent:\n')
    config = Config()
    config.read_file_path(extra)
    assert config.getenum('Arithmetic', 'mode', ArithmeticMode) is ArithmeticMode.REDUCED
    assert config.getint('Arithmetic', 'reduced_exponent', default=40) == 40
    assert config.getint('Missing', 'option', default=3) == 3
    assert config.getpath('Cache', 'directory') is None
    with pytest.raises(FileNotFoundError):
        config.read_file_path(tmp_path / 'absent.ini')
