import logging
from datetime import date, timedelta

from modules.logger import cleanup_logs, log_file_date, resolve_log_dir, setup_logging
from modules.settings import Settings


def _touch(directory, name):
    path = directory / name
    path.write_text("")
    return path


def test_log_file_date(tmp_path):
    assert log_file_date(tmp_path / "cellgap_20260105.log") == date(2026, 1, 5)
    assert log_file_date(tmp_path / "cellgap_latest.log") is None
    assert log_file_date(tmp_path / "other_20260105.log") is None


def test_cleanup_keeps_recent_and_foreign_files(tmp_path):
    old = _touch(tmp_path, f"cellgap_{date.today() - timedelta(days=40):%Y%m%d}.log")
    recent = _touch(tmp_path, f"cellgap_{date.today() - timedelta(days=2):%Y%m%d}.log")
    foreign = _touch(tmp_path, "cellgap_notes.log")
    assert cleanup_logs(tmp_path, 30) == 1
    assert not old.exists()
    assert recent.exists() and foreign.exists()
    assert cleanup_logs(tmp_path, None) == 0


def test_setup_writes_daily_file(tmp_path):
    settings = Settings(str(tmp_path / "settings.json"))
    settings.set('log_dir', str(tmp_path / "logs"))
    settings.set('console_log_level', 'bogus')
    logger = setup_logging(settings)
    assert resolve_log_dir(settings) == tmp_path / "logs"
    assert len(logger.handlers) == 2
    console = [h for h in logger.handlers if not isinstance(h, logging.FileHandler)][0]
    assert console.level == logging.WARNING
    logger.info("hello")
    for handler in logger.handlers:
        handler.flush()
    log_file = tmp_path / "logs" / f"cellgap_{date.today():%Y%m%d}.log"
    assert "hello" in log_file.read_text(encoding='utf-8')
