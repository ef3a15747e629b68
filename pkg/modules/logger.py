import logging
import sys
from datetime import date, datetime, timedelta
from pathlib import Path
from typing import TYPE_CHECKING, Optional

import numpy as np
import sympy

if TYPE_CHECKING:
    from modules.settings import Settings

LOG_PREFIX = "cellgap_"
FILE_FORMAT = '%(asctime)s %(levelname)-7s %(module)s: %(message)s'
CONSOLE_FORMAT = '%(levelname)s: %(message)s'


def resolve_log_dir(settings: "Settings") -> Path:
    configured = settings.get('log_dir')
    return Path(configured).expanduser() if configured else Path.home() / ".cellgap" / "logs"


def log_file_date(path: Path) -> Optional[date]:
    """Date encoded in a cellgap_YYYYMMDD.log name, None for foreign files."""
    if not path.stem.startswith(LOG_PREFIX):
        return None
    try:
        return datetime.strptime(path.stem[len(LOG_PREFIX):], "%Y%m%d").date()
    except ValueError:
        return None


def setup_logging(settings: "Settings") -> logging.Logger:
    """
    One file per day under log_dir at INFO, plus stderr at console_log_level.
    Library modules log to children of the 'cellgap' logger.
    """
    log_dir = resolve_log_dir(settings)
    log_dir.mkdir(parents=True, exist_ok=True)
    cleanup_logs(log_dir, settings.get('log_retention_days'))

    logger = logging.getLogger('cellgap')
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    file_handler = logging.FileHandler(log_dir / f"{LOG_PREFIX}{date.today():%Y%m%d}.log", encoding='utf-8')
    file_handler.setLevel(logging.INFO)
    file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
    logger.addHandler(file_handler)

    # stdout carries command output only
    console_level = logging.getLevelName(str(settings.get('console_log_level')).upper())
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level if isinstance(console_level, int) else logging.WARNING)
    console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    logger.addHandler(console_handler)

    logger.info(f"Python {sys.version.split()[0]} on {sys.platform}, numpy {np.__version__}, sympy {sympy.__version__}")
    logger.info(f"Settings from {settings.settings_file}")
    return logger


def cleanup_logs(log_dir: Path, retention_days: Optional[int]) -> int:
    """Delete cellgap logs older than retention_days. Returns the number removed."""
    if retention_days is None:
        return 0
    cutoff = date.today() - timedelta(days=retention_days)
    removed = 0
    for path in log_dir.glob(f"{LOG_PREFIX}*.log"):
        stamp = log_file_date(path)
        if stamp is None or stamp >= cutoff:
            continue
        try:
            path.unlink()
            removed += 1
        except OSError as e:
            # the logger is not configured yet
            print(f"Could not remove old log {path.name}: {e}", file=sys.stderr)
    return removed
