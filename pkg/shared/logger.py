import logging
import logging.handlers as lh
import os, sys
from pathlib import Path
from typing import Union

_format = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
_datetime = "%d-%m %H:%M:%S"

formatter = logging.Formatter(_format, _datetime)


def resolve_level(level: Union[str, int, None]) -> int:
    """Level number for a name like "debug"; unknown names fall back to WARNING."""
    if isinstance(level, int):
        return level
    number = logging.getLevelName(str(level or "WARNING").upper())
    return number if isinstance(number, int) else logging.WARNING


LOG_LEVEL = resolve_level(os.getenv("LOG_LEVEL"))

# stdout carries command output, logs go to stderr
stream_handler = logging.StreamHandler(sys.stderr)
stream_handler.setFormatter(formatter)
stream_handler.setLevel(LOG_LEVEL)

root = logging.getLogger()
root.setLevel(LOG_LEVEL)
root.addHandler(stream_handler)

LOG_DIR = os.getenv("LOG_DIR")
if LOG_DIR:
    Path(LOG_DIR).mkdir(parents=True, exist_ok=True)
    # 1mb, 10 files rotating handler
    file_handler = lh.RotatingFileHandler(
        Path(LOG_DIR) / "parhodge.log",
        maxBytes=1_000_000,
        backupCount=10,
        encoding="utf-8",
    )
    file_handler.setFormatter(formatter)
    file_handler.setLevel(LOG_LEVEL)
    root.addHandler(file_handler)

# shutup, libraries!
_libs = {
    "asyncio":               logging.WARNING,
    "concurrent.futures":    logging.WARNING,
    "hypothesis":            logging.WARNING,
}
for module, level in _libs.items():
    logging.getLogger(module).setLevel(level)


def get_logger(name: Union[str, None] = None) -> logging.Logger:
    return logging.getLogger(name)


def set_level(level: Union[str, int]) -> None:
    """Re-level the root logger and its handlers (used by the CLI after settings are loaded)."""
    level = resolve_level(level)
    root.setLevel(level)
    for handler in root.handlers:
        handler.setLevel(level)
