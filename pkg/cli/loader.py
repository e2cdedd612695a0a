from cli.config import settings
from shared.logger import get_logger, set_level

# logger
logger = get_logger("parhodge")
if settings.log_level:
    set_level(settings.log_level)


__all__ = ("logger", "settings")
