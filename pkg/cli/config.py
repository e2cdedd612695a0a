from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    log_level: Optional[str] = None     # falls back to LOG_LEVEL / WARNING

    workers: int = Field(1, ge=1)       # threads for (1,n) enumeration

    json_indent: int = 2

    default_strict: bool = False

    model_config = SettingsConfigDict(env_prefix="PARHODGE_", env_file=".env", extra="ignore")


settings = Settings()
