from pydantic import Field, computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-level settings for the command-line front end."""

    model_config = SettingsConfigDict(env_prefix="PHASE_")

    log_level: str = "INFO"
    log_file: str | None = None
    debug: bool = False

    # grid points are independent; results are merged in grid order
    workers: int = Field(default=4, ge=1)

    default_tail: float = Field(default=1e-12, gt=0.0, lt=1.0)
    default_seed: int = 20240101

    @computed_field
    @property
    def effective_log_level(self) -> str:
        return "DEBUG" if self.debug else self.log_level.upper()


settings = Settings()
