"""Project settings and environment loading helpers."""

from __future__ import annotations

import os
from pathlib import Path

DEFAULT_PROJECT_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_ENV_PATH = DEFAULT_PROJECT_ROOT / ".env"

DEFAULT_LOG_FILE = "gqap-bench.log"
DEFAULT_MAX_ITER = 100_000
DEFAULT_EXACT_LIMIT = 10_000_000


def _env_int(key: str, default: int) -> int:
    raw = os.environ.get(key)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{key} must be an integer, got '{raw}'") from exc


class Settings:
    """Settings container with basic .env loading."""

    def __init__(
        self, project_root: Path | None = None, env_path: Path | None = None
    ) -> None:
        self.project_root = project_root or DEFAULT_PROJECT_ROOT
        self.env_path = env_path or DEFAULT_ENV_PATH

    def load_env(self) -> None:
        """Populate os.environ with values from the project .env file if present."""
        if not self.env_path.exists():
            return

        for line in self.env_path.read_text().splitlines():
            stripped = line.strip()
            if not stripped or stripped.startswith("#") or "=" not in stripped:
                continue
            key, value = stripped.split("=", 1)
            os.environ.setdefault(key.strip(), value.strip())

    @property
    def log_level(self) -> str:
        return os.environ.get("GQAP_LOG_LEVEL", "INFO").upper()

    @property
    def log_file(self) -> Path | None:
        """Log file location; an empty GQAP_LOG_FILE disables file logging."""
        raw = os.environ.get("GQAP_LOG_FILE", DEFAULT_LOG_FILE)
        if not raw.strip():
            return None
        path = Path(raw)
        return path if path.is_absolute() else self.project_root / path

    @property
    def max_iter(self) -> int:
        return _env_int("GQAP_MAX_ITER", DEFAULT_MAX_ITER)

    @property
    def exact_limit(self) -> int:
        return _env_int("GQAP_EXACT_LIMIT", DEFAULT_EXACT_LIMIT)

    @property
    def workers(self) -> int:
        return max(1, _env_int("GQAP_WORKERS", 1))


settings = Settings()
