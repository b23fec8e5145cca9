from __future__ import annotations

import json
import logging
import os
import platform
from pathlib import Path
from typing import Mapping

from quiv_oracle import DEFAULT_CAP, SizeCaps

log = logging.getLogger("quiv.settings")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s]: %(message)s"


def _clamp_int(value: object, low: int, high: int, default: int) -> int:
    try:
        v = int(value)  # type: ignore[arg-type]
    except Exception:
        return default
    return max(low, min(high, v))


def user_data_dir() -> Path:
    sysname = platform.system()
    if sysname == "Windows":
        root = os.environ.get("APPDATA")
        base = Path(root) if root else (Path.home() / "AppData" / "Roaming")
    elif sysname == "Darwin":
        base = Path.home() / "Library" / "Application Support"
    else:
        root = os.environ.get("XDG_DATA_HOME")
        base = Path(root) if root else (Path.home() / ".local" / "share")
    return base / "quiv"


def default_preset_path() -> Path:
    return user_data_dir() / "settings.json"


class Settings:
    max_vertex_maps: int = DEFAULT_CAP
    max_edge_maps: int = DEFAULT_CAP
    max_total_pairs: int = DEFAULT_CAP
    # Default catalogue sizes for `laws`.
    max_set: int = 2
    max_v: int = 2
    max_e: int = 2
    jobs: int = 1
    log_level: str = "WARNING"

    def to_dict(self) -> dict:
        return {
            "max_vertex_maps": self.max_vertex_maps,
            "max_edge_maps": self.max_edge_maps,
            "max_total_pairs": self.max_total_pairs,
            "max_set": self.max_set,
            "max_v": self.max_v,
            "max_e": self.max_e,
            "jobs": self.jobs,
            "log_level": self.log_level,
        }

    @staticmethod
    def from_dict(data: dict) -> "Settings":
        s = Settings()
        if not isinstance(data, dict):
            return s
        s.max_vertex_maps = _clamp_int(data.get("max_vertex_maps", s.max_vertex_maps), 1, 10**9, DEFAULT_CAP)
        s.max_edge_maps = _clamp_int(data.get("max_edge_maps", s.max_edge_maps), 1, 10**9, DEFAULT_CAP)
        s.max_total_pairs = _clamp_int(data.get("max_total_pairs", s.max_total_pairs), 1, 10**9, DEFAULT_CAP)
        s.max_set = _clamp_int(data.get("max_set", s.max_set), 0, 6, 2)
        s.max_v = _clamp_int(data.get("max_v", s.max_v), 0, 6, 2)
        s.max_e = _clamp_int(data.get("max_e", s.max_e), 0, 6, 2)
        s.jobs = _clamp_int(data.get("jobs", s.jobs), 1, 64, 1)
        try:
            level = str(data.get("log_level", s.log_level) or "").strip().upper()
        except Exception:
            level = s.log_level
        s.log_level = level if level in LOG_LEVELS else "WARNING"
        return s

    def size_caps(self) -> SizeCaps:
        return SizeCaps(
            max_vertex_maps=self.max_vertex_maps,
            max_edge_maps=self.max_edge_maps,
            max_total_pairs=self.max_total_pairs,
        )


_ENV_KEYS = {
    "QUIV_MAX_VERTEX_MAPS": "max_vertex_maps",
    "QUIV_MAX_EDGE_MAPS": "max_edge_maps",
    "QUIV_MAX_TOTAL_PAIRS": "max_total_pairs",
    "QUIV_JOBS": "jobs",
    "QUIV_LOG_LEVEL": "log_level",
}


def _read_preset(path: Path) -> dict:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except Exception as e:
        log.warning("ignoring preset %s: %s", path, e)
        return {}
    if not isinstance(data, dict):
        log.warning("ignoring preset %s: not a JSON object", path)
        return {}
    return data


def load_settings(path: str | Path | None = None, environ: Mapping[str, str] | None = None) -> Settings:
    """Defaults, then the JSON preset, then QUIV_* environment overrides."""
    env = os.environ if environ is None else environ
    data: dict = {}

    preset = Path(path).expanduser() if path else None
    if preset is None:
        env_p = str(env.get("QUIV_PRESET") or "").strip()
        preset = Path(env_p).expanduser() if env_p else default_preset_path()
        if not env_p and not preset.exists():
            preset = None
    if preset is not None:
        data.update(_read_preset(preset))

    for key, attr in _ENV_KEYS.items():
        raw = str(env.get(key) or "").strip()
        if raw:
            data[attr] = raw
    return Settings.from_dict(data)


def configure_logging(level: str = "WARNING") -> None:
    # Leave handlers alone if the host application already set some up.
    if not logging.root.handlers:
        logging.basicConfig(format=LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")
    logging.getLogger("quiv").setLevel(level if level in LOG_LEVELS else "WARNING")
