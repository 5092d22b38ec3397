import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any, List, Optional, Union

from .exceptions import (
    ConfigurationJsonNotProvided,
    ConfigurationNotLoadedError,
    InvalidSettingError,
    SettingNotFoundError,
)
from .models import DEFAULT_VALUES, Configuration, SettingItem
from superpop.superpoplogger import debug_log

_log = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent.parent / "config" / "config.json"


class ConfigurationManager:
    """
    Loads config/config.json into dataclasses and resolves settings.

    Lookup order for get_value(): user setting, static setting, built-in default.
    A missing file is not an error; the built-in defaults are used instead.
    """

    def __init__(self, json_path: Union[str, Path, None] = None):
        if json_path == "":
            raise ConfigurationJsonNotProvided()
        self.json_path = Path(json_path) if json_path else DEFAULT_CONFIG_PATH
        self.data: Optional[Configuration] = None
        self.load()

    # --------------------------
    # Public API
    # --------------------------
    @debug_log
    def load(self):
        """Load JSON into dataclasses."""
        if not self.json_path.exists():
            _log.warning("Config file not found at %s, using built-in defaults.", self.json_path)
            self.data = Configuration(user={}, static={})
            return

        _log.debug("Loading configuration from %s", self.json_path)
        try:
            with open(self.json_path, "r", encoding="utf-8") as f:
                raw = json.load(f)
        except json.JSONDecodeError as exc:
            raise InvalidSettingError(str(self.json_path), f"invalid JSON: {exc}") from exc

        section = raw.get("configuration", raw)
        try:
            self.data = Configuration(
                user={k: SettingItem(**v) for k, v in section.get("user", {}).items()},
                static=dict(section.get("static", {})),
            )
        except TypeError as exc:
            raise InvalidSettingError(str(self.json_path), str(exc)) from exc
        _log.debug("Loaded %d user and %d static settings",
                   len(self.data.user), len(self.data.static))

    def get_all_keys(self) -> List[str]:
        if not self.data:
            raise ConfigurationNotLoadedError()
        keys = list(self.data.user.keys()) + list(self.data.static.keys())
        keys.extend(k for k in DEFAULT_VALUES if k not in keys)
        return keys

    def get_setting(self, key: str) -> Optional[SettingItem]:
        """Return the SettingItem for a user key, or None."""
        if not self.data:
            raise ConfigurationNotLoadedError()
        return self.data.user.get(key)

    def get_value(self, key: str) -> Any:
        """Return the raw value for *key* (not the whole SettingItem)."""
        if not self.data:
            raise ConfigurationNotLoadedError()
        item = self.data.user.get(key)
        if item is not None:
            return item.value
        if key in self.data.static:
            return self.data.static[key]
        if key in DEFAULT_VALUES:
            return DEFAULT_VALUES[key]
        raise SettingNotFoundError(key)

    def set_value(self, key: str, value: Any):
        """Update a user or static setting in memory; call save() to persist."""
        if not self.data:
            raise ConfigurationNotLoadedError()
        item = self.data.user.get(key)
        if item is not None:
            item.value = value
        elif key in self.data.static or key in DEFAULT_VALUES:
            self.data.static[key] = value
        else:
            raise SettingNotFoundError(key)

    def save(self):
        """Save current dataclasses to JSON."""
        if not self.data:
            raise ConfigurationNotLoadedError()
        json_dict = {
            "configuration": {
                "user": {k: asdict(v) for k, v in self.data.user.items()},
                "static": self.data.static,
            }
        }
        self.json_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.json_path, "w", encoding="utf-8") as f:
            json.dump(json_dict, f, indent=4)
            f.write("\n")
