import datetime
import os
import socket
from pathlib import Path
from typing import Any, List, Optional, Tuple

from database.sqlite import SQLiteDatabase


def settings_directory() -> Path:
    return Path(os.getenv("QJF_SETTINGS_DIR", "."))


class SettingsManager:
    def __init__(self, directory: Optional[Path] = None) -> None:
        self.hostname = socket.gethostname().split(".")[0].lower()
        directory = settings_directory() if directory is None else directory
        Path(directory).mkdir(parents=True, exist_ok=True)
        self.settings_path = Path(directory) / (
            f"{self.hostname}.{fetch_settings_file_ext()}"
        )
        self.db = None
        self._logger = None
        self._initialized = False
        self._ensure_initialized()

    @property
    def lazy_qjf_log(self):
        """Lazy load the logger to avoid circular imports."""
        if self._logger is None:
            from utils.qjf_logger import qjf_log

            self._logger = qjf_log
        return self._logger

    def _ensure_initialized(self) -> None:
        if not self._initialized:
            self.initialize_settings()
            self._initialized = True

    def get_value(self, key: str) -> Optional[str]:
        """Get a value from the settings database."""
        self._ensure_initialized()
        self.lazy_qjf_log.debug(f"Getting value for key: {key}")
        rows = self.db.execute_query(
            "SELECT value FROM settings WHERE key = ?", (key,)
        )
        return rows[0][0] if rows else None

    def get_typed(self, key: str) -> Any:
        """Value of key converted by its declared type."""
        from settings.settings_list import DefaultSettings

        return DefaultSettings(self.hostname).convert_value(
            key, self.get_value(key)
        )

    def set_value(self, key: str, value: str) -> None:
        """Set a value in the settings database."""
        self._ensure_initialized()
        from settings.settings_list import DefaultSettings

        if not DefaultSettings(self.hostname).validate_value(key, value):
            from modules.ring_core.errors import ConfigError

            raise ConfigError(f"invalid value '{value}' for setting '{key}'")
        self.lazy_qjf_log.debug(f"Setting value for key: {key}")
        self.db.execute_write(
            (
                "INSERT INTO settings (key, value) VALUES (?, ?) ON "
                "CONFLICT(key) DO UPDATE SET value = ?"
            ),
            (key, value, value),
        )

    def _update_table_schema(self) -> None:
        """Update existing tables with new columns if they're missing."""
        self.lazy_qjf_log.debug("Checking for schema updates")
        settings_cols = {
            col[1]
            for col in self.db.execute_query("PRAGMA table_info(settings)")
        }
        init_cols = {
            col[1]
            for col in self.db.execute_query(
                "PRAGMA table_info(settings_initialization)"
            )
        }
        if "last_modified" not in settings_cols:
            self.lazy_qjf_log.debug(
                "Adding last_modified column to settings table"
            )
            self.db.execute_write(
                "ALTER TABLE settings ADD COLUMN last_modified "
                "TIMESTAMP DEFAULT CURRENT_TIMESTAMP"
            )
        if "version" not in init_cols:
            self.db.execute_write(
                "ALTER TABLE settings_initialization ADD COLUMN version "
                "TEXT DEFAULT '1.0'"
            )
        if "initialized_by" not in init_cols:
            self.db.execute_write(
                "ALTER TABLE settings_initialization ADD COLUMN "
                "initialized_by TEXT"
            )

    def initialize_settings(self) -> None:
        """Create and initialize settings database if it doesn't exist."""
        self.lazy_qjf_log.debug(
            f"Initializing settings at {self.settings_path}"
        )
        if self.db is None:
            self.db = SQLiteDatabase(str(self.settings_path))
        existing_tables = {
            row[0]
            for row in self.db.execute_query(
                "SELECT name FROM sqlite_master WHERE type='table'"
            )
        }
        if "settings" not in existing_tables:
            self.lazy_qjf_log.debug("Creating settings table")
            self.db.create_table(
                "settings",
                {
                    "key": "TEXT PRIMARY KEY",
                    "value": "TEXT",
                    "last_modified": "TIMESTAMP DEFAULT CURRENT_TIMESTAMP",
                },
            )
        current_settings = {
            row[0]: row[1]
            for row in self.db.execute_query("SELECT key, value FROM settings")
        }
        from settings.settings_list import DefaultSettings

        defaults = DefaultSettings(self.hostname)
        missing_settings = [
            (key, value)
            for key, value in defaults.get_defaults_list()
            if key not in current_settings
        ]
        if missing_settings:
            self.lazy_qjf_log.debug(
                f"Adding {len(missing_settings)} missing settings"
            )
            self.db.execute_many(
                "INSERT INTO settings (key, value) VALUES (?, ?)",
                missing_settings,
            )
        if "settings_initialization" not in existing_tables:
            self.db.create_table(
                "settings_initialization",
                {
                    "id": "INTEGER PRIMARY KEY",
                    "initialization_date": "TIMESTAMP DEFAULT CURRENT_TIMESTAMP",
                    "version": "TEXT DEFAULT '1.0'",
                    "initialized_by": "TEXT",
                },
            )
        if "verify_runs" not in existing_tables:
            self.lazy_qjf_log.debug("Creating verify_runs table")
            self.db.create_table(
                "verify_runs",
                {
                    "id": "INTEGER PRIMARY KEY",
                    "run_at": "TIMESTAMP",
                    "suite": "TEXT",
                    "run_order": "INTEGER",
                    "passed": "INTEGER",
                    "failed": "INTEGER",
                },
            )
        self._update_table_schema()

        if self.db.get_row_count("settings_initialization") == 0:
            self.lazy_qjf_log.debug("Inserting initialization record")
            self.db.insert(
                "settings_initialization",
                {
                    "initialization_date": datetime.datetime.now().isoformat(),
                    "initialized_by": self.hostname,
                },
            )

    def load_settings(self) -> SQLiteDatabase:
        """
        Load settings database.
        :return: Database connection to settings.
        """
        self.lazy_qjf_log.debug(f"Loading settings from {self.settings_path}")
        if not self.settings_path.exists():
            self.db = None
            self.initialize_settings()
        elif self.db is None:
            self.db = SQLiteDatabase(str(self.settings_path))
        return self.db

    def get_initialization_date(self) -> Optional[str]:
        db = self.load_settings()
        result = db.execute_query(
            "SELECT initialization_date FROM settings_initialization LIMIT 1"
        )
        return result[0][0] if result else None

    def record_verify_run(
        self, suite: str, order: int, passed: int, failed: int
    ) -> None:
        """Append one verify invocation to the run log."""
        db = self.load_settings()
        db.insert(
            "verify_runs",
            {
                "run_at": datetime.datetime.now().isoformat(timespec="seconds"),
                "suite": suite,
                "run_order": order,
                "passed": passed,
                "failed": failed,
            },
        )
        self.lazy_qjf_log.debug(f"Recorded verify run {suite} order {order}")

    def verify_history(self, limit: int) -> List[Tuple]:
        """Last limit verify runs, newest first."""
        db = self.load_settings()
        return [
            tuple(row)
            for row in db.execute_query(
                "SELECT run_at, suite, run_order, passed, failed "
                "FROM verify_runs ORDER BY id DESC LIMIT ?",
                (limit,),
            )
        ]

    def close(self) -> None:
        """Close database connection."""
        if self.db:
            self.db.close()
            self.db = None
        self._initialized = False

    def __enter__(self) -> "SettingsManager":
        """Context manager entry."""
        self.load_settings()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        """Context manager exit."""
        self.close()


def fetch_settings_file_ext() -> str:
    from settings.settings_list import SETTINGS_FILE_EXT

    return SETTINGS_FILE_EXT
