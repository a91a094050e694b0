import os

from settings.settings_file import SettingsManager
from utils.qjf_logger import qjf_log


class Debugger:
    """Applies the logging settings stored in the settings database."""

    def __init__(self, settings: SettingsManager = None) -> None:
        self.settings = settings or self.fetch_settings()
        self.debug_mode_value = self.settings.get_value("debug_mode")
        if self.debug_mode_value is None:
            self.debug_mode = False
        else:
            self.debug_mode = self.debug_mode_value.lower() == "true"
        if os.getenv("DEBUG", "false").lower() == "true":
            self.debug_mode = True
        os.environ["DEBUG"] = str(self.debug_mode).lower()
        log_cli = self.settings.get_value("log_cli")
        self.log_cli = log_cli is None or log_cli.lower() == "true"

    def fetch_settings(self) -> SettingsManager:
        return SettingsManager()

    def debug_mode_check(self) -> None:
        qjf_log.set_level(self.debug_mode)
        qjf_log.set_cli_enabled(self.log_cli)
        if self.debug_mode:
            qjf_log.debug("Debug mode is enabled")
