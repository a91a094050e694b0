import inspect
import logging
import os
import socket
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional


DEBUG_ENABLED = os.getenv("DEBUG", "false").lower() == "true"
LOG_FILE_ENABLED = os.getenv("QJF_LOG_FILE", "true").lower() == "true"


class QJFLogger:
    DATE_FORMAT: str = "%Y.%m.%d %H:%M:%S"

    def __init__(
        self,
        name: str = "qjf",
        log_cli: bool = True,
        log_file: bool = True,
        log_dir: str = "./.logs/",
        hostname: str = "default",
    ) -> None:
        self.logger = logging.getLogger(name)
        self.logger.handlers.clear()
        self.logger.propagate = False
        self.logger.setLevel(logging.DEBUG)
        self.hostname = hostname
        self.log_dir = log_dir
        level = logging.DEBUG if DEBUG_ENABLED else logging.INFO
        self.level = level
        if log_cli:
            # stderr keeps stdout clean for emitted artifacts
            cli_handler = logging.StreamHandler(sys.stderr)
            cli_handler.setLevel(level)
            cli_handler.setFormatter(
                self._create_formatter(use_colors=True, is_cli=True)
            )
            self.logger.addHandler(cli_handler)
            self.debug("CLI logging initialized")
        if log_file:
            Path(log_dir).mkdir(parents=True, exist_ok=True)
            log_file_name = (
                f"{hostname}-{datetime.now().strftime('%Y%m%d')}.log"
            )
            file_handler = logging.FileHandler(
                os.path.join(log_dir, log_file_name), mode="a"
            )
            file_handler.setLevel(level)
            file_handler.setFormatter(
                self._create_formatter(use_colors=False, is_cli=False)
            )
            self.logger.addHandler(file_handler)

    def _create_formatter(
        self, use_colors: bool = True, is_cli: bool = False
    ) -> logging.Formatter:
        return CallerFormatter(use_colors, is_cli)

    def set_level(self, debug: bool) -> None:
        """Switch every handler between DEBUG and INFO."""
        self.level = logging.DEBUG if debug else logging.INFO
        for handler in self.logger.handlers:
            handler.setLevel(self.level)

    def set_cli_enabled(self, enabled: bool) -> None:
        for handler in self.logger.handlers:
            if isinstance(handler, logging.FileHandler):
                continue
            handler.setLevel(self.level if enabled else logging.CRITICAL + 1)

    def debug(self, message: str) -> None:
        self.logger.debug(message)

    def info(self, message: str) -> None:
        self.logger.info(message)

    def warning(self, message: str) -> None:
        self.logger.warning(message)

    def error(self, message: str) -> None:
        self.logger.error(message)

    def critical(self, message: str) -> None:
        self.logger.critical(message)


class CallerFormatter(logging.Formatter):
    COLORS = {
        "DEBUG": "\033[94m",
        "INFO": "\033[92m",
        "WARNING": "\033[93m",
        "ERROR": "\033[91m",
        "CRITICAL": "\033[91m",
        "RESET": "\033[0m",
    }

    def __init__(self, use_colors: bool = True, is_cli: bool = False):
        super().__init__()
        self.use_colors = use_colors
        self.is_cli = is_cli

    def _caller(self, record: logging.LogRecord):
        frame = inspect.currentframe()
        while frame:
            code = frame.f_code
            if not (
                code.co_filename.endswith(
                    ("qjf_logger.py", os.path.join("logging", "__init__.py"))
                )
                or "logging" in code.co_name
            ):
                return os.path.basename(code.co_filename), frame.f_lineno
            frame = frame.f_back
        return os.path.basename(record.pathname), record.lineno

    def format(self, record: logging.LogRecord) -> str:
        try:
            filename, lineno = self._caller(record)
            if self.use_colors:
                level_name = (
                    f"{self.COLORS.get(record.levelname, '')}"
                    f"{record.levelname}"
                    f"{self.COLORS['RESET']}"
                )
            else:
                level_name = record.levelname

            message = record.getMessage()
            if DEBUG_ENABLED and self.is_cli and len(message) > 400:
                message = f"{message[:200]}...{message[-200:]}"

            return (
                f"[{datetime.now().strftime(QJFLogger.DATE_FORMAT)}] | "
                f"[{level_name}] : "
                f"{filename}:{lineno} | "
                f"{message}"
            )
        except Exception as e:
            print(f"CallerFormatter format error: {e}", file=sys.stderr)
            return str(record.getMessage())


_logger_instance: Optional[QJFLogger] = None


def use_logger() -> QJFLogger:
    global _logger_instance
    if _logger_instance is None:
        hostname = socket.gethostname().split(".")[0].lower()
        _logger_instance = QJFLogger(
            hostname=hostname, log_file=LOG_FILE_ENABLED
        )
        if DEBUG_ENABLED:
            _logger_instance.debug(
                f"Logger ready with "
                f"{len(_logger_instance.logger.handlers)} handler(s)"
            )
    return _logger_instance


qjf_log = use_logger()
