"""Error logging utilities"""
import logging
import os
import sys
import traceback
from datetime import datetime
from pathlib import Path
from typing import Optional


def grpmat_home() -> Path:
    """Base directory for logs and settings ($GRPMAT_HOME or ~/.grpmat)"""
    override = os.environ.get('GRPMAT_HOME')
    return Path(override) if override else Path.home() / '.grpmat'


class ErrorLogger:
    """Centralized logging for the engine and the command line"""

    _instance = None
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        """Initialize error logger (singleton)"""
        if self._initialized:
            return

        self.logger = logging.getLogger('GrpMat')
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        # Console handler (only warnings and above); stdout carries reports
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.WARNING)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        self.logs_dir: Optional[Path] = grpmat_home() / 'logs'
        self.log_file: Optional[Path] = None
        try:
            self.logs_dir.mkdir(parents=True, exist_ok=True)
            self.log_file = self.logs_dir / f'grpmat_{datetime.now().strftime("%Y%m%d")}.log'
            file_handler = logging.FileHandler(self.log_file, encoding='utf-8')
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)
        except OSError as e:
            self.logs_dir = None
            self.log_file = None
            self.logger.warning(f"File logging disabled: {e}")

        self._initialized = True

        self.logger.info("=" * 60)
        self.logger.info("GrpMat started")
        self.logger.info(f"Log file: {self.log_file}")
        self.logger.info("=" * 60)

    def log_exception(self, exc: Exception, context: str = "") -> str:
        """
        Log an exception with full traceback

        Args:
            exc: Exception object
            context: Additional context about where error occurred

        Returns:
            The logged message
        """
        tb_str = ''.join(traceback.format_exception(type(exc), exc, exc.__traceback__))
        error_msg = f"Exception in {context}: {str(exc)}\n{tb_str}"
        self.logger.error(error_msg)
        return error_msg

    def log_error(self, message: str, context: str = ""):
        full_msg = f"[{context}] {message}" if context else message
        self.logger.error(full_msg)

    def log_warning(self, message: str, context: str = ""):
        full_msg = f"[{context}] {message}" if context else message
        self.logger.warning(full_msg)

    def log_info(self, message: str, context: str = ""):
        full_msg = f"[{context}] {message}" if context else message
        self.logger.info(full_msg)

    def log_debug(self, message: str, context: str = ""):
        full_msg = f"[{context}] {message}" if context else message
        self.logger.debug(full_msg)

    def get_log_file_path(self) -> Optional[Path]:
        return self.log_file

    def cleanup_old_logs(self, days: int = 7):
        """
        Delete log files older than specified days

        Args:
            days: Number of days to keep logs
        """
        if self.logs_dir is None:
            return
        try:
            cutoff = datetime.now().timestamp() - (days * 86400)
            for log_file in self.logs_dir.glob('grpmat_*.log'):
                if log_file == self.log_file:
                    continue
                if log_file.stat().st_mtime < cutoff:
                    log_file.unlink()
                    self.logger.info(f"Deleted old log file: {log_file.name}")
        except OSError as e:
            self.logger.error(f"Error cleaning up old logs: {str(e)}")


# Global logger instance
_error_logger = None


def get_logger() -> ErrorLogger:
    """Get global error logger instance"""
    global _error_logger
    if _error_logger is None:
        _error_logger = ErrorLogger()
    return _error_logger
