"""Tests for the shared logger"""
import os
import time

from src.utils.error_logger import ErrorLogger, get_logger


class TestErrorLogger:
    """Test ErrorLogger singleton"""

    def test_singleton(self):
        """Test every construction returns the same instance"""
        assert ErrorLogger() is ErrorLogger()
        assert get_logger() is ErrorLogger()

    def test_log_file_location(self):
        """Test the log file lives in the logs directory"""
        logger = get_logger()
        path = logger.get_log_file_path()
        assert path is not None
        assert path.parent == logger.logs_dir
        assert path.name.startswith('grpmat_')
        assert path.suffix == '.log'

    def test_messages_reach_log_file(self):
        """Test context prefix and file output"""
        logger = get_logger()
        logger.log_info("census finished", 'census')
        logger.log_debug("trace detail", 'solver')
        recent = logger.get_log_file_path().read_text(encoding='utf-8')
        assert "[census] census finished" in recent
        assert "[solver] trace detail" in recent

    def test_log_exception(self):
        """Test traceback logging"""
        logger = get_logger()
        try:
            raise RuntimeError("boom")
        except RuntimeError as e:
            message = logger.log_exception(e, 'solve')
        assert "Exception in solve: boom" in message
        assert "RuntimeError" in message

    def test_cleanup_old_logs(self):
        """Test stale logs are removed and the active log is kept"""
        logger = get_logger()
        stale = logger.logs_dir / 'grpmat_19990101.log'
        stale.write_text("old\n", encoding='utf-8')
        old = time.time() - 30 * 86400
        os.utime(stale, (old, old))
        os.utime(logger.log_file, (old, old))

        logger.cleanup_old_logs(days=7)

        assert not stale.exists()
        assert logger.log_file.exists()
