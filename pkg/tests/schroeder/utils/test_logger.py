import io
import logging
import pytest
from schroeder.utils.logger import resolve_level, setup_logger

class TestSetupLogger:
    def test_console_stream(self):
        stream = io.StringIO()
        logger = setup_logger('schroeder.test.console', level=logging.INFO, stream=stream)
        logger.info("hello")
        logger.debug("hidden")
        text = stream.getvalue()
        assert 'INFO - hello' in text
        assert 'hidden' not in text

    def test_handlers_replaced(self):
        stream = io.StringIO()
        setup_logger('schroeder.test.repeat', stream=stream)
        logger = setup_logger('schroeder.test.repeat', stream=stream)
        assert len(logger.handlers) == 1

    def test_log_file(self, tmp_path):
        path = tmp_path / 'logs' / 'run.log'
        logger = setup_logger('schroeder.test.file', log_file=str(path), stream=io.StringIO())
        logger.warning("to disk")
        for handler in logger.handlers:
            handler.flush()
        assert 'to disk' in path.read_text()

    def test_level_by_name(self):
        logger = setup_logger('schroeder.test.named', level='debug', stream=io.StringIO())
        assert logger.level == logging.DEBUG
        assert resolve_level(logging.WARNING) == logging.WARNING
        with pytest.raises(ValueError):
            resolve_level('loud')
