import logging

from superpop import superpoplogger
from superpop.superpoplogger import ColorFormatter, configure_logging, debug_log


@debug_log
def _double(x):
    return 2 * x


def test_color_formatter_layout():
    record = logging.LogRecord("superpop.test", logging.WARNING, __file__, 1, "hello %s", ("world",), None)
    text = ColorFormatter(datefmt="%H:%M:%S").format(record)
    assert text.startswith("| ")
    assert "WARNING" in text
    assert text.rstrip().endswith("hello world")


def test_debug_log_traces_calls(caplog):
    configure_logging("DEBUG")
    try:
        with caplog.at_level(logging.DEBUG, logger="superpop"):
            assert _double(21) == 42
        messages = [r.getMessage() for r in caplog.records]
        assert any("_double(x=21) called" in m for m in messages)
        assert any("_double → 42" in m for m in messages)
    finally:
        configure_logging("WARNING")
    assert superpoplogger.DEBUG_ENABLE is False


def test_logs_go_to_stderr(capsys):
    configure_logging("INFO")
    logging.getLogger("superpop.test").info("to stderr")
    captured = capsys.readouterr()
    assert "to stderr" in captured.err
    assert captured.out == ""
    configure_logging("WARNING")
