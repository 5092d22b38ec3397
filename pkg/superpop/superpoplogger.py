import logging
import functools
import inspect
import sys

try:
    from colorama import init, Fore, Style
    init(autoreset=True)
except ImportError:
    # fallback if colorama is missing
    class Fore:
        LIGHTBLACK_EX = BLUE = CYAN = RED = MAGENTA = ""
    class Style:
        BRIGHT = RESET_ALL = ""

LOGGER_NAME = "superpop"

LEVEL_COLOURS = {
        logging.DEBUG: Fore.LIGHTBLACK_EX,
        logging.INFO: Fore.BLUE,
        logging.WARNING: Fore.CYAN,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.MAGENTA + Style.BRIGHT,
    }

_PLAIN_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(message)s"


# --------------------------------------------
# Custom Formatter with Colour Support
# --------------------------------------------
class ColorFormatter(logging.Formatter):

    def format(self, record):
        record.asctime = self.formatTime(record, self.datefmt)
        record.message = record.getMessage()

        color = LEVEL_COLOURS.get(record.levelno, "")
        level = f"{color}{record.levelname:<7}{Style.RESET_ALL}"
        formatted = f"| {level} | {color}{record.asctime} {Style.RESET_ALL}| {color}{record.message}"
        if record.exc_info:
            formatted += "\n" + self.formatException(record.exc_info)
        return formatted


class StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is at emit time (survives stream redirection)."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


# --------------------------------------------
# Logger Implementation
# --------------------------------------------
class SuperPopLogger:
    """Coloured console logger for the superpop namespace.

    Console output goes to stderr so that JSON written to stdout stays parseable.
    """

    def __init__(self, name=LOGGER_NAME, level=logging.INFO):
        self._logger = logging.getLogger(name)
        self._logger.setLevel(level)
        self._console = None
        self._file = None

    def configure(self, level="INFO", log_to_file=False, file_path="superpop.log"):
        """(Re)attach the console handler and an optional file handler."""
        if isinstance(level, str):
            level = logging.getLevelName(level.upper())
            if not isinstance(level, int):
                level = logging.INFO
        self._logger.setLevel(level)

        if self._console is None:
            self._console = StderrHandler()
            self._console.setFormatter(ColorFormatter(_PLAIN_FORMAT, datefmt="%H:%M:%S"))
            self._logger.addHandler(self._console)
        self._console.setLevel(level)

        if log_to_file and self._file is None:
            self._file = logging.FileHandler(file_path)
            self._file.setFormatter(logging.Formatter(_PLAIN_FORMAT))
            self._logger.addHandler(self._file)
        if self._file is not None:
            self._file.setLevel(level)
        return self

    # -------------------------------------------------
    # Logging methods
    # -------------------------------------------------
    def debug(self, msg, *args, **kwargs):
        self._logger.debug(msg, *args, **kwargs)

    def info(self, msg, *args, **kwargs):
        self._logger.info(msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        self._logger.warning(msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        self._logger.error(msg, *args, **kwargs)

    def critical(self, msg, *args, **kwargs):
        self._logger.critical(msg, *args, **kwargs)

    def exception(self, msg, *args, **kwargs):
        self._logger.exception(msg, *args, **kwargs)

    def enable_debug(self, enable: bool):
        global DEBUG_ENABLE
        DEBUG_ENABLE = enable
        if enable:
            self._logger.setLevel(logging.DEBUG)
            if self._console is not None:
                self._console.setLevel(logging.DEBUG)


# --------------------------------------------
# Global Logger Instance
# --------------------------------------------
sp_logger = SuperPopLogger()
DEBUG_ENABLE = False

_MAX_REPR = 80


def configure_logging(level="INFO", log_file=None):
    """Attach handlers once; called by the CLI and the SuperPop facade."""
    sp_logger.configure(level, log_to_file=bool(log_file), file_path=log_file or "superpop.log")
    sp_logger.enable_debug(str(level).upper() == "DEBUG")
    return sp_logger


# --------------------------------------------
# Decorator for function tracing
# --------------------------------------------
def debug_log(func):
    """Decorator to log function calls with class name, arguments, and return value."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        if not DEBUG_ENABLE:
            return func(*args, **kwargs)
        cls_name = ""
        if args:
            first = args[0]
            if inspect.isclass(first):  # classmethod
                cls_name = f"{first.__name__}."

        sig = inspect.signature(func)
        bound = sig.bind_partial(*args, **kwargs)
        bound.apply_defaults()

        def format_value(v):
            if isinstance(v, (list, tuple, set, dict, int, float, str, bool, type(None))):
                text = repr(v)
                return text if len(text) <= _MAX_REPR else text[:_MAX_REPR] + "..."
            else:
                return f"<{type(v).__name__}>"

        formatted_args = ", ".join(f"{k}={format_value(v)}" for k, v in bound.arguments.items())

        sp_logger.debug(f"{cls_name}{func.__name__}({formatted_args}) called")

        result = func(*args, **kwargs)

        sp_logger.debug(f"{cls_name}{func.__name__} → {format_value(result)}")
        return result

    return wrapper
