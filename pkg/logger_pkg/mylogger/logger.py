"""
Logger for long-running exact computations

Provides:
- per-level colored console output on stderr (stdout stays free for results)
- an optional plain-text log file
- message tags naming the operation that logged them, e.g. "[sigma_group_exact] ..."
- log_execution decorator and timer context manager reporting durations in ms

Level and log file default to the GYRO_LOG_LEVEL and GYRO_LOG_FILE
environment variables.
"""

import inspect
import logging
import os
import sys
import time
from contextlib import contextmanager
from functools import wraps
from pathlib import Path

from colorama import Fore, Style, init as colorama_init

colorama_init(autoreset=True, strip=False)

LEVEL_ENV = "GYRO_LOG_LEVEL"
FILE_ENV = "GYRO_LOG_FILE"

FILE_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
CONSOLE_FORMAT = "%(asctime)s | %(short_name)s | [%(levelname)s] %(message)s"

# function names that never make a useful tag
UNTAGGED = frozenset({"wrapper", "decorator", "timer", "main", "run", "<module>", "<lambda>"})


def resolve_level(level) -> int:
    """ Level name or number -> logging level, INFO when unknown """
    if level is None:
        level = os.environ.get(LEVEL_ENV, "INFO")
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).strip().upper())
    return resolved if isinstance(resolved, int) else logging.INFO


class ColoredFormatter(logging.Formatter):
    """ Console formatter: one color per level, module shown by its last two name parts """

    COLORS = {
        logging.DEBUG: Fore.CYAN,
        logging.INFO: Fore.GREEN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.MAGENTA,
    }

    def __init__(self):
        super().__init__(CONSOLE_FORMAT, datefmt="%H:%M:%S")

    def format(self, record):
        record.short_name = ".".join(record.name.split(".")[-2:])
        return f"{self.COLORS.get(record.levelno, '')}{super().format(record)}{Style.RESET_ALL}"


class Stopwatch:
    """ Elapsed time of a timed block, readable while it runs and after """

    def __init__(self):
        self.start = time.perf_counter()
        self.stop = None

    @property
    def elapsed_ms(self) -> float:
        end = self.stop if self.stop is not None else time.perf_counter()
        return (end - self.start) * 1000.0


class Logger:
    """ Module-level logger: `logger = Logger()` names itself after the importing module """

    def __init__(self, name: str = None, log_file: str = None, level=None):
        self.logger = logging.getLogger(name or self._caller_module())
        self.logger.propagate = False
        level = resolve_level(level)
        if not self.logger.handlers:
            for handler in self._build_handlers(log_file or os.environ.get(FILE_ENV) or None):
                self.logger.addHandler(handler)
        self.set_level(level)

    @staticmethod
    def _caller_module() -> str:
        frame = inspect.currentframe()
        caller = frame.f_back.f_back if frame and frame.f_back else None
        return caller.f_globals.get("__name__", "main") if caller else "main"

    @staticmethod
    def _build_handlers(log_file):
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(ColoredFormatter())
        yield console
        if log_file:
            path = Path(log_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(path, encoding="utf-8")
            file_handler.setFormatter(logging.Formatter(FILE_FORMAT, "%Y-%m-%d %H:%M:%S"))
            yield file_handler

    def set_level(self, level):
        """ Change the level of the logger and every handler """
        level = resolve_level(level)
        self.logger.setLevel(level)
        for handler in self.logger.handlers:
            handler.setLevel(level)

    # ---------------------- MESSAGES ----------------------

    @staticmethod
    def _tag(msg) -> str:
        """ Prefix msg with the first public, non-logging function on the stack """
        frame = sys._getframe(3)
        while frame is not None:
            code = frame.f_code
            if not (code.co_name.startswith("_") or code.co_name in UNTAGGED or "mylogger" in code.co_filename):
                return f"[{code.co_name}] {msg}"
            frame = frame.f_back
        return str(msg)

    def _log(self, level, msg, *args, **kwargs):
        if self.logger.isEnabledFor(level):
            kwargs.setdefault("stacklevel", 3)
            self.logger.log(level, self._tag(msg), *args, **kwargs)

    def debug(self, msg, *args, **kwargs):
        self._log(logging.DEBUG, msg, *args, **kwargs)

    def info(self, msg, *args, **kwargs):
        self._log(logging.INFO, msg, *args, **kwargs)

    def warning(self, msg, *args, **kwargs):
        self._log(logging.WARNING, msg, *args, **kwargs)

    def error(self, msg, *args, **kwargs):
        self._log(logging.ERROR, msg, *args, **kwargs)

    def critical(self, msg, *args, **kwargs):
        self._log(logging.CRITICAL, msg, *args, **kwargs)

    # ---------------------- TIMING ----------------------

    def log_execution(self, level="INFO"):
        """ Decorator: log when func starts and how long it took; failures are logged at DEBUG with traceback """
        numeric = resolve_level(level)

        def decorator(func):
            @wraps(func)
            def wrapper(*args, **kwargs):
                if not self.logger.isEnabledFor(numeric):
                    return func(*args, **kwargs)
                watch = Stopwatch()
                self.logger.log(numeric, f"[{func.__name__}] started")
                try:
                    result = func(*args, **kwargs)
                except Exception:
                    self.logger.debug(f"[{func.__name__}] failed after {watch.elapsed_ms:.2f}ms", exc_info=True)
                    raise
                self.logger.log(numeric, f"[{func.__name__}] finished in {watch.elapsed_ms:.2f}ms")
                return result
            return wrapper
        return decorator

    @contextmanager
    def timer(self, name="block", level="DEBUG"):
        """ Time a block: `with logger.timer("lp solve") as watch: ...` """
        watch = Stopwatch()
        try:
            yield watch
        finally:
            watch.stop = time.perf_counter()
            self.logger.log(resolve_level(level), f"[{name}] took {watch.elapsed_ms:.2f}ms")
