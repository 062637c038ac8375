"""
Logging setup for the command line.

The library only creates module loggers; handlers are installed here, on
stderr, so that standard output stays machine-readable.
"""
import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

def configure_logging(verbosity: int=0) -> None:
    """
    Install a stderr handler on the `schublines` logger.

    Parameters:
    - verbosity (int): 0 for warnings, 1 for info, 2 or more for debug.
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    root = logging.getLogger("schublines")
    root.setLevel(level)
    if not any(getattr(h, "_schublines", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._schublines = True
        root.addHandler(handler)
