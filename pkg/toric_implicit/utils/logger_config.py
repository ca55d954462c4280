import logging
import logging.handlers
import os
import queue

from toric_implicit.config import LOG_DIR, LOG_LEVEL

_RECORD_FIELDS = set(vars(logging.makeLogRecord({}))) | {"message", "asctime", "taskName"}


class ContextFormatter(logging.Formatter):
    """Appends the ``extra={...}`` fields of a record as sorted key=value pairs."""

    def formatMessage(self, record: logging.LogRecord) -> str:
        text = super().formatMessage(record)
        context = {k: v for k, v in vars(record).items() if k not in _RECORD_FIELDS}
        if context:
            text += " | " + " ".join(f"{k}={v}" for k, v in sorted(context.items()))
        return text


def get_logger(name: str, log_level=None, log_dir=None, log_file="toric_implicit.log"):
    """Queue-backed logger writing to stderr and, when a log dir is configured, a rotating file."""
    log_level = log_level or getattr(logging, LOG_LEVEL, logging.INFO)
    log_dir = LOG_DIR if log_dir is None else log_dir

    logger = logging.getLogger(f"toric_implicit.{name}")
    logger.setLevel(log_level)
    logger.propagate = False

    if not logger.handlers:
        log_queue = queue.Queue(-1)  # unbounded
        queue_handler = logging.handlers.QueueHandler(log_queue)

        handlers = []
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                os.path.join(log_dir, log_file), maxBytes=5 * 1024 * 1024, backupCount=5
            )
            file_handler.setFormatter(ContextFormatter(
                "%(asctime)s | %(levelname)s | %(name)s | %(filename)s:%(lineno)d | %(message)s"
            ))
            handlers.append(file_handler)

        # stderr keeps CLI stdout machine-readable
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(ContextFormatter(
            "[%(asctime)s] [%(levelname)s] %(name)s: %(message)s", "%Y-%m-%d %H:%M:%S"
        ))
        handlers.append(console_handler)

        listener = logging.handlers.QueueListener(log_queue, *handlers, respect_handler_level=True)
        listener.start()

        logger.addHandler(queue_handler)

    return logger
