from logging.handlers import RotatingFileHandler
from pathlib import Path


def rotating_handler_factory(
    filename: str, max_bytes: int = 5_000_000, backupCount: int = 3
) -> RotatingFileHandler:
    Path(filename).parent.mkdir(parents=True, exist_ok=True)
    h = RotatingFileHandler(
        filename=filename,
        maxBytes=max_bytes,
        backupCount=backupCount,
        encoding="utf-8",
    )

    def namer(default_name: str) -> str:
        # run.log.1 -> run-1.log
        base, sep, idx = default_name.rpartition(".log.")
        return f"{base}-{idx}.log" if sep else default_name

    h.namer = namer
    return h
