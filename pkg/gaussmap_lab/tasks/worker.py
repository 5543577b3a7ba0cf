import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Optional, TypeVar

from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import ConfigError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def worker_count(threads: Optional[int] = None) -> int:
    count = settings.THREADS if threads is None else threads
    if count < 1:
        raise ConfigError("threads must be at least 1", threads=count)
    return count


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> list[R]:
    """Ordered map over a thread pool capped by GAUSSMAP_LAB_THREADS.

    Results come back in input order whatever the completion order was.
    """
    batch = list(items)
    workers = min(worker_count(threads), len(batch))
    if workers <= 1:
        return [fn(item) for item in batch]

    logger.debug("parallel map", extra={"items": len(batch), "workers": workers})
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="gaussmap") as pool:
        return list(pool.map(fn, batch))


__all__ = ["parallel_map", "worker_count"]
