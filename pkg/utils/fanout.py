import asyncio
from typing import Callable, Iterable, Optional, TypeVar

from config import config
from logging_config import get_logger

logger = get_logger("fanout")

T = TypeVar("T")
R = TypeVar("R")


class WorkerPool:
    """
    Bounded fan-out of blocking work onto threads.
    Results come back in input order whatever the scheduling.
    """
    def __init__(self, workers: Optional[int] = None):
        self.workers = max(1, workers or config.WORKERS)
        self._semaphore = asyncio.Semaphore(self.workers)

    async def _one(self, fn: Callable[[T], R], item: T) -> R:
        async with self._semaphore:
            return await asyncio.to_thread(fn, item)

    async def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        items = list(items)
        logger.debug("Fan-out", extra={"data": {"items": len(items), "workers": self.workers}})
        return list(await asyncio.gather(*(self._one(fn, item) for item in items)))


def run_parallel(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> list[R]:
    async def _main():
        return await WorkerPool(workers).map(fn, items)
    return asyncio.run(_main())
