from concurrent.futures import ThreadPoolExecutor

from graphflow.constants import conf
from graphflow.logger.base import get_logger

log = get_logger('Workers')

_THREADS = max(1, conf.THREADS)


def set_threads(threads: int):
    global _THREADS
    assert threads >= 1, 'Thread count must be positive, got {}'.format(threads)
    _THREADS = threads


def get_threads() -> int:
    return _THREADS


def parallel_map(fn, items, threads=None) -> list:
    """Applies fn to every item. Results come back in input order whatever the
    thread count, so reductions over them are deterministic."""
    items = list(items)
    threads = threads or _THREADS
    if threads == 1 or len(items) < 2:
        return [fn(item) for item in items]

    log.spam('Mapping {} items over {} threads'.format(len(items), threads))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
