import os
import typing as t
import logging
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)

#: polygonization resolution of smooth planar bodies
DEFAULT_RESOLUTION = 4096
#: largest polygonization resolution tried before giving up
MAX_RESOLUTION = 65536
#: default absolute tolerance for volumes
DEFAULT_VOLUME_TOL = 1e-5
#: relative tolerance of Monte Carlo volumes when the caller gives no tolerance
MC_RTOL = 5e-3
#: Monte Carlo samples per batch, each batch has its own substream
MC_BATCH = 65536
#: Monte Carlo sample budget
MC_MAX_SAMPLES = 2 ** 23
#: quantile of the 95% two-sided normal interval
Z95 = 1.96
#: tangency guard for |<M,N>| at boundary crossings
EPS_TANGENT = 1e-8
DEFAULT_SEED = 0

THREADS_ENV = "CONVGEOM_THREADS"

T = t.TypeVar("T")
R = t.TypeVar("R")


def worker_count() -> int:
    """Number of worker threads, capped by the ``CONVGEOM_THREADS``
    environment variable."""
    default = min(8, os.cpu_count() or 1)
    value = os.environ.get(THREADS_ENV)
    if not value:
        return default
    try:
        count = int(value)
    except ValueError:
        logger.warning("Ignoring invalid %s=%r", THREADS_ENV, value)
        return default
    return max(1, count)


def parallel_map(func: t.Callable[[T], R], items: t.Sequence[T]) -> t.List[R]:
    """Map ``func`` over ``items`` on a thread pool. Results keep the order
    of ``items``, so the outcome never depends on the worker count."""
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
