"""
Process fan-out for CPU-bound work (oracle shards, sweep points).

Results always come back in submission order, so callers that merge them
deterministically get the same output for any worker count.
"""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, Sequence

logger = logging.getLogger("adtcomp.parallel")


async def gather_in_processes(fn: Callable[..., Any], arg_list: Sequence[tuple], jobs: int = 1) -> list[Any]:
    """Run fn(*args) for every args tuple; with jobs > 1 in a process pool."""
    if jobs <= 1 or len(arg_list) <= 1:
        return await asyncio.to_thread(lambda: [fn(*args) for args in arg_list])
    loop = asyncio.get_running_loop()
    logger.debug(f"[parallel.gather_in_processes] {len(arg_list)} tasks on {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        tasks = [loop.run_in_executor(pool, fn, *args) for args in arg_list]
        return list(await asyncio.gather(*tasks))


def run_in_processes(fn: Callable[..., Any], arg_list: Sequence[tuple], jobs: int = 1) -> list[Any]:
    """Blocking wrapper for callers outside an event loop."""
    if jobs <= 1:
        return [fn(*args) for args in arg_list]
    return asyncio.run(gather_in_processes(fn, arg_list, jobs))


__all__ = ["gather_in_processes", "run_in_processes"]
