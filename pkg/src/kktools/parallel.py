"""Deterministic chunked parallelism for the verification sweeps.

Workers are top-level functions taking one picklable argument; results come
back in chunk order, so merged reports do not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def run_chunked(worker, chunks, jobs: int):
    if jobs <= 1 or len(chunks) <= 1:
        return [worker(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
        return list(pool.map(worker, chunks))
