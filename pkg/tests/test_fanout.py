import threading
import time

from utils.fanout import WorkerPool, run_parallel


def test_results_keep_input_order():
    def slow_square(n):
        time.sleep(0.01 * (5 - n))
        return n * n

    assert run_parallel(slow_square, range(5), workers=3) == [0, 1, 4, 9, 16]


def test_empty_input():
    assert run_parallel(lambda n: n, [], workers=2) == []


async def test_pool_bounds_concurrency():
    lock = threading.Lock()
    active = 0
    peak = 0

    def work(n):
        nonlocal active, peak
        with lock:
            active += 1
            peak = max(peak, active)
        time.sleep(0.02)
        with lock:
            active -= 1
        return n

    pool = WorkerPool(workers=2)
    assert await pool.map(work, range(6)) == list(range(6))
    assert peak <= 2


def test_worker_floor():
    assert WorkerPool(workers=0).workers >= 1
