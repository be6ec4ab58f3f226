from ktgspin.manager.spin_pool import SpinWorkerPool


def _square(x: int) -> int:
    return x * x


def test_serial_pool_runs_in_process():
    pool = SpinWorkerPool(workers=1)
    with pool.pooled() as p:
        assert not p.is_parallel
        assert p.map_ordered(_square, [(i,) for i in range(5)]) == [0, 1, 4, 9, 16]


def test_parallel_pool_keeps_order_and_closes():
    pool = SpinWorkerPool()
    with pool.pooled(workers=2) as p:
        assert p.is_parallel
        assert p.map_ordered(_square, [(i,) for i in range(8)]) == [i * i for i in range(8)]
    assert not pool.is_parallel
    pool.close_pool()


def test_pools_are_independent():
    first, second = SpinWorkerPool(2), SpinWorkerPool(2)
    with first.pooled():
        with second.pooled():
            pass
        assert first.is_parallel
        assert first.map_ordered(_square, [(3,)]) == [9]
