"""
判定进程池管理器
按图边并行执行相互独立的判定，结果按提交顺序返回
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Any, Callable, Generator, Iterable, Optional

from ..config import settings

logger = logging.getLogger(__name__)


class SpinWorkerPool:
    """
    判定进程池

    workers 为 1 时不创建进程，直接在当前进程中顺序执行。
    实例不在调用之间共享：每次批量判定各自创建并关闭自己的进程池

    使用示例:
    ```python
    pool = SpinWorkerPool()
    pool.init_pool(workers=4)
    results = pool.map_ordered(classify_one, [(d, "e1"), (d, "e2")])
    pool.close_pool()
    ```
    """

    def __init__(self, workers: Optional[int] = None):
        """
        Args:
            workers: 进程数，None 则使用 settings.workers
        """
        self._workers = workers
        self._executor: Optional[ProcessPoolExecutor] = None

    @property
    def workers(self) -> int:
        return self._workers or settings.workers

    @property
    def is_parallel(self) -> bool:
        return self._executor is not None

    def init_pool(self, workers: Optional[int] = None) -> None:
        """
        创建进程池

        Args:
            workers: 进程数，覆盖构造时的设置
        """
        if self._executor is not None:
            logger.warning("判定进程池已初始化，跳过重复初始化")
            return
        if workers is not None:
            self._workers = workers
        if self.workers > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.workers)
            logger.info(f"初始化判定进程池: workers={self.workers}")
        else:
            logger.debug("workers=1，判定在当前进程中顺序执行")

    def close_pool(self) -> None:
        """关闭进程池并等待进行中的任务"""
        if self._executor is None:
            return
        logger.info("正在关闭判定进程池...")
        self._executor.shutdown(wait=True)
        self._executor = None
        logger.info("判定进程池已关闭")

    @contextmanager
    def pooled(self, workers: Optional[int] = None) -> Generator["SpinWorkerPool", None, None]:
        """
        在上下文内保持进程池

        Example:
            ```python
            with SpinWorkerPool().pooled(workers=4) as pool:
                pool.map_ordered(func, jobs)
            ```
        """
        previous = self._workers
        self.init_pool(workers)
        try:
            yield self
        finally:
            self.close_pool()
            self._workers = previous

    def map_ordered(self, func: Callable[..., Any], jobs: Iterable[tuple]) -> list[Any]:
        """
        执行 func(*job)，按 jobs 的顺序返回结果

        Args:
            func: 模块级可序列化函数
            jobs: 参数元组序列
        """
        jobs = list(jobs)
        if self._executor is None:
            return [func(*job) for job in jobs]
        futures = [self._executor.submit(func, *job) for job in jobs]
        return [f.result() for f in futures]

