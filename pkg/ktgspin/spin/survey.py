"""
逐边判定汇总
"""

import logging
from typing import Optional

from ..config import SpinOptions, Verdict
from ..diagram.surgery import complement_is_closed, require_closed
from ..manager.spin_pool import SpinWorkerPool
from ..models.diagram import Diagram
from .classifier import TAG_NONE, SpinCertificate, SpinDiagnostics, classify_spin

logger = logging.getLogger(__name__)


def _classify_edge(d: Diagram, e: str, options: SpinOptions) -> SpinCertificate:
    if not complement_is_closed(d, e):
        return SpinCertificate(
            Verdict.UNKNOWN, e, TAG_NONE,
            diagnostics=SpinDiagnostics(reason="删除该边后存在度数为 1 的顶点"),
        )
    return classify_spin(d, e, options)


def all_spins(
    d: Diagram, options: Optional[SpinOptions] = None, workers: Optional[int] = None
) -> list[SpinCertificate]:
    """
    对每条图边执行 classify_spin，按图边的自然顺序返回

    :param workers: 进程数，大于 1 时并行
    """
    require_closed(d)
    options = options or SpinOptions.from_settings()
    jobs = [(d, edge.id, options) for edge in d.edges]
    with SpinWorkerPool(workers).pooled() as pool:
        certificates = pool.map_ordered(_classify_edge, jobs)
    summary = ", ".join(f"{c.edge}={c.verdict.value}" for c in certificates)
    logger.info(f"逐边判定: {summary}")
    return certificates
