"""
±1 twist spin 判定
KNOTTED: Γ∖{e} 是单个闭圈且存在非平凡 Fox n-染色，提升为断开图表的一致染色作为见证；
UNKNOTTED: 端点下降后 Γ∖{e} 化简到 0 个交叉；
其余情况为 UNKNOWN 并附带诊断信息。
"""

import dataclasses
import logging
from typing import Optional

from ..algebra.gfamily import associated_quandle, dihedral_gfamily
from ..coloring.fox import find_fox_coloring, fox_colorings
from ..coloring.lift import complement_of_cut, lift_fox_to_spin
from ..coloring.solver import check_coloring, is_trivial_coloring
from ..config import SpinOptions, Verdict
from ..diagram.surgery import (
    complement_is_closed,
    complement_is_single_cycle,
    cut_edge,
    extract_subdiagram,
    mirror,
    require_closed,
    require_edge,
)
from ..errors import InvariantBreachError, NonClosedSubgraphError
from ..models.dataclasses import Coloring, FoxResult
from ..models.diagram import Diagram
from ..moves.mn import mn_endpoint_descend_with_record
from ..moves.search import SimplificationTrace, simplify

logger = logging.getLogger(__name__)

TAG_FOX_LIFT = "fox-lift"
TAG_UNKNOTTED_COMPLEMENT = "unknotted-complement"
TAG_NONE = "none"


@dataclasses.dataclass(frozen=True)
class KnottedWitness:
    """非平凡 Fox 染色及其在断开图表上的提升"""

    n: int
    fox: Coloring
    fox_result: FoxResult
    lift: Coloring
    broken: Diagram


@dataclasses.dataclass(frozen=True)
class UnknottedWitness:
    trace: SimplificationTrace
    # 端点下降中被变换的交叉
    descended: tuple[str, ...]


@dataclasses.dataclass(frozen=True)
class SpinDiagnostics:
    fox_counts: tuple[tuple[int, int], ...] = ()
    best_crossings: Optional[int] = None
    reason: str = ""


@dataclasses.dataclass(frozen=True)
class SpinCertificate:
    """
    单条图边的判定证书

    twist 为 +1 时 mirror 携带镜像图表（对应 -1 twist）的证书
    """

    verdict: Verdict
    edge: str
    theorem: str
    knotted: Optional[KnottedWitness] = None
    unknotted: Optional[UnknottedWitness] = None
    diagnostics: SpinDiagnostics = dataclasses.field(default_factory=SpinDiagnostics)
    twist: int = 1
    mirror: Optional["SpinCertificate"] = None


def _knotted_path(
    d: Diagram, e: str, broken: Diagram, options: SpinOptions
) -> tuple[Optional[KnottedWitness], list[tuple[int, int]]]:
    counts: list[tuple[int, int]] = []
    if not complement_is_single_cycle(d, e):
        return None, counts
    _, complement, _ = complement_of_cut(broken)
    lo, hi = options.n_range
    for n in range(lo, hi + 1):
        result = fox_colorings(complement, n)
        counts.append((n, result.count))
        if not result.nontrivial:
            continue
        fox = find_fox_coloring(complement, n)
        if fox is None:
            raise InvariantBreachError(f"Smith 标准形给出 {result.count} 个 Fox {n}-染色，求解器却找不到非平凡解")
        lift = lift_fox_to_spin(broken, fox, n)
        q = associated_quandle(dihedral_gfamily(n), verify=False)
        if check_coloring(broken, q, lift) or is_trivial_coloring(lift):
            raise InvariantBreachError(f"图边 {e} 的提升染色未通过复核")
        return KnottedWitness(n, fox, result, lift, broken), counts
    return None, counts


def _classify(d: Diagram, e: str, options: SpinOptions, twist: int) -> SpinCertificate:
    broken, descended = mn_endpoint_descend_with_record(cut_edge(d, e, options.cut_position))
    knotted, counts = _knotted_path(d, e, broken, options)
    if knotted is not None and not options.cross_check:
        return SpinCertificate(
            Verdict.KNOTTED, e, TAG_FOX_LIFT, knotted=knotted,
            diagnostics=SpinDiagnostics(tuple(counts)), twist=twist,
        )

    rest = [x.id for x in d.edges if x.id != e]
    if rest:
        complement = extract_subdiagram(broken, rest)
    else:
        # Γ∖{e} 为空：平凡成立
        complement = Diagram.build([], [], [])
    trace = simplify(complement, budget=options.budget, max_insertions=options.max_insertions)

    if trace.reached_zero:
        if knotted is not None:
            raise InvariantBreachError(f"图边 {e} 同时得到 KNOTTED 与 UNKNOTTED 证书")
        return SpinCertificate(
            Verdict.UNKNOTTED, e, TAG_UNKNOTTED_COMPLEMENT,
            unknotted=UnknottedWitness(trace, descended),
            diagnostics=SpinDiagnostics(tuple(counts), 0), twist=twist,
        )
    if knotted is not None:
        return SpinCertificate(
            Verdict.KNOTTED, e, TAG_FOX_LIFT, knotted=knotted,
            diagnostics=SpinDiagnostics(tuple(counts), trace.final_crossings), twist=twist,
        )

    reason = "Fox 染色全部平凡且化简未到 0 个交叉"
    if not complement_is_single_cycle(d, e):
        reason = "Γ∖{e} 不是单个闭圈，只尝试了化简"
    return SpinCertificate(
        Verdict.UNKNOWN, e, TAG_NONE,
        diagnostics=SpinDiagnostics(tuple(counts), trace.final_crossings, reason), twist=twist,
    )


def classify_spin(d: Diagram, e: str, options: Optional[SpinOptions] = None) -> SpinCertificate:
    """
    判定沿图边 e 的 ±1 twist spin

    :param d: 合法闭合图表
    :param e: 图边标识符
    :param options: 调用参数，默认由全局配置构建
    :return: SpinCertificate；with_mirror 时附带镜像证书
    :raises UnknownEdgeError: e 不是图边
    :raises NonClosedSubgraphError: 删除 e 后存在度数为 1 的顶点
    :raises InvariantBreachError: 两条判定路径同时成立
    """
    options = options or SpinOptions.from_settings()
    require_closed(d)
    require_edge(d, e)
    if not complement_is_closed(d, e):
        raise NonClosedSubgraphError(f"non-closed subgraph: 删除图边 {e} 后存在度数为 1 的顶点")

    certificate = _classify(d, e, options, twist=1)
    if options.with_mirror:
        mirrored = _classify(mirror(d), e, options, twist=-1)
        if {certificate.verdict, mirrored.verdict} == {Verdict.KNOTTED, Verdict.UNKNOTTED}:
            raise InvariantBreachError(f"图边 {e} 与其镜像的判定互相矛盾")
        certificate = dataclasses.replace(certificate, mirror=mirrored)
    logger.info(f"图边 {e}: {certificate.verdict.value} ({certificate.theorem})")
    return certificate
