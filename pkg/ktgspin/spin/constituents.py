"""
组成分支报告与 almost trivial 检查
"""

import dataclasses
import itertools
import logging
from typing import Optional

import networkx as nx

from ..config import SpinOptions
from ..coloring.fox import fox_colorings
from ..diagram.surgery import (
    abstract_graph,
    constituent_cycles,
    extract_subdiagram,
    require_closed,
    require_edge,
    vertex_free_edges,
)
from ..models.dataclasses import ConstituentEntry, ConstituentReport, FoxResult
from ..models.diagram import Diagram
from ..moves.search import simplify

logger = logging.getLogger(__name__)

SPHERE = "sphere"
TORUS = "torus"
TRIVIAL = "trivial"
UNKNOWN = "unknown"
KNOTTED_CERTIFIED = "knotted-certified"

# 平面性判定与子图枚举的图边数上限
MAX_EXHAUSTIVE_EDGES = 12


def is_theta(d: Diagram) -> bool:
    """抽象图是否为 θ 曲线（两个顶点之间三条边）"""
    graph = abstract_graph(d)
    return (
        graph.number_of_nodes() == 2
        and graph.number_of_edges() == 3
        and len(d.edges) == 3
        and not any(u == v for u, v in graph.edges())
    )


def _fox_evidence(knot: Diagram, n_range: tuple[int, int]) -> Optional[FoxResult]:
    lo, hi = n_range
    for n in range(lo, hi + 1):
        result = fox_colorings(knot, n)
        if result.nontrivial:
            return result
    return None


def spin_constituents(d: Diagram, e: str, options: Optional[SpinOptions] = None) -> ConstituentReport:
    """
    沿 e 旋转后各组成分支的曲面类型

    含 e 的闭圈旋转为球面，其余闭圈为环面；θ 曲线的两个球面分支是平凡的。
    环面分支只附带其底层纽结的 Fox 证据，不断言平凡性。

    :raises BrokenDiagramError: 输入是断开图表
    :raises UnknownEdgeError: e 不是图边
    """
    options = options or SpinOptions.from_settings()
    require_closed(d)
    require_edge(d, e)
    theta = is_theta(d)
    entries: list[ConstituentEntry] = []
    for cycle in constituent_cycles(d):
        if e in cycle:
            entries.append(ConstituentEntry(cycle, SPHERE, TRIVIAL if theta else UNKNOWN))
            continue
        evidence = _fox_evidence(extract_subdiagram(d, cycle), options.n_range)
        triviality = KNOTTED_CERTIFIED if evidence is not None else UNKNOWN
        entries.append(ConstituentEntry(cycle, TORUS, triviality, evidence))
    return ConstituentReport(e, tuple(entries))


# ---------------- almost trivial ----------------
@dataclasses.dataclass(frozen=True)
class SubgraphCheck:
    # 保留的图边
    edges: tuple[str, ...]
    crossings: int
    final_crossings: int

    @property
    def unknotted(self) -> bool:
        return self.final_crossings == 0


@dataclasses.dataclass(frozen=True)
class AlmostTrivialReport:
    """
    planar 取值 yes / no / unknown；corollary_applies 表示平面性与全部真子图均已确认，
    Γ 自身的非平凡性不做判定（nontriviality_assumed）
    """

    planar: str
    subgraphs: tuple[SubgraphCheck, ...]
    corollary_applies: bool
    nontriviality_assumed: bool = True

    @property
    def all_unknotted(self) -> bool:
        return all(s.unknotted for s in self.subgraphs)


def _planarity(d: Diagram) -> str:
    if len(d.edges) > MAX_EXHAUSTIVE_EDGES:
        return "unknown"
    simple = nx.Graph()
    graph = abstract_graph(d)
    simple.add_nodes_from(graph.nodes)
    simple.add_edges_from((u, v) for u, v in graph.edges() if u != v)
    planar, _ = nx.check_planarity(simple)
    return "yes" if planar else "no"


def closed_proper_subgraphs(d: Diagram) -> list[tuple[str, ...]]:
    """删除非空真子集后不留下度数为 1 的顶点的保留边集合"""
    edges = [e.id for e in d.edges]
    graph = abstract_graph(d)
    free = set(vertex_free_edges(d))
    result: list[tuple[str, ...]] = []
    for size in range(len(edges) - 1, 0, -1):
        for keep in itertools.combinations(edges, size):
            sub = nx.MultiGraph()
            sub.add_edges_from((u, v, k) for u, v, k in graph.edges(keys=True) if k in keep and k not in free)
            if any(deg == 1 for _, deg in sub.degree()):
                continue
            result.append(keep)
    return result


def almost_trivial_check(d: Diagram, budget: Optional[int] = None) -> AlmostTrivialReport:
    """
    检查平面性并逐个化简真闭子图

    :param d: 合法闭合图表
    :param budget: 每个子图的化简预算
    """
    require_closed(d)
    planar = _planarity(d)
    checks: list[SubgraphCheck] = []
    if len(d.edges) <= MAX_EXHAUSTIVE_EDGES:
        for keep in closed_proper_subgraphs(d):
            sub = extract_subdiagram(d, keep)
            trace = simplify(sub, budget=budget)
            checks.append(SubgraphCheck(keep, sub.crossing_count, trace.final_crossings))
    applies = planar == "yes" and bool(checks) and all(c.unknotted for c in checks)
    logger.info(
        f"almost trivial 检查: planar={planar}, "
        f"{sum(c.unknotted for c in checks)}/{len(checks)} 个真子图化简到 0 个交叉"
    )
    return AlmostTrivialReport(planar, tuple(checks), applies)
