"""
图表手术
切边 / 重新粘合 / 镜像 / 子图抽取 / 组成圈枚举
"""

import itertools
import logging
from typing import Iterable, Optional

import networkx as nx

from ..errors import (
    BrokenDiagramError,
    KtgInputError,
    NonClosedSubgraphError,
    NotBrokenError,
    PositionError,
    UnknownEdgeError,
)
from ..models.diagram import (
    CROSSING_ROLES,
    Diagram,
    Node,
    NodeKind,
    Slot,
    OVER_IN,
    SWAP_LEVEL,
    UNDER_IN,
)
from ..utils.str_utils import natural_key, sorted_ids
from .editor import DiagramEditor

logger = logging.getLogger(__name__)

ENDPOINT_PREFIX = "p"


def require_edge(d: Diagram, edge_id: str) -> None:
    if edge_id not in d.edge_map:
        raise UnknownEdgeError(f"图边 {edge_id} 不存在，可选: {', '.join(e.id for e in d.edges)}")


def require_closed(d: Diagram) -> None:
    if d.is_broken:
        raise BrokenDiagramError("该操作要求闭合图表")


# ---------------- 抽象图 ----------------
def abstract_graph(d: Diagram) -> nx.MultiGraph:
    """
    顶点为三价顶点、多重边为图边的抽象图；不含顶点的闭合分支不计入
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(v.id for v in d.vertices)
    for edge in d.edges:
        u, v = d.edge_vertices(edge.id)
        if u is not None and v is not None:
            graph.add_edge(u, v, key=edge.id)
    return graph


def vertex_free_edges(d: Diagram) -> list[str]:
    """不经过任何顶点的闭合分支"""
    return [e.id for e in d.edges if d.edge_vertices(e.id) == (None, None)]


def _is_cycle(graph: nx.MultiGraph, subset: tuple[str, ...]) -> bool:
    sub = nx.MultiGraph()
    for u, v, key in graph.edges(keys=True):
        if key in subset:
            sub.add_edge(u, v, key=key)
    # 自环在 networkx 中度数计为 2
    if any(deg != 2 for _, deg in sub.degree()):
        return False
    return nx.is_connected(sub)


def constituent_cycles(d: Diagram) -> list[tuple[str, ...]]:
    """
    枚举抽象图中的全部简单闭圈（组成纽结）

    :param d: 闭合图表
    :return: 图边标识符元组列表，按 (大小, 自然顺序) 排列
    """
    if d.is_broken:
        raise BrokenDiagramError("cycles undefined on broken diagram")
    graph = abstract_graph(d)
    graph_edges = sorted_ids(key for _, _, key in graph.edges(keys=True))
    cycles: list[tuple[str, ...]] = [(e,) for e in vertex_free_edges(d)]
    for size in range(1, len(graph_edges) + 1):
        for subset in itertools.combinations(graph_edges, size):
            if _is_cycle(graph, subset):
                cycles.append(subset)
    cycles.sort(key=lambda c: (len(c), [natural_key(e) for e in c]))
    return cycles


def complement_is_closed(d: Diagram, edge_id: str) -> bool:
    """删除图边后每个顶点的度数是否为 0 或 2"""
    graph = abstract_graph(d)
    u, v = d.edge_vertices(edge_id)
    if u is not None:
        graph.remove_edge(u, v, key=edge_id)
    return all(deg in (0, 2) for _, deg in graph.degree())


def complement_is_single_cycle(d: Diagram, edge_id: str) -> bool:
    """Γ∖{e} 是否恰为一个闭圈"""
    rest = tuple(e.id for e in d.edges if e.id != edge_id)
    if not rest or not complement_is_closed(d, edge_id):
        return False
    free = [e for e in rest if e in vertex_free_edges(d)]
    if free:
        return len(rest) == 1
    return _is_cycle(abstract_graph(d), rest)


# ---------------- 切边 / 粘合 ----------------
def _is_cyclic(d: Diagram, edge_id: str) -> bool:
    first = d.arc_map[d.edge_map[edge_id].arcs[0]]
    return first.tail is None or d.node_map[first.tail.node].kind is NodeKind.CROSSING


def default_cut_position(d: Diagram, edge_id: str) -> int:
    return len(d.edge_map[edge_id].arcs) // 2


def cut_edge(d: Diagram, edge_id: str, position: Optional[int] = None) -> Diagram:
    """
    在图边的某条弧上切开，得到带两个端点的断开图表

    :param d: 闭合图表
    :param edge_id: 被切的图边
    :param position: 弧在图边链中的下标，默认取中间
    :return: 断开图表；新弧从端点 Q 出发，原弧终止于端点 P
    """
    require_closed(d)
    require_edge(d, edge_id)
    chain = list(d.edge_map[edge_id].arcs)
    if position is None:
        position = default_cut_position(d, edge_id)
    if not 0 <= position < len(chain):
        raise PositionError(f"切割位置 {position} 越界，图边 {edge_id} 共 {len(chain)} 条弧")

    editor = DiagramEditor(d)
    arc_id = chain[position]
    end_p = editor.new_node_id(ENDPOINT_PREFIX)
    editor.nodes[end_p] = _endpoint(end_p)
    end_q = editor.new_node_id(ENDPOINT_PREFIX)
    editor.nodes[end_q] = _endpoint(end_q)

    tail, head = editor.arcs[arc_id]
    if tail is None:
        editor.arcs[arc_id] = [Slot(end_q, "0"), Slot(end_p, "0")]
    else:
        new_arc = editor.new_arc_id()
        editor.arcs[arc_id][1] = Slot(end_p, "0")
        editor.arcs[new_arc] = [Slot(end_q, "0"), head]
        if _is_cyclic(d, edge_id):
            editor.edges[edge_id] = [new_arc] + chain[position + 1 :] + chain[:position] + [arc_id]
        else:
            editor.edges[edge_id] = chain[: position + 1] + [new_arc] + chain[position + 1 :]
    logger.debug(f"在图边 {edge_id} 的弧 {arc_id} 处切开，端点 {end_p}/{end_q}")
    return editor.freeze()


def _endpoint(node_id: str) -> Node:
    return Node(node_id, NodeKind.ENDPOINT)


def broken_ends(d: Diagram) -> tuple[str, str, str, str]:
    """
    断开图表的两个端点

    :return: (P, 终止于 P 的弧, Q, 从 Q 出发的弧)
    """
    if len(d.endpoints) != 2:
        raise NotBrokenError("图表不是断开图表")
    end_p = end_q = arc_in = arc_out = None
    for node in d.endpoints:
        found = d.arc_at(Slot(node.id, "0"))
        if found is None:
            raise NotBrokenError(f"端点 {node.id} 未连接弧")
        if found[1] == "head":
            end_p, arc_in = node.id, found[0]
        else:
            end_q, arc_out = node.id, found[0]
    if end_p is None or end_q is None:
        raise NotBrokenError("两个端点须一进一出")
    return end_p, arc_in, end_q, arc_out


def cut_edge_of(d: Diagram) -> str:
    """断开图表中被切的图边"""
    _, arc_in, _, _ = broken_ends(d)
    return d.arc_edge[arc_in]


def reglue(d: Diagram) -> Diagram:
    """删除两个端点并把断开处拼接回一条弧"""
    end_p, arc_in, end_q, arc_out = broken_ends(d)
    editor = DiagramEditor(d)
    # 同一条弧时成为自由圈
    editor.splice(arc_in, arc_out)
    del editor.nodes[end_p]
    del editor.nodes[end_q]
    return editor.freeze()


# ---------------- 镜像 / 反向 ----------------
def mirror(d: Diagram) -> Diagram:
    """所有交叉上下互换并翻转符号"""
    editor = DiagramEditor(d)
    mapping = {
        Slot(c.id, role): Slot(c.id, SWAP_LEVEL[role])
        for c in d.crossings
        for role in CROSSING_ROLES
    }
    editor.relabel_slots(mapping)
    for c in d.crossings:
        editor.set_sign(c.id, -c.sign)
    return editor.freeze()


def reverse_edge(d: Diagram, edge_id: str) -> Diagram:
    require_edge(d, edge_id)
    editor = DiagramEditor(d)
    editor.reverse_edge(edge_id)
    return editor.freeze()


# ---------------- 子图抽取 ----------------
def extract_subdiagram(d: Diagram, keep: Iterable[str]) -> Diagram:
    return extract_subdiagram_with_map(d, keep)[0]


def extract_subdiagram_with_map(d: Diagram, keep: Iterable[str]) -> tuple[Diagram, dict[str, str]]:
    """
    保留给定图边，删除其余图边及其上的交叉，并抹平只剩两条腿的顶点

    :param d: 图表（闭合或断开）
    :param keep: 保留的图边集合
    :return: (子图表, 原弧 -> 子图表中代表弧 的映射)
    """
    keep = set(keep)
    if not keep:
        raise KtgInputError("保留的图边集合不能为空")
    for edge_id in sorted_ids(keep):
        require_edge(d, edge_id)

    editor = DiagramEditor(d)
    removed = {a for e in d.edges if e.id not in keep for a in e.arcs}
    for edge in d.edges:
        if edge.id in keep:
            continue
        for arc_id in edge.arcs:
            for end in editor.arcs.pop(arc_id):
                if end is not None and d.node_map[end.node].kind is NodeKind.ENDPOINT:
                    del editor.nodes[end.node]
        del editor.edges[edge.id]

    for crossing in d.crossings:
        over_gone = d.head_at[Slot(crossing.id, OVER_IN)] in removed
        under_gone = d.head_at[Slot(crossing.id, UNDER_IN)] in removed
        if over_gone and under_gone:
            del editor.nodes[crossing.id]
        elif over_gone or under_gone:
            editor.drop_strand_at(crossing.id, over=over_gone)

    for vertex in d.vertices:
        _settle_vertex(editor, vertex.id)

    provenance = {
        a.id: editor.resolve(a.id) for a in d.arcs if a.id not in removed
    }
    return editor.freeze(), provenance


def _settle_vertex(editor: DiagramEditor, vertex: str) -> None:
    legs: list[tuple[str, int]] = []
    for arc_id, ends in editor.arcs.items():
        for index in (0, 1):
            if ends[index] is not None and ends[index].node == vertex:
                legs.append((arc_id, index))
    if len(legs) == 3:
        return
    if len(legs) == 1:
        raise NonClosedSubgraphError(f"non-closed subgraph: 顶点 {vertex} 只剩一个边端")
    if len(legs) == 2:
        (arc_a, end_a), (arc_b, end_b) = legs
        if end_a == end_b:
            # 两条腿同向：反转自然顺序靠后的图边
            edge_a, edge_b = editor.edge_of(arc_a), editor.edge_of(arc_b)
            later = max(edge_a, edge_b, key=natural_key)
            editor.reverse_edge(later)
            return _settle_vertex(editor, vertex)
        arc_in, arc_out = (arc_a, arc_b) if end_a == 1 else (arc_b, arc_a)
        edge_in, edge_out = editor.edge_of(arc_in), editor.edge_of(arc_out)
        editor.splice(arc_in, arc_out)
        editor.merge_edges(edge_in, edge_out)
    del editor.nodes[vertex]
