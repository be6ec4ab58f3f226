"""
图表同构与标识符无关的哈希
图表被编码为带标签的有向图，交给 networkx 做同构判定与 Weisfeiler-Lehman 哈希
"""

import networkx as nx
from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match

from ..models.diagram import Diagram, NodeKind, Slot

_NODE_MATCH = categorical_node_match("label", None)
_EDGE_MATCH = categorical_edge_match("label", None)


def _attach(graph: nx.DiGraph, d: Diagram, arc_node: tuple, end: Slot, direction: str) -> None:
    kind = d.node_map[end.node].kind
    if kind is NodeKind.VERTEX:
        graph.add_edge(arc_node, ("s", end.node, end.role), label=direction)
    elif kind is NodeKind.CROSSING:
        graph.add_edge(arc_node, ("n", end.node), label=f"{direction}:{end.role}")
    else:
        graph.add_edge(arc_node, ("n", end.node), label=direction)


def diagram_graph(d: Diagram) -> nx.DiGraph:
    """
    图表的标签有向图编码

    节点：图表节点（类型与符号）、顶点槽位（按循环顺序连成环）、弧、图边
    边：弧的首尾连接（交叉处带槽位角色）、弧所属图边
    """
    graph = nx.DiGraph()
    for node in d.nodes:
        graph.add_node(("n", node.id), label=f"{node.kind.value}{node.sign:+d}")
        if node.kind is NodeKind.VERTEX:
            roles = node.kind.roles
            for i, role in enumerate(roles):
                slot = ("s", node.id, role)
                graph.add_node(slot, label="slot")
                graph.add_edge(("n", node.id), slot, label="has")
                graph.add_edge(slot, ("s", node.id, roles[(i + 1) % len(roles)]), label="next")
    for edge in d.edges:
        graph.add_node(("e", edge.id), label="edge")
        for arc_id in edge.arcs:
            graph.add_edge(("a", arc_id), ("e", edge.id), label="in")
    for arc in d.arcs:
        arc_node = ("a", arc.id)
        graph.add_node(arc_node, label="loop" if arc.is_free_loop else "arc")
        if arc.tail is not None:
            _attach(graph, d, arc_node, arc.tail, "tail")
        if arc.head is not None:
            _attach(graph, d, arc_node, arc.head, "head")
    return graph


def is_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    """
    两图表是否仅相差标识符重命名（保持节点类型、符号、顶点循环顺序与图边划分）
    """
    if (len(d1.nodes), len(d1.arcs), len(d1.edges)) != (len(d2.nodes), len(d2.arcs), len(d2.edges)):
        return False
    return nx.is_isomorphic(
        diagram_graph(d1),
        diagram_graph(d2),
        node_match=_NODE_MATCH,
        edge_match=_EDGE_MATCH,
    )


def diagram_hash(d: Diagram) -> str:
    """同构不变的确定性哈希；同构图表哈希相同，反之不保证"""
    return nx.weisfeiler_lehman_graph_hash(
        diagram_graph(d), node_attr="label", edge_attr="label", iterations=4
    )
