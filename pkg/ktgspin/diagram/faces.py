"""
旋转系统与面
交叉的逆时针槽位顺序由符号决定（正交叉：下股从上股右侧穿到左侧），顶点的声明顺序按顺时针解释（与顶点染色条件中 G 分量乘积的顺序一致）。
面沿 "面在左侧" 的方向追踪：到达槽位 s 后，从 s 的逆时针前驱槽位离开。
"""

from typing import Sequence

import networkx as nx

from ..models.diagram import (
    Diagram,
    Node,
    NodeKind,
    Slot,
    OVER_IN,
    OVER_OUT,
    UNDER_IN,
    UNDER_OUT,
    VERTEX_ROLES,
)

CCW_POSITIVE = (OVER_OUT, UNDER_OUT, OVER_IN, UNDER_IN)
CCW_NEGATIVE = (OVER_OUT, UNDER_IN, OVER_IN, UNDER_OUT)
VERTEX_CCW = tuple(reversed(VERTEX_ROLES))

# (弧, 是否沿弧方向)
Dart = tuple[str, bool]


def rotation(node: Node) -> tuple[str, ...]:
    """节点处槽位的逆时针顺序"""
    if node.kind is NodeKind.CROSSING:
        return CCW_POSITIVE if node.sign > 0 else CCW_NEGATIVE
    if node.kind is NodeKind.VERTEX:
        return VERTEX_CCW
    return ("0",)


def sign_for_rotation(roles_ccw: Sequence[str]) -> int:
    """
    由交叉四个槽位的逆时针顺序求符号

    :raises ValueError: 顺序不对应任何交叉
    """
    roles = list(roles_ccw)
    start = roles.index(OVER_OUT)
    rotated = tuple(roles[start:] + roles[:start])
    if rotated == CCW_POSITIVE:
        return 1
    if rotated == CCW_NEGATIVE:
        return -1
    raise ValueError(f"槽位顺序 {roles} 不是交叉")


def ccw_next(role: str) -> str:
    """顶点槽位的逆时针后继"""
    return VERTEX_CCW[(VERTEX_CCW.index(role) + 1) % len(VERTEX_CCW)]


def arrival(d: Diagram, dart: Dart) -> Slot:
    arc = d.arc_map[dart[0]]
    return arc.head if dart[1] else arc.tail


def departure(d: Diagram, dart: Dart) -> Slot:
    arc = d.arc_map[dart[0]]
    return arc.tail if dart[1] else arc.head


def faces(d: Diagram) -> list[tuple[Dart, ...]]:
    """
    全部面，每个面是沿边界（面在左侧）排列的 dart 序列，从自然顺序最小的 dart 开始；自由圈不参与
    """
    leaving: dict[Slot, Dart] = {}
    darts: list[Dart] = []
    for arc in d.arcs:
        if arc.is_free_loop:
            continue
        leaving[arc.tail] = (arc.id, True)
        leaving[arc.head] = (arc.id, False)
        darts += [(arc.id, True), (arc.id, False)]
    seen: set[Dart] = set()
    result: list[tuple[Dart, ...]] = []
    for start in darts:
        if start in seen:
            continue
        face: list[Dart] = []
        current = start
        while current not in seen:
            seen.add(current)
            face.append(current)
            slot = arrival(d, current)
            roles = rotation(d.node_map[slot.node])
            previous = roles[roles.index(slot.role) - 1]
            current = leaving[Slot(slot.node, previous)]
        result.append(tuple(face))
    return result


def genus(d: Diagram) -> int:
    """
    旋转系统所确定曲面的亏格之和；平面图表为 0
    """
    graph = nx.MultiGraph()
    graph.add_nodes_from(n.id for n in d.nodes)
    arcs = [a for a in d.arcs if not a.is_free_loop]
    for arc in arcs:
        graph.add_edge(arc.tail.node, arc.head.node)
    components = nx.number_connected_components(graph) if d.nodes else 0
    euler = len(d.nodes) - len(arcs) + len(faces(d))
    return (2 * components - euler) // 2


def face_nodes(d: Diagram, face: tuple[Dart, ...]) -> list[str]:
    """面的角点（按边界顺序，每个 dart 的起点）"""
    return [departure(d, dart).node for dart in face]
