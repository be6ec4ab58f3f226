"""
把 Γ∖{e} 的 Fox 染色提升为断开图表在 Z/n × Z2 关联 quandle 下的染色：
非切边弧取 (fox, 1)（实线），切边上的弧取 (顶点处的 X, 0)（虚线）
"""

import logging

from ..algebra.gfamily import AssociatedQuandle, associated_quandle, dihedral_gfamily
from ..diagram.surgery import broken_ends, extract_subdiagram_with_map
from ..errors import LiftError
from ..models.dataclasses import Coloring
from ..models.diagram import Diagram, NodeKind, Slot, VERTEX_ROLES
from .solver import check_coloring, first_coloring

logger = logging.getLogger(__name__)


def complement_of_cut(b: Diagram) -> tuple[str, Diagram, dict[str, str]]:
    """
    断开图表中被切的图边及其补图

    :return: (切边, Γ∖{e} 的图表, b 中非切边弧 -> 补图弧)
    """
    _, arc_in, _, _ = broken_ends(b)
    cut = b.arc_edge[arc_in]
    rest = [e.id for e in b.edges if e.id != cut]
    if not rest:
        raise LiftError(f"图边 {cut} 之外没有其他图边", None)
    complement, provenance = extract_subdiagram_with_map(b, rest)
    return cut, complement, provenance


def _vertex_x(b: Diagram, vertex: str, cut: str, fox: dict[str, int], provenance: dict[str, str]) -> int:
    for role in VERTEX_ROLES:
        arc_id, _ = b.arc_at(Slot(vertex, role))
        if b.arc_edge[arc_id] != cut:
            return fox[provenance[arc_id]]
    raise LiftError(f"顶点 {vertex} 的三条腿都在切边上", vertex)


def lift_fox_to_spin(b: Diagram, fox: Coloring, n: int) -> Coloring:
    """
    构造提升染色并用 check_coloring 复核

    :param b: 沿 e 断开的图表
    :param fox: complement_of_cut(b) 给出的补图上的 Fox n-染色
    :param n: 模数
    :raises LiftError: 无法得到一致染色，node 为首个违例节点
    """
    cut, _, provenance = complement_of_cut(b)
    q: AssociatedQuandle = associated_quandle(dihedral_gfamily(n))
    fox_values = fox.as_dict()
    chain = b.edge_map[cut].arcs
    first, last = b.arc_map[chain[0]], b.arc_map[chain[-1]]
    if b.node_map[first.tail.node].kind is not NodeKind.VERTEX or b.node_map[last.head.node].kind is not NodeKind.VERTEX:
        raise LiftError(f"切边 {cut} 两端须为顶点", cut)
    x_start = _vertex_x(b, first.tail.node, cut, fox_values, provenance)
    x_end = _vertex_x(b, last.head.node, cut, fox_values, provenance)

    values: dict[str, int] = {}
    for arc in b.arcs:
        if b.arc_edge[arc.id] != cut:
            values[arc.id] = q.element(fox_values[provenance[arc.id]], 1)
    start_side = True
    for arc_id in chain:
        values[arc_id] = q.element(x_start if start_side else x_end, 0)
        head = b.arc_map[arc_id].head
        if b.node_map[head.node].kind is NodeKind.ENDPOINT:
            start_side = False
    lifted = Coloring.from_dict(values, q.carrier_size)
    violations = check_coloring(b, q, lifted)
    if not violations:
        return lifted

    # 切边从下方穿过实线弧时 X 会变化，交给求解器沿切边传播
    boundary = {a: v for a, v in values.items() if b.arc_edge[a] != cut}
    boundary[chain[0]] = values[chain[0]]
    boundary[chain[-1]] = values[chain[-1]]
    solved = first_coloring(b, q, boundary)
    if solved is None:
        raise LiftError(f"Fox 染色无法提升: {violations[0]}", violations[0].node)
    logger.debug(f"切边 {cut} 的提升经传播补全")
    return solved
