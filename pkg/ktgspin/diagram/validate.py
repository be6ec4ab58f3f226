"""
图表校验
违例作为数据返回，不抛出异常
"""

import logging
from collections import Counter, defaultdict

from ..models.dataclasses import ValidationReport, Violation
from ..models.diagram import (
    Diagram,
    NodeKind,
    Slot,
    STRAND_OUT,
)

logger = logging.getLogger(__name__)


def validate(d: Diagram) -> ValidationReport:
    """
    检查图表的全部不变量

    :param d: 待检查图表
    :return: ValidationReport，violations 为空表示合法
    """
    violations: list[Violation] = []
    violations += _check_slots(d)
    violations += _check_partition(d)
    if not violations:
        # 槽位与划分合法后链检查才有意义
        violations += _check_chains(d)
        violations += _check_endpoints(d)
    if violations:
        logger.debug(f"图表校验发现 {len(violations)} 处违例")
    return ValidationReport(tuple(violations))


def _check_slots(d: Diagram) -> list[Violation]:
    violations: list[Violation] = []
    usage: Counter[Slot] = Counter()
    for arc in d.arcs:
        for end in (arc.tail, arc.head):
            if end is None:
                continue
            node = d.node_map.get(end.node)
            if node is None:
                violations.append(Violation("unknown node", f"弧 {arc.id} 引用了不存在的节点 {end.node}", (arc.id, end.node)))
                continue
            if end.role not in node.kind.roles:
                violations.append(Violation("bad slot", f"弧 {arc.id} 使用了非法槽位 {end}", (arc.id, end.node)))
                continue
            usage[end] += 1
        if (arc.tail is None) != (arc.head is None):
            violations.append(Violation("dangling arc", f"弧 {arc.id} 只有一端连接节点", (arc.id,)))
    for node in d.nodes:
        if node.kind is NodeKind.CROSSING and node.sign not in (1, -1):
            violations.append(Violation("bad sign", f"交叉 {node.id} 的符号为 {node.sign}", (node.id,)))
        for role in node.kind.roles:
            used = usage[Slot(node.id, role)]
            if used > 1:
                violations.append(Violation("slot reused", f"槽位 {node.id}.{role} 被使用 {used} 次", (node.id,)))
            elif used == 0:
                violations.append(Violation("slot unused", f"槽位 {node.id}.{role} 未被使用", (node.id,)))
    return violations


def _check_partition(d: Diagram) -> list[Violation]:
    violations: list[Violation] = []
    owners: defaultdict[str, list[str]] = defaultdict(list)
    for edge in d.edges:
        if not edge.arcs:
            violations.append(Violation("empty edge", f"图边 {edge.id} 没有弧", (edge.id,)))
        for arc_id in edge.arcs:
            owners[arc_id].append(edge.id)
            if arc_id not in d.arc_map:
                violations.append(Violation("undeclared arc", f"图边 {edge.id} 引用了未声明的弧 {arc_id}", (edge.id, arc_id)))
    for arc in d.arcs:
        if not owners[arc.id]:
            violations.append(Violation("arc without edge", f"弧 {arc.id} 不属于任何图边", (arc.id,)))
        elif len(owners[arc.id]) > 1:
            violations.append(Violation("arc in several edges", f"弧 {arc.id} 属于 {owners[arc.id]}", (arc.id,)))
    return violations


def _joins(d: Diagram, prev_id: str, next_id: str) -> bool:
    """相邻两弧是否沿同一股穿过交叉，或在端点处断开"""
    head = d.arc_map[prev_id].head
    tail = d.arc_map[next_id].tail
    if head is None or tail is None:
        return False
    head_kind = d.node_map[head.node].kind
    if head_kind is NodeKind.ENDPOINT:
        return d.node_map[tail.node].kind is NodeKind.ENDPOINT and head.node != tail.node
    if head_kind is not NodeKind.CROSSING:
        return False
    return tail.node == head.node and STRAND_OUT.get(head.role) == tail.role


def _check_chains(d: Diagram) -> list[Violation]:
    violations: list[Violation] = []
    for edge in d.edges:
        chain = edge.arcs
        first = d.arc_map[chain[0]]
        if first.is_free_loop:
            if len(chain) != 1:
                violations.append(Violation("chain broken", f"图边 {edge.id} 含自由圈与其他弧", (edge.id,)))
            continue
        for prev_id, next_id in zip(chain, chain[1:]):
            if not _joins(d, prev_id, next_id):
                violations.append(Violation("chain broken", f"图边 {edge.id} 在 {prev_id} -> {next_id} 处不连续", (edge.id, prev_id, next_id)))
        start_kind = d.node_map[first.tail.node].kind
        last = d.arc_map[chain[-1]]
        if start_kind is NodeKind.CROSSING:
            # 闭合分支：末弧须经同一股回到首弧
            if not _joins(d, last.id, first.id):
                violations.append(Violation("chain broken", f"闭合图边 {edge.id} 首尾不相接", (edge.id,)))
        elif d.node_map[last.head.node].kind is NodeKind.CROSSING:
            violations.append(Violation("chain broken", f"图边 {edge.id} 终止于交叉", (edge.id,)))
    return violations


def _check_endpoints(d: Diagram) -> list[Violation]:
    endpoints = d.endpoints
    if not endpoints:
        return []
    if len(endpoints) != 2:
        return [Violation("endpoint count", f"端点数为 {len(endpoints)}，应为 0 或 2", tuple(n.id for n in endpoints))]
    edges = set()
    directions = set()
    for node in endpoints:
        found = d.arc_at(Slot(node.id, "0"))
        if found is not None:
            edges.add(d.arc_edge[found[0]])
            directions.add(found[1])
    violations = []
    if len(edges) != 1:
        violations.append(Violation("endpoints on different edges", f"端点位于不同图边 {sorted(edges)}", tuple(sorted(edges))))
    if directions != {"head", "tail"}:
        violations.append(Violation("endpoint direction", "两个端点须一进一出", tuple(n.id for n in endpoints)))
    return violations
