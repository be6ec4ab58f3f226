"""
图表编辑器
在可变副本上执行拼接、细分、删除交叉、边反向等基本手术，最后 freeze() 得到新的不可变图表
"""

import logging
from typing import Optional

from ..errors import MoveSiteError
from ..models.diagram import (
    Arc,
    Diagram,
    Edge,
    Node,
    NodeKind,
    Slot,
    OVER_IN,
    OVER_OUT,
    UNDER_IN,
    UNDER_OUT,
)
from ..utils.str_utils import fresh_id, natural_key

logger = logging.getLogger(__name__)

_REVERSE_ROLE = {OVER_IN: OVER_OUT, OVER_OUT: OVER_IN, UNDER_IN: UNDER_OUT, UNDER_OUT: UNDER_IN}


class DiagramEditor:
    """
    图表的可变工作副本

    使用示例:
    ```python
    editor = DiagramEditor(d)
    editor.remove_crossing("x1")
    result = editor.freeze()
    ```
    """

    def __init__(self, diagram: Diagram):
        self.nodes: dict[str, Node] = dict(diagram.node_map)
        # 弧 -> [tail, head]
        self.arcs: dict[str, list[Optional[Slot]]] = {
            a.id: [a.tail, a.head] for a in diagram.arcs
        }
        self.edges: dict[str, list[str]] = {e.id: list(e.arcs) for e in diagram.edges}
        self.name = diagram.name
        self.source = diagram.source
        # 被吸收的弧 -> 吸收它的弧
        self.absorbed: dict[str, str] = {}

    # ---------------- 查询 ----------------
    def head_of(self, slot: Slot) -> str:
        for arc_id, (_, head) in self.arcs.items():
            if head == slot:
                return arc_id
        raise MoveSiteError(f"槽位 {slot} 没有进入弧")

    def tail_of(self, slot: Slot) -> str:
        for arc_id, (tail, _) in self.arcs.items():
            if tail == slot:
                return arc_id
        raise MoveSiteError(f"槽位 {slot} 没有离开弧")

    def end_at(self, slot: Slot) -> tuple[str, bool]:
        """占用槽位的弧，以及该槽位是否是它的尾"""
        for arc_id, (tail, head) in self.arcs.items():
            if tail == slot:
                return arc_id, True
            if head == slot:
                return arc_id, False
        raise MoveSiteError(f"槽位 {slot} 未被占用")

    def edge_of(self, arc_id: str) -> str:
        for edge_id, chain in self.edges.items():
            if arc_id in chain:
                return edge_id
        raise MoveSiteError(f"弧 {arc_id} 不属于任何图边")

    def resolve(self, arc_id: str) -> str:
        """沿吸收链找到弧当前的代表"""
        while arc_id in self.absorbed:
            arc_id = self.absorbed[arc_id]
        return arc_id

    def new_arc_id(self) -> str:
        return fresh_id("a", list(self.arcs) + list(self.absorbed))

    def new_node_id(self, prefix: str) -> str:
        return fresh_id(prefix, self.nodes)

    # ---------------- 基本手术 ----------------
    def splice(self, arc_in: str, arc_out: str) -> str:
        """
        把 arc_out 并入 arc_in：arc_in 的头改为 arc_out 的头，删除 arc_out

        :param arc_in: 头部位于待删除节点的弧
        :param arc_out: 尾部位于待删除节点的弧
        :return: 保留下来的弧
        """
        if arc_in == arc_out:
            # 唯一的弧首尾相接，成为自由圈
            self.arcs[arc_in] = [None, None]
            return arc_in
        self.arcs[arc_in][1] = self.arcs[arc_out][1]
        del self.arcs[arc_out]
        self._drop_from_chain(arc_out)
        self.absorbed[arc_out] = arc_in
        return arc_in

    def _drop_from_chain(self, arc_id: str) -> None:
        for chain in self.edges.values():
            if arc_id in chain:
                chain.remove(arc_id)
                return

    def splice_strand(self, node: str, role_in: str, role_out: str) -> str:
        """拼接穿过节点 node 的一股（进入槽 role_in，离开槽 role_out）"""
        arc_in = self.head_of(Slot(node, role_in))
        arc_out = self.tail_of(Slot(node, role_out))
        return self.splice(arc_in, arc_out)

    def remove_crossing(self, crossing: str) -> None:
        """删除交叉并分别拼接上、下两股"""
        self.splice_strand(crossing, OVER_IN, OVER_OUT)
        self.splice_strand(crossing, UNDER_IN, UNDER_OUT)
        del self.nodes[crossing]

    def drop_strand_at(self, crossing: str, over: bool) -> None:
        """交叉的一股已被删除：删除交叉并拼接剩余一股"""
        if over:
            self.splice_strand(crossing, UNDER_IN, UNDER_OUT)
        else:
            self.splice_strand(crossing, OVER_IN, OVER_OUT)
        del self.nodes[crossing]

    def thread(self, arc_id: str, passes: list[tuple[str, str, str]]) -> list[str]:
        """
        让弧依次穿过若干新槽位，返回按方向排列的新弧链

        :param arc_id: 被细分的弧（保留为链的第一段）
        :param passes: [(节点, 进入槽, 离开槽), ...]，沿弧方向排列
        :return: 细分后的弧链
        """
        tail, head = self.arcs[arc_id]
        free_loop = tail is None and head is None
        # 自由圈首尾相接，段数等于穿过次数
        count = len(passes) if free_loop else len(passes) + 1
        ids = [arc_id]
        for _ in range(count - 1):
            new_id = self.new_arc_id()
            self.arcs[new_id] = [None, None]
            ids.append(new_id)
        for i, (node, role_in, role_out) in enumerate(passes):
            self.arcs[ids[i]][1] = Slot(node, role_in)
            self.arcs[ids[(i + 1) % count]][0] = Slot(node, role_out)
        if not free_loop:
            self.arcs[ids[0]][0] = tail
            self.arcs[ids[-1]][1] = head
        chain = self.edges[self.edge_of(arc_id)]
        pos = chain.index(arc_id)
        chain[pos : pos + 1] = ids
        return ids

    def add_crossing(self, sign: int, prefix: str = "x") -> str:
        node_id = self.new_node_id(prefix)
        self.nodes[node_id] = Node(node_id, NodeKind.CROSSING, sign)
        return node_id

    def set_sign(self, crossing: str, sign: int) -> None:
        node = self.nodes[crossing]
        self.nodes[crossing] = Node(node.id, node.kind, sign)

    def relabel_slots(self, mapping: dict[Slot, Slot]) -> None:
        """对所有弧端同时施加槽位置换"""
        for ends in self.arcs.values():
            for i in (0, 1):
                if ends[i] in mapping:
                    ends[i] = mapping[ends[i]]

    def reverse_edge(self, edge_id: str) -> None:
        """
        反转一条图边的方向：链倒序、弧首尾互换、交叉处进出槽互换并翻转符号
        """
        chain = self.edges[edge_id]
        flipped_crossings: list[str] = []
        for arc_id in chain:
            tail, head = self.arcs[arc_id]
            self.arcs[arc_id] = [self._reverse_slot(head), self._reverse_slot(tail)]
            # 每经过一次交叉翻转一次符号；经过两次则还原
            if head is not None and self.nodes[head.node].kind is NodeKind.CROSSING:
                flipped_crossings.append(head.node)
        for crossing in flipped_crossings:
            self.set_sign(crossing, -self.nodes[crossing].sign)
        chain.reverse()

    def _reverse_slot(self, slot: Optional[Slot]) -> Optional[Slot]:
        if slot is None:
            return None
        if self.nodes[slot.node].kind is NodeKind.CROSSING:
            return Slot(slot.node, _REVERSE_ROLE[slot.role])
        return slot

    def merge_edges(self, edge_in: str, edge_out: str) -> str:
        """
        合并首尾相接的两条边（edge_in 的末弧已吸收 edge_out 的首弧）

        :return: 合并后边的标识符（取两者中自然顺序较小者）
        """
        if edge_in == edge_out:
            return edge_in
        keep, drop = sorted((edge_in, edge_out), key=natural_key)
        merged = self.edges[edge_in] + self.edges[edge_out]
        self.edges[keep] = merged
        del self.edges[drop]
        return keep

    # ---------------- 输出 ----------------
    def freeze(self) -> Diagram:
        return Diagram.build(
            nodes=self.nodes.values(),
            arcs=[Arc(a, ends[0], ends[1]) for a, ends in self.arcs.items()],
            edges=[Edge(e, tuple(chain)) for e, chain in self.edges.items() if chain],
            name=self.name,
            source=self.source,
        )
