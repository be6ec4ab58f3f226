"""
图表数据模型
KTG 图表的组合编码：节点（交叉、三价顶点、端点）、弧（带方向的段）、图边（弧的有序链）

所有实例构造后不可变，运算均返回新实例
"""

import dataclasses
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional

from ..utils.str_utils import natural_key

# 交叉的四个槽位
OVER_IN = "oi"
OVER_OUT = "oo"
UNDER_IN = "ui"
UNDER_OUT = "uo"
CROSSING_ROLES = (OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT)
# 顶点槽位按循环顺序编号
VERTEX_ROLES = ("0", "1", "2")
ENDPOINT_ROLES = ("0",)

# 进入角色 -> 同一股的离开角色
STRAND_OUT = {OVER_IN: OVER_OUT, UNDER_IN: UNDER_OUT}
STRAND_IN = {OVER_OUT: OVER_IN, UNDER_OUT: UNDER_IN}
# 镜像 / 交叉变换时上下互换
SWAP_LEVEL = {OVER_IN: UNDER_IN, OVER_OUT: UNDER_OUT, UNDER_IN: OVER_IN, UNDER_OUT: OVER_OUT}


class NodeKind(str, Enum):
    """节点类型枚举"""

    CROSSING = "crossing"
    VERTEX = "vertex"
    ENDPOINT = "endpoint"

    @property
    def roles(self) -> tuple[str, ...]:
        """该类型节点的槽位"""
        if self is NodeKind.CROSSING:
            return CROSSING_ROLES
        if self is NodeKind.VERTEX:
            return VERTEX_ROLES
        return ENDPOINT_ROLES


@dataclasses.dataclass(frozen=True, order=True)
class Slot:
    node: str
    role: str

    def __str__(self) -> str:
        return f"{self.node}.{self.role}"


@dataclasses.dataclass(frozen=True)
class Node:
    id: str
    kind: NodeKind
    # 仅交叉有意义：+1 / -1
    sign: int = 0


@dataclasses.dataclass(frozen=True)
class Arc:
    id: str
    tail: Optional[Slot]
    head: Optional[Slot]

    @property
    def is_free_loop(self) -> bool:
        """不经过任何节点的闭合弧（0 交叉平凡圈）"""
        return self.tail is None and self.head is None


@dataclasses.dataclass(frozen=True)
class Edge:
    id: str
    arcs: tuple[str, ...]


@dataclasses.dataclass(frozen=True)
class Diagram:
    """
    KTG 图表

    nodes / arcs / edges 均按自然标识符顺序保存，保证输出确定性。
    查询索引通过 cached_property 惰性构建。
    """

    nodes: tuple[Node, ...]
    arcs: tuple[Arc, ...]
    edges: tuple[Edge, ...]
    name: Optional[str] = dataclasses.field(default=None, compare=False)
    source: Optional[str] = dataclasses.field(default=None, compare=False)

    @classmethod
    def build(
        cls,
        nodes: Iterable[Node],
        arcs: Iterable[Arc],
        edges: Iterable[Edge],
        name: Optional[str] = None,
        source: Optional[str] = None,
    ) -> "Diagram":
        """按标识符排序后构建图表"""
        return cls(
            nodes=tuple(sorted(nodes, key=lambda n: natural_key(n.id))),
            arcs=tuple(sorted(arcs, key=lambda a: natural_key(a.id))),
            edges=tuple(sorted(edges, key=lambda e: natural_key(e.id))),
            name=name,
            source=source,
        )

    # ---------------- 索引 ----------------
    @cached_property
    def node_map(self) -> dict[str, Node]:
        return {n.id: n for n in self.nodes}

    @cached_property
    def arc_map(self) -> dict[str, Arc]:
        return {a.id: a for a in self.arcs}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def arc_edge(self) -> dict[str, str]:
        """弧 -> 所属图边"""
        return {a: e.id for e in self.edges for a in e.arcs}

    @cached_property
    def head_at(self) -> dict[Slot, str]:
        """槽位 -> 以该槽位为头的弧（首个出现者）"""
        index: dict[Slot, str] = {}
        for a in self.arcs:
            if a.head is not None:
                index.setdefault(a.head, a.id)
        return index

    @cached_property
    def tail_at(self) -> dict[Slot, str]:
        """槽位 -> 以该槽位为尾的弧（首个出现者）"""
        index: dict[Slot, str] = {}
        for a in self.arcs:
            if a.tail is not None:
                index.setdefault(a.tail, a.id)
        return index

    # ---------------- 便捷查询 ----------------
    def nodes_of(self, kind: NodeKind) -> list[Node]:
        return [n for n in self.nodes if n.kind is kind]

    @property
    def crossings(self) -> list[Node]:
        return self.nodes_of(NodeKind.CROSSING)

    @property
    def vertices(self) -> list[Node]:
        return self.nodes_of(NodeKind.VERTEX)

    @property
    def endpoints(self) -> list[Node]:
        return self.nodes_of(NodeKind.ENDPOINT)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_broken(self) -> bool:
        return len(self.endpoints) > 0

    def arc_at(self, slot: Slot) -> Optional[tuple[str, str]]:
        """
        查询占用槽位的弧端

        :param slot: 槽位
        :return: (弧标识符, "head" 或 "tail")，无占用返回 None
        """
        if slot in self.head_at:
            return self.head_at[slot], "head"
        if slot in self.tail_at:
            return self.tail_at[slot], "tail"
        return None

    def edge_ends(self, edge_id: str) -> tuple[Optional[str], Optional[str]]:
        """
        图边的起止节点（顶点或端点）；闭合分支返回 (None, None)。
        断开边返回所在顶点，端点不计入。
        """
        chain = self.edge_map[edge_id].arcs
        first = self.arc_map[chain[0]]
        last = self.arc_map[chain[-1]]
        start = first.tail.node if first.tail is not None else None
        end = last.head.node if last.head is not None else None
        if start is not None and self.node_map[start].kind is NodeKind.CROSSING:
            start = None
        if end is not None and self.node_map[end].kind is NodeKind.CROSSING:
            end = None
        return start, end

    def edge_vertices(self, edge_id: str) -> tuple[Optional[str], Optional[str]]:
        """图边两端的顶点（断开边跨过端点后取链的首尾顶点）"""
        chain = self.edge_map[edge_id].arcs
        first = self.arc_map[chain[0]].tail
        last = self.arc_map[chain[-1]].head

        def vertex_or_none(slot: Optional[Slot]) -> Optional[str]:
            if slot is None or self.node_map[slot.node].kind is not NodeKind.VERTEX:
                return None
            return slot.node

        return vertex_or_none(first), vertex_or_none(last)

    def strand_arcs(self, crossing: str, over: bool) -> tuple[str, str]:
        """交叉处某一股的 (进入弧, 离开弧)"""
        role_in, role_out = (OVER_IN, OVER_OUT) if over else (UNDER_IN, UNDER_OUT)
        return self.head_at[Slot(crossing, role_in)], self.tail_at[Slot(crossing, role_out)]
