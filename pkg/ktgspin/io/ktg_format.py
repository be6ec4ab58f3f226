"""
ktg v1 文本格式
行格式（# 之后为注释）::

    ktg v1
    name Trefoil
    vertex u (+a1 +a2 +a3)
    crossing c1 +1 over(a4 a5) under(a1 a2)
    endpoint p1 (-a3)
    edge e1 = a1 a2 a3

顶点与端点槽位前缀 + 表示弧从该节点出发，- 表示弧到达该节点；顶点槽位顺序即循环顺序。
"""

import dataclasses
import logging
import re
from collections import defaultdict
from pathlib import Path
from typing import Optional

from ..diagram.validate import validate
from ..errors import DiagramFormatError, ParseIssue
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
    VERTEX_ROLES,
)

logger = logging.getLogger(__name__)

FORMAT_VERSION = "v1"
_ID = r"[^\s()=#]+"
_SLOT = rf"[+-]{_ID}"
_HEADER = re.compile(r"^ktg\s+(\S+)$")
_META = re.compile(r"^(name|source)\s+(.+)$")
_VERTEX = re.compile(rf"^vertex\s+({_ID})\s*\(\s*({_SLOT})\s+({_SLOT})\s+({_SLOT})\s*\)$")
_CROSSING = re.compile(
    rf"^crossing\s+({_ID})\s+([+-]1?)\s+over\(\s*({_ID})\s+({_ID})\s*\)\s+under\(\s*({_ID})\s+({_ID})\s*\)$"
)
_ENDPOINT = re.compile(rf"^endpoint\s+({_ID})\s*\(\s*({_SLOT})\s*\)$")
_EDGE = re.compile(rf"^edge\s+({_ID})\s*=\s*(.+)$")


@dataclasses.dataclass(frozen=True)
class KtgDocument:
    diagram: Diagram
    version: str = FORMAT_VERSION
    name: Optional[str] = None
    source: Optional[str] = None


class _Reader:
    """逐行收集声明，最后统一组装图表"""

    def __init__(self) -> None:
        self.issues: list[ParseIssue] = []
        self.nodes: dict[str, Node] = {}
        self.tails: dict[str, Slot] = {}
        self.heads: dict[str, Slot] = {}
        self.arc_lines: dict[str, int] = {}
        self.edges: dict[str, tuple[str, ...]] = {}
        self.edge_lines: dict[str, int] = {}
        self.node_lines: dict[str, int] = {}
        self.meta: dict[str, str] = {}

    def error(self, line: int, message: str) -> None:
        self.issues.append(ParseIssue(line, message))

    def add_node(self, line: int, node: Node) -> bool:
        if node.id in self.nodes:
            self.error(line, f"节点 {node.id} 重复声明（首次在第 {self.node_lines[node.id]} 行）")
            return False
        self.nodes[node.id] = node
        self.node_lines[node.id] = line
        return True

    def use(self, line: int, arc_id: str, slot: Slot, as_head: bool) -> None:
        ends = self.heads if as_head else self.tails
        if arc_id in ends:
            self.error(line, f"slot reused: 弧 {arc_id} 的{'头' if as_head else '尾'}已连接到 {ends[arc_id]}")
            return
        ends[arc_id] = slot
        self.arc_lines.setdefault(arc_id, line)

    def use_signed(self, line: int, token: str, slot: Slot) -> None:
        # + 弧从节点出发（尾），- 弧到达节点（头）
        self.use(line, token[1:], slot, as_head=token[0] == "-")

    def read_line(self, number: int, text: str) -> None:
        if match := _META.match(text):
            self.meta[match.group(1)] = match.group(2).strip()
        elif match := _VERTEX.match(text):
            node_id = match.group(1)
            if self.add_node(number, Node(node_id, NodeKind.VERTEX)):
                for role, token in zip(VERTEX_ROLES, match.groups()[1:]):
                    self.use_signed(number, token, Slot(node_id, role))
        elif match := _CROSSING.match(text):
            node_id, sign, over_in, over_out, under_in, under_out = match.groups()
            if self.add_node(number, Node(node_id, NodeKind.CROSSING, -1 if sign.startswith("-") else 1)):
                self.use(number, over_in, Slot(node_id, OVER_IN), as_head=True)
                self.use(number, over_out, Slot(node_id, OVER_OUT), as_head=False)
                self.use(number, under_in, Slot(node_id, UNDER_IN), as_head=True)
                self.use(number, under_out, Slot(node_id, UNDER_OUT), as_head=False)
        elif match := _ENDPOINT.match(text):
            node_id, token = match.groups()
            if self.add_node(number, Node(node_id, NodeKind.ENDPOINT)):
                self.use_signed(number, token, Slot(node_id, "0"))
        elif match := _EDGE.match(text):
            edge_id = match.group(1)
            if edge_id in self.edges:
                self.error(number, f"图边 {edge_id} 重复声明")
                return
            self.edges[edge_id] = tuple(match.group(2).split())
            self.edge_lines[edge_id] = number
        else:
            self.error(number, f"无法识别的声明: {text}")

    def build(self) -> Diagram:
        owners: defaultdict[str, list[str]] = defaultdict(list)
        for edge_id, chain in self.edges.items():
            for arc_id in chain:
                owners[arc_id].append(edge_id)
        arcs: list[Arc] = []
        for arc_id in sorted(set(self.tails) | set(self.heads)):
            if not owners[arc_id]:
                self.error(self.arc_lines[arc_id], f"弧 {arc_id} 不属于任何图边")
            arcs.append(Arc(arc_id, self.tails.get(arc_id), self.heads.get(arc_id)))
        for edge_id, chain in self.edges.items():
            for arc_id in chain:
                if arc_id in self.tails or arc_id in self.heads:
                    continue
                if len(chain) == 1:
                    # 不连接任何节点的单弧图边是自由圈
                    arcs.append(Arc(arc_id, None, None))
                else:
                    self.error(self.edge_lines[edge_id], f"未声明的弧 {arc_id}")
        return Diagram.build(
            nodes=self.nodes.values(),
            arcs=arcs,
            edges=[Edge(e, chain) for e, chain in self.edges.items()],
            name=self.meta.get("name"),
            source=self.meta.get("source"),
        )

    def line_of(self, ids: tuple[str, ...]) -> int:
        for identifier in ids:
            for table in (self.node_lines, self.edge_lines, self.arc_lines):
                if identifier in table:
                    return table[identifier]
        return 0


def parse_document(text: str) -> KtgDocument:
    """
    解析 ktg v1 文本

    :param text: 文本
    :return: KtgDocument
    :raises DiagramFormatError: 语法错误或图表不合法，携带全部带行号的问题
    """
    reader = _Reader()
    version: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if version is None:
            match = _HEADER.match(line)
            if match is None or match.group(1) != FORMAT_VERSION:
                raise DiagramFormatError([ParseIssue(number, f"缺少文件头 'ktg {FORMAT_VERSION}'")])
            version = match.group(1)
            continue
        reader.read_line(number, line)
    if version is None:
        raise DiagramFormatError([ParseIssue(0, "空文档")])

    diagram = reader.build()
    if reader.issues:
        raise DiagramFormatError(sorted(reader.issues, key=lambda i: i.line))
    report = validate(diagram)
    if not report.ok:
        raise DiagramFormatError(
            [ParseIssue(reader.line_of(v.ids), str(v)) for v in report.violations]
        )
    logger.debug(f"解析图表 {diagram.name or ''}: {len(diagram.nodes)} 个节点, {len(diagram.arcs)} 条弧")
    return KtgDocument(diagram, version, diagram.name, diagram.source)


def parse(text: str) -> Diagram:
    return parse_document(text).diagram


def load(path: str | Path) -> Diagram:
    return parse(Path(path).read_text(encoding="utf-8"))


def _signed(d: Diagram, slot: Slot) -> str:
    found = d.arc_at(slot)
    if found is None:
        return "?"
    arc_id, end = found
    return f"-{arc_id}" if end == "head" else f"+{arc_id}"


def serialize(d: Diagram) -> str:
    """
    规范文本：文件头、元数据、顶点、交叉、端点、图边，各自按自然标识符排序
    """
    lines = [f"ktg {FORMAT_VERSION}"]
    if d.name:
        lines.append(f"name {d.name}")
    if d.source:
        lines.append(f"source {d.source}")
    for node in d.vertices:
        slots = " ".join(_signed(d, Slot(node.id, role)) for role in VERTEX_ROLES)
        lines.append(f"vertex {node.id} ({slots})")
    for node in d.crossings:
        over_in, over_out = d.strand_arcs(node.id, over=True)
        under_in, under_out = d.strand_arcs(node.id, over=False)
        lines.append(
            f"crossing {node.id} {node.sign:+d} over({over_in} {over_out}) under({under_in} {under_out})"
        )
    for node in d.endpoints:
        lines.append(f"endpoint {node.id} ({_signed(d, Slot(node.id, '0'))})")
    for edge in d.edges:
        lines.append(f"edge {edge.id} = {' '.join(edge.arcs)}")
    return "\n".join(lines) + "\n"


def dump(d: Diagram, path: str | Path) -> None:
    Path(path).write_text(serialize(d), encoding="utf-8")
