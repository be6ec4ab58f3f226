"""
局部改写的模式匹配
Move 由种类和位置（节点 / 弧标识符）组成，文本形式为 ``KIND@a,b,c``。

需要几何信息的模式（R2+、R3、顶点滑动、顶点扭转）在 faces 模块给出的面上匹配：
R2+ 要求两条弧位于同一个面，R3 要求三角形面，VSLIDE- 要求由顶点与两个交叉围成的三角形面，
VTWIST- 要求顶点与交叉之间的二边形面。
"""

import dataclasses
import itertools
from enum import Enum
from typing import Iterable, Optional

from ..diagram.faces import Dart, face_nodes, faces
from ..errors import MoveSiteError
from ..models.diagram import (
    Diagram,
    NodeKind,
    Slot,
    OVER_IN,
    OVER_OUT,
    UNDER_IN,
    UNDER_OUT,
    VERTEX_ROLES,
)
from ..utils.str_utils import natural_key


class MoveKind(str, Enum):
    """局部改写种类"""

    R1_PLUS = "R1+"
    R1_MINUS = "R1-"
    R2_PLUS = "R2+"
    R2_MINUS = "R2-"
    R3 = "R3"
    VSLIDE_PLUS = "VSLIDE+"
    VSLIDE_MINUS = "VSLIDE-"
    VTWIST_PLUS = "VTWIST+"
    VTWIST_MINUS = "VTWIST-"
    MNCC = "MNCC"

    @property
    def crossing_delta(self) -> int:
        """应用后交叉数的变化量"""
        return _CROSSING_DELTA[self]

    @property
    def is_insertion(self) -> bool:
        return self.crossing_delta > 0


_CROSSING_DELTA = {
    MoveKind.R1_PLUS: 1,
    MoveKind.R1_MINUS: -1,
    MoveKind.R2_PLUS: 2,
    MoveKind.R2_MINUS: -2,
    MoveKind.R3: 0,
    MoveKind.VSLIDE_PLUS: 1,
    MoveKind.VSLIDE_MINUS: -1,
    MoveKind.VTWIST_PLUS: 1,
    MoveKind.VTWIST_MINUS: -1,
    MoveKind.MNCC: 0,
}

# 每种改写的位置参数个数
_SITE_ARITY = {
    MoveKind.R1_PLUS: 3,
    MoveKind.R1_MINUS: 1,
    MoveKind.R2_PLUS: 4,
    MoveKind.R2_MINUS: 2,
    MoveKind.R3: 3,
    MoveKind.VSLIDE_PLUS: 2,
    MoveKind.VSLIDE_MINUS: 3,
    MoveKind.VTWIST_PLUS: 3,
    MoveKind.VTWIST_MINUS: 2,
    MoveKind.MNCC: 1,
}

# R1- 可消去的自环弧：(尾槽, 头槽)
_KINK_ROLES = {(OVER_OUT, UNDER_IN), (UNDER_OUT, OVER_IN)}


@dataclasses.dataclass(frozen=True)
class Move:
    """
    一次局部改写

    site 的含义按种类：
      - R1+: (弧, "over" | "under", "+1" | "-1")，自环先经过上股还是下股，以及新交叉的符号
      - R1-: (交叉,)
      - R2+: (弧 a, "+" | "-", 弧 b, "+" | "-")，沿所给方向的 a 被推到 b 之上，两个 dart 位于同一面
        a == b 仅用于自由圈：沿 dart 方向先经过的一段被推到后一段之上
      - R2-: (交叉 X, 交叉 Y)，上股沿 X -> Y
      - R3: (A, B, C)，A 为上层与中层的交叉，B 为上层与下层，C 为中层与下层
      - VSLIDE+: (顶点, 交叉)；VSLIDE-: (顶点, 先经过的交叉, 后经过的交叉)
      - VTWIST+: (顶点, 上方的腿槽, 下方的腿槽)；VTWIST-: (顶点, 交叉)
      - MNCC: (交叉,)
    """

    kind: MoveKind
    site: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.kind.value}@{','.join(self.site)}"

    @classmethod
    def parse(cls, text: str) -> "Move":
        """
        解析 ``KIND@a,b`` 形式的文本

        :raises MoveSiteError: 种类未知或位置参数个数不对
        """
        kind_text, sep, site_text = text.strip().partition("@")
        try:
            kind = MoveKind(kind_text)
        except ValueError:
            raise MoveSiteError(f"未知的改写种类: {kind_text!r}") from None
        site = tuple(s.strip() for s in site_text.split(",")) if sep and site_text else ()
        if len(site) != _SITE_ARITY[kind]:
            raise MoveSiteError(f"{kind.value} 需要 {_SITE_ARITY[kind]} 个位置参数，收到 {len(site)} 个")
        return cls(kind, site)


# ---------------- 辅助 ----------------
def is_over(role: str) -> bool:
    return role in (OVER_IN, OVER_OUT)


def _is_crossing(d: Diagram, node: str) -> bool:
    return d.node_map[node].kind is NodeKind.CROSSING


def _touches(d: Diagram, arc_id: str, node: str) -> bool:
    arc = d.arc_map[arc_id]
    return any(s is not None and s.node == node for s in (arc.tail, arc.head))


def _role_at(d: Diagram, arc_id: str, node: str) -> str:
    """弧在节点处的槽位角色（自环弧取尾）"""
    arc = d.arc_map[arc_id]
    if arc.tail is not None and arc.tail.node == node:
        return arc.tail.role
    return arc.head.role


def face_nodes_and_arcs(d: Diagram, face: tuple[Dart, ...]) -> tuple[list[str], list[str]]:
    return face_nodes(d, face), [dart[0] for dart in face]


# ---------------- 各种模式 ----------------
def _r1_minus(d: Diagram) -> Iterable[Move]:
    seen: set[str] = set()
    for arc in d.arcs:
        if arc.is_free_loop or arc.tail.node != arc.head.node:
            continue
        if (arc.tail.role, arc.head.role) in _KINK_ROLES and arc.tail.node not in seen:
            seen.add(arc.tail.node)
            yield Move(MoveKind.R1_MINUS, (arc.tail.node,))


def _r1_plus(d: Diagram, arcs: Iterable[str]) -> Iterable[Move]:
    for arc_id in arcs:
        for mode in ("over", "under"):
            for sign in ("+1", "-1"):
                yield Move(MoveKind.R1_PLUS, (arc_id, mode, sign))


def _r2_minus(d: Diagram) -> Iterable[Move]:
    for x in d.crossings:
        middle = d.arc_map[d.tail_at[Slot(x.id, OVER_OUT)]]
        y = middle.head.node
        if y == x.id or middle.head.role != OVER_IN:
            continue
        if d.node_map[y].sign != -x.sign:
            continue
        forward = d.arc_map[d.tail_at[Slot(x.id, UNDER_OUT)]].head == Slot(y, UNDER_IN)
        backward = d.arc_map[d.tail_at[Slot(y, UNDER_OUT)]].head == Slot(x.id, UNDER_IN)
        if forward or backward:
            yield Move(MoveKind.R2_MINUS, (x.id, y))


def _r2_plus(d: Diagram, face_list: list[tuple[Dart, ...]]) -> Iterable[Move]:
    # 自由圈不属于任何面：弧的前段越过自身的后段，两侧各一种
    for arc in d.arcs:
        if arc.is_free_loop:
            yield Move(MoveKind.R2_PLUS, (arc.id, "+", arc.id, "+"))
            yield Move(MoveKind.R2_PLUS, (arc.id, "-", arc.id, "-"))
    for face in face_list:
        for (a, fa), (b, fb) in itertools.permutations(face, 2):
            if a == b:
                continue
            yield Move(MoveKind.R2_PLUS, (a, "+" if fa else "-", b, "+" if fb else "-"))


def match_r3(d: Diagram, arcs: list[str]) -> Optional[tuple[str, str, str]]:
    """
    三角形面上的 R3 模式，返回 (A, B, C)，不匹配返回 None
    """
    if len(set(arcs)) != 3:
        return None
    levels: dict[str, tuple[bool, bool]] = {}
    ends: dict[str, tuple[str, str]] = {}
    for arc_id in arcs:
        arc = d.arc_map[arc_id]
        if arc.tail.node == arc.head.node:
            return None
        if not (_is_crossing(d, arc.tail.node) and _is_crossing(d, arc.head.node)):
            return None
        ends[arc_id] = (arc.tail.node, arc.head.node)
        levels[arc_id] = (is_over(arc.tail.role), is_over(arc.head.role))
    top = [a for a in arcs if levels[a] == (True, True)]
    bottom = [a for a in arcs if levels[a] == (False, False)]
    middle = [a for a in arcs if levels[a][0] != levels[a][1]]
    if len(top) != 1 or len(bottom) != 1 or len(middle) != 1:
        return None
    top_ends, mid_ends, bot_ends = set(ends[top[0]]), set(ends[middle[0]]), set(ends[bottom[0]])
    shared_a = top_ends & mid_ends
    shared_b = top_ends & bot_ends
    shared_c = mid_ends & bot_ends
    if not (len(shared_a) == len(shared_b) == len(shared_c) == 1):
        return None
    a, b, c = shared_a.pop(), shared_b.pop(), shared_c.pop()
    if len({a, b, c}) != 3:
        return None
    mid_arc, bot_arc = d.arc_map[middle[0]], d.arc_map[bottom[0]]
    # 中层在 A 处为下股、在 C 处为上股
    if is_over(_role_at(d, middle[0], a)) or not is_over(_role_at(d, middle[0], c)):
        return None
    same_order = (mid_arc.tail.node == a) == (bot_arc.tail.node == b)
    sign_a, sign_b = d.node_map[a].sign, d.node_map[b].sign
    if (sign_a == sign_b) != same_order:
        return None
    return a, b, c


def _r3(d: Diagram, face_list: list[tuple[Dart, ...]]) -> Iterable[Move]:
    seen: set[tuple[str, str, str]] = set()
    for face in face_list:
        if len(face) != 3:
            continue
        site = match_r3(d, [dart[0] for dart in face])
        if site is not None and site not in seen:
            seen.add(site)
            yield Move(MoveKind.R3, site)


def _vtwist_plus(d: Diagram) -> Iterable[Move]:
    for w in d.vertices:
        legs = {role: d.arc_at(Slot(w.id, role))[0] for role in VERTEX_ROLES}
        for upper, lower in itertools.permutations(VERTEX_ROLES, 2):
            if legs[upper] != legs[lower]:
                yield Move(MoveKind.VTWIST_PLUS, (w.id, upper, lower))


def match_vtwist_minus(d: Diagram, nodes: list[str], arcs: list[str]) -> Optional[tuple[str, str]]:
    """顶点与交叉之间的二边形面，两条弧分别在交叉的上股和下股"""
    if len(set(arcs)) != 2 or len(set(nodes)) != 2:
        return None
    kinds = {n: d.node_map[n].kind for n in nodes}
    vertex = [n for n in nodes if kinds[n] is NodeKind.VERTEX]
    crossing = [n for n in nodes if kinds[n] is NodeKind.CROSSING]
    if len(vertex) != 1 or len(crossing) != 1:
        return None
    x = crossing[0]
    if is_over(_role_at(d, arcs[0], x)) == is_over(_role_at(d, arcs[1], x)):
        return None
    return vertex[0], x


def _vtwist_minus(d: Diagram, face_list: list[tuple[Dart, ...]]) -> Iterable[Move]:
    seen: set[tuple[str, str]] = set()
    for face in face_list:
        if len(face) != 2:
            continue
        site = match_vtwist_minus(d, *face_nodes_and_arcs(d, face))
        if site is not None and site not in seen:
            seen.add(site)
            yield Move(MoveKind.VTWIST_MINUS, site)


def other_strand_arcs(d: Diagram, crossing: str, arc_id: str) -> tuple[str, str]:
    """交叉处不含 arc_id 的那一股的 (进入弧, 离开弧)"""
    over = not is_over(_role_at(d, arc_id, crossing))
    return d.strand_arcs(crossing, over)


def match_vslide_minus(
    d: Diagram, nodes: list[str], arcs: list[str]
) -> Optional[tuple[str, str, str]]:
    """
    顶点 w 与交叉 X1、X2 围成的三角形面：一股 S 依次穿过 w 的两条腿，两处层次相同
    返回 (w, 先经过的交叉, 后经过的交叉)
    """
    if len(set(arcs)) != 3 or len(set(nodes)) != 3:
        return None
    vertex = [n for n in nodes if d.node_map[n].kind is NodeKind.VERTEX]
    crossing = [n for n in nodes if d.node_map[n].kind is NodeKind.CROSSING]
    if len(vertex) != 1 or len(crossing) != 2:
        return None
    w = vertex[0]
    strand = [a for a in arcs if not _touches(d, a, w)]
    legs = [a for a in arcs if _touches(d, a, w)]
    if len(strand) != 1 or len(legs) != 2:
        return None
    sigma = d.arc_map[strand[0]]
    first, second = sigma.tail.node, sigma.head.node
    if {first, second} != set(crossing):
        return None
    level = is_over(sigma.tail.role)
    if is_over(sigma.head.role) != level:
        return None
    for leg in legs:
        x = first if _touches(d, leg, first) else second
        if is_over(_role_at(d, leg, x)) == level:
            return None
    strand_in = d.head_at[Slot(first, OVER_IN if level else UNDER_IN)]
    strand_out = d.tail_at[Slot(second, OVER_OUT if level else UNDER_OUT)]
    if _touches(d, strand_in, w) or _touches(d, strand_out, w):
        return None
    return w, first, second


def _vslide_minus(d: Diagram, face_list: list[tuple[Dart, ...]]) -> Iterable[Move]:
    seen: set[tuple[str, str, str]] = set()
    for face in face_list:
        if len(face) != 3:
            continue
        site = match_vslide_minus(d, *face_nodes_and_arcs(d, face))
        if site is not None and site not in seen:
            seen.add(site)
            yield Move(MoveKind.VSLIDE_MINUS, site)


def match_vslide_plus(d: Diagram, w: str, crossing: str) -> bool:
    """交叉紧邻顶点 w 位于某条腿上，另一股不与 w 直接相连"""
    if crossing not in d.node_map or not _is_crossing(d, crossing):
        return False
    legs = [d.arc_at(Slot(w, role))[0] for role in VERTEX_ROLES]
    near = [a for a in legs if _touches(d, a, crossing)]
    if len(near) != 1:
        return False
    strand_in, strand_out = other_strand_arcs(d, crossing, near[0])
    return not (_touches(d, strand_in, w) or _touches(d, strand_out, w))


def _vslide_plus(d: Diagram) -> Iterable[Move]:
    for w in d.vertices:
        candidates = {
            s.node
            for role in VERTEX_ROLES
            for s in _other_ends(d, d.arc_at(Slot(w.id, role))[0], w.id)
        }
        for x in sorted(candidates, key=natural_key):
            if match_vslide_plus(d, w.id, x):
                yield Move(MoveKind.VSLIDE_PLUS, (w.id, x))


def _other_ends(d: Diagram, arc_id: str, w: str) -> list[Slot]:
    arc = d.arc_map[arc_id]
    return [s for s in (arc.tail, arc.head) if s is not None and s.node != w and _is_crossing(d, s.node)]


# ---------------- 汇总 ----------------
def applicable_moves(
    d: Diagram,
    use_kinks: bool = False,
    designated: Optional[Iterable[str]] = None,
) -> list[Move]:
    """
    列出图表上全部可应用的改写（不含 MNCC），顺序确定

    :param d: 合法图表
    :param use_kinks: 为每条弧生成 R1+
    :param designated: 只在这些弧上生成 R1+
    :return: 按种类、再按位置排序的改写列表
    """
    face_list = faces(d)
    kink_arcs: list[str] = []
    if use_kinks:
        kink_arcs = [a.id for a in d.arcs]
    elif designated is not None:
        kink_arcs = [a for a in designated if a in d.arc_map]
    moves: list[Move] = []
    moves += _r1_minus(d)
    moves += _r2_minus(d)
    moves += _vtwist_minus(d, face_list)
    moves += _vslide_minus(d, face_list)
    moves += _r3(d, face_list)
    moves += _r1_plus(d, kink_arcs)
    moves += _r2_plus(d, face_list)
    moves += _vslide_plus(d)
    moves += _vtwist_plus(d)
    order = {kind: i for i, kind in enumerate(MoveKind)}
    return sorted(moves, key=lambda m: (order[m.kind], tuple(natural_key(s) for s in m.site)))


def is_applicable(d: Diagram, m: Move) -> bool:
    """位置是否仍与模式匹配"""
    if m.kind is MoveKind.MNCC:
        return m.site[0] in d.node_map and _is_crossing(d, m.site[0])
    if m.kind is MoveKind.R1_PLUS:
        arc_id, mode, sign = m.site
        return arc_id in d.arc_map and mode in ("over", "under") and sign in ("+1", "-1")
    if m.kind is MoveKind.R1_MINUS:
        return m in set(_r1_minus(d))
    if m.kind is MoveKind.R2_MINUS:
        return m in set(_r2_minus(d))
    if m.kind is MoveKind.VTWIST_PLUS:
        return m in set(_vtwist_plus(d))
    if m.kind is MoveKind.VSLIDE_PLUS:
        w, x = m.site
        return w in d.node_map and d.node_map[w].kind is NodeKind.VERTEX and match_vslide_plus(d, w, x)
    face_list = faces(d)
    generators = {
        MoveKind.R2_PLUS: _r2_plus,
        MoveKind.R3: _r3,
        MoveKind.VSLIDE_MINUS: _vslide_minus,
        MoveKind.VTWIST_MINUS: _vtwist_minus,
    }
    return m in set(generators[m.kind](d, face_list))
