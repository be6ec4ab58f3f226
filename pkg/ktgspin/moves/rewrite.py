"""
局部改写的执行
所有改写都在 DiagramEditor 上完成；新标识符取最小可用序号，同一图表上重复执行结果相同
"""

import logging
from typing import Callable

from ..diagram.editor import DiagramEditor
from ..diagram.faces import ccw_next, faces, rotation, sign_for_rotation
from ..errors import MoveSiteError
from ..models.diagram import (
    Diagram,
    Slot,
    OVER_IN,
    OVER_OUT,
    STRAND_IN,
    STRAND_OUT,
    SWAP_LEVEL,
    UNDER_IN,
    UNDER_OUT,
)
from .patterns import (
    Move,
    MoveKind,
    face_nodes_and_arcs,
    is_applicable,
    is_over,
    match_r3,
    match_vslide_minus,
    other_strand_arcs,
)

logger = logging.getLogger(__name__)


def _level(over: bool) -> tuple[str, str]:
    return (OVER_IN, OVER_OUT) if over else (UNDER_IN, UNDER_OUT)


def _leg_rays(ed: DiagramEditor, slot: Slot, over: bool) -> tuple[str, str, str]:
    """
    顶点腿上新交叉的角色：(弧, 靠近顶点一侧的角色, 远离顶点一侧的角色)
    """
    arc_id, outgoing = ed.end_at(slot)
    role_in, role_out = _level(over)
    return (arc_id, role_in, role_out) if outgoing else (arc_id, role_out, role_in)


# ---------------- Reidemeister ----------------
def _r1_plus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    arc_id, mode, sign = site
    x = ed.add_crossing(int(sign))
    passes = [(x, OVER_IN, OVER_OUT), (x, UNDER_IN, UNDER_OUT)]
    if mode == "under":
        passes.reverse()
    ed.thread(arc_id, passes)


def _r1_minus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    ed.remove_crossing(site[0])


def _r2_plus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    a, dir_a, b, dir_b = site
    if a == b:
        _r2_plus_self(ed, a, dir_a == "+")
        return
    forward_a, forward_b = dir_a == "+", dir_b == "+"
    sign = (1 if forward_a else -1) * (1 if forward_b else -1)
    # 沿 a 的 dart 先遇到 p，沿 b 的 dart 先遇到 q
    p = ed.add_crossing(sign)
    q = ed.add_crossing(-sign)
    order_a = [p, q] if forward_a else [q, p]
    order_b = [q, p] if forward_b else [p, q]
    ed.thread(a, [(n, OVER_IN, OVER_OUT) for n in order_a])
    ed.thread(b, [(n, UNDER_IN, UNDER_OUT) for n in order_b])


def _r2_plus_self(ed: DiagramEditor, arc_id: str, forward: bool) -> None:
    """自由圈上的 R2+：得到一个二边形面和两个单边面"""
    p = ed.add_crossing(1)
    q = ed.add_crossing(-1)
    over = [(p, OVER_IN, OVER_OUT), (q, OVER_IN, OVER_OUT)]
    under = [(q, UNDER_IN, UNDER_OUT), (p, UNDER_IN, UNDER_OUT)]
    if forward:
        passes = over + under
    else:
        passes = [(n, UNDER_IN, UNDER_OUT) for n in (p, q)] + [(n, OVER_IN, OVER_OUT) for n in (q, p)]
    ed.thread(arc_id, passes)


def _r2_minus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    ed.remove_crossing(site[0])
    ed.remove_crossing(site[1])


def _r3(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    arcs = next(
        [dart[0] for dart in face]
        for face in faces(d)
        if len(face) == 3 and match_r3(d, [dart[0] for dart in face]) == site
    )
    mapping: dict[Slot, Slot] = {}
    for arc_id in arcs:
        arc = d.arc_map[arc_id]
        first, second = arc.tail, arc.head
        first_in = Slot(first.node, STRAND_IN[first.role])
        second_out = Slot(second.node, STRAND_OUT[second.role])
        # 每一股在两个交叉上的进出槽互换，沿该股的经过顺序随之反转
        mapping[first_in] = second
        mapping[first] = second_out
        mapping[second] = first_in
        mapping[second_out] = first
    ed.relabel_slots(mapping)


# ---------------- 顶点 ----------------
def _vtwist_plus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    w, upper, lower = site
    p, q = (upper, lower) if ccw_next(upper) == lower else (lower, upper)
    arc_p, near_p, far_p = _leg_rays(ed, Slot(w, p), p == upper)
    arc_q, near_q, far_q = _leg_rays(ed, Slot(w, q), q == upper)
    # 交换后 p 腿从 q 槽出发：新交叉处逆时针依次为 p 远端、q 远端、p 近端、q 近端
    x = ed.add_crossing(sign_for_rotation([far_p, far_q, near_p, near_q]))
    for arc_id, near, far in ((arc_p, near_p, far_p), (arc_q, near_q, far_q)):
        role_in, role_out = (near, far) if near in STRAND_OUT else (far, near)
        ed.thread(arc_id, [(x, role_in, role_out)])
    ed.relabel_slots({Slot(w, p): Slot(w, q), Slot(w, q): Slot(w, p)})


def _vtwist_minus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    w, x = site
    legs = [
        s.role
        for a in d.arcs
        if not a.is_free_loop and x in (a.tail.node, a.head.node)
        for s in (a.tail, a.head)
        if s.node == w
    ]
    p, q = legs
    ed.remove_crossing(x)
    ed.relabel_slots({Slot(w, p): Slot(w, q), Slot(w, q): Slot(w, p)})


def _slide_rotation(far: str, near: str, s_in: str, s_out: str, ccw_travel: bool) -> int:
    # 股从腿的右侧穿到左侧（面朝远离顶点方向）时为逆时针绕行
    if ccw_travel:
        return sign_for_rotation([far, s_out, near, s_in])
    return sign_for_rotation([far, s_in, near, s_out])


def _vslide_minus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    w, first, second = site
    arcs = next(
        arcs
        for nodes, arcs in (face_nodes_and_arcs(d, face) for face in faces(d) if len(face) == 3)
        if match_vslide_minus(d, nodes, arcs) == site
    )
    leg_slots: dict[str, str] = {}
    strand_over = False
    for arc_id in arcs:
        arc = d.arc_map[arc_id]
        if arc.tail.node == w:
            leg_slots[arc.head.node] = arc.tail.role
        elif arc.head.node == w:
            leg_slots[arc.tail.node] = arc.head.role
        else:
            strand_over = is_over(arc.tail.role)
    ccw_travel = leg_slots[second] == ccw_next(leg_slots[first])
    third = next(r for r in rotation(d.node_map[w]) if r not in leg_slots.values())

    s_in, s_out = _level(strand_over)
    strand_in = d.head_at[Slot(first, s_in)]
    ed.remove_crossing(first)
    ed.remove_crossing(second)
    strand = ed.resolve(strand_in)

    leg_arc, near, far = _leg_rays(ed, Slot(w, third), not strand_over)
    # 滑过顶点后绕行方向反转
    x = ed.add_crossing(_slide_rotation(far, near, s_in, s_out, not ccw_travel))
    leg_in, leg_out = _level(not strand_over)
    ed.thread(leg_arc, [(x, leg_in, leg_out)])
    ed.thread(strand, [(x, s_in, s_out)])


def _vslide_plus(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    w, x = site
    leg = next(
        (role, arc_id)
        for role in rotation(d.node_map[w])
        for arc_id in [d.arc_at(Slot(w, role))[0]]
        if x in (d.arc_map[arc_id].tail.node, d.arc_map[arc_id].head.node)
    )
    k, leg_arc = leg
    arc = d.arc_map[leg_arc]
    near = arc.head.role if arc.head.node == x else arc.tail.role
    far = STRAND_OUT[near] if near in STRAND_OUT else STRAND_IN[near]
    strand_over = not is_over(near)
    s_in, s_out = _level(strand_over)
    roles = rotation(d.node_map[x])
    from_left = roles[(roles.index(far) + 1) % 4] == s_in
    first = ccw_next(k)
    second = ccw_next(first)
    if not from_left:
        first, second = second, first

    strand_in, _ = other_strand_arcs(d, x, leg_arc)
    ed.remove_crossing(x)
    strand = ed.resolve(strand_in)
    created = []
    for role in (first, second):
        arc_id, leg_near, leg_far = _leg_rays(ed, Slot(w, role), not strand_over)
        node = ed.add_crossing(_slide_rotation(leg_far, leg_near, s_in, s_out, from_left))
        leg_in, leg_out = _level(not strand_over)
        ed.thread(arc_id, [(node, leg_in, leg_out)])
        created.append(node)
    ed.thread(strand, [(node, s_in, s_out) for node in created])


# ---------------- 交叉变换 ----------------
def _mncc(d: Diagram, ed: DiagramEditor, site: tuple[str, ...]) -> None:
    x = site[0]
    ed.relabel_slots({Slot(x, r): Slot(x, SWAP_LEVEL[r]) for r in SWAP_LEVEL})
    ed.set_sign(x, -ed.nodes[x].sign)


_REWRITERS: dict[MoveKind, Callable[[Diagram, DiagramEditor, tuple[str, ...]], None]] = {
    MoveKind.R1_PLUS: _r1_plus,
    MoveKind.R1_MINUS: _r1_minus,
    MoveKind.R2_PLUS: _r2_plus,
    MoveKind.R2_MINUS: _r2_minus,
    MoveKind.R3: _r3,
    MoveKind.VSLIDE_PLUS: _vslide_plus,
    MoveKind.VSLIDE_MINUS: _vslide_minus,
    MoveKind.VTWIST_PLUS: _vtwist_plus,
    MoveKind.VTWIST_MINUS: _vtwist_minus,
    MoveKind.MNCC: _mncc,
}


def rewrite(d: Diagram, m: Move) -> Diagram:
    """不检查模式直接执行改写（调用方保证 m 来自 applicable_moves(d)）"""
    ed = DiagramEditor(d)
    _REWRITERS[m.kind](d, ed, m.site)
    return ed.freeze()


def apply_move(d: Diagram, m: Move) -> Diagram:
    """
    在图表上执行一次局部改写

    :param d: 合法图表
    :param m: 改写
    :return: 改写后的新图表
    :raises MoveSiteError: 位置与模式不再匹配
    """
    if not is_applicable(d, m):
        raise MoveSiteError(f"{m} 与图表不匹配")
    result = rewrite(d, m)
    logger.debug(f"{m}: {d.crossing_count} -> {result.crossing_count} 个交叉")
    return result
