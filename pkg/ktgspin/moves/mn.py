"""
端点下降
从断开图表的两个端点出发沿切割边行走，直到遇到顶点（或另一个端点）；
首次经过某交叉时若行走的股在下方，则做交叉变换。
"""

import logging

from ..diagram.surgery import broken_ends
from ..models.diagram import (
    Diagram,
    NodeKind,
    Slot,
    STRAND_IN,
    STRAND_OUT,
    UNDER_IN,
    UNDER_OUT,
)
from ..utils.str_utils import sorted_ids
from .patterns import Move, MoveKind
from .rewrite import rewrite

logger = logging.getLogger(__name__)


def _walk(d: Diagram, arc_id: str, backward: bool) -> list[tuple[str, str]]:
    """
    从一条弧出发沿边行走，返回依次经过的 (交叉, 行走股在该交叉的角色)
    """
    visits: list[tuple[str, str]] = []
    seen_arcs: set[str] = set()
    while arc_id not in seen_arcs:
        seen_arcs.add(arc_id)
        arc = d.arc_map[arc_id]
        slot = arc.tail if backward else arc.head
        if d.node_map[slot.node].kind is not NodeKind.CROSSING:
            break
        visits.append((slot.node, slot.role))
        if backward:
            arc_id = d.head_at[Slot(slot.node, STRAND_IN[slot.role])]
        else:
            arc_id = d.tail_at[Slot(slot.node, STRAND_OUT[slot.role])]
    return visits


def mn_endpoint_descend_with_record(b: Diagram) -> tuple[Diagram, tuple[str, ...]]:
    """
    端点下降，同时返回被变换的交叉

    :param b: 断开图表
    :return: (结果图表, 被变换的交叉标识符)
    :raises NotBrokenError: b 不是断开图表
    """
    _, arc_in, _, arc_out = broken_ends(b)
    decided: set[str] = set()
    changed: list[str] = []
    # 从 P 向后走时离开交叉的是下股 uo；从 Q 向前走时进入交叉的是下股 ui
    for arc_id, backward, under_role in ((arc_in, True, UNDER_OUT), (arc_out, False, UNDER_IN)):
        for crossing, role in _walk(b, arc_id, backward):
            if crossing in decided:
                continue
            decided.add(crossing)
            if role == under_role:
                changed.append(crossing)
    result = b
    for crossing in changed:
        result = rewrite(result, Move(MoveKind.MNCC, (crossing,)))
    if changed:
        logger.debug(f"端点下降变换了 {len(changed)} 个交叉: {', '.join(sorted_ids(changed))}")
    return result, tuple(sorted_ids(changed))


def mn_endpoint_descend(b: Diagram) -> Diagram:
    """
    端点下降：切割边两端的终端段处处在上方

    :param b: 断开图表
    :return: 变换后的断开图表
    :raises NotBrokenError: b 不是断开图表
    """
    return mn_endpoint_descend_with_record(b)[0]
