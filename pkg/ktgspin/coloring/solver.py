"""
quandle 染色求解器
回溯搜索 + 单元传播：交叉处 oi/oo 相等，ui、uo、oi 任两个决定第三个；顶点处已知两条腿即可补全第三条
"""

import logging
from typing import Callable, Iterator, Optional

from ..config import settings
from ..errors import ColoringInputError
from ..models.dataclasses import Coloring, ColoringCount, ColoringViolation
from ..models.diagram import (
    Diagram,
    Slot,
    OVER_IN,
    OVER_OUT,
    UNDER_IN,
    UNDER_OUT,
    VERTEX_ROLES,
)
from ..algebra.gfamily import AssociatedQuandle
from ..algebra.quandle import FiniteQuandle

logger = logging.getLogger(__name__)

Quandle = AssociatedQuandle | FiniteQuandle


def _tables(q: Quandle) -> tuple[list[list[int]], list[list[int]]]:
    base = q.quandle if isinstance(q, AssociatedQuandle) else q
    return base.table.tolist(), base.inverse.tolist()


def _vertex_legs(d: Diagram, vertex: str) -> list[tuple[str, bool]]:
    """按循环顺序返回 (弧, 是否从顶点出发)"""
    legs = []
    for role in VERTEX_ROLES:
        found = d.arc_at(Slot(vertex, role))
        if found is None:
            raise ColoringInputError(f"顶点 {vertex} 的槽位 {role} 未连接弧")
        legs.append((found[0], found[1] == "tail"))
    return legs


class ColoringSolver:
    """
    在一个图表上枚举 quandle 染色

    使用示例:
    ```python
    solver = ColoringSolver(d, associated_quandle(dihedral_gfamily(3)))
    total = sum(1 for _ in solver.solutions())
    ```
    """

    def __init__(self, d: Diagram, q: Quandle, boundary: Optional[dict[str, int]] = None):
        if d.vertices and not isinstance(q, AssociatedQuandle):
            raise ColoringInputError("含顶点的图表需要 G-family 的关联 quandle")
        self.diagram = d
        self.quandle = q
        self.size = q.size
        self.table, self.inverse = _tables(q)
        self.carrier = q.carrier_size if isinstance(q, AssociatedQuandle) else 0
        if isinstance(q, AssociatedQuandle):
            self.mul = q.group.mul.tolist()
            self.ginv = q.group.inv.tolist()
            self.identity = q.group.identity

        self.arcs = [a.id for a in d.arcs]
        self.index = {a: i for i, a in enumerate(self.arcs)}
        self.constraints: list[tuple] = []
        for c in d.crossings:
            over_in, over_out = d.strand_arcs(c.id, over=True)
            under_in, under_out = d.strand_arcs(c.id, over=False)
            self.constraints.append(
                ("crossing", self.index[over_in], self.index[over_out], self.index[under_in], self.index[under_out], c.sign)
            )
        for v in d.vertices:
            legs = tuple((self.index[a], out) for a, out in _vertex_legs(d, v.id))
            self.constraints.append(("vertex", legs))
        self.watch: list[list[int]] = [[] for _ in self.arcs]
        for ci, constraint in enumerate(self.constraints):
            for i in self._variables(constraint):
                if ci not in self.watch[i]:
                    self.watch[i].append(ci)
        self.order = self._spanning_order()

        self.initial: list[Optional[int]] = [None] * len(self.arcs)
        self.consistent = True
        for arc_id, value in (boundary or {}).items():
            if arc_id not in self.index:
                raise ColoringInputError(f"边界条件中的弧 {arc_id} 不存在")
            if not 0 <= value < self.size:
                raise ColoringInputError(f"边界条件中的颜色 {value} 越界")
            queue: list[int] = []
            if not (self._set(self.initial, self.index[arc_id], value, queue) and self._propagate(self.initial, queue)):
                self.consistent = False

    @staticmethod
    def _variables(constraint: tuple) -> list[int]:
        if constraint[0] == "crossing":
            return list(constraint[1:5])
        return [i for i, _ in constraint[1]]

    def _spanning_order(self) -> list[int]:
        """沿约束图的广度优先顺序，传播能尽早确定后续弧"""
        order: list[int] = []
        seen: set[int] = set()
        for start in range(len(self.arcs)):
            if start in seen:
                continue
            seen.add(start)
            frontier = [start]
            while frontier:
                i = frontier.pop(0)
                order.append(i)
                for ci in self.watch[i]:
                    for j in self._variables(self.constraints[ci]):
                        if j not in seen:
                            seen.add(j)
                            frontier.append(j)
        return order

    # ---------------- 传播 ----------------
    @staticmethod
    def _set(values: list[Optional[int]], i: int, value: int, queue: list[int]) -> bool:
        if values[i] is None:
            values[i] = value
            queue.append(i)
            return True
        return values[i] == value

    def _propagate(self, values: list[Optional[int]], queue: list[int]) -> bool:
        while queue:
            i = queue.pop()
            for ci in self.watch[i]:
                constraint = self.constraints[ci]
                if constraint[0] == "crossing":
                    ok = self._crossing(values, queue, *constraint[1:])
                else:
                    ok = self._vertex(values, queue, constraint[1])
                if not ok:
                    return False
        return True

    def _crossing(self, values, queue, oi: int, oo: int, ui: int, uo: int, sign: int) -> bool:
        if values[oi] is not None:
            if not self._set(values, oo, values[oi], queue):
                return False
        elif values[oo] is not None:
            self._set(values, oi, values[oo], queue)
        over = values[oi]
        if over is None:
            return True
        forward, backward = (self.table, self.inverse) if sign > 0 else (self.inverse, self.table)
        if values[ui] is not None:
            return self._set(values, uo, forward[values[ui]][over], queue)
        if values[uo] is not None:
            return self._set(values, ui, backward[values[uo]][over], queue)
        return True

    def _vertex(self, values, queue, legs: tuple[tuple[int, bool], ...]) -> bool:
        m = self.carrier
        known = [(pos, values[i]) for pos, (i, _) in enumerate(legs) if values[i] is not None]
        if len({value % m for _, value in known}) > 1:
            return False
        if len(known) == 3:
            return self._product(legs, values) == self.identity
        if len(known) != 2:
            return True
        (missing,) = {0, 1, 2} - {pos for pos, _ in known}
        x = known[0][1] % m
        nxt, after = (missing + 1) % 3, (missing + 2) % 3
        # p_j p_{j+1} p_{j+2} = 1，p 为 G 分量（出发的腿取逆）
        p = self.ginv[self.mul[self._factor(legs[nxt], values)][self._factor(legs[after], values)]]
        arc, out = legs[missing]
        g = self.ginv[p] if out else p
        return self._set(values, arc, g * m + x, queue)

    def _factor(self, leg: tuple[int, bool], values) -> int:
        i, out = leg
        g = values[i] // self.carrier
        return self.ginv[g] if out else g

    def _product(self, legs, values) -> int:
        result = self.identity
        for leg in legs:
            result = self.mul[result][self._factor(leg, values)]
        return result

    # ---------------- 搜索 ----------------
    def solutions(self) -> Iterator[list[int]]:
        """按确定顺序产生全部染色（弧下标 -> 元素）"""
        if not self.consistent:
            return
        yield from self._search(list(self.initial))

    def _search(self, values: list[Optional[int]]) -> Iterator[list[int]]:
        pending = next((i for i in self.order if values[i] is None), None)
        if pending is None:
            yield values
            return
        for value in range(self.size):
            trial = list(values)
            queue: list[int] = []
            if self._set(trial, pending, value, queue) and self._propagate(trial, queue):
                yield from self._search(trial)

    def to_coloring(self, values: list[int]) -> Coloring:
        return Coloring.from_dict(dict(zip(self.arcs, values)), self.carrier)


def check_coloring(d: Diagram, q: Quandle, col: Coloring) -> list[ColoringViolation]:
    """
    逐节点检查染色条件

    :return: 违例列表，空表示合法染色
    :raises ColoringInputError: 染色缺少弧
    """
    colors = col.as_dict()
    missing = [a.id for a in d.arcs if a.id not in colors]
    if missing:
        raise ColoringInputError(f"染色缺少弧: {', '.join(missing)}")
    if d.vertices and not isinstance(q, AssociatedQuandle):
        raise ColoringInputError("含顶点的图表需要 G-family 的关联 quandle")
    violations: list[ColoringViolation] = []
    for c in d.crossings:
        over_in = colors[d.head_at[Slot(c.id, OVER_IN)]]
        over_out = colors[d.tail_at[Slot(c.id, OVER_OUT)]]
        under_in = colors[d.head_at[Slot(c.id, UNDER_IN)]]
        under_out = colors[d.tail_at[Slot(c.id, UNDER_OUT)]]
        if over_in != over_out:
            violations.append(ColoringViolation(c.id, "over", f"上股颜色 {over_in} ≠ {over_out}"))
        expected = q.op(under_in, over_in) if c.sign > 0 else q.op_inverse(under_in, over_in)
        if under_out != expected:
            violations.append(ColoringViolation(c.id, "under", f"下股离开颜色应为 {expected}，实际 {under_out}"))
    if isinstance(q, AssociatedQuandle):
        group = q.group
        for v in d.vertices:
            legs = _vertex_legs(d, v.id)
            if len({q.x_of(colors[a]) for a, _ in legs}) != 1:
                violations.append(ColoringViolation(v.id, "vertex-x", "三条腿的 X 分量不相等"))
            product = group.identity
            for arc_id, out in legs:
                g = q.g_of(colors[arc_id])
                product = int(group.mul[product, group.inv[g] if out else g])
            if product != group.identity:
                violations.append(ColoringViolation(v.id, "vertex-g", f"G 分量按循环顺序之积为 {product}"))
    return violations


def enumerate_colorings(
    d: Diagram,
    q: Quandle,
    boundary: Optional[dict[str, int]] = None,
    list_limit: Optional[int] = None,
) -> ColoringCount:
    """
    精确计数全部染色

    :param boundary: 固定部分弧的颜色（断开图表的边界条件）
    :param list_limit: 最多保留的染色数，None 取配置值
    :return: ColoringCount；计数超过 list_limit 时只保留前 list_limit 个
    """
    limit = settings.coloring.list_limit if list_limit is None else list_limit
    solver = ColoringSolver(d, q, boundary)
    count = 0
    kept: list[Coloring] = []
    for values in solver.solutions():
        count += 1
        if len(kept) < limit:
            kept.append(solver.to_coloring(values))
    logger.debug(f"染色计数: {count}")
    return ColoringCount(count, tuple(kept))


def first_coloring(
    d: Diagram,
    q: Quandle,
    boundary: Optional[dict[str, int]] = None,
    accept: Optional[Callable[[Coloring], bool]] = None,
) -> Optional[Coloring]:
    """按枚举顺序返回第一个满足 accept 的染色"""
    solver = ColoringSolver(d, q, boundary)
    for values in solver.solutions():
        coloring = solver.to_coloring(values)
        if accept is None or accept(coloring):
            return coloring
    return None


def is_trivial_coloring(col: Coloring) -> bool:
    """X 分量恒定即为平凡染色"""
    return len(col.x_values()) <= 1
