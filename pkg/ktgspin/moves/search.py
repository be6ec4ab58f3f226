"""
有界最佳优先化简
优先级: (交叉数, 已用插入次数, 图表哈希)；哈希只用于分桶与排序，
同构判定在同一哈希桶内完成；交叉数超过 当前最小值 + max_insertions 的状态被剪枝。
"""

import dataclasses
import heapq
import logging
from typing import Optional

from ..config import settings
from ..diagram.isomorphism import diagram_hash, is_isomorphic
from ..errors import InvariantBreachError
from ..models.diagram import Diagram
from .patterns import Move, applicable_moves
from .rewrite import apply_move, rewrite

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TraceStep:
    move: Move
    # 执行后的交叉数
    crossings: int

    def __str__(self) -> str:
        return f"{self.move} -> {self.crossings}"


@dataclasses.dataclass(frozen=True)
class SimplificationTrace:
    """化简记录：初始图表、逐步改写、最终图表"""

    initial: Diagram
    steps: tuple[TraceStep, ...]
    final: Diagram
    expansions: int = 0
    # 预算耗尽时仍有未展开的状态
    exhausted: bool = False
    # 去重后访问过的状态数
    visited: int = 1

    @property
    def final_crossings(self) -> int:
        return self.final.crossing_count

    @property
    def reached_zero(self) -> bool:
        return self.final.crossing_count == 0

    @property
    def moves(self) -> list[str]:
        return [str(step.move) for step in self.steps]


def simplify(
    d: Diagram,
    budget: Optional[int] = None,
    max_insertions: Optional[int] = None,
    use_kinks: Optional[bool] = None,
) -> SimplificationTrace:
    """
    在交叉数上做有界最佳优先搜索，返回通往最少交叉图表的改写序列

    :param d: 合法图表
    :param budget: 最大展开数，默认取 settings.search.budget
    :param max_insertions: 允许的净插入交叉数，默认取 settings.search.max_insertions
    :param use_kinks: 是否生成 R1+，默认取 settings.search.use_kinks
    :return: SimplificationTrace；final 的交叉数不超过输入
    """
    budget = settings.search.budget if budget is None else budget
    max_insertions = settings.search.max_insertions if max_insertions is None else max_insertions
    use_kinks = settings.search.use_kinks if use_kinks is None else use_kinks

    states: list[Diagram] = [d]
    parents: list[Optional[tuple[int, Move]]] = [None]
    start_hash = diagram_hash(d)
    # 哈希 -> 已访问状态的下标；WL 哈希不是单射，桶内再做同构判定
    buckets: dict[str, list[int]] = {start_hash: [0]}
    frontier: list[tuple[int, int, str, int]] = [(d.crossing_count, 0, start_hash, 0)]
    best = 0
    floor = d.crossing_count
    expansions = 0

    while frontier and expansions < budget and states[best].crossing_count > 0:
        _, used, _, index = heapq.heappop(frontier)
        state = states[index]
        expansions += 1
        for move in applicable_moves(state, use_kinks=use_kinks):
            child = rewrite(state, move)
            crossings = child.crossing_count
            if crossings > floor + max_insertions:
                continue
            child_hash = diagram_hash(child)
            bucket = buckets.setdefault(child_hash, [])
            if any(is_isomorphic(child, states[i]) for i in bucket):
                continue
            states.append(child)
            bucket.append(len(states) - 1)
            parents.append((index, move))
            child_index = len(states) - 1
            cost = used + (1 if move.kind.is_insertion else 0)
            heapq.heappush(frontier, (crossings, cost, child_hash, child_index))
            floor = min(floor, crossings)
            if crossings < states[best].crossing_count:
                best = child_index
                if crossings == 0:
                    break

    steps: list[TraceStep] = []
    cursor = best
    while parents[cursor] is not None:
        parent, move = parents[cursor]
        steps.append(TraceStep(move, states[cursor].crossing_count))
        cursor = parent
    steps.reverse()

    final = states[best]
    exhausted = final.crossing_count > 0 and bool(frontier) and expansions >= budget
    if exhausted:
        logger.warning(f"化简预算 {budget} 已耗尽，最少交叉数 {final.crossing_count}")
    logger.debug(
        f"化简: {d.crossing_count} -> {final.crossing_count} 个交叉, "
        f"展开 {expansions} 次, 访问 {len(states)} 个状态"
    )
    return SimplificationTrace(d, tuple(steps), final, expansions, exhausted, len(states))


def replay_trace(trace: SimplificationTrace) -> Diagram:
    """
    按记录重新执行改写并核对交叉数与最终图表

    :raises MoveSiteError: 某一步不再匹配
    :raises InvariantBreachError: 交叉数或最终图表与记录不符
    """
    current = trace.initial
    for i, step in enumerate(trace.steps):
        current = apply_move(current, step.move)
        if current.crossing_count != step.crossings:
            raise InvariantBreachError(
                f"第 {i + 1} 步 {step.move} 后交叉数为 {current.crossing_count}，记录为 {step.crossings}"
            )
    if not is_isomorphic(current, trace.final):
        raise InvariantBreachError("重放结果与记录的最终图表不同构")
    return current
