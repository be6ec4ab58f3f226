"""
有限 quandle
运算表 T[x, y] = x◁y，元素为 0..m-1
"""

import dataclasses
import logging
from functools import cached_property
from typing import Sequence

import numpy as np

from ..config import settings
from ..errors import MalformedTableError
from ..models.dataclasses import AxiomViolation

logger = logging.getLogger(__name__)

IDEMPOTENCE = "idempotence"
BIJECTIVITY = "right translation not bijective"
DISTRIBUTIVITY = "right self-distributivity"


def as_table(rows: Sequence[Sequence[int]] | np.ndarray, dims: int = 2) -> np.ndarray:
    """
    把嵌套列表转为只读整数表，检查形状与取值范围

    :param rows: 运算表
    :param dims: 维数（quandle 为 2，G-family 为 3）
    :return: 只读 numpy 数组
    """
    try:
        table = np.array(rows, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise MalformedTableError(f"运算表无法转为整数矩阵: {e}")
    if table.ndim != dims or table.shape[-1] != table.shape[-2] or table.shape[-1] == 0:
        raise MalformedTableError(f"运算表形状 {table.shape} 不合法")
    size = table.shape[-1]
    if size > settings.algebra.max_carrier:
        raise MalformedTableError(f"载体大小 {size} 超过上限 {settings.algebra.max_carrier}")
    if table.min() < 0 or table.max() >= size:
        raise MalformedTableError(f"运算表取值须在 0..{size - 1} 之间")
    table.setflags(write=False)
    return table


@dataclasses.dataclass(frozen=True, eq=False)
class FiniteQuandle:
    table: np.ndarray

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]] | np.ndarray) -> "FiniteQuandle":
        return cls(as_table(rows))

    @property
    def size(self) -> int:
        return self.table.shape[0]

    @cached_property
    def inverse(self) -> np.ndarray:
        """inv[x, y] = z 满足 z◁y = x"""
        inv = np.zeros_like(self.table)
        columns = np.arange(self.size)
        for y in range(self.size):
            inv[self.table[:, y], y] = columns
        inv.setflags(write=False)
        return inv

    def op(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def op_inverse(self, x: int, y: int) -> int:
        return int(self.inverse[x, y])

    @property
    def is_involutory(self) -> bool:
        return bool(np.array_equal(self.table, self.inverse))


def verify_quandle(table: FiniteQuandle | Sequence[Sequence[int]] | np.ndarray, limit: int = 20) -> list[AxiomViolation]:
    """
    穷举检查 quandle 三条公理

    :param table: FiniteQuandle 或运算表
    :param limit: 每条公理最多报告的反例数
    :return: 违例列表，空表示是 quandle
    """
    t = table.table if isinstance(table, FiniteQuandle) else as_table(table)
    m = t.shape[0]
    elements = np.arange(m)
    violations: list[AxiomViolation] = []

    for x in np.flatnonzero(t[elements, elements] != elements)[:limit]:
        violations.append(AxiomViolation(IDEMPOTENCE, (int(x),), f"{x}◁{x} = {t[x, x]}"))

    for y in range(m):
        if len(np.unique(t[:, y])) != m:
            violations.append(AxiomViolation(BIJECTIVITY, (y,), f"x ↦ x◁{y} 不是双射"))

    xs, ys, zs = np.indices((m, m, m))
    lhs = t[t[xs, ys], zs]
    rhs = t[t[xs, zs], t[ys, zs]]
    for x, y, z in np.argwhere(lhs != rhs)[:limit]:
        violations.append(
            AxiomViolation(DISTRIBUTIVITY, (int(x), int(y), int(z)), f"(x◁y)◁z = {lhs[x, y, z]}, (x◁z)◁(y◁z) = {rhs[x, y, z]}")
        )
    if violations:
        logger.debug(f"quandle 公理检查发现 {len(violations)} 处违例")
    return violations


def op_inverse(q: FiniteQuandle, x: int, y: int) -> int:
    """返回唯一的 z 使 z◁y = x"""
    return q.op_inverse(x, y)


def trivial_quandle(m: int) -> FiniteQuandle:
    elements = np.arange(m)
    return FiniteQuandle.from_table(np.tile(elements[:, None], (1, m)))


def dihedral_quandle(n: int) -> FiniteQuandle:
    """x◁y = 2y - x mod n"""
    xs, ys = np.indices((n, n))
    return FiniteQuandle.from_table((2 * ys - xs) % n)
