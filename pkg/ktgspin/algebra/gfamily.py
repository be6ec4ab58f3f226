"""
G-family of quandles 与关联 quandle

GFamily 对每个群元素 g 给出 X 上的运算 ◁_g，满足:
    (i)   x◁_g x = x
    (ii)  (x◁_g y)◁_h y = x◁_{gh} y
    (iii) x◁_1 y = x
    (iv)  (x◁_g y)◁_h z = (x◁_h z)◁_{h⁻¹gh}(y◁_h z)
关联 quandle 的载体为 X×G，(x,g)◁(y,h) = (x◁_h y, h⁻¹gh)，元素 (x,g) 编码为 g*m + x
"""

import dataclasses
import logging
from typing import Sequence

import numpy as np

from ..errors import InvalidFamilyError, MalformedTableError
from ..models.dataclasses import AxiomViolation
from .group import FiniteGroup, cyclic_group, symmetric_group
from .quandle import FiniteQuandle, as_table

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class GFamily:
    """tables[g, x, y] = x◁_g y"""

    group: FiniteGroup
    tables: np.ndarray
    name: str = ""

    @classmethod
    def from_tables(cls, group: FiniteGroup, tables: Sequence | np.ndarray, name: str = "") -> "GFamily":
        array = as_table(tables, dims=3)
        if array.shape[0] != group.order:
            raise InvalidFamilyError(f"群有 {group.order} 个元素，但只给出 {array.shape[0]} 张运算表")
        return cls(group, array, name)

    @property
    def size(self) -> int:
        return self.tables.shape[1]


def verify_gfamily(gf: GFamily, limit: int = 20) -> list[AxiomViolation]:
    """
    穷举检查 G-family 四条公理

    :param gf: 候选 G-family
    :param limit: 每条公理最多报告的反例数
    :return: 违例列表；witness 依公理为 (g, x) / (g, h, x, y) / (x, y) / (g, h, x, y, z)
    """
    group, t = gf.group, gf.tables
    k, m = group.order, gf.size
    if t.shape[0] != k:
        raise InvalidFamilyError(f"缺少运算表: 需要 {k} 张，实际 {t.shape[0]} 张")
    mul, conj = group.mul, group.conj
    violations: list[AxiomViolation] = []

    gs, xs = np.indices((k, m))
    for g, x in np.argwhere(t[gs, xs, xs] != xs)[:limit]:
        violations.append(AxiomViolation("(i) x◁_g x = x", (int(g), int(x)), f"x◁_{g} x = {t[g, x, x]}"))

    gs, hs, xs, ys = np.indices((k, k, m, m))
    lhs = t[hs, t[gs, xs, ys], ys]
    rhs = t[mul[gs, hs], xs, ys]
    for g, h, x, y in np.argwhere(lhs != rhs)[:limit]:
        violations.append(
            AxiomViolation("(ii) (x◁_g y)◁_h y = x◁_gh y", (int(g), int(h), int(x), int(y)), f"{lhs[g, h, x, y]} ≠ {rhs[g, h, x, y]}")
        )

    xs, ys = np.indices((m, m))
    for x, y in np.argwhere(t[group.identity] != xs)[:limit]:
        violations.append(AxiomViolation("(iii) x◁_1 y = x", (int(x), int(y)), f"x◁_1 y = {t[group.identity, x, y]}"))

    gs, hs, xs, ys, zs = np.indices((k, k, m, m, m))
    lhs = t[hs, t[gs, xs, ys], zs]
    rhs = t[conj[gs, hs], t[hs, xs, zs], t[hs, ys, zs]]
    for g, h, x, y, z in np.argwhere(lhs != rhs)[:limit]:
        violations.append(
            AxiomViolation(
                "(iv) (x◁_g y)◁_h z = (x◁_h z)◁_{h⁻¹gh}(y◁_h z)",
                (int(g), int(h), int(x), int(y), int(z)),
                f"{lhs[g, h, x, y, z]} ≠ {rhs[g, h, x, y, z]}",
            )
        )
    if violations:
        logger.debug(f"G-family {gf.name} 公理检查发现 {len(violations)} 处违例")
    return violations


@dataclasses.dataclass(frozen=True, eq=False)
class AssociatedQuandle:
    family: GFamily
    quandle: FiniteQuandle

    @property
    def size(self) -> int:
        return self.quandle.size

    @property
    def carrier_size(self) -> int:
        """X 的大小 m"""
        return self.family.size

    @property
    def group(self) -> FiniteGroup:
        return self.family.group

    def element(self, x: int, g: int) -> int:
        return g * self.carrier_size + x

    def x_of(self, element: int) -> int:
        return element % self.carrier_size

    def g_of(self, element: int) -> int:
        return element // self.carrier_size

    def pair(self, element: int) -> tuple[int, int]:
        return self.x_of(element), self.g_of(element)

    def op(self, a: int, b: int) -> int:
        return self.quandle.op(a, b)

    def op_inverse(self, a: int, b: int) -> int:
        return self.quandle.op_inverse(a, b)


def associated_quandle(gf: GFamily, verify: bool = True) -> AssociatedQuandle:
    """
    构造关联 quandle (x,g)◁(y,h) = (x◁_h y, h⁻¹gh)

    :param gf: 通过公理检查的 G-family
    :param verify: 是否先做公理检查
    """
    if verify:
        violations = verify_gfamily(gf)
        if violations:
            raise InvalidFamilyError(f"G-family {gf.name} 不满足公理: {violations[0]}")
    m, k = gf.size, gf.group.order
    if m * k > 4096:
        raise MalformedTableError(f"关联 quandle 过大: {m}×{k}")
    # a = (x, g), b = (y, h)
    a, b = np.indices((m * k, m * k))
    xs, gs = a % m, a // m
    ys, hs = b % m, b // m
    table = gf.group.conj[gs, hs] * m + gf.tables[hs, xs, ys]
    table.setflags(write=False)
    return AssociatedQuandle(gf, FiniteQuandle(table))


def dihedral_gfamily(n: int) -> GFamily:
    """X = Z/n，G = Z2，◁_0 为恒等，x◁_1 y = 2y - x mod n"""
    if n < 2:
        raise InvalidFamilyError(f"dihedral G-family 要求 n ≥ 2，实际为 {n}")
    xs, ys = np.indices((n, n))
    return GFamily.from_tables(cyclic_group(2), np.stack([xs, (2 * ys - xs) % n]), f"dihedral:{n}")


def trivial_gfamily(m: int, k: int = 2) -> GFamily:
    """所有 ◁_g 均为恒等运算"""
    if m < 1 or k < 1:
        raise InvalidFamilyError(f"trivial G-family 参数无效: m={m}, k={k}")
    xs, _ = np.indices((m, m))
    return GFamily.from_tables(cyclic_group(k), np.stack([xs] * k), f"trivial:{m}")


def conjugation_gfamily(group: FiniteGroup | None = None) -> GFamily:
    """X = G，x◁_g y = y g⁻¹ y⁻¹ x g"""
    group = group or symmetric_group(3)
    mul, inv = group.mul, group.inv
    gs, xs, ys = np.indices((group.order,) * 3)
    tables = mul[mul[mul[mul[ys, inv[gs]], inv[ys]], xs], gs]
    return GFamily.from_tables(group, tables, f"conjugation:{group.name.lower()}")
