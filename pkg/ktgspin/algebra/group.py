"""
有限群（乘法表表示）
"""

import dataclasses
import itertools
from functools import cached_property
from typing import Sequence

import numpy as np

from ..errors import MalformedTableError
from ..models.dataclasses import AxiomViolation


@dataclasses.dataclass(frozen=True, eq=False)
class FiniteGroup:
    """
    mul[g, h] = gh，identity 为单位元下标
    """

    mul: np.ndarray
    identity: int = 0
    name: str = ""

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]] | np.ndarray, identity: int = 0, name: str = "") -> "FiniteGroup":
        table = np.array(rows, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.size == 0:
            raise MalformedTableError(f"群乘法表形状 {table.shape} 不合法")
        if table.min() < 0 or table.max() >= table.shape[0]:
            raise MalformedTableError("群乘法表取值越界")
        table.setflags(write=False)
        return cls(table, identity, name)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @cached_property
    def inv(self) -> np.ndarray:
        """inv[g] = g⁻¹"""
        result = np.argmax(self.mul == self.identity, axis=1)
        result.setflags(write=False)
        return result

    @cached_property
    def conj(self) -> np.ndarray:
        """conj[g, h] = h⁻¹ g h"""
        gs, hs = np.indices((self.order, self.order))
        result = self.mul[self.mul[self.inv[hs], gs], hs]
        result.setflags(write=False)
        return result


def verify_group(group: FiniteGroup) -> list[AxiomViolation]:
    """穷举检查结合律、单位元与逆元"""
    mul = group.mul
    k = group.order
    elements = np.arange(k)
    violations: list[AxiomViolation] = []
    if not (np.array_equal(mul[group.identity], elements) and np.array_equal(mul[:, group.identity], elements)):
        violations.append(AxiomViolation("identity", (group.identity,), "单位元不满足 1g = g1 = g"))
    for g in elements:
        if group.identity not in mul[g]:
            violations.append(AxiomViolation("inverse", (int(g),), f"{g} 没有逆元"))
    gs, hs, ls = np.indices((k, k, k))
    bad = np.argwhere(mul[mul[gs, hs], ls] != mul[gs, mul[hs, ls]])
    for g, h, l in bad[:20]:
        violations.append(AxiomViolation("associativity", (int(g), int(h), int(l)), "(gh)l ≠ g(hl)"))
    return violations


def cyclic_group(k: int) -> FiniteGroup:
    """Z/k，加法，单位元 0"""
    gs, hs = np.indices((k, k))
    return FiniteGroup.from_table((gs + hs) % k, 0, f"Z{k}")


def symmetric_group(n: int = 3) -> FiniteGroup:
    """
    S_n，元素为 range(n) 的置换（按字典序编号），乘法为复合 (gh)(i) = h(g(i))
    """
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(h[g[i]] for i in range(n))] for h in perms] for g in perms]
    return FiniteGroup.from_table(table, index[tuple(range(n))], f"S{n}")
