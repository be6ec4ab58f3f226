#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import dataclasses
from typing import Optional

from ..utils.str_utils import natural_key


@dataclasses.dataclass(frozen=True)
class Violation:
    """图表不变量违例"""

    code: str
    detail: str
    ids: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}


@dataclasses.dataclass(frozen=True)
class AxiomViolation:
    """代数公理违例，witness 为反例元素"""

    axiom: str
    witness: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.axiom} {self.witness}: {self.message}"


@dataclasses.dataclass(frozen=True)
class ColoringViolation:
    node: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.node} [{self.rule}] {self.message}"


@dataclasses.dataclass(frozen=True)
class Coloring:
    """
    弧 -> quandle 元素下标

    carrier 为关联 quandle 中 X 的大小，元素 (x, g) 编码为 g*carrier + x；
    carrier 为 0 时元素直接是 quandle（如 Fox 染色的 Z/n）中的元素
    """

    assignment: tuple[tuple[str, int], ...]
    carrier: int = 0

    @classmethod
    def from_dict(cls, values: dict[str, int], carrier: int = 0) -> "Coloring":
        return cls(tuple(sorted(values.items(), key=lambda kv: natural_key(kv[0]))), carrier)

    def as_dict(self) -> dict[str, int]:
        return dict(self.assignment)

    def x_of(self, arc_id: str) -> int:
        value = self.as_dict()[arc_id]
        return value % self.carrier if self.carrier else value

    def pair(self, arc_id: str) -> tuple[int, int]:
        value = self.as_dict()[arc_id]
        if not self.carrier:
            return value, 0
        return value % self.carrier, value // self.carrier

    def x_values(self) -> set[int]:
        return {self.x_of(arc_id) for arc_id, _ in self.assignment}


@dataclasses.dataclass(frozen=True)
class ColoringCount:
    count: int
    colorings: Optional[tuple[Coloring, ...]]


@dataclasses.dataclass(frozen=True)
class FoxResult:
    """Fox n-染色解空间描述"""

    n: int
    count: int
    # 解空间中模 n 自由参数个数（不变因子被 n 整除的列数）
    free_parameters: int
    invariant_factors: tuple[int, ...]

    @property
    def nontrivial(self) -> bool:
        return self.count > self.n


@dataclasses.dataclass(frozen=True)
class ConstituentEntry:
    cycle: tuple[str, ...]
    surface: str
    triviality: str
    fox_evidence: Optional[FoxResult] = None


@dataclasses.dataclass(frozen=True)
class ConstituentReport:
    cut_edge: str
    entries: tuple[ConstituentEntry, ...]

    def spheres(self) -> list[ConstituentEntry]:
        return [e for e in self.entries if e.surface == "sphere"]

    def tori(self) -> list[ConstituentEntry]:
        return [e for e in self.entries if e.surface == "torus"]
