"""
Fox n-染色
线性方程组 oo - oi = 0、uo + ui - 2·oi = 0 (mod n)，用整数 Smith 标准形精确计数
"""

import logging
from math import gcd
from typing import Optional

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ..algebra.quandle import dihedral_quandle
from ..errors import ColoringInputError
from ..models.dataclasses import Coloring, FoxResult
from ..models.diagram import Diagram
from .solver import first_coloring, is_trivial_coloring

logger = logging.getLogger(__name__)


def fox_matrix(k: Diagram) -> Matrix:
    """每个交叉两行，列按弧的自然顺序排列"""
    column = {a.id: j for j, a in enumerate(k.arcs)}
    rows: list[list[int]] = []
    for c in k.crossings:
        over_in, over_out = k.strand_arcs(c.id, over=True)
        under_in, under_out = k.strand_arcs(c.id, over=False)
        row = [0] * len(column)
        row[column[over_out]] += 1
        row[column[over_in]] -= 1
        rows.append(row)
        row = [0] * len(column)
        row[column[under_out]] += 1
        row[column[under_in]] += 1
        row[column[over_in]] -= 2
        rows.append(row)
    return Matrix(len(rows), len(column), [v for row in rows for v in row])


def invariant_factors(matrix: Matrix) -> tuple[int, ...]:
    """Smith 标准形对角线（长度 min(行, 列)）"""
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return ()
    if matrix.is_zero_matrix:
        return (0,) * min(rows, cols)
    snf = smith_normal_form(matrix, domain=ZZ)
    return tuple(abs(int(snf[i, i])) for i in range(min(rows, cols)))


def fox_colorings(k: Diagram, n: int) -> FoxResult:
    """
    计数 Fox n-染色

    解数 = ∏ gcd(d_i, n) × n^(列数 - min(行, 列))，d_i 为 Smith 标准形对角元

    :param k: 无顶点的闭合纽结 / 链环图表
    :param n: 模数，n ≥ 2
    :raises ColoringInputError: 图表含顶点或 n < 2
    """
    if n < 2:
        raise ColoringInputError(f"Fox 模数须 ≥ 2，实际为 {n}")
    if k.vertices:
        raise ColoringInputError("Fox 染色只对不含顶点的纽结图表定义")
    matrix = fox_matrix(k)
    factors = invariant_factors(matrix)
    cols = matrix.shape[1]
    extra = cols - len(factors)
    count = n**extra
    free = extra
    for d in factors:
        g = gcd(d, n)
        count *= g
        if g == n:
            free += 1
    logger.debug(f"Fox {n}-染色: {count} 个，不变因子 {factors}")
    return FoxResult(n=n, count=count, free_parameters=free, invariant_factors=factors)


def find_fox_coloring(k: Diagram, n: int, nontrivial: bool = True) -> Optional[Coloring]:
    """
    给出一个 Fox n-染色作为见证

    :param nontrivial: 是否要求非常值
    :return: Coloring（元素为 Z/n），不存在时返回 None
    """
    if k.vertices:
        raise ColoringInputError("Fox 染色只对不含顶点的纽结图表定义")
    accept = (lambda col: not is_trivial_coloring(col)) if nontrivial else None
    # 平移不变：固定第一条弧为 0 不丢失非平凡解
    boundary = {k.arcs[0].id: 0} if k.arcs else None
    return first_coloring(k, dihedral_quandle(n), boundary, accept)
