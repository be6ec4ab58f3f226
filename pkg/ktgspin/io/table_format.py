"""
quandle / G-family 运算表文本格式::

    quandle 3
    0 2 1
    2 1 0
    1 0 2

    gfamily 3 2
    group          # 可选，缺省为 Z/k；元素 0 总是单位元
    0 1
    1 0
    op 0
    ...m 行
    op 1
    ...m 行
"""

from pathlib import Path
from typing import Iterator

from ..algebra.gfamily import GFamily
from ..algebra.group import FiniteGroup, cyclic_group
from ..algebra.quandle import FiniteQuandle
from ..errors import KtgInputError, ParseIssue, TableFormatError


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


class _Cursor:
    def __init__(self, text: str) -> None:
        self.items = list(_lines(text))
        self.pos = 0

    def next(self, what: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.items):
            last = self.items[-1][0] if self.items else 0
            raise TableFormatError([ParseIssue(last, f"文件提前结束，缺少{what}")])
        item = self.items[self.pos]
        self.pos += 1
        return item

    def peek(self) -> list[str] | None:
        return self.items[self.pos][1] if self.pos < len(self.items) else None

    def rows(self, count: int, width: int, what: str) -> list[list[int]]:
        rows = []
        for _ in range(count):
            number, tokens = self.next(what)
            if len(tokens) != width:
                raise TableFormatError([ParseIssue(number, f"{what}每行应有 {width} 个整数，实际 {len(tokens)} 个")])
            try:
                rows.append([int(t) for t in tokens])
            except ValueError:
                raise TableFormatError([ParseIssue(number, f"{what}含非整数: {' '.join(tokens)}")])
        return rows


def _header_ints(number: int, tokens: list[str], count: int) -> list[int]:
    try:
        values = [int(t) for t in tokens[1:]]
    except ValueError:
        values = []
    if len(values) != count or min(values) < 1:
        raise TableFormatError([ParseIssue(number, f"文件头格式错误: {' '.join(tokens)}")])
    return values


def parse_table(text: str) -> FiniteQuandle | GFamily:
    """
    解析运算表文本

    :return: FiniteQuandle（quandle 头）或 GFamily（gfamily 头）
    :raises TableFormatError: 格式错误，带行号
    """
    cursor = _Cursor(text)
    number, header = cursor.next("文件头")
    try:
        if header[0] == "quandle":
            (m,) = _header_ints(number, header, 1)
            return FiniteQuandle.from_table(cursor.rows(m, m, "运算表"))
        if header[0] == "gfamily":
            m, k = _header_ints(number, header, 2)
            group = cyclic_group(k)
            if cursor.peek() == ["group"]:
                cursor.next("group")
                group = FiniteGroup.from_table(cursor.rows(k, k, "群乘法表"), 0, f"G{k}")
            tables = []
            for g in range(k):
                op_line, tokens = cursor.next(f"op {g}")
                if tokens != ["op", str(g)]:
                    raise TableFormatError([ParseIssue(op_line, f"应为 'op {g}'")])
                tables.append(cursor.rows(m, m, f"◁_{g} 运算表"))
            return GFamily.from_tables(group, tables, f"table:{m}x{k}")
    except TableFormatError:
        raise
    except KtgInputError as e:
        raise TableFormatError([ParseIssue(number, e.msg)])
    raise TableFormatError([ParseIssue(number, f"未知的文件头 '{header[0]}'，应为 quandle 或 gfamily")])


def load_table(path: str | Path) -> FiniteQuandle | GFamily:
    return parse_table(Path(path).read_text(encoding="utf-8"))
