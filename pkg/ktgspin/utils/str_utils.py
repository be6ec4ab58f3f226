import re
from typing import Iterable

_DIGITS = re.compile(r"(\d+)")


def natural_key(identifier: str) -> tuple:
    """
    将标识符拆分为 文本/数字 交替的排序键
    :param identifier: 标识符（如 "a10"、"e2"）
    :return: 排序键，保证 "a2" 排在 "a10" 之前
    """
    # 1. 按数字切分，数字部分转为整数比较
    parts = _DIGITS.split(identifier)
    # 2. 每段带上类型标记，避免 str 与 int 直接比较
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p != "")


def sorted_ids(identifiers: Iterable[str]) -> list[str]:
    """按自然顺序排序标识符"""
    return sorted(identifiers, key=natural_key)


def fresh_id(prefix: str, existing: Iterable[str]) -> str:
    """
    生成不与已有标识符冲突的新标识符
    :param prefix: 前缀（如 "a"、"x"）
    :param existing: 已占用的标识符
    :return: prefix + 最小可用序号，结果只依赖输入，保证可复现
    """
    taken = set(existing)
    index = 1
    while f"{prefix}{index}" in taken:
        index += 1
    return f"{prefix}{index}"
