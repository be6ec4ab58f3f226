"""
G-family 注册表
把 "dihedral:5"、"trivial:3"、"conjugation:s3" 这样的名称解析为 GFamily，供 CLI 的 --family 使用

使用示例:
```python
@register_family("mine")
def build_mine(arg: str) -> GFamily:
    ...

gf = resolve_family("mine:4")
```
"""

import logging
from typing import Callable

from ..algebra.gfamily import GFamily, conjugation_gfamily, dihedral_gfamily, trivial_gfamily
from ..algebra.group import symmetric_group
from ..errors import InvalidFamilyError

logger = logging.getLogger(__name__)

FamilyFactory = Callable[[str], GFamily]

_registry: dict[str, FamilyFactory] = {}


def register_family(prefix: str) -> Callable[[FamilyFactory], FamilyFactory]:
    def decorator(factory: FamilyFactory) -> FamilyFactory:
        if prefix in _registry:
            logger.warning(f"G-family 前缀 {prefix} 已注册，将被覆盖")
        _registry[prefix] = factory
        return factory

    return decorator


def available_families() -> list[str]:
    return sorted(_registry)


def resolve_family(text: str) -> GFamily:
    """
    按 "前缀:参数" 构造 G-family

    :raises InvalidFamilyError: 未知前缀或参数不合法
    """
    prefix, _, arg = text.partition(":")
    factory = _registry.get(prefix)
    if factory is None:
        raise InvalidFamilyError(f"未知的 G-family '{text}'，可选: {', '.join(available_families())}")
    return factory(arg)


def _int_arg(arg: str, prefix: str) -> int:
    try:
        return int(arg)
    except ValueError:
        raise InvalidFamilyError(f"{prefix} 需要整数参数，例如 {prefix}:3")


def setup_builtin_families() -> None:
    """注册内置 G-family"""

    @register_family("dihedral")
    def _dihedral(arg: str) -> GFamily:
        return dihedral_gfamily(_int_arg(arg, "dihedral"))

    @register_family("trivial")
    def _trivial(arg: str) -> GFamily:
        return trivial_gfamily(_int_arg(arg, "trivial"))

    @register_family("conjugation")
    def _conjugation(arg: str) -> GFamily:
        if arg.lower() not in ("", "s3"):
            raise InvalidFamilyError(f"conjugation 目前只支持 s3，收到 '{arg}'")
        return conjugation_gfamily(symmetric_group(3))


setup_builtin_families()
