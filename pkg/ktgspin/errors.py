"""
异常定义模块
输入类错误统一继承 KtgInputError（CLI 退出码 1），内部不变量破坏继承 InvariantBreachError（退出码 2）
"""

from dataclasses import dataclass


class KtgError(Exception):
    """所有 ktgspin 异常的基类"""

    def __init__(self, msg: str = "") -> None:
        super().__init__(msg)
        self.msg = msg


class KtgInputError(KtgError):
    """调用方输入不合法"""


class InvariantBreachError(KtgError):
    """内部不变量被破坏（求解器与校验器不一致、判定互斥性被破坏等）"""


@dataclass(frozen=True)
class ParseIssue:
    line: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


class DiagramFormatError(KtgInputError):
    """ktg v1 文本解析失败，携带全部行号错误"""

    def __init__(self, issues: list[ParseIssue]) -> None:
        super().__init__("; ".join(str(i) for i in issues))
        self.issues = issues


class TableFormatError(DiagramFormatError):
    """quandle / gfamily 表格文本解析失败"""


class BrokenDiagramError(KtgInputError):
    """操作要求闭合图表，却收到了带端点的断开图表"""


class NotBrokenError(KtgInputError):
    """操作要求断开图表（恰有两个端点）"""


class NonClosedSubgraphError(KtgInputError):
    """保留的边集合使某个顶点只剩一个边端"""


class PositionError(KtgInputError):
    """切割位置越界"""


class UnknownEdgeError(KtgInputError):
    """边标识符不存在"""


class MoveSiteError(KtgInputError):
    """局部改写的位置与模式不匹配"""


class MalformedTableError(KtgInputError):
    """运算表形状或取值越界"""


class InvalidFamilyError(KtgInputError):
    """G-family 缺表或未通过公理检查"""


class ColoringInputError(KtgInputError):
    """染色缺少弧，或图表不满足求解前提"""


class LiftError(KtgInputError):
    """Fox 染色无法提升为断开图表的一致染色"""

    def __init__(self, msg: str, node: str | None = None) -> None:
        super().__init__(msg)
        self.node = node
