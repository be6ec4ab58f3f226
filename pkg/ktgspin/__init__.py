"""
KTG 图表工具包
纽结三价图（KTG）图表的解析与校验、G-family 关联 quandle 染色、Fox 染色、
局部改写与有界化简，以及沿图边 ±1 twist spin 的 KNOTTED / UNKNOTTED / UNKNOWN 判定

特性:
- ktg v1 文本格式，带行号的解析错误
- quandle / G-family 公理检查，关联 quandle 构造
- 精确染色计数（传播 + 回溯），Fox n-染色（Smith 标准形）
- R1-R3、顶点扭转与滑动改写，最佳优先有界化简，可重放的化简记录
- 端点下降、Fox 染色提升与带见证的 spin 判定
- Pydantic 配置管理（环境变量前缀 KTG_）

快速开始:
```python
from ktgspin import load, classify_spin, all_spins, settings

d = load("fixtures/trefoil-chord-theta.ktg")
certificate = classify_spin(d, "e1")
print(certificate.verdict, certificate.theorem)

for c in all_spins(d, workers=settings.workers):
    print(c.edge, c.verdict)
```
"""

from .config import (
    GlobalSetting,
    OutputFormat,
    SpinOptions,
    Verdict,
    settings,
)

from .errors import (
    KtgError,
    KtgInputError,
    InvariantBreachError,
)

from .models.diagram import Diagram, Node, NodeKind, Slot, Arc, Edge

from .io.ktg_format import load, parse, parse_document, serialize, dump
from .io.table_format import load_table, parse_table

from .algebra.gfamily import GFamily, associated_quandle, verify_gfamily
from .algebra.quandle import FiniteQuandle, verify_quandle
from .plugins.families import register_family, resolve_family

from .diagram.validate import validate
from .diagram.surgery import cut_edge, mirror, reglue

from .coloring.solver import enumerate_colorings, check_coloring
from .coloring.fox import fox_colorings

from .moves.patterns import Move, MoveKind, applicable_moves
from .moves.rewrite import apply_move
from .moves.search import simplify, replay_trace
from .moves.mn import mn_endpoint_descend

from .spin.classifier import SpinCertificate, classify_spin
from .spin.constituents import spin_constituents, almost_trivial_check
from .spin.survey import all_spins

__all__ = [
    # 配置相关
    "GlobalSetting",
    "OutputFormat",
    "SpinOptions",
    "Verdict",
    "settings",
    # 异常
    "KtgError",
    "KtgInputError",
    "InvariantBreachError",
    # 图表模型
    "Diagram",
    "Node",
    "NodeKind",
    "Slot",
    "Arc",
    "Edge",
    # 文本格式
    "load",
    "parse",
    "parse_document",
    "serialize",
    "dump",
    "load_table",
    "parse_table",
    # 代数
    "GFamily",
    "associated_quandle",
    "verify_gfamily",
    "FiniteQuandle",
    "verify_quandle",
    "register_family",
    "resolve_family",
    # 图表手术
    "validate",
    "cut_edge",
    "mirror",
    "reglue",
    # 染色
    "enumerate_colorings",
    "check_coloring",
    "fox_colorings",
    # 改写与化简
    "Move",
    "MoveKind",
    "applicable_moves",
    "apply_move",
    "simplify",
    "replay_trace",
    "mn_endpoint_descend",
    # spin 判定
    "SpinCertificate",
    "classify_spin",
    "spin_constituents",
    "almost_trivial_check",
    "all_spins",
]

__version__ = "0.1.0"
