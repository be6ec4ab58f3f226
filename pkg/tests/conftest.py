from pathlib import Path

import pytest

from ktgspin.io.ktg_format import load, parse
from ktgspin.models.diagram import Diagram

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

CORPUS = [
    "planar-theta",
    "unknot",
    "trefoil",
    "figure-eight",
    "trefoil-chord-theta",
    "kinoshita-theta",
    "granny-theta",
]

# 1 交叉平凡圈（正向扭结）
KINK_UNKNOT = """\
ktg v1
crossing x1 +1 over(a1 a2) under(a2 a1)
edge k = a1 a2
"""

# 完全图 K4
K4 = """\
ktg v1
vertex A (+a1 +a2 +a3)
vertex B (-a1 +a4 +a5)
vertex C (-a2 -a4 +a6)
vertex D (-a3 -a5 -a6)
edge e1 = a1
edge e2 = a2
edge e3 = a3
edge e4 = a4
edge e5 = a5
edge e6 = a6
"""

# 手铐图：两个自环由一条桥连接
HANDCUFF = """\
ktg v1
vertex u (+a1 -a1 +a3)
vertex v (-a3 +a2 -a2)
edge l1 = a1
edge bar = a3
edge l2 = a2
"""


def fixture_path(name: str) -> Path:
    suffix = "" if "." in name else ".ktg"
    return FIXTURES / f"{name}{suffix}"


@pytest.fixture
def load_fixture():
    """按名称读取 fixtures/ 下的图表"""

    def _load(name: str) -> Diagram:
        return load(fixture_path(name))

    return _load


@pytest.fixture
def planar_theta() -> Diagram:
    return load(fixture_path("planar-theta"))


@pytest.fixture
def trefoil() -> Diagram:
    return load(fixture_path("trefoil"))


@pytest.fixture
def kink_unknot() -> Diagram:
    return parse(KINK_UNKNOT)


@pytest.fixture
def handcuff() -> Diagram:
    return parse(HANDCUFF)
