"""
全局配置模块
提供搜索预算、Fox 模数范围、代数穷举上限等配置，支持环境变量覆盖（前缀 KTG_）
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Verdict(str, Enum):
    """twist spin 判定结果枚举"""

    KNOTTED = "KNOTTED"
    UNKNOTTED = "UNKNOTTED"
    UNKNOWN = "UNKNOWN"


class OutputFormat(str, Enum):
    """CLI 报告格式枚举"""

    TEXT = "text"
    JSON = "json"


class SearchModel(BaseModel):
    """
    化简搜索配置

    环境变量示例:
    KTG_SEARCH__BUDGET=20000
    KTG_SEARCH__MAX_INSERTIONS=2
    """

    budget: int = Field(default=100_000, ge=1, description="最佳优先搜索的最大展开节点数")
    max_insertions: int = Field(
        default=2, ge=0, le=4, description="相对当前最小交叉数允许的净增交叉数"
    )
    use_kinks: bool = Field(default=False, description="搜索时是否生成 R1+ 插入")


class SpinModel(BaseModel):
    """twist spin 判定配置"""

    n_min: int = Field(default=2, ge=2, description="Fox 染色模数下界")
    n_max: int = Field(default=13, ge=2, description="Fox 染色模数上界")
    cut_position: Optional[int] = Field(
        default=None, ge=0, description="切割位置，None 表示取边的中间弧"
    )
    with_mirror: bool = Field(default=True, description="是否同时给出镜像（相反符号）证书")
    cross_check: bool = Field(
        default=False, description="KNOTTED 成立时是否仍运行 UNKNOTTED 路径做互斥检查"
    )

    @model_validator(mode="after")
    def check_range(self) -> "SpinModel":
        """校验模数范围"""
        if self.n_max < self.n_min:
            raise ValueError(f"Fox 模数范围为空: {self.n_min}..{self.n_max}")
        return self


class AlgebraModel(BaseModel):
    """代数公理穷举检查配置"""

    max_carrier: int = Field(default=64, ge=1, description="穷举检查允许的最大载体大小")


class ColoringModel(BaseModel):
    """染色求解配置"""

    list_limit: int = Field(default=1000, ge=0, description="超过该数量时只返回计数")


class GlobalSetting(BaseSettings):
    """全局配置类"""

    model_config = SettingsConfigDict(
        env_prefix="KTG_",
        env_nested_delimiter="__",
        extra="ignore",
        case_sensitive=False,
    )

    search: SearchModel = Field(default_factory=SearchModel)
    spin: SpinModel = Field(default_factory=SpinModel)
    algebra: AlgebraModel = Field(default_factory=AlgebraModel)
    coloring: ColoringModel = Field(default_factory=ColoringModel)
    workers: int = Field(default=1, ge=1, le=64, description="按边并行判定的进程数")


class SpinOptions(BaseModel):
    """
    单次 classify_spin 调用参数

    n_range 支持 "2..13" 形式的字符串或 (lo, hi) 二元组
    """

    n_range: tuple[int, int] = (2, 13)
    budget: int = Field(default=100_000, ge=1)
    max_insertions: int = Field(default=2, ge=0, le=4)
    cut_position: Optional[int] = Field(default=None, ge=0)
    with_mirror: bool = True
    cross_check: bool = False

    @field_validator("n_range", mode="before")
    @classmethod
    def validate_n_range(cls, v) -> tuple[int, int]:
        """解析并校验 Fox 模数范围"""
        if isinstance(v, str):
            lo, sep, hi = v.partition("..")
            if not sep:
                raise ValueError(f"不支持的模数范围: {v}")
            v = (int(lo), int(hi))
        lo, hi = v
        if lo < 2 or hi < lo:
            raise ValueError(f"模数范围无效: {lo}..{hi}")
        return (lo, hi)

    @classmethod
    def from_settings(cls, setting: Optional["GlobalSetting"] = None, **overrides) -> "SpinOptions":
        """
        由全局配置构建调用参数

        Args:
            setting: 全局配置实例，None 则使用模块级 settings
            overrides: 覆盖项（None 值忽略）

        Returns:
            SpinOptions 实例
        """
        setting = setting or settings
        values = {
            "n_range": (setting.spin.n_min, setting.spin.n_max),
            "budget": setting.search.budget,
            "max_insertions": setting.search.max_insertions,
            "cut_position": setting.spin.cut_position,
            "with_mirror": setting.spin.with_mirror,
            "cross_check": setting.spin.cross_check,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


# 全局配置实例
settings = GlobalSetting()
