"""
投射流水线配置

优先级: 命令行参数 > 配置文件 > 环境变量(PROJECTOR_*) > 默认值

配置文件是扁平的 key=value 文本(与 .env 同格式),例如:

    source_treebank=data/tr.conllu
    target_sentences=data/ky.txt
    alignments=data/tr-ky.align
    lexicon=data/ky.lexicon.tsv
    output=out/ky.projected.conllu
    merge_mode=union
"""
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values
from pydantic import Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.config.options import MergeMode, RootOrder, UposSource
from src.core.config.settings import settings
from src.core.errors import ConfigError

DATA_DIR = Path(__file__).resolve().parent.parent.parent / "data"
DEFAULT_TAG_MAP = DATA_DIR / "apertium_upos.tsv"

# 运行开始时必须存在的输入文件
_INPUT_FIELDS = (
    "source_treebank",
    "target_sentences",
    "alignments",
    "reverse_alignments",
    "lexicon",
    "tag_map",
    "gold_treebank",
)


class PipelineConfig(BaseSettings):
    """一次投射运行的输入文件和开关"""

    model_config = SettingsConfigDict(
        env_prefix='PROJECTOR_',
        case_sensitive=False,
        extra='forbid',
    )

    # ========== 输入 ==========
    source_treebank: Path = Field(description="源语言 CoNLL-U 树库(已句法分析)")
    target_sentences: Path = Field(description="目标语言句子,每行一句,空格分词")
    alignments: Path = Field(description="Pharaoh 格式词对齐,每行一句")
    reverse_alignments: Optional[Path] = Field(
        default=None,
        description="反方向(目标->源)对齐文件,与正向对齐合并"
    )
    lexicon: Path = Field(description="形态词典 TSV: FORM LEMMA RAWTAG")
    tag_map: Path = Field(default=DEFAULT_TAG_MAP, description="原始标签 -> UPOS 映射 TSV")
    gold_treebank: Optional[Path] = Field(default=None, description="目标语言 gold 树库(可选)")

    # ========== 输出 ==========
    output: Path = Field(description="投射结果 CoNLL-U 路径")
    provenance: Optional[Path] = Field(
        default=None,
        description="来源标记 TSV 路径,默认 <output>.provenance.tsv"
    )

    # ========== 开关 ==========
    merge_mode: MergeMode = Field(default=MergeMode.UNION, description="正反向对齐合并方式")
    swap_direction: bool = Field(default=False, description="对齐文件为 目标-源 顺序时交换")
    root_order: RootOrder = Field(default=RootOrder.FILTER_FIRST, description="根节点解析与过滤的顺序")
    upos_source: UposSource = Field(default=UposSource.PROJECTED, description="匹配词的 UPOS 来源")
    workers: int = Field(default=settings.workers, ge=1, description="逐句投射线程数")

    @model_validator(mode="after")
    def _check_inputs_exist(self) -> "PipelineConfig":
        missing = [
            f"{name}={getattr(self, name)}"
            for name in _INPUT_FIELDS
            if getattr(self, name) is not None and not getattr(self, name).is_file()
        ]
        if missing:
            raise ValueError(f"input files not found: {', '.join(missing)}")
        return self

    @property
    def provenance_path(self) -> Path:
        """来源标记文件的实际路径"""
        if self.provenance is not None:
            return self.provenance
        return self.output.with_name(self.output.name + ".provenance.tsv")

    @property
    def error_manifest_path(self) -> Path:
        """部分失败时写出的错误清单路径"""
        return self.output.with_name(self.output.name + ".errors.tsv")

    def describe(self) -> Dict[str, str]:
        """用于日志和输出元数据的扁平视图"""
        values = self.model_dump(mode="json")
        values["provenance"] = str(self.provenance_path)
        return {key: "" if value is None else str(value) for key, value in values.items()}


def read_config_file(path: Path) -> Dict[str, str]:
    """
    读取扁平 key=value 配置文件

    Args:
        path: 配置文件路径

    Returns:
        小写、下划线化后的键值字典(空值被忽略)
    """
    if not Path(path).is_file():
        raise ConfigError(f"config file not found: {path}")
    raw = dotenv_values(path)
    return {
        key.strip().lower().replace("-", "_"): value
        for key, value in raw.items()
        if value not in (None, "")
    }


def load_pipeline_config(
    config_file: Optional[Path] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> PipelineConfig:
    """
    合并配置文件与命令行参数并验证

    Args:
        config_file: 扁平 key=value 配置文件,可选
        overrides: 命令行参数,值为 None 的项视为未指定

    Returns:
        验证后的 PipelineConfig

    Raises:
        ConfigError: 缺少必填项、取值非法或输入文件不存在
    """
    values: Dict[str, Any] = {}
    if config_file is not None:
        values.update(read_config_file(config_file))
    if overrides:
        values.update({key: value for key, value in overrides.items() if value is not None})

    try:
        return PipelineConfig(**values)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigError(f"invalid pipeline configuration: {problems}") from e


__all__ = [
    'PipelineConfig',
    'load_pipeline_config',
    'read_config_file',
    'DEFAULT_TAG_MAP',
    'DATA_DIR',
]
