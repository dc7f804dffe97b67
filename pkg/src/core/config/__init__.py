"""Core 配置模块"""
from src.core.config.settings import settings, Settings
from src.core.config.options import MergeMode, RootOrder, UposSource
from src.core.config.pipeline import (
    PipelineConfig,
    load_pipeline_config,
    read_config_file,
    DEFAULT_TAG_MAP,
)

__all__ = [
    'settings',
    'Settings',
    'MergeMode',
    'RootOrder',
    'UposSource',
    'PipelineConfig',
    'load_pipeline_config',
    'read_config_file',
    'DEFAULT_TAG_MAP',
]
