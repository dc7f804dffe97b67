"""
配置管理模块 - 日志与线程数设置

使用方式:
    from src.core.config import settings

    level = settings.log_level
    workers = settings.workers
"""
from typing import Optional
from pathlib import Path
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv


# 加载环境变量
env_path = Path(__file__).parent.parent.parent.parent / '.env'
load_dotenv(env_path)


class Settings(BaseSettings):
    """应用配置类"""

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        extra='ignore',
    )

    # ========== 日志配置 ==========
    log_level: str = Field(
        default="INFO",
        description="日志级别",
        validation_alias='LOG_LEVEL'
    )

    log_file: Optional[str] = Field(
        default=None,
        description="日志文件路径",
        validation_alias='LOG_FILE'
    )

    # ========== 运行配置 ==========
    workers: int = Field(
        default=1,
        ge=1,
        description="逐句投射的线程数",
        validation_alias='WORKERS'
    )

    def validate_config(self) -> None:
        """验证配置,失败时抛出 ValueError"""
        errors = []

        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if self.log_level.upper() not in valid_levels:
            errors.append(f"❌ LOG_LEVEL 无效,必须是 {valid_levels} 之一")

        if errors:
            raise ValueError("\n".join(["配置验证失败:"] + errors))


# 创建全局配置实例
settings = Settings()
settings.validate_config()


# 导出
__all__ = ['settings', 'Settings']
