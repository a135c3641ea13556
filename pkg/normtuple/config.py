"""
数值配置管理模块

支持多种配置方式（按优先级）：
1. 命令行参数（最高优先级）
2. 环境变量
3. 配置文件 (~/.normtuple/config.json)
4. 默认值
"""

import os
import json
from pathlib import Path
from dataclasses import dataclass, asdict
from typing import Optional, Dict, Any

from .errors import ConfigError


@dataclass
class NumericConfig:
    """数值配置数据类"""
    factor_bound: int = 10 ** 6   # 试除上界
    workers: int = 1              # search_tuples 的并行进程数
    generator_bound: int = 50     # CLI 中主理想生成元的搜索盒半径


# 环境变量名 -> 配置字段
ENV_KEYS = {
    "factor_bound": "NORMTUPLE_FACTOR_BOUND",
    "workers": "NORMTUPLE_WORKERS",
    "generator_bound": "NORMTUPLE_GENERATOR_BOUND",
}


def get_config_dir() -> Path:
    """获取配置目录路径（可由 NORMTUPLE_HOME 覆盖）"""
    home = os.environ.get("NORMTUPLE_HOME", "").strip()
    if home:
        return Path(home)
    return Path.home() / ".normtuple"


def get_config_file() -> Path:
    """获取配置文件路径"""
    return get_config_dir() / "config.json"


def load_config_from_file() -> Optional[Dict[str, Any]]:
    """
    从配置文件加载配置

    Returns:
        配置字典，如果文件不存在或读取失败返回 None
    """
    config_file = get_config_file()
    if not config_file.exists():
        return None

    try:
        with open(config_file, "r", encoding="utf-8") as f:
            data = json.load(f)
    except Exception:
        return None
    return data if isinstance(data, dict) else None


def save_config_to_file(config: NumericConfig) -> bool:
    """
    保存配置到文件

    Returns:
        是否保存成功
    """
    try:
        config_dir = get_config_dir()
        config_dir.mkdir(parents=True, exist_ok=True)
        with open(get_config_file(), "w", encoding="utf-8") as f:
            json.dump(asdict(config), f, indent=2, ensure_ascii=False)
        return True
    except Exception:
        return False


def _parse_positive(value: Any, source: str, name: str) -> int:
    """把某个来源的值解析为正整数，失败时抛出 ConfigError"""
    try:
        parsed = int(str(value).strip())
    except ValueError:
        raise ConfigError(f"invalid {name} from {source}: {value!r} is not an integer")
    if parsed < 1:
        raise ConfigError(f"invalid {name} from {source}: {parsed} must be >= 1")
    return parsed


def load_config(
    cli_factor_bound: Optional[int] = None,
    cli_workers: Optional[int] = None,
    cli_generator_bound: Optional[int] = None
) -> NumericConfig:
    """
    加载数值配置（按优先级合并多个来源）

    优先级: 命令行参数 > 环境变量 > 配置文件 > 默认值

    Raises:
        ConfigError: 任一来源给出非法值时抛出
    """
    file_config = load_config_from_file() or {}
    cli_values = {
        "factor_bound": cli_factor_bound,
        "workers": cli_workers,
        "generator_bound": cli_generator_bound,
    }
    defaults = NumericConfig()

    merged = {}
    for name, env_key in ENV_KEYS.items():
        env_value = os.environ.get(env_key, "").strip() or None
        if cli_values[name] is not None:
            merged[name] = _parse_positive(cli_values[name], "command line", name)
        elif env_value is not None:
            merged[name] = _parse_positive(env_value, env_key, name)
        elif file_config.get(name) is not None:
            merged[name] = _parse_positive(file_config[name], str(get_config_file()), name)
        else:
            merged[name] = getattr(defaults, name)

    return NumericConfig(**merged)


# 进程内当前生效的配置
_active_config: Optional[NumericConfig] = None


def get_config() -> NumericConfig:
    """获取当前生效的配置（首次调用时按默认优先级加载）"""
    global _active_config
    if _active_config is None:
        _active_config = load_config()
    return _active_config


def activate(config: Optional[NumericConfig]) -> None:
    """设置当前生效的配置；传入 None 表示下次使用时重新加载"""
    global _active_config
    _active_config = config


def get_config_summary(config: NumericConfig) -> str:
    """
    获取配置摘要信息（用于显示）
    """
    lines = [
        f"config file: {get_config_file()}",
        f"factor_bound: {config.factor_bound}",
        f"workers: {config.workers}",
        f"generator_bound: {config.generator_bound}",
    ]
    return "\n".join(lines)
