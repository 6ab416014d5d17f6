#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
配置管理模块
负责管理计算规模上限、线程数、报告目录和日志等运行配置
"""

import copy
import json
from pathlib import Path
from typing import Dict, Any, Optional
import logging

logger = logging.getLogger("HolLab.config")


class ConfigManager:
    """配置管理器类"""

    def __init__(self, config_file: Optional[Path] = None):
        self.project_root = Path(__file__).parent.parent
        self.config_dir = self.project_root / "config"
        self.config_file = Path(config_file) if config_file else self.config_dir / "hollab_config.json"
        self.default_config = self._get_default_config()
        self.config = self._load_config()

    def _get_default_config(self) -> Dict[str, Any]:
        """获取默认配置"""
        return {
            "bounds": {
                "scan_bound": 100000,          # 元素扫描上限（交、正规化子）
                "coset_index": 10000,          # 陪集作用的指数上限
                "lattice_order": 100000,       # 子群格计算的群阶上限
                "holomorph_points": 360,       # 全形计算的 |N| 上限
                "product_enumeration": 100000  # 乘积集合逐元枚举上限
            },
            "runtime": {
                "threads": 1,
                "seed": 0
            },
            "holomorph": {
                "random_fallback": False,
                "random_trials": 100000
            },
            "report": {
                "dir": "",
                "schema": 1
            },
            "logging": {
                "level": "INFO",
                "file": "logs/hollab.log",
                "session_log": False
            }
        }

    def _load_config(self) -> Dict[str, Any]:
        """从文件加载配置"""
        try:
            if self.config_file.exists():
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    config = json.load(f)
                logger.info(f"配置文件加载成功: {self.config_file}")
                return self._merge_config(self.default_config, config)
            logger.debug("配置文件不存在，使用默认配置")
            return copy.deepcopy(self.default_config)
        except Exception as e:
            logger.error(f"加载配置文件失败: {str(e)}")
            return copy.deepcopy(self.default_config)

    def _merge_config(self, default: Dict, loaded: Dict) -> Dict:
        """合并配置，确保所有必要的键都存在"""
        result = copy.deepcopy(default)
        for key, value in loaded.items():
            if key in result and isinstance(value, dict) and isinstance(result[key], dict):
                result[key] = self._merge_config(result[key], value)
            else:
                result[key] = value
        return result

    def save_config(self) -> bool:
        """保存配置到文件"""
        try:
            self.config_file.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, ensure_ascii=False, indent=2)
            logger.info(f"配置文件保存成功: {self.config_file}")
            return True
        except Exception as e:
            logger.error(f"保存配置文件失败: {str(e)}")
            return False

    def get(self, key_path: str, default: Any = None) -> Any:
        """获取配置值，支持点号分隔的路径

        Args:
            key_path: 配置键路径，如 'bounds.scan_bound'
            default: 默认值
        """
        value = self.config
        try:
            for key in key_path.split('.'):
                value = value[key]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key_path: str, value: Any) -> bool:
        """设置配置值

        Args:
            key_path: 配置键路径，如 'runtime.threads'
            value: 要设置的值
        """
        try:
            keys = key_path.split('.')
            config = self.config
            for key in keys[:-1]:
                config = config.setdefault(key, {})
            config[keys[-1]] = value
            logger.debug(f"配置更新: {key_path} = {value}")
            return True
        except Exception as e:
            logger.error(f"设置配置失败: {key_path} = {value}, 错误: {str(e)}")
            return False

    def bound(self, name: str) -> int:
        """读取 bounds 下的整数上限"""
        return int(self.get(f"bounds.{name}", self.default_config["bounds"][name]))


# 全局配置管理器实例
_config_manager = None


def get_config_manager() -> ConfigManager:
    """获取全局配置管理器实例"""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def reset_config_manager(config_file: Optional[Path] = None) -> ConfigManager:
    """重新创建全局配置（命令行覆盖或测试隔离时使用）"""
    global _config_manager
    _config_manager = ConfigManager(config_file)
    return _config_manager
