#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
日志工具模块
提供统一的日志记录功能，支持滚动主日志和按验证会话划分的会话日志
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional, Dict, Any

from utils.system_logger import SessionLogHandler, ContextFilter, create_session_logger

APP_LOGGER_NAME = "HolLab"


class EnhancedLogger:
    """增强的日志管理器"""

    def __init__(self, name: str = APP_LOGGER_NAME):
        self.name = name
        self.logger = logging.getLogger(name)
        self.session_handler: Optional[SessionLogHandler] = None
        self.context_filter: Optional[ContextFilter] = None
        self._handlers = []

    def setup_enhanced_logging(
        self,
        log_file_path: Optional[Path],
        level: str = "INFO",
        enable_session_log: bool = False,
        session_log_dir: Optional[Path] = None,
        context: Dict[str, Any] = None
    ) -> logging.Logger:
        """设置增强的日志系统

        Args:
            log_file_path: 主日志文件路径，None 表示不写文件
            level: 控制台日志级别
            enable_session_log: 是否启用会话日志
            session_log_dir: 会话日志目录
            context: 上下文信息
        """
        self.logger.setLevel(logging.DEBUG)

        # 清除现有处理器
        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)
            handler.close()
        for flt in self.logger.filters[:]:
            self.logger.removeFilter(flt)

        self.context_filter = ContextFilter(context or {})
        self.logger.addFilter(self.context_filter)

        formatter = logging.Formatter(
            '%(asctime)s - %(levelname)s - %(name)s - %(message)s',
            datefmt='%H:%M:%S'
        )

        # 1. 文件处理器，限制2M
        if log_file_path is not None:
            try:
                log_file_path = Path(log_file_path)
                log_file_path.parent.mkdir(parents=True, exist_ok=True)
                file_handler = RotatingFileHandler(
                    log_file_path,
                    maxBytes=2 * 1024 * 1024,  # 2MB
                    backupCount=3,
                    encoding='utf-8'
                )
                file_handler.setLevel(logging.DEBUG)
                file_handler.setFormatter(formatter)
                self.logger.addHandler(file_handler)
            except OSError as e:
                self.logger.warning(f"无法创建日志文件 {log_file_path}: {e}")

        # 2. 控制台处理器，输出到 stderr，避免污染 stdout 上的 JSON
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(getattr(logging, str(level).upper(), logging.INFO))
        console_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(levelname)s - %(message)s',
            datefmt='%H:%M:%S'
        ))
        self.logger.addHandler(console_handler)

        # 3. 会话日志
        if enable_session_log:
            self.session_handler = create_session_logger(session_log_dir)
            self.session_handler.setLevel(logging.DEBUG)
            self.session_handler.setFormatter(formatter)
            self.logger.addHandler(self.session_handler)

        self.logger.debug("日志系统初始化完成")
        return self.logger

    def start_session(self, session_info: Dict[str, Any]):
        """开始验证会话"""
        if self.session_handler:
            self.session_handler.start_session(session_info)
        self.logger.info(f"验证会话开始: {session_info}")

    def end_session(self, success: bool, message: str = ""):
        """结束验证会话"""
        status = "通过" if success else "未通过"
        self.logger.info(f"验证会话结束: {status} - {message}")
        if self.session_handler:
            self.session_handler.end_session(success, message)

    def get_session_log_path(self) -> Optional[Path]:
        """获取当前会话日志路径"""
        if self.session_handler:
            return self.session_handler.get_current_log_path()
        return None

    def update_context(self, **kwargs):
        """更新上下文信息"""
        if self.context_filter:
            self.context_filter.update_context(**kwargs)


# 全局增强日志管理器实例
_enhanced_logger: Optional[EnhancedLogger] = None


def setup_logger(
    log_file_path: Optional[Path],
    level: str = "INFO",
    enable_session_log: bool = False,
    session_log_dir: Optional[Path] = None,
    context: Dict[str, Any] = None
) -> logging.Logger:
    """设置应用日志记录器

    Args:
        log_file_path: 日志文件路径
        level: 控制台日志级别
        enable_session_log: 是否启用会话日志
        session_log_dir: 会话日志目录
        context: 上下文信息

    Returns:
        logging.Logger: 配置好的日志记录器
    """
    global _enhanced_logger
    _enhanced_logger = EnhancedLogger()
    return _enhanced_logger.setup_enhanced_logging(
        log_file_path=log_file_path,
        level=level,
        enable_session_log=enable_session_log,
        session_log_dir=session_log_dir,
        context=context
    )


def start_session(session_info: Dict[str, Any]):
    """开始验证会话"""
    if _enhanced_logger:
        _enhanced_logger.start_session(session_info)


def end_session(success: bool, message: str = ""):
    """结束验证会话"""
    if _enhanced_logger:
        _enhanced_logger.end_session(success, message)


def get_session_log_path() -> Optional[Path]:
    """获取当前会话日志路径"""
    if _enhanced_logger:
        return _enhanced_logger.get_session_log_path()
    return None


def update_log_context(**kwargs):
    """更新日志上下文"""
    if _enhanced_logger:
        _enhanced_logger.update_context(**kwargs)


def log_error(error: Exception, context: str = ""):
    """记录错误信息

    Args:
        error: 异常对象
        context: 错误上下文
    """
    logger = logging.getLogger(APP_LOGGER_NAME)
    message = f"发生错误: {str(error)}"
    if context:
        message += f" (上下文: {context})"
    logger.error(message, exc_info=True)


def log_step(step_name: str, details: str = "", level: str = "info"):
    """记录验证步骤

    Args:
        step_name: 步骤名称
        details: 详细信息
        level: 日志级别 (info, warning, error)
    """
    logger = logging.getLogger(APP_LOGGER_NAME)
    message = f"验证步骤: {step_name}"
    if details:
        message += f" - {details}"
    getattr(logger, level.lower(), logger.info)(message)


def log_system_event(event_type: str, message: str, level: str = "info"):
    """记录系统事件

    Args:
        event_type: 事件类型
        message: 事件消息
        level: 日志级别
    """
    logger = logging.getLogger(APP_LOGGER_NAME)
    getattr(logger, level.lower(), logger.info)(f"[{event_type}] {message}")


def get_logger(name: str = APP_LOGGER_NAME) -> logging.Logger:
    """获取日志记录器

    Args:
        name: 日志记录器名称（建议使用 "HolLab.<模块>" 的层级名称）

    Returns:
        logging.Logger: 日志记录器实例
    """
    return logging.getLogger(name)
