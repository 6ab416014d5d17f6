#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
会话日志处理器模块
每次验证会话单独写入一个日志文件，并为日志记录附加上下文字段
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional


class SessionLogHandler(logging.Handler):
    """验证会话专用处理器"""

    def __init__(self, session_log_dir: Optional[Path] = None):
        """
        初始化会话日志处理器

        Args:
            session_log_dir: 会话日志目录，如果为None则使用 logs/sessions
        """
        super().__init__()
        if session_log_dir is None:
            session_log_dir = Path.cwd() / "logs" / "sessions"
        self.session_log_dir = Path(session_log_dir)
        self.current_log_file: Optional[Path] = None
        self.session_id = self._generate_session_id()
        self.session_log_dir.mkdir(parents=True, exist_ok=True)

    def _generate_session_id(self) -> str:
        """生成会话ID"""
        return datetime.now().strftime("%Y%m%d_%H%M%S_%f")

    def start_session(self, session_info: Dict[str, Any]):
        """开始新的验证会话"""
        self.session_id = self._generate_session_id()
        command = str(session_info.get("command", "session")).replace(" ", "_")
        self.current_log_file = self.session_log_dir / f"{command}_{self.session_id}.log"
        with open(self.current_log_file, 'w', encoding='utf-8') as f:
            f.write("=" * 80 + "\n")
            f.write(f"验证会话开始: {self.session_id}\n")
            f.write(f"会话信息: {session_info}\n")
            f.write("=" * 80 + "\n\n")

    def end_session(self, success: bool, message: str = ""):
        """结束验证会话"""
        if self.current_log_file and self.current_log_file.exists():
            with open(self.current_log_file, 'a', encoding='utf-8') as f:
                f.write("\n" + "=" * 80 + "\n")
                f.write(f"验证会话结束: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")
                f.write(f"验证结果: {'通过' if success else '未通过'}\n")
                if message:
                    f.write(f"结束信息: {message}\n")
                f.write("=" * 80 + "\n")
        self.current_log_file = None

    def emit(self, record: logging.LogRecord):
        """写入当前会话日志文件"""
        if not self.current_log_file:
            return
        try:
            timestamp = datetime.fromtimestamp(record.created).strftime('%H:%M:%S')
            message = self.format(record)
            with open(self.current_log_file, 'a', encoding='utf-8') as f:
                f.write(f"[{timestamp}] {record.levelname}: {message}\n")
        except Exception:
            self.handleError(record)

    def get_current_log_path(self) -> Optional[Path]:
        """获取当前会话日志文件路径"""
        return self.current_log_file


class ContextFilter(logging.Filter):
    """上下文过滤器，用于添加额外的上下文信息"""

    def __init__(self, context: Dict[str, Any] = None):
        super().__init__()
        self.context = context or {}

    def filter(self, record: logging.LogRecord):
        """为日志记录添加上下文信息"""
        for key, value in self.context.items():
            setattr(record, key, value)
        record.thread_name = getattr(record, 'threadName', 'Unknown')
        return True

    def update_context(self, **kwargs):
        """更新上下文信息"""
        self.context.update(kwargs)


def create_session_logger(session_log_dir: Optional[Path] = None) -> SessionLogHandler:
    """创建会话日志处理器"""
    return SessionLogHandler(session_log_dir)
