"""
日志记录模块

提供统一的日志记录功能
"""

import sys
import logging
from datetime import datetime

from .config import get_config_dir


class NormTupleLogger:
    """
    normtuple 日志记录器

    将日志写入文件，不影响终端输出
    """

    _instance = None
    _initialized = False

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if NormTupleLogger._initialized:
            return

        NormTupleLogger._initialized = True

        self.logger = logging.getLogger("normtuple")
        self.logger.setLevel(logging.DEBUG)
        self._console_handler = None

        # 避免重复添加handler
        if not self.logger.handlers:
            self.logger.addHandler(self._make_file_handler())

    @staticmethod
    def _make_file_handler() -> logging.Handler:
        """创建按日期命名的文件处理器；目录不可写时退化为 NullHandler"""
        try:
            log_dir = get_config_dir() / "logs"
            log_dir.mkdir(parents=True, exist_ok=True)
            log_file = log_dir / f"normtuple_{datetime.now().strftime('%Y%m%d')}.log"
            handler = logging.FileHandler(log_file, encoding='utf-8')
        except OSError:
            return logging.NullHandler()

        handler.setLevel(logging.DEBUG)
        handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        ))
        return handler

    def enable_console(self, level: int = logging.INFO):
        """同时输出到 stderr（CLI 的 --verbose）"""
        if self._console_handler is not None:
            self._console_handler.setLevel(level)
            return
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
        self.logger.addHandler(handler)
        self._console_handler = handler

    def debug(self, message: str):
        """记录调试信息"""
        self.logger.debug(message)

    def info(self, message: str):
        """记录一般信息"""
        self.logger.info(message)

    def warning(self, message: str):
        """记录警告信息"""
        self.logger.warning(message)

    def error(self, message: str):
        """记录错误信息"""
        self.logger.error(message)

    def exception(self, message: str):
        """记录异常信息（包含堆栈）"""
        self.logger.exception(message)


# 全局日志实例
logger = NormTupleLogger()


def get_logger() -> NormTupleLogger:
    """获取日志记录器实例"""
    return logger
