#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
HolLab 启动脚本
检查 Python 版本与依赖后转交 main.main
"""

import os
import sys
from pathlib import Path

REQUIRED_PACKAGES = ['numpy', 'sympy', 'chardet', 'tqdm']


def check_python_version():
    """检查Python版本"""
    if sys.version_info < (3, 9):
        print("错误: 需要Python 3.9或更高版本", file=sys.stderr)
        print(f"当前版本: {sys.version}", file=sys.stderr)
        return False
    return True


def missing_dependencies():
    """返回无法导入的依赖包"""
    missing = []
    for package in REQUIRED_PACKAGES:
        try:
            __import__(package)
        except ImportError:
            missing.append(package)
    return missing


def check_dependencies():
    """检查必要的依赖包"""
    missing = missing_dependencies()
    if missing:
        print("错误: 缺少必要的依赖包:", file=sys.stderr)
        for package in missing:
            print(f"  - {package}", file=sys.stderr)
        print("\n请运行以下命令安装依赖:", file=sys.stderr)
        print("pip install -r requirements.txt", file=sys.stderr)
        return False
    return True


def main(argv=None):
    """主函数"""
    if not check_python_version():
        return 1
    if not check_dependencies():
        return 1

    # 设置当前工作目录
    project_root = Path(__file__).parent
    os.chdir(project_root)
    sys.path.insert(0, str(project_root))

    from main import main as app_main
    return app_main(argv)


if __name__ == "__main__":
    sys.exit(main())
