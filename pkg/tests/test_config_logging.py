#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
配置、日志、版本与文件工具测试
"""

import json
import logging

import pytest

import run
from cli.catalog import GroupCatalog
from core.config_manager import ConfigManager, get_config_manager, reset_config_manager
from core.errors import InputError, ResourceError, VerificationError
from core.version_manager import ToolVersion, environment_stamp, get_current_version, load_version
from utils.encoding import get_system_encoding, safe_decode, safe_read_text_file
from utils.file_utils import atomic_write_json, atomic_write_text, dump_json, read_json
from utils.logger import (end_session, get_logger, get_session_log_path, log_step, setup_logger,
                          start_session, update_log_context)


def test_default_bounds(tmp_path):
    config = ConfigManager(tmp_path / "missing.json")
    assert config.bound("scan_bound") == 100000
    assert config.bound("coset_index") == 10000
    assert config.bound("lattice_order") == 100000
    assert config.bound("holomorph_points") == 360
    assert config.bound("product_enumeration") == 100000
    assert config.get("runtime.threads") == 1
    assert config.get("holomorph.random_fallback") is False
    assert config.get("no.such.key", "fallback") == "fallback"


def test_config_file_is_merged(tmp_path):
    path = tmp_path / "hollab_config.json"
    path.write_text(json.dumps({"bounds": {"scan_bound": 50}, "runtime": {"threads": 4}}), encoding="utf-8")
    config = ConfigManager(path)
    assert config.bound("scan_bound") == 50
    assert config.bound("lattice_order") == 100000
    assert config.get("runtime.threads") == 4
    assert config.get("runtime.seed") == 0


def test_broken_config_falls_back_to_defaults(tmp_path):
    path = tmp_path / "hollab_config.json"
    path.write_text("{not json", encoding="utf-8")
    assert ConfigManager(path).bound("scan_bound") == 100000


def test_set_and_save(tmp_path):
    path = tmp_path / "sub" / "hollab_config.json"
    config = reset_config_manager(path)
    assert get_config_manager() is config
    config.set("bounds.scan_bound", 12)
    config.set("report.extra.flag", True)
    assert config.save_config()
    reloaded = ConfigManager(path)
    assert reloaded.bound("scan_bound") == 12
    assert reloaded.get("report.extra.flag") is True


def test_error_types():
    err = ResourceError("too big", 10, 20)
    assert err.bound == 10 and err.actual == 20
    assert isinstance(InputError("x"), ValueError)
    failure = VerificationError("splits", "no complement")
    assert failure.condition == "splits"
    assert "no complement" in str(failure)


def test_tool_version_parse():
    version = ToolVersion.parse("1.2.3-rc+7")
    assert (version.major, version.minor, version.patch) == (1, 2, 3)
    assert version.is_prerelease
    assert str(version) == "1.2.3-rc+7"
    with pytest.raises(ValueError):
        ToolVersion.parse("1.2")


def test_load_version(tmp_path):
    assert get_current_version() == "0.1.0"
    path = tmp_path / "version.json"
    path.write_text(json.dumps({"major": 2, "minor": 0, "patch": 1}), encoding="utf-8")
    assert str(load_version(path)) == "2.0.1"
    assert load_version(tmp_path / "missing.json") == ToolVersion()
    path.write_text(json.dumps({"major": 2, "codename": "x"}), encoding="utf-8")
    assert load_version(path) == ToolVersion()


def test_environment_stamp():
    stamp = environment_stamp()
    assert stamp["hollab"] == "0.1.0"
    assert set(stamp) == {"hollab", "python", "numpy", "sympy"}
    assert stamp["numpy"] != "missing"


def test_safe_decode():
    assert safe_decode(b"") == ""
    assert safe_decode("4: (1 2 3 4)".encode("utf-8")) == "4: (1 2 3 4)"
    text = "# 生成元文件，循环群与二面体群的生成元\n" * 4
    assert safe_decode(text.encode("gb18030")) == text


def test_safe_read_text_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("5: (1 2 3 4 5)\n", encoding="utf-8")
    assert safe_read_text_file(path) == "5: (1 2 3 4 5)\n"
    with pytest.raises(InputError):
        safe_read_text_file(tmp_path / "missing.txt")


def test_system_encoding_fallback(tmp_path):
    assert get_system_encoding()
    path = tmp_path / "gens.txt"
    path.write_bytes(b"5: (1 2 3 4 5)\xff\n")
    assert safe_read_text_file(path).startswith("5: (1 2 3 4 5)")


def test_json_helpers(tmp_path):
    data = {"b": [1, 2], "a": "群"}
    text = dump_json(data)
    assert text.index('"a"') < text.index('"b"')
    assert "群" in text
    path = atomic_write_json(tmp_path / "nested" / "out.json", data)
    assert read_json(path) == data
    atomic_write_text(path, "replaced")
    assert path.read_text(encoding="utf-8") == "replaced"
    assert [p.name for p in path.parent.iterdir()] == ["out.json"]


def test_logger_writes_file(tmp_path):
    log_file = tmp_path / "logs" / "hollab.log"
    logger = setup_logger(log_file, level="WARNING", context={"command": "test"})
    get_logger("HolLab.test").debug("debug line")
    log_step("lattice", "11 classes")
    for handler in logger.handlers:
        handler.flush()
    content = log_file.read_text(encoding="utf-8")
    assert "debug line" in content
    assert "验证步骤: lattice - 11 classes" in content
    console = [h for h in logger.handlers if type(h) is logging.StreamHandler]
    assert console[0].level == logging.WARNING


def test_session_log(tmp_path):
    setup_logger(None, enable_session_log=True, session_log_dir=tmp_path / "sessions")
    start_session({"command": "psl2-verify"})
    path = get_session_log_path()
    assert path.parent == tmp_path / "sessions"
    assert path.name.startswith("psl2-verify_")
    get_logger("HolLab.test").info("inside session")
    end_session(True, "done")
    content = path.read_text(encoding="utf-8")
    assert "inside session" in content
    assert "结束信息: done" in content
    assert get_session_log_path() is None


def test_run_dependency_check(monkeypatch):
    assert run.check_python_version()
    assert set(run.REQUIRED_PACKAGES) == {"numpy", "sympy", "chardet", "tqdm"}
    monkeypatch.setattr(run, "REQUIRED_PACKAGES", ["numpy", "no_such_package_hollab"])
    assert run.missing_dependencies() == ["no_such_package_hollab"]
    assert not run.check_dependencies()


class _Collect(logging.Handler):
    def __init__(self):
        super().__init__()
        self.records = []

    def emit(self, record):
        self.records.append(record)


def test_log_context_is_attached():
    logger = setup_logger(None, context={"command": "psl2-verify"})
    collect = _Collect()
    logger.addHandler(collect)
    try:
        update_log_context(q=7)
        log_step("witness", "PSL2(7)")
    finally:
        logger.removeHandler(collect)
    record = collect.records[-1]
    assert record.command == "psl2-verify"
    assert record.q == 7


def test_group_catalog_from_file(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"groups": {"C3": {"degree": 3, "generators": ["(1 2 3)"], "order": 3}}}),
                    encoding="utf-8")
    catalog = GroupCatalog(path)
    assert catalog.names() == ["C3"]
    assert catalog.resolve("C3").order() == 3
    path.write_text("{broken", encoding="utf-8")
    with pytest.raises(InputError):
        GroupCatalog(path)
