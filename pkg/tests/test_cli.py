#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行测试：退出码、JSON 报告、离线复核与判定缓存
"""

import json

import pytest

from cli.catalog import get_catalog
from cli.group_spec import format_group_spec, group_from_json, parse_group_spec, parse_inline
from cli.report import (SCHEMA_VERSION, VerdictCache, fingerprint, load_report, resolve_report_dir,
                        reverify_report)
from conftest import make_group
from core.criterion import Conclusion, Verdict
from core.errors import InputError, ResourceError
from main import main


def _json_stdout(capsys):
    return json.loads(capsys.readouterr().out)


def test_catalog_list(capsys):
    assert main(["catalog", "list", "--json", "-"]) == 0
    data = _json_stdout(capsys)
    assert data["schema"] == SCHEMA_VERSION
    assert data["command"] == "catalog"
    names = {row["name"] for row in data["results"]}
    assert {"A5", "S5", "M11", "M10", "PSL2(q)", "PSL3(4)"} <= names


def test_usage_errors():
    assert main([]) == 2
    assert main(["psl2-verify", "2"]) == 2
    assert main(["psl2-verify", "6"]) == 2
    assert main(["criterion", "--socle", "A5", "--ambient", "S5", "--group", "A5", "--all-N"]) == 2
    assert main(["criterion", "--socle", "A5", "--ambient", "S5", "--group", "NoSuchGroup"]) == 2
    assert main(["psl2-verify", "5", "--threads", "0"]) == 2


def test_psl2_verify_report(capsys):
    assert main(["psl2-verify", "5", "--json", "-"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert "pass" in captured.err
    assert data["status"] == "ok"
    entry = data["results"][0]
    assert entry["q"] == 5 and entry["status"] == "pass"
    assert entry["factorization"] == {"C": 6, "D": 20, "PGL": 120, "C∩D": 1, "joins_equal": True}
    assert entry["splitting"]["branch"] == "C"
    assert [g["order"] for g in entry["groups"]] == [60, 120]
    assert all(g["passed"] for g in entry["groups"])


def test_psl2_report_reverifies(tmp_path):
    path = tmp_path / "psl2.json"
    assert main(["psl2-verify", "7", "--json", str(path)]) == 0
    data = load_report(path)
    assert reverify_report(data) == []

    witness = data["results"][0]["groups"][0]["witness"]
    degree = witness["B"]["degree"]
    witness["B"] = {"degree": degree, "generators": [], "order": 1}
    failures = reverify_report(data)
    assert len(failures) == 1


def test_psl2_report_is_deterministic(tmp_path):
    paths = [tmp_path / "first.json", tmp_path / "second.json"]
    for path in paths:
        assert main(["psl2-verify", "7", "--json", str(path)]) == 0
    first, second = (load_report(path) for path in paths)
    first.pop("timings")
    second.pop("timings")
    assert first == second


def test_reverify_rejects_unknown_schema():
    with pytest.raises(InputError):
        reverify_report({"schema": 99, "command": "criterion", "results": []})


def test_max_order_gives_scale_exit(capsys):
    assert main(["psl2-verify", "13", "--max-order", "100", "--json", "-"]) == 3
    data = _json_stdout(capsys)
    assert data["status"] == "inconclusive at scale"
    assert data["results"][0]["status"] == "inconclusive at scale"


def test_stretch_entry_is_inconclusive_at_scale(capsys):
    code = main(["criterion", "--socle", "PSL3(4)", "--ambient", "PSL3(4)", "--group", "PSL3(4)"])
    assert code == 3
    assert "inconclusive at scale" in capsys.readouterr().err
    with pytest.raises(ResourceError):
        get_catalog().resolve("PSU4(2)")


def test_criterion_row_and_cache(tmp_path, capsys):
    cache_dir = tmp_path / "verdicts"
    code = main(["criterion", "--socle", "A5", "--ambient", "S5", "--group", "A5",
                 "--report-dir", str(cache_dir)])
    assert code == 0
    assert '<1, "normal", "true">' in capsys.readouterr().out
    A5 = make_group(5, "(1 2 3 4 5)", "(1 2 3)")
    cached = VerdictCache(cache_dir).load(A5)
    assert cached.conclusion is Conclusion.TRUE
    assert cached.n_order == 60


def test_criterion_defaults_to_socle(capsys):
    assert main(["criterion", "--socle", "A5", "--ambient", "S5", "--json", "-"]) == 0
    data = _json_stdout(capsys)
    assert [r["row"] for r in data["results"]] == ['<1, "normal", "true">']
    assert data["inputs"]["group"] is None


@pytest.mark.slow
def test_criterion_M11_defaults_to_socle(capsys):
    assert main(["criterion", "--socle", "M11", "--ambient", "M11"]) == 0
    assert '<1, "normal", "true">' in capsys.readouterr().out


def test_criterion_report_reverifies(tmp_path):
    path = tmp_path / "criterion.json"
    assert main(["criterion", "--socle", "A5", "--ambient", "S5", "--all-N", "--json", str(path)]) == 0
    data = load_report(path)
    assert [r["row"] for r in data["results"]] == ['<1, "normal", "true">', '<2, "normal", "true">']
    assert reverify_report(data) == []


def test_criterion_scale_exit(capsys):
    code = main(["criterion", "--socle", "A5", "--ambient", "S5", "--group", "S5", "--max-order", "10",
                 "--json", "-"])
    assert code == 3
    assert _json_stdout(capsys)["status"] == "inconclusive at scale"


def test_holomorph_inline_needs_aut(capsys):
    assert main(["holomorph-search", "5: (1 2 3 4 5)"]) == 2
    code = main(["holomorph-search", "5: (1 2 3 4 5)", "--aut", "5: (1 2 3 4 5); (2 3 5 4)", "--json", "-"])
    assert code == 0
    entry = _json_stdout(capsys)["results"][0]
    assert entry["outcome"] == "found"
    assert entry["hol_order"] == 20
    assert entry["witness"]["G"]["order"] == 5
    assert "cross_validation" not in entry


def test_holomorph_from_file(tmp_path, capsys):
    spec = tmp_path / "c4.txt"
    spec.write_bytes("# 四阶循环群\n4: (1 2 3 4)\n".encode("gbk"))
    assert main(["holomorph-search", f"@{spec}", "--aut", "D4", "--json", "-"]) == 0
    assert _json_stdout(capsys)["results"][0]["regular_classes"] == 2


def test_holomorph_cross_validation(tmp_path, monkeypatch, capsys):
    C5 = get_catalog().resolve("C5")
    cache = VerdictCache(tmp_path)
    cache.store(C5, Verdict(index=1, normal=True, conclusion=Conclusion.TRUE, n_order=5), {})
    monkeypatch.setenv("HOLLAB_REPORT_DIR", str(tmp_path))
    assert main(["holomorph-search", "C5", "--json", "-"]) == 0
    entry = _json_stdout(capsys)["results"][0]
    assert entry["cross_validation"]["status"] == "consistent"

    cache.store(C5, Verdict(index=1, normal=True, conclusion=Conclusion.FALSE, n_order=5), {})
    assert main(["holomorph-search", "C5", "--json", "-"]) == 1
    data = _json_stdout(capsys)
    assert data["status"] == "contradiction"


def test_holomorph_point_bound_exit(fresh_config):
    fresh_config.set("bounds.holomorph_points", 3)
    assert main(["holomorph-search", "C5"]) == 3


# --- 群描述与报告工具 ---

def test_group_spec_forms(tmp_path):
    inline = parse_group_spec("5: (1 2 3 4 5); (1 2)")
    assert inline.order() == 120
    assert parse_inline(format_group_spec(inline)).same_group(inline)
    assert parse_group_spec("PGL2(5)").order() == 120
    assert parse_group_spec("M10").order() == 720
    assert parse_group_spec("PSL2(7)") is parse_group_spec("PSL2(7)")
    with pytest.raises(InputError):
        parse_group_spec("   ")
    with pytest.raises(InputError):
        parse_group_spec(f"@{tmp_path / 'missing.txt'}")


def test_group_from_json_checks_order():
    with pytest.raises(InputError):
        group_from_json({"degree": 3, "generators": ["(1 2 3)"], "order": 6})
    with pytest.raises(InputError):
        group_from_json({"generators": []})


def test_fingerprint_ignores_generators():
    a = make_group(5, "(1 2 3 4 5)", "(1 2)")
    b = make_group(5, "(1 2)", "(2 3)", "(3 4)", "(4 5)")
    assert fingerprint(a) == fingerprint(b)
    assert fingerprint(a) != fingerprint(make_group(5, "(1 2 3 4 5)", "(1 2 3)"))
    assert fingerprint(a).startswith("sha256:")


def test_verdict_cache_path_and_miss(tmp_path):
    cache = VerdictCache(tmp_path)
    A5 = make_group(5, "(1 2 3 4 5)", "(1 2 3)")
    assert cache.load(A5) is None
    assert cache.path_for(A5).name.startswith("verdict_")
    cache.path_for(A5).write_text("{broken", encoding="utf-8")
    assert cache.load(A5) is None


def test_resolve_report_dir_precedence(tmp_path, monkeypatch, fresh_config):
    assert resolve_report_dir() is None
    fresh_config.set("report.dir", str(tmp_path / "config"))
    assert resolve_report_dir() == tmp_path / "config"
    monkeypatch.setenv("HOLLAB_REPORT_DIR", str(tmp_path / "env"))
    assert resolve_report_dir() == tmp_path / "env"
    assert resolve_report_dir(str(tmp_path / "flag")) == tmp_path / "flag"
