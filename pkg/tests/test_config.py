# tests/test_config.py

import logging

import pytest

from poly_ldc_lib import config
from poly_ldc_lib.errors import SizeCap
from poly_ldc_lib.logger import setup_logger
from poly_ldc_lib.models import Counterexample, LawReport, Report


def test_size_cap_is_scoped(logger):
    before = config.get_cap()
    with config.size_cap(5) as cap:
        assert cap == 5, "The override is in force inside the block."
        with pytest.raises(SizeCap):
            config.check_size(6, "test table")
        config.check_size(5, "test table")
    assert config.get_cap() == before, "The previous cap is restored."
    with config.size_cap(None) as cap:
        assert cap == before, "None keeps the current cap."


def test_cap_must_be_positive(logger):
    with pytest.raises(ValueError):
        config.set_cap(0)


def test_settings_from_environment(monkeypatch, logger):
    monkeypatch.setenv("POLY_LDC_CAP", "123")
    monkeypatch.setenv("POLY_LDC_WORKERS", "4")
    loaded = config.load_settings()
    assert loaded.cap == 123 and loaded.workers == 4, "Environment overrides the defaults."

    monkeypatch.setenv("POLY_LDC_CAP", "lots")
    with pytest.raises(ValueError):
        config.load_settings()

    monkeypatch.delenv("POLY_LDC_CAP")
    monkeypatch.delenv("POLY_LDC_WORKERS")
    assert config.load_settings().cap == config.DEFAULT_CAP, "Default cap is 10^6."

    monkeypatch.setenv("POLY_LDC_LOG_LEVEL", "info")
    assert config.load_settings().log_level == "INFO", "Log levels are normalized."
    monkeypatch.setenv("POLY_LDC_LOG_LEVEL", "chatty")
    with pytest.raises(ValueError):
        config.load_settings()


def test_environment_is_read_on_first_use(monkeypatch, logger):
    monkeypatch.setattr(config, "_settings", None)
    monkeypatch.setenv("POLY_LDC_CAP", "lots")
    with pytest.raises(ValueError):
        config.get_settings()

    monkeypatch.setenv("POLY_LDC_CAP", "77")
    assert config.get_cap() == 77, "A fixed environment is picked up on the next call."
    monkeypatch.setenv("POLY_LDC_CAP", "88")
    assert config.get_cap() == 77, "Settings are cached once read."
    assert config.reload_settings().cap == 88, "reload_settings reads the environment again."


def test_bounded_arithmetic(logger):
    with config.size_cap(1000):
        assert config.bounded_power(3, 4) == 81, "Small powers are exact."
        assert config.bounded_power(0, 0) == 1 and config.bounded_power(0, 5) == 0, "0^0 = 1, 0^n = 0."
        assert config.bounded_power(1, 10**12) == 1, "Powers of one stay one."
        assert config.bounded_power(2, 10**12) == 1001, "Huge powers clip to just above the cap."
        assert config.bounded_product([10, 10, 10]) == 1000, "Products up to the cap are exact."
        assert config.bounded_product([10**6, 10**6, 0]) == 0, "A zero factor wins over clipping."
        assert config.bounded_product([10**6, 10**6]) == 1001, "Large products clip."


def test_law_report_combination(logger):
    failing = LawReport("inner", False, Counterexample((1,), (0,), "direction 1", "direction 0"))
    report = LawReport.combine("outer", [LawReport("ok", True), failing])
    assert not report.passed, "A failing child fails the parent."
    assert report.failures() == [failing], "Leaf failures are collected."
    assert str(failing) == "FAIL inner at position [1] direction [0]: direction 1 != direction 0", str(failing)
    data = report.to_json()
    assert data["children"][1]["counterexample"]["position_path"] == [1], data


def test_report_text_and_json(logger):
    report = Report("homcount", {"count": 72, "items": ["a", "b"]})
    assert report.to_text() == "count: 72\nitems:\n  a\n  b", report.to_text()
    assert '"exit_status": 0' in report.to_json(), "JSON carries the exit status."


def test_setup_logger(logger):
    named = setup_logger("poly_ldc_tests.setup", level="error")
    assert named.level == logging.ERROR, "Level names are case insensitive."
    again = setup_logger("poly_ldc_tests.setup", level="DEBUG")
    assert again is named and len(again.handlers) == 1, "A second call only changes the level."
    with pytest.raises(ValueError):
        setup_logger("poly_ldc_tests.setup", level="chatty")
