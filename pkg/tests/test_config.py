"""Tests for settings and logging configuration."""

import json

import pytest
from pydantic import ValidationError

from packages.cli.main import EXIT_OK, EXIT_USAGE, main
from packages.core.errors import BudgetExceededError
from packages.core.utils.config import Settings, get_settings
from packages.oracle.enumeration import oracle_count_union


def test_defaults():
    settings = Settings()
    assert settings.enumeration_budget == 10**8
    assert settings.oracle_workers == 1
    assert settings.oracle_shift_reduction is True
    assert settings.default_prime == 5
    assert (settings.table_min, settings.table_max) == (1, 50)
    assert settings.log_format == "console"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DECOMP_ENUMERATION_BUDGET", "10")
    monkeypatch.setenv("DECOMP_ORACLE_SHIFT_REDUCTION", "false")
    get_settings.cache_clear()
    settings = get_settings()
    assert settings.enumeration_budget == 10
    assert settings.oracle_shift_reduction is False
    with pytest.raises(BudgetExceededError):
        oracle_count_union(6, 5)


def test_invalid_values_are_rejected(monkeypatch):
    monkeypatch.setenv("DECOMP_ORACLE_WORKERS", "0")
    with pytest.raises(ValidationError):
        Settings()


def test_table_bounds_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("DECOMP_TABLE_MAX", "6")
    get_settings.cache_clear()
    assert main(["table", "--format", "csv"]) == EXIT_OK
    assert capsys.readouterr().out.count("\n") == 3


def test_budget_from_environment_reaches_cli(monkeypatch, capsys):
    monkeypatch.setenv("DECOMP_ENUMERATION_BUDGET", "10")
    get_settings.cache_clear()
    assert main(["verify", "6", "5"]) == EXIT_USAGE
    assert "budget is 10" in capsys.readouterr().err


def test_json_logs_go_to_stderr(monkeypatch, capsys):
    monkeypatch.setenv("DECOMP_LOG_FORMAT", "json")
    monkeypatch.setenv("DECOMP_LOG_LEVEL", "info")
    get_settings.cache_clear()
    assert main(["verify", "6", "5"]) == EXIT_OK
    out, err = capsys.readouterr()
    assert out.startswith("PASS")
    events = [json.loads(line) for line in err.splitlines()]
    counting = [e for e in events if e["event"] == "Counting union"]
    assert counting and counting[0]["level"] == "info"
    assert counting[0]["n"] == 6


def test_default_level_is_quiet(capsys):
    assert main(["verify", "6", "5"]) == EXIT_OK
    assert capsys.readouterr().err == ""
