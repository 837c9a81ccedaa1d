# SPDX-FileCopyrightText: 2026 mindist developers
#
# SPDX-License-Identifier: GPL-3.0-or-later

"""Pytest configuration shared by unit and integration tests."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import pytest

from mindist.config import BUDGET_ENV
from mindist.csp import MaxNandInstance
from mindist.formats import read_maxnand
from mindist.gf import FieldSpec, field_make
from mindist.run_options import RunOptions, parse_run_options

# ---------------------------------------------------------------------------
# Fixture files
# ---------------------------------------------------------------------------

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
FIXTURES = DATA_DIR / "fixtures"
SUITE_PLAN = DATA_DIR / "suite.yaml"


def pytest_configure(config: pytest.Config) -> None:
    """Configure pytest markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )


def instance(name: str) -> MaxNandInstance:
    """Read ``data/fixtures/<name>.mn``."""
    return read_maxnand(FIXTURES / f"{name}.mn")


def options(**raw: Any) -> RunOptions:
    """Run options with schema defaults for everything not given."""
    return parse_run_options(raw)


@pytest.fixture(autouse=True)
def isolated_config(tmp_path_factory: pytest.TempPathFactory, monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep the user's config file and budget override out of every run."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path_factory.mktemp("config")))
    monkeypatch.delenv(BUDGET_ENV, raising=False)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------


@pytest.fixture
def F2() -> FieldSpec:
    return field_make(2)


@pytest.fixture
def F3() -> FieldSpec:
    return field_make(3)


@pytest.fixture
def F4() -> FieldSpec:
    return field_make(4)
