from __future__ import annotations

from pathlib import Path

import pytest

from tonnetzlab.chart import parse_chart

REPO_ROOT = Path(__file__).resolve().parents[1]
CHARTS = REPO_ROOT / "charts"


@pytest.fixture(scope="session")
def lead_chart_path() -> Path:
    return CHARTS / "in_my_life.chart"


@pytest.fixture(scope="session")
def recorded_chart_path() -> Path:
    return CHARTS / "in_my_life_recorded.chart"


@pytest.fixture(scope="session")
def lead_chart(lead_chart_path):
    return parse_chart(lead_chart_path.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def recorded_chart(recorded_chart_path):
    return parse_chart(recorded_chart_path.read_text(encoding="utf-8"))
