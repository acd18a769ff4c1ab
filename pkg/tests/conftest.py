import pytest

from logcouple.oracle import GenConfig

collect_ignore = ['setup.py']


@pytest.fixture
def small_cfg():
    return GenConfig(seed=42, samples=40, max_level=10)


@pytest.fixture
def clean_env(monkeypatch):
    for name in ('LOGCOUPLE_SEED', 'LOGCOUPLE_SAMPLES', 'LOGCOUPLE_MAX_LEVEL'):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
