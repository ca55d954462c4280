import importlib

from toric_implicit import config


def test_results_do_not_read_the_environment(monkeypatch):
    monkeypatch.setenv("TORIC_PRIME", "1000003")
    monkeypatch.setenv("TORIC_SAMPLE_HEIGHT", "5")
    monkeypatch.setenv("TORIC_THREADS", "3")
    try:
        reloaded = importlib.reload(config)
        assert reloaded.DEFAULT_PRIME == 2147483647
        assert reloaded.SAMPLE_HEIGHT == 10000
        assert reloaded.THREADS == 3
    finally:
        monkeypatch.undo()
        importlib.reload(config)
