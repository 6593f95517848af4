import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    # Witness construction writes a disk cache; keep test runs hermetic.
    cache = tmp_path_factory.getbasetemp() / "witness-cache"
    monkeypatch.setenv("SHUFFLECRAFT_CACHE_DIR", str(cache))
