import json
import warnings

import pytest

from gschur import cache


@pytest.fixture
def cache_dir(tmp_path):
    return tmp_path / "cache"


def test_put_get_identical(cache_dir):
    payload = cache.compute_table("rook", 2, 2)
    path = cache.cache_put("rook", 2, 2, payload, cache_dir)
    assert path.exists()
    assert cache.cache_get("rook", 2, 2, cache_dir) == payload


def test_missing_key_recomputes(cache_dir):
    assert cache.cache_get("sym", 3, 2, cache_dir) is None
    payload, hit = cache.load_table("sym", 3, 2, cache_dir)
    assert not hit
    again, hit = cache.load_table("sym", 3, 2, cache_dir)
    assert hit and again == payload == cache.compute_table("sym", 3, 2)


def test_tampered_file_warns_and_recomputes(cache_dir):
    payload, _ = cache.load_table("full", 2, 2, cache_dir)
    path = cache.cache_path("full", 2, 2, cache_dir)
    blob = path.read_bytes().replace(b'"nD":1', b'"nD":9', 1)
    path.write_bytes(blob)
    with pytest.warns(cache.CacheWarning, match="checksum"):
        assert cache.cache_get("full", 2, 2, cache_dir) is None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", cache.CacheWarning)
        fixed, hit = cache.load_table("full", 2, 2, cache_dir)
    assert not hit and fixed == payload
    assert cache.cache_get("full", 2, 2, cache_dir) == payload


def test_keys_are_content_addressed(cache_dir):
    a = cache.cache_path("sym", 2, 2, cache_dir)
    b = cache.cache_path("sym", 2, 3, cache_dir)
    c = cache.cache_path("rook", 2, 2, cache_dir)
    assert len({a, b, c}) == 3
    assert a == cache.cache_path("SYM", 2, 2, cache_dir)


def test_no_temp_files_left(cache_dir):
    cache.load_table("partial", 2, 2, cache_dir)
    assert [p.name for p in cache_dir.iterdir() if p.name.startswith(".tmp")] == []


def test_table_contents(cache_dir):
    data = json.loads(cache.compute_table("rook", 2, 2))
    rows = [c for c in data["cosets"] if c["lambda"] == [2, 0] and c["mu"] == [2, 0]]
    assert [c["rep"] for c in rows] == [[0, 0], [0, 1], [1, 2]]
    assert all(set(c) == {"lambda", "mu", "rep", "nD", "nL", "nR", "size"} for c in rows)
    assert sum(c["size"] for c in rows) == 7


def test_env_var(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "env"))
    assert cache.default_dir() == tmp_path / "env"
