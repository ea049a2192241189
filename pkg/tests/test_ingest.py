from __future__ import annotations

import os

import pytest

from lilab.errors import (
    FetchError,
    LabelNotFoundError,
    MalformedResponseError,
    TableError,
)
from lilab.ingest import (
    ZeroSource,
    cache_path,
    fetch_remote_zeros,
    parse_ordinates,
    serialize_ordinates,
)

from stubserver import (
    StubZeroServer,
    binary_route,
    flaky_route,
    ok_route,
    truncated_route,
)

GOOD_BODY = "14.134725142\n21.022039639\n25.010857580 2\n30.424876126\n"


@pytest.fixture()
def server(monkeypatch):
    srv = StubZeroServer()
    monkeypatch.setenv("LILAB_ZERO_BASE_URL", srv.base_url)
    yield srv
    srv.close()


def test_parse_basic():
    tab = parse_ordinates(GOOD_BODY, label="demo")
    assert list(tab.multiplicities) == [1, 1, 2, 1]
    assert tab.ordinates[0] == pytest.approx(14.134725142)
    assert tab.coverage_height == pytest.approx(30.424876126)


def test_parse_skips_comments_and_blanks():
    text = "# header\n\n14.1\n # indented comment\n21.0\n"
    tab = parse_ordinates(text, label="demo")
    assert len(tab.ordinates) == 2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(TableError, match="line 2"):
        parse_ordinates("14.1\nnonsense\n")
    with pytest.raises(TableError, match="line 2"):
        parse_ordinates("14.1\n-3.0\n")
    with pytest.raises(TableError, match="line 3"):
        parse_ordinates("14.1\n21.0\n20.9\n")
    with pytest.raises(TableError, match="line 1"):
        parse_ordinates("14.1 0\n")
    with pytest.raises(TableError, match="line 1"):
        parse_ordinates("14.1 2 9\n")
    with pytest.raises(TableError):
        parse_ordinates("")


def test_serialize_round_trip_is_bit_exact():
    tab = parse_ordinates(GOOD_BODY, label="demo")
    assert serialize_ordinates(tab) == GOOD_BODY
    again = parse_ordinates(serialize_ordinates(tab), label="demo")
    assert tuple(again.ordinate_strings) == tuple(tab.ordinate_strings)
    assert list(again.multiplicities) == list(tab.multiplicities)


def test_local_file_source(tmp_path, cache_dir):
    p = tmp_path / "zeros.txt"
    p.write_text(GOOD_BODY, encoding="utf-8")
    tab = fetch_remote_zeros(ZeroSource("local_file", str(p)), cache_dir)
    assert len(tab.ordinates) == 4
    assert os.listdir(cache_dir) == []  # local reads never populate the cache


def test_source_validation():
    with pytest.raises(ValueError):
        ZeroSource("carrier_pigeon", "x").validate()
    with pytest.raises(ValueError):
        ZeroSource("remote_label", "bad label with spaces").validate()


def test_fetch_happy_path_caches(server, cache_dir):
    server.routes["good"] = ok_route(GOOD_BODY)
    src = ZeroSource("remote_label", "good", requested_height=30.0)
    tab = fetch_remote_zeros(src, cache_dir)
    assert len(tab.ordinates) == 4
    target = cache_path(cache_dir, "good", 30.0)
    assert os.path.exists(target)
    with open(target, encoding="utf-8") as fh:
        assert fh.read() == GOOD_BODY
    assert server.requests_for("good") == 1


def test_fetch_cache_hit_skips_network(server, cache_dir):
    server.routes["good"] = ok_route(GOOD_BODY)
    src = ZeroSource("remote_label", "good", requested_height=30.0)
    fetch_remote_zeros(src, cache_dir)
    server.close()  # any further request would now fail loudly
    tab = fetch_remote_zeros(src, cache_dir)
    assert len(tab.ordinates) == 4
    assert server.requests_for("good") == 1


def test_fetch_unknown_label_fails_fast(server, cache_dir):
    src = ZeroSource("remote_label", "mystery", requested_height=10.0)
    with pytest.raises(LabelNotFoundError):
        fetch_remote_zeros(src, cache_dir)
    assert server.requests_for("mystery") == 1  # a 404 is not retried
    leftovers = [f for f in os.listdir(cache_dir) if not f.endswith(".lock")]
    assert leftovers == []


def test_fetch_truncated_body_not_cached(server, cache_dir):
    server.routes["cut"] = truncated_route(GOOD_BODY)
    src = ZeroSource("remote_label", "cut", requested_height=30.0)
    with pytest.raises(MalformedResponseError):
        fetch_remote_zeros(src, cache_dir)
    leftovers = [f for f in os.listdir(cache_dir) if not f.endswith(".lock")]
    assert leftovers == []


def test_fetch_garbage_body_not_cached(server, cache_dir):
    server.routes["junk"] = ok_route("here are\nno numbers\n")
    src = ZeroSource("remote_label", "junk", requested_height=30.0)
    with pytest.raises(MalformedResponseError):
        fetch_remote_zeros(src, cache_dir)
    leftovers = [f for f in os.listdir(cache_dir) if not f.endswith(".lock")]
    assert leftovers == []


def test_fetch_undecodable_body_not_cached(server, cache_dir):
    server.routes["blob"] = binary_route(b"\xff\xfe\x00\x01")
    src = ZeroSource("remote_label", "blob", requested_height=30.0)
    with pytest.raises(MalformedResponseError):
        fetch_remote_zeros(src, cache_dir)
    leftovers = [f for f in os.listdir(cache_dir) if not f.endswith(".lock")]
    assert leftovers == []


def test_fetch_retries_through_dropped_connections(server, cache_dir):
    server.routes["shaky"] = flaky_route(GOOD_BODY, failures=2)
    src = ZeroSource("remote_label", "shaky", requested_height=30.0)
    tab = fetch_remote_zeros(src, cache_dir)
    assert len(tab.ordinates) == 4
    assert server.requests_for("shaky") == 3


def test_fetch_gives_up_after_attempts(server, cache_dir):
    server.routes["dead"] = flaky_route(GOOD_BODY, failures=99)
    src = ZeroSource("remote_label", "dead", requested_height=30.0)
    with pytest.raises(FetchError):
        fetch_remote_zeros(src, cache_dir)
    assert server.requests_for("dead") == 3


def test_cache_key_includes_height(cache_dir):
    a = cache_path(cache_dir, "zeta", 100.0)
    b = cache_path(cache_dir, "zeta", 250.0)
    assert a != b
    assert a.endswith("zeta__100.zeros")
