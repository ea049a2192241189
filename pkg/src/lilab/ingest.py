"""Zero-table I/O: local files, a remote HTTP source, and a local cache.

File format: UTF-8 text, '#' comments, one "ordinate [multiplicity]" per
line, ascending positive ordinates. Ordinates are kept as the decimal strings
received so that serializing a parsed table reproduces the input bytes.

The remote client is a thin GET wrapper: {base}/zeros/{label}?height={h},
where the base URL comes from LILAB_ZERO_BASE_URL (falling back to the public
L-function database). Responses are cached per (label, height) under the
cache directory; concurrent fetches of the same entry serialize on a lock
file, and cache writes go through a temp file plus atomic rename so an
interrupted download never corrupts an existing entry.
"""

from __future__ import annotations

import http.client
import os
import re
import tempfile
import time
import urllib.error
import urllib.request
from dataclasses import dataclass
from importlib import resources

from filelock import FileLock

from .errors import (
    FetchError,
    LabelNotFoundError,
    MalformedResponseError,
    TableError,
)
from .zeros import ZeroTable, make_zero_table

__all__ = [
    "ZeroSource",
    "parse_ordinates",
    "serialize_ordinates",
    "fetch_remote_zeros",
    "cache_path",
    "bundled_zeros_path",
    "load_bundled_zeros",
    "DEFAULT_BASE_URL",
]

DEFAULT_BASE_URL = "https://www.lmfdb.org"
_LABEL_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._\-]*$")
_ATTEMPTS = 3
_BACKOFF_SECONDS = 0.1


@dataclass(frozen=True)
class ZeroSource:
    kind: str              # "local_file" or "remote_label"
    path_or_label: str
    requested_height: float = 0.0

    def validate(self):
        if self.kind not in ("local_file", "remote_label"):
            raise ValueError(f"unknown source kind {self.kind!r}")
        if self.kind == "remote_label":
            if not _LABEL_RE.match(self.path_or_label):
                raise ValueError(f"malformed label {self.path_or_label!r}")
            if not (self.requested_height > 0.0):
                raise ValueError("requested_height must be positive")


def parse_ordinates(text, label: str = "") -> ZeroTable:
    """Parse zero-table text into a validated table.

    Accepts a string or any iterable of lines. Reports the 1-based line
    number on the first offending line.
    """
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in text]
    strings = []
    values = []
    mults = []
    prev = 0.0
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) > 2:
            raise TableError(f"line {lineno}: expected 'ordinate [multiplicity]'")
        try:
            value = float(parts[0])
        except ValueError:
            raise TableError(f"line {lineno}: unparseable ordinate {parts[0]!r}") from None
        if not value > 0.0:
            raise TableError(f"line {lineno}: nonpositive ordinate {parts[0]}")
        if value <= prev:
            raise TableError(f"line {lineno}: ordinates must be strictly increasing")
        mult = 1
        if len(parts) == 2:
            try:
                mult = int(parts[1])
            except ValueError:
                raise TableError(
                    f"line {lineno}: unparseable multiplicity {parts[1]!r}"
                ) from None
            if mult < 1:
                raise TableError(f"line {lineno}: multiplicity must be >= 1")
        strings.append(parts[0])
        values.append(value)
        mults.append(mult)
        prev = value
    if not values:
        raise TableError("no ordinates found")
    return make_zero_table(
        label=label,
        ordinates=values,
        multiplicities=mults,
        symmetric=True,
        coverage_height=values[-1],
        ordinate_strings=strings,
    )


def serialize_ordinates(table: ZeroTable) -> str:
    """Inverse of parse_ordinates, reproducing the stored decimal strings."""
    out = []
    for s, m in zip(table.ordinate_strings, table.multiplicities):
        out.append(s if m == 1 else f"{s} {int(m)}")
    return "\n".join(out) + "\n"


def _height_key(height: float) -> str:
    return f"{height:g}"


def cache_path(cache_dir, label: str, height: float) -> str:
    return os.path.join(cache_dir, f"{label}__{_height_key(height)}.zeros")


def _http_get(url: str) -> bytes:
    """One GET returning the body; length-checked against Content-Length."""
    try:
        with urllib.request.urlopen(url, timeout=30) as resp:
            declared = resp.headers.get("Content-Length")
            body = resp.read()
    except http.client.IncompleteRead as exc:
        raise MalformedResponseError(f"truncated response from {url}") from exc
    if declared is not None and len(body) != int(declared):
        raise MalformedResponseError(
            f"truncated response from {url}: got {len(body)} of {declared} bytes"
        )
    return body


def fetch_remote_zeros(source: ZeroSource, cache_dir) -> ZeroTable:
    """Load a zero table for the source, downloading on a cache miss.

    Network errors are retried with backoff; an unknown label and a
    malformed body are not retried, and nothing is cached for them.
    """
    source.validate()
    if source.kind == "local_file":
        with open(source.path_or_label, "r", encoding="utf-8") as fh:
            return parse_ordinates(fh, label=os.path.basename(source.path_or_label))

    label = source.path_or_label
    os.makedirs(cache_dir, exist_ok=True)
    target = cache_path(cache_dir, label, source.requested_height)
    if os.path.exists(target):
        with open(target, "r", encoding="utf-8") as fh:
            return parse_ordinates(fh, label=label)

    lock = FileLock(target + ".lock")
    with lock:
        # another process may have won the race while we waited
        if os.path.exists(target):
            with open(target, "r", encoding="utf-8") as fh:
                return parse_ordinates(fh, label=label)

        base = os.environ.get("LILAB_ZERO_BASE_URL", DEFAULT_BASE_URL).rstrip("/")
        url = f"{base}/zeros/{label}?height={_height_key(source.requested_height)}"
        body = None
        failure = None
        for attempt in range(_ATTEMPTS):
            try:
                body = _http_get(url)
                break
            except urllib.error.HTTPError as exc:
                if exc.code == 404:
                    raise LabelNotFoundError(f"no zero data for label {label!r}") from exc
                failure = exc
            except MalformedResponseError:
                raise
            except (urllib.error.URLError, TimeoutError, OSError) as exc:
                failure = exc
            if attempt < _ATTEMPTS - 1:
                time.sleep(_BACKOFF_SECONDS * 2.0**attempt)
        if body is None:
            raise FetchError(f"GET {url} failed after {_ATTEMPTS} attempts: {failure}")

        try:
            text = body.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedResponseError(f"non-text response from {url}") from exc
        try:
            table = parse_ordinates(text, label=label)
        except TableError as exc:
            raise MalformedResponseError(f"unusable zero list from {url}: {exc}") from exc

        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return table


def bundled_zeros_path():
    """Location of the packaged table of the first 100000 zeta ordinates."""
    return resources.files("lilab.data").joinpath("zeta_zeros_100k.txt")


def load_bundled_zeros() -> ZeroTable:
    return parse_ordinates(bundled_zeros_path().read_text(), label="zeta100k")
