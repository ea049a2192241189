from __future__ import annotations

import pytest

from lilab.descriptors import zeta_descriptor
from lilab.ingest import load_bundled_zeros
from lilab.stieltjes import zeta_laurent


@pytest.fixture(scope="session")
def zeta():
    return zeta_descriptor()


@pytest.fixture(scope="session")
def table():
    return load_bundled_zeros()


@pytest.fixture(scope="session")
def laurent():
    return zeta_laurent()


@pytest.fixture()
def cache_dir(tmp_path):
    d = tmp_path / "zero-cache"
    d.mkdir()
    return str(d)
