from __future__ import annotations

import pytest

from cheinloops import build_group


@pytest.fixture(scope="session")
def s3():
    return build_group("S3")


@pytest.fixture(scope="session")
def d8():
    return build_group("D8")


@pytest.fixture(scope="session")
def q8():
    return build_group("Q8")


@pytest.fixture(scope="session")
def c3():
    return build_group("C3")


@pytest.fixture(scope="session")
def c4():
    return build_group("C4")
