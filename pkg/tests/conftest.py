from __future__ import annotations

import functools

import pytest

from iomalg.fixtures import B2, E5
from iomalg.search import enumerate_models


@functools.lru_cache(maxsize=None)
def census(max_n: int) -> tuple:
    """All bounded involutive BE algebras up to isomorphism with n <= max_n."""
    return tuple(alg for n in range(1, max_n + 1) for alg in enumerate_models(n))


@functools.lru_cache(maxsize=None)
def census_plus_e5() -> tuple:
    return census(4) + (E5,)


@pytest.fixture(scope="session")
def small_census():
    return census_plus_e5()


@pytest.fixture(scope="session")
def census5():
    return census(5)


@pytest.fixture
def e5():
    return E5


@pytest.fixture
def b2():
    return B2
