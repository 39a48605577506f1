import os
import sys

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest

from classical_lie.algebra      import build_algebra
from classical_lie.algebra_spec import AlgebraSpec

_ALGEBRAS = {}


def get_algebra(label: str):
    if label not in _ALGEBRAS:
        _ALGEBRAS[label] = build_algebra(AlgebraSpec.parse(label))
    return _ALGEBRAS[label]


@pytest.fixture(scope="session")
def algebra():
    return get_algebra


@pytest.fixture(scope="session")
def a1():
    return get_algebra("A1")


@pytest.fixture(scope="session")
def a2():
    return get_algebra("A2")


@pytest.fixture(scope="session")
def b2():
    return get_algebra("B2")


@pytest.fixture(scope="session")
def c2():
    return get_algebra("C2")


@pytest.fixture(scope="session")
def d3():
    return get_algebra("D3")
