import pytest

from corpus import FIG1_TEXT
from tgc.core import parse_temporal_graph


@pytest.fixture(scope="session")
def fig1():
    return parse_temporal_graph(FIG1_TEXT)


@pytest.fixture(scope="session")
def fig1_text():
    return FIG1_TEXT


def vertices(g, letters: str) -> list[int]:
    return [g.vertex(ch) for ch in letters]
