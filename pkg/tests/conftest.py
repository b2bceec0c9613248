import pytest

from menergy import make_game
from menergy.bench import gen_paper_fixture


@pytest.fixture
def fig1():
    return gen_paper_fixture("fig1")


@pytest.fixture
def fig5():
    return gen_paper_fixture("fig5")


@pytest.fixture
def fig6():
    return gen_paper_fixture("fig6")


@pytest.fixture
def fig7():
    return gen_paper_fixture("fig7")


@pytest.fixture
def fig8():
    return gen_paper_fixture("fig8")


def project_dim1(g):
    """Keep only the first weight dimension (priorities untouched)."""
    return make_game([(s.id, s.owner, s.priority) for s in g.states],
                     [(e.src, e.dst, (e.weight[0],)) for e in g.edges],
                     g.initial, 1)
