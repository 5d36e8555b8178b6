import pytest

from surreal import Engine, Genealogy, Strategy
from surreal.bench import run_cell


@pytest.fixture(scope="session")
def tree():
    return Genealogy()


@pytest.fixture(scope="session")
def engine(tree):
    """Shared MemoParents engine; tables stay warm across tests."""
    return Engine(Strategy.MEMO_PARENTS, genealogy=tree)


@pytest.fixture(scope="session")
def memo_engine(tree):
    return Engine(Strategy.MEMO, genealogy=tree)


@pytest.fixture(scope="session")
def bench_sweep():
    """n*n timings and counters for both memo strategies, n = 1..10.

    Fresh engine per cell; shared by the regression tests and the
    acceptance suite because the large cells run for tens of seconds.
    """
    rows = {}
    for strategy in (Strategy.MEMO, Strategy.MEMO_PARENTS):
        for n in range(1, 11):
            repeats = 5 if n <= 6 else 1  # small cells are noise-prone
            rows[(strategy, n)] = run_cell(n, strategy, repeats=repeats,
                                           budget_seconds=None)
    return rows


def nodes_to_generation(tree, depth):
    return list(tree.in_order(depth))
