import pytest

from twinwidth import (CnfFormula, Dialect, build_3col, build_mincol,
                       build_mincol_3sequence, build_3col_4sequence)


@pytest.fixture(scope="session")
def sat_demo():
    """Three variables, two clauses; the worked example used throughout."""
    return CnfFormula(3, ((1, -2, 3), (-1, 2, -3)), Dialect.THREE_SAT)


@pytest.fixture(scope="session")
def sat_demo_assignment():
    return {1: False, 2: True, 3: True}


@pytest.fixture(scope="session")
def mincol_demo(sat_demo):
    return build_mincol(sat_demo)


@pytest.fixture(scope="session")
def mincol_demo_sequence(mincol_demo):
    return build_mincol_3sequence(mincol_demo)


@pytest.fixture(scope="session")
def nae_demo():
    """Seven variables, eight clauses; the worked NAE example."""
    return CnfFormula(7, (
        (1, -2, 3), (-1, 4, 5), (2, -3, 6), (1, 6, -7),
        (4, 5, 7), (2, 4, -6), (-1, -5, 7), (3, -6, -7),
    ), Dialect.NAE_THREE_SAT)


@pytest.fixture(scope="session")
def nae_demo_assignment():
    return {i: (i != 4) for i in range(1, 8)}


@pytest.fixture(scope="session")
def threecol_demo(nae_demo):
    return build_3col(nae_demo)


@pytest.fixture(scope="session")
def threecol_demo_sequence(threecol_demo):
    return build_3col_4sequence(threecol_demo)

# Frozen during design from the subdivision rule applied occurrence
# list by occurrence list; regression-pinned by the acceptance suite.
NAE_DEMO_SUBDIVISIONS = frozenset({
    (1, 4), (2, 3), (2, 6), (3, 3), (4, 5),
    (4, 6), (5, 5), (5, 7), (6, 4), (6, 6),
})
