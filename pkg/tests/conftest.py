import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from scgt import fixtures
from scgt.complex import SimplicialComplex


@pytest.fixture
def proto():
    return fixtures.prototype()


@pytest.fixture
def variant():
    return fixtures.prototype(variant=True)


@pytest.fixture
def rng():
    return random.Random(20261016)


@st.composite
def complexes(draw, n_max=6):
    n = draw(st.integers(1, n_max))
    sets = draw(st.lists(st.sets(st.integers(1, n), min_size=1), min_size=1, max_size=6))
    return SimplicialComplex.from_facets(n, sets)


def permutation_average(value, members):
    """Shapley oracle: mean marginal contribution over all orderings. ``value`` maps frozensets."""
    total = {x: Fraction(0) for x in members}
    orders = list(permutations(members))
    for order in orders:
        seen = frozenset()
        for x in order:
            total[x] += value(seen | {x}) - value(seen)
            seen = seen | {x}
    return {x: t / len(orders) for x, t in total.items()}


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
