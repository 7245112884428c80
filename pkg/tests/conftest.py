from fractions import Fraction
import random
import sys

import pytest
from hypothesis import strategies as st

from k3stab.lattice import DivisorClass, IntersectionLattice
from k3stab.mukai import MukaiVector
from k3stab.surface_models import build_example_rank2, read_surface


def fractions(lo=-20, hi=20, max_denominator=12):
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_denominator)


def classes(rank, **kw):
    return st.lists(fractions(**kw), min_size=rank, max_size=rank).map(DivisorClass)


def mukai_vectors(rank, **kw):
    return st.builds(MukaiVector, fractions(**kw), classes(rank, **kw), fractions(**kw))


def rand_fraction(rng, lo=-10, hi=10, max_den=9):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_class(rng, rank, **kw):
    return DivisorClass([rand_fraction(rng, **kw) for _ in range(rank)])


def rand_mukai(rng, rank, **kw):
    return MukaiVector(rand_fraction(rng, **kw), rand_class(rng, rank, **kw), rand_fraction(rng, **kw))


# Basis C, D, P, Q with D.C = 1, D^2 = 0 and P, Q orthogonal to C and D.
CDPQ = IntersectionLattice(
    ["C", "D", "P", "Q"],
    [[-2, 1, 0, 0], [1, 0, 0, 0], [0, 0, -2, 1], [0, 0, 1, -4]],
)
MINIMAL_GRAM = IntersectionLattice(["C", "D"], [[-2, 1], [1, 0]])


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def cdpq():
    lat = CDPQ
    return lat, lat.basis_class("C"), lat.basis_class("D")


@pytest.fixture
def minimal():
    return read_surface("minimal.k3.json")


@pytest.fixture
def q4():
    return build_example_rank2(4, 2)


@pytest.fixture
def meet2():
    return read_surface("rank3-meet2.k3.json")


@pytest.fixture
def pairwise3():
    return read_surface("rank3-pairwise3.k3.json")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
