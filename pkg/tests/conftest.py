"""Session-scoped rings shared across test modules."""

import pytest

from skewarm import default_corpus
from skewarm.constructions import direct_product, matrix_ring, swap_automorphism, upper_triangular, zmod


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [fx for fx in corpus if fx.ring.order <= 8]


@pytest.fixture(scope="session")
def Z2():
    return zmod(2)


@pytest.fixture(scope="session")
def Z4():
    return zmod(4)


@pytest.fixture(scope="session")
def Z2xZ2():
    Z = zmod(2)
    return direct_product(Z, Z).ring


@pytest.fixture(scope="session")
def swap(Z2xZ2):
    return swap_automorphism(Z2xZ2)


@pytest.fixture(scope="session")
def M2Z2():
    return matrix_ring(zmod(2), 2)


@pytest.fixture(scope="session")
def T2Z2():
    return upper_triangular(zmod(2), 2)
