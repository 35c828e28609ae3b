import itertools

import numpy as np
import pytest

from projalg import groups


def compose_perms(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


@pytest.fixture(scope="session")
def s3_table():
    # Independent oracle: enumerate the 6 permutations of 3 symbols and compose.
    perms = list(itertools.permutations(range(3)))
    return [[perms.index(compose_perms(a, b)) for b in perms] for a in perms]


@pytest.fixture(scope="session")
def s3(s3_table):
    return groups.make_finite_from_table(s3_table)


@pytest.fixture
def z2():
    return groups.make_cyclic_power(2, 1)


@pytest.fixture
def z3():
    return groups.make_cyclic_power(3, 1)


@pytest.fixture
def z4():
    return groups.make_cyclic_power(4, 1)


@pytest.fixture
def z5():
    return groups.make_cyclic_power(5, 1)


@pytest.fixture
def z22():
    return groups.make_cyclic_power(2, 2)


@pytest.fixture
def z32():
    return groups.make_cyclic_power(3, 2)


@pytest.fixture
def lattice1():
    return groups.make_lattice(1)


@pytest.fixture
def lattice2():
    return groups.make_lattice(2)


@pytest.fixture
def rng():
    return np.random.default_rng(0x5EED)
