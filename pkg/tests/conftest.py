import numpy as np
import pytest

from finring import (
    Subset,
    make_cyclic_ring,
    make_matrix_ring,
    make_product_ring,
    make_extension_pair,
    matrix_entry_digits,
)
from finring.harness import (
    DEFAULT_CAPS,
    corpus_pairs,
    default_corpus,
    run_suite,
    triangular_subring,
)


@pytest.fixture(scope="session")
def f2():
    return make_cyclic_ring(2)


@pytest.fixture(scope="session")
def f3():
    return make_cyclic_ring(3)


@pytest.fixture(scope="session")
def z4():
    return make_cyclic_ring(4)


@pytest.fixture(scope="session")
def m2f2(f2):
    return make_matrix_ring(f2, 2)


@pytest.fixture(scope="session")
def m2f3(f3):
    return make_matrix_ring(f3, 2)


@pytest.fixture(scope="session")
def f2xf2(f2):
    return make_product_ring([f2, f2])


@pytest.fixture(scope="session")
def lower_pair(m2f2):
    """The 2x2 lower-triangular maximal subring pair over F_2."""
    return make_extension_pair(m2f2, triangular_subring(m2f2, "lower"), "M2F2/lower")


@pytest.fixture(scope="session")
def diagonal_pair(f2xf2):
    diag = Subset.from_indices(f2xf2, [0, 3])
    return make_extension_pair(f2xf2, diag, "F2xF2/diag")


@pytest.fixture(scope="session")
def corpus():
    return corpus_pairs(default_corpus(DEFAULT_CAPS), DEFAULT_CAPS)


@pytest.fixture(scope="session")
def suite_report(corpus):
    return run_suite(corpus)


def entry_digits(T, i):
    return matrix_entry_digits(T, i)
