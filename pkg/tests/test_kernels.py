"""Backend agreement: every numba kernel must match its numpy fallback."""

import numpy as np
import pytest

from finring._kernels import ACTIVE_BACKEND, numba_impl, numpy_impl
from finring import make_cyclic_ring, make_matrix_ring, make_product_ring

needs_numba = pytest.mark.skipif(numba_impl is None, reason="numba unavailable")


def sample_rings():
    f2 = make_cyclic_ring(2)
    return [
        make_cyclic_ring(6),
        make_matrix_ring(f2, 2),
        make_product_ring([make_cyclic_ring(4), f2]),
    ]


def test_backend_flag_exposed():
    assert ACTIVE_BACKEND in ("numpy", "numba")


@needs_numba
def test_closures_agree():
    rng = np.random.default_rng(3)
    for T in sample_rings():
        scope = np.arange(T.order, dtype=np.int64)
        for _ in range(40):
            mask = rng.random(T.order) < rng.uniform(0.05, 0.5)
            a = numpy_impl.additive_close(T.add, T.neg, T.zero, mask)
            b = numba_impl.additive_close(T.add, T.neg, T.zero, mask)
            assert np.array_equal(a, b)
            a = numpy_impl.subring_close(T.add, T.neg, T.mul, T.zero, mask)
            b = numba_impl.subring_close(T.add, T.neg, T.mul, T.zero, mask)
            assert np.array_equal(a, b)
            for lft, rgt in ((True, False), (False, True), (True, True)):
                a = numpy_impl.ideal_close(T.add, T.neg, T.mul, T.zero, mask, scope, lft, rgt)
                b = numba_impl.ideal_close(T.add, T.neg, T.mul, T.zero, mask, scope, lft, rgt)
                assert np.array_equal(a, b)


@needs_numba
def test_witness_scans_agree():
    rng = np.random.default_rng(5)
    for T in sample_rings():
        scope = np.arange(T.order, dtype=np.int64)
        for _ in range(40):
            pmask = rng.random(T.order) < 0.3
            pmask[T.zero] = True
            args = (T.mul, scope, pmask)
            assert numpy_impl.not_prime_witness(*args) == numba_impl.not_prime_witness(*args)
            assert numpy_impl.not_semiprime_witness(*args) == numba_impl.not_semiprime_witness(*args)
            assert (numpy_impl.not_completely_prime_witness(*args)
                    == numba_impl.not_completely_prime_witness(*args))
            assert (numpy_impl.cp_right_witness(T.mul, pmask)
                    == numba_impl.cp_right_witness(T.mul, pmask))
            assert np.array_equal(numpy_impl.sandwich_pairs(T.mul, pmask),
                                  numba_impl.sandwich_pairs(T.mul, pmask))


@needs_numba
def test_quadratic_witnesses_agree():
    rng = np.random.default_rng(9)
    for T in sample_rings():
        for _ in range(20):
            size = rng.integers(1, T.order + 1)
            scope = np.sort(rng.choice(T.order, size=size, replace=False)).astype(np.int64)
            for t in range(T.order):
                a = numpy_impl.right_quadratic_witness(T.add, T.mul, scope, T.zero, t)
                b = numba_impl.right_quadratic_witness(T.add, T.mul, scope, T.zero, t)
                assert (a == (-1, -1)) == (b == (-1, -1))
                a = numpy_impl.left_quadratic_witness(T.add, T.mul, scope, T.zero, t)
                b = numba_impl.left_quadratic_witness(T.add, T.mul, scope, T.zero, t)
                assert (a == (-1, -1)) == (b == (-1, -1))
