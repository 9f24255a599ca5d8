import numpy as np
import pytest

from finring import (
    Subset,
    is_completely_prime_ideal,
    is_completely_prime_right_ideal,
    is_left_n_integral,
    is_n_integrally_closed,
    is_nilpotent_ideal,
    is_prime_ideal,
    is_prime_one_sided_ideal,
    is_right_n_integral,
    is_semiprime_ideal,
    is_square_closed,
    make_cyclic_ring,
    make_extension_pair,
    make_triangular_ring,
    matrix_entry_digits,
    maximal_ideals,
    minimal_primes_over,
    prime_radical,
)
from finring.dsl import parse_ring_table_text
from finring.harness import F4_TABLE, F8_TABLE
from finring.ideals import conductor, cp_right_violation, not_prime_witness
from finring.substructures import subring_closure


def digits_subset(T, predicate):
    return Subset(T, np.array([predicate(matrix_entry_digits(T, i)) for i in range(T.order)]))


def test_triangular_conductors_bit_exact(lower_pair):
    T = lower_pair.ring
    # cond_l: second column zero; cond_r: first row zero; cond: zero only
    assert lower_pair.cond_l == digits_subset(T, lambda d: d[1] == 0 and d[3] == 0)
    assert lower_pair.cond_r == digits_subset(T, lambda d: d[0] == 0 and d[1] == 0)
    assert (lower_pair.cond_l & lower_pair.cond_r).size == 2
    assert lower_pair.cond.size == 1


def test_conductor_accessor(lower_pair):
    assert conductor(lower_pair, "left") == lower_pair.cond_l
    assert conductor(lower_pair, "right") == lower_pair.cond_r
    assert conductor(lower_pair, "two-sided") == lower_pair.cond


def test_pair_requires_maximality(f2xf2):
    prime = subring_closure(f2xf2, Subset.empty(f2xf2))
    with pytest.raises(ValueError):
        make_extension_pair(f2xf2, Subset.full(f2xf2))
    # the prime subring of F2xF2 is the diagonal, which IS maximal
    pair = make_extension_pair(f2xf2, prime)
    assert pair.maximal


def test_zero_prime_in_matrix_ring_not_in_triangular(m2f2, lower_pair):
    zero = Subset.from_indices(m2f2, [m2f2.zero])
    assert is_prime_ideal(m2f2, zero)
    assert not is_prime_ideal(m2f2, zero, scope=lower_pair.subring)
    w = not_prime_witness(m2f2, zero, scope=lower_pair.subring)
    a, b = w
    # replay: a*R*b = 0 with both outside the zero ideal
    ridx = lower_pair.subring.indices()
    assert all(m2f2.mul[m2f2.mul[a, s], b] == m2f2.zero for s in ridx)


def test_conductors_prime_in_subring(lower_pair):
    T = lower_pair.ring
    assert is_prime_ideal(T, lower_pair.cond_l, scope=lower_pair.subring)
    assert is_prime_ideal(T, lower_pair.cond_r, scope=lower_pair.subring)


def test_semiprime(f2xf2, lower_pair):
    assert is_semiprime_ideal(f2xf2, Subset.from_indices(f2xf2, [0]))
    T = lower_pair.ring
    zero = Subset.from_indices(T, [T.zero])
    assert not is_semiprime_ideal(T, zero, scope=lower_pair.subring)


def test_completely_prime(f2, m2f2, diagonal_pair):
    assert is_completely_prime_ideal(f2, Subset.from_indices(f2, [0]))
    assert not is_completely_prime_ideal(m2f2, Subset.from_indices(m2f2, [0]))
    T = diagonal_pair.ring
    assert is_completely_prime_ideal(T, diagonal_pair.cond, scope=diagonal_pair.subring)


def test_completely_prime_right_for_maximal_right_ideals(m2f2):
    for M in maximal_ideals(m2f2, "right"):
        assert is_completely_prime_right_ideal(m2f2, M)
        assert cp_right_violation(m2f2, M) is None


def test_cp_right_witness_replays(lower_pair):
    T = lower_pair.ring
    P = lower_pair.cond_r
    verdict = is_completely_prime_right_ideal(T, P)
    w = cp_right_violation(T, P)
    assert verdict == (w is None)
    if w is not None:
        a, b = w
        pidx = P.indices()
        assert P.mask[T.mul[a, pidx]].all()
        assert P.mask[T.mul[a, b]] and not P.mask[a] and not P.mask[b]


def test_prime_one_sided(m2f2, z4):
    for M in maximal_ideals(m2f2, "left"):
        assert is_prime_one_sided_ideal(m2f2, M, "left")
    assert is_prime_one_sided_ideal(z4, Subset.from_indices(z4, [0, 2]), "left")
    tri = make_triangular_ring(make_cyclic_ring(2), 2, "lower")
    zero = Subset.from_indices(tri, [tri.zero])
    assert not is_prime_one_sided_ideal(tri, zero, "left")


def test_minimal_primes_of_example_pair(lower_pair):
    mp = minimal_primes_over(lower_pair.ring, lower_pair.cond, scope=lower_pair.subring)
    assert set(mp) == {lower_pair.cond_l, lower_pair.cond_r}
    rad = prime_radical(lower_pair.ring, lower_pair.cond, scope=lower_pair.subring)
    assert rad == (lower_pair.cond_l & lower_pair.cond_r)


def test_minimal_primes_of_field(f2):
    zero = Subset.from_indices(f2, [0])
    assert minimal_primes_over(f2, zero) == [zero]


def test_nilpotency(f2xf2, lower_pair):
    T = lower_pair.ring
    J = lower_pair.cond_l & lower_pair.cond_r
    nil, index = is_nilpotent_ideal(T, J)
    assert nil and index == 2
    zero = Subset.from_indices(T, [T.zero])
    assert is_nilpotent_ideal(T, zero) == (True, 1)
    idem = Subset.from_indices(f2xf2, [0, 2])  # F_2 x 0
    nil, index = is_nilpotent_ideal(f2xf2, idem)
    assert not nil and index is None


def test_integrality_basics(diagonal_pair):
    T = diagonal_pair.ring
    # members of R are right 1-integral
    for t in diagonal_pair.subring.indices():
        assert is_right_n_integral(diagonal_pair, int(t), 1)
    # (1,0) is idempotent: t^2 - t = 0
    t = 2  # (1,0)
    assert not diagonal_pair.subring.mask[t]
    assert is_right_n_integral(diagonal_pair, t, 2)
    assert is_left_n_integral(diagonal_pair, t, 2)


def test_f4_pair_not_quadratically_closed():
    f4 = parse_ring_table_text(F4_TABLE)
    prime = subring_closure(f4, Subset.empty(f4))
    pair = make_extension_pair(f4, prime, "F4/F2")
    assert not is_n_integrally_closed(pair, 2)
    assert is_square_closed(pair)


def test_f8_pair_quadratically_closed():
    f8 = parse_ring_table_text(F8_TABLE)
    prime = subring_closure(f8, Subset.empty(f8))
    pair = make_extension_pair(f8, prime, "F8/F2")
    assert is_n_integrally_closed(pair, 2)
    assert is_square_closed(pair)
    # every element of the octic field satisfies a cubic over the prime field
    assert not is_n_integrally_closed(pair, 3)


def test_square_closed_diagonal(diagonal_pair):
    assert is_square_closed(diagonal_pair)


def test_sandwich_membership_lemma(corpus):
    # x in cond_l | cond_r with xTx inside cond lies in cond
    for pair in corpus:
        T = pair.ring
        union = pair.cond_l | pair.cond_r
        for x in union.indices():
            xtx = T.mul[T.mul[int(x), np.arange(T.order)], int(x)]
            if pair.cond.mask[xtx].all():
                assert pair.cond.mask[x]
