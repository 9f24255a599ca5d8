"""Closure and lattice tests, including the brute-force subset oracles."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from finring import (
    Side,
    Subset,
    annihilator,
    core_of,
    enumerate_ideals,
    enumerate_subrings,
    ideal_closure,
    idealizer,
    is_duo,
    is_ideal,
    is_maximal_subring,
    is_prime_one_sided_ideal,
    is_quasi_duo,
    is_subring,
    jacobson_radical,
    make_cyclic_ring,
    make_product_ring,
    make_triangular_ring,
    maximal_ideals,
    maximal_one_sided_above,
    maximal_subrings,
    matrix_entry_digits,
    subring_closure,
)
from finring.harness import triangular_subring


# --- independent oracles ----------------------------------------------------


def brute_subrings(T):
    """All unital subrings by scanning every subset (order <= 8 only)."""
    n = T.order
    out = set()
    for bits in range(1 << n):
        if not (bits >> T.zero) & 1 or not (bits >> T.one) & 1:
            continue
        members = [i for i in range(n) if (bits >> i) & 1]
        ok = all((bits >> T.add[a, b]) & 1 and (bits >> T.mul[a, b]) & 1
                 for a in members for b in members)
        if ok:
            out.add(frozenset(members))
    return out


def brute_additive_subgroups(T):
    """All additive subgroups via closure BFS (usable up to order 16)."""
    def close(gens):
        known = {T.zero} | set(gens)
        frontier = list(known)
        while frontier:
            x = frontier.pop()
            for y in list(known):
                s = int(T.add[x, y])
                if s not in known:
                    known.add(s)
                    frontier.append(s)
        return frozenset(known)

    found = {close(())}
    frontier = [close(())]
    while frontier:
        nxt = []
        for S in frontier:
            for t in range(T.order):
                if t in S:
                    continue
                grown = close(tuple(S) + (t,))
                if grown not in found:
                    found.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return found


def brute_ideals(T, side):
    out = set()
    for S in brute_additive_subgroups(T):
        members = sorted(S)
        left_ok = all(T.mul[t, a] in S for t in range(T.order) for a in members)
        right_ok = all(T.mul[a, t] in S for t in range(T.order) for a in members)
        if side == "left" and left_ok:
            out.add(S)
        elif side == "right" and right_ok:
            out.add(S)
        elif side == "two-sided" and left_ok and right_ok:
            out.add(S)
    return out


def as_frozensets(subsets):
    return {frozenset(int(i) for i in s.indices()) for s in subsets}


SMALL_RING_BUILDERS = {
    "Z4": lambda: make_cyclic_ring(4),
    "Z8": lambda: make_cyclic_ring(8),
    "F2xF2": lambda: make_product_ring([make_cyclic_ring(2)] * 2),
    "F2^3": lambda: make_product_ring([make_cyclic_ring(2)] * 3),
    "Z4xZ2": lambda: make_product_ring([make_cyclic_ring(4), make_cyclic_ring(2)]),
    "tri(F2,2)": lambda: make_triangular_ring(make_cyclic_ring(2), 2, "lower"),
}


@pytest.mark.parametrize("name", sorted(SMALL_RING_BUILDERS))
def test_subring_enumeration_matches_brute_force(name):
    T = SMALL_RING_BUILDERS[name]()
    assert as_frozensets(enumerate_subrings(T)) == brute_subrings(T)


@pytest.mark.parametrize("name", sorted(SMALL_RING_BUILDERS))
@pytest.mark.parametrize("side", ["left", "right", "two-sided"])
def test_ideal_enumeration_matches_brute_force(name, side):
    T = SMALL_RING_BUILDERS[name]()
    assert as_frozensets(enumerate_ideals(T, side)) == brute_ideals(T, side)


def test_m2f2_subrings_against_subset_scan(m2f2):
    """Order-16 cross-check: every add/mul-closed unital subset is found."""
    free = [i for i in range(16) if i not in (m2f2.zero, m2f2.one)]
    brute = set()
    for bits in range(1 << len(free)):
        members = [m2f2.zero, m2f2.one] + [free[k] for k in range(len(free)) if (bits >> k) & 1]
        mask = np.zeros(16, dtype=bool)
        mask[members] = True
        idx = np.array(members)
        if mask[m2f2.add[np.ix_(idx, idx)]].all() and mask[m2f2.mul[np.ix_(idx, idx)]].all():
            brute.add(frozenset(members))
    assert as_frozensets(enumerate_subrings(m2f2)) == brute


def test_m2f2_left_ideal_count(m2f2):
    left = enumerate_ideals(m2f2, "left")
    assert sorted(i.size for i in left) == [1, 4, 4, 4, 16]
    assert len(maximal_ideals(m2f2, "left")) == 3


def test_subring_closure_of_nothing_is_prime_subring(m2f2):
    prime = subring_closure(m2f2, Subset.empty(m2f2))
    assert prime.size == 2
    assert m2f2.zero in prime and m2f2.one in prime


def test_adjoining_outside_element_saturates_example(m2f2):
    lower = triangular_subring(m2f2, "lower")
    e12 = next(i for i in range(16) if matrix_entry_digits(m2f2, i) == (0, 1, 0, 0))
    grown = subring_closure(m2f2, Subset(m2f2, lower.mask | np.eye(16, dtype=bool)[e12]))
    assert grown.mask.all()


def test_closure_of_projection_spans_product(f2xf2):
    grown = subring_closure(f2xf2, Subset.from_indices(f2xf2, [2]))  # (1,0)
    assert grown.mask.all()


def test_ideal_closure_examples(z4, m2f2):
    assert sorted(ideal_closure(z4, Subset.from_indices(z4, [2]), "left").indices()) == [0, 2]
    e11 = next(i for i in range(16) if matrix_entry_digits(m2f2, i) == (1, 0, 0, 0))
    assert ideal_closure(m2f2, Subset.from_indices(m2f2, [e11]), "two-sided").mask.all()
    e12 = next(i for i in range(16) if matrix_entry_digits(m2f2, i) == (0, 1, 0, 0))
    left = ideal_closure(m2f2, Subset.from_indices(m2f2, [e12]), "left")
    # left multiples of e12: first column zero
    assert sorted(left.indices()) == sorted(
        i for i in range(16)
        if matrix_entry_digits(m2f2, i)[0] == 0 and matrix_entry_digits(m2f2, i)[2] == 0)


def test_is_maximal_subring(m2f2, f2xf2):
    assert is_maximal_subring(m2f2, triangular_subring(m2f2, "lower"))
    prime = subring_closure(m2f2, Subset.empty(m2f2))
    assert not is_maximal_subring(m2f2, prime)
    diag = Subset.from_indices(f2xf2, [0, 3])
    assert is_maximal_subring(f2xf2, diag)


def test_maximal_subrings_census(z4, f2xf2, m2f2):
    assert maximal_subrings(z4) == set()
    assert {frozenset(s.indices()) for s in maximal_subrings(f2xf2)} == {frozenset({0, 3})}
    maxes = maximal_subrings(m2f2)
    assert len(maxes) == 4  # three triangular-type subrings plus the quartic field
    tri = {triangular_subring(m2f2, "lower"), triangular_subring(m2f2, "upper")}
    assert tri <= maxes
    assert sorted(s.size for s in maxes) == [4, 8, 8, 8]


def test_maximal_ideals(z4, f2xf2, m2f2):
    for side in ("left", "right", "two-sided"):
        assert {frozenset(i.indices()) for i in maximal_ideals(z4, side)} == {frozenset({0, 2})}
    assert {frozenset(i.indices()) for i in maximal_ideals(f2xf2, "two-sided")} == \
        {frozenset({0, 1}), frozenset({0, 2})}


def test_idealizer_of_left_ideal_is_upper_triangular(m2f2):
    a = Subset(m2f2, np.array([matrix_entry_digits(m2f2, i)[0] == 0
                               and matrix_entry_digits(m2f2, i)[2] == 0
                               for i in range(16)]))
    idz = idealizer(m2f2, a, "left")
    assert idz == triangular_subring(m2f2, "upper")


def test_idealizer_of_two_sided_is_everything(z4):
    assert idealizer(z4, Subset.from_indices(z4, [0, 2]), "two-sided").mask.all()


def test_idealizer_of_max_right_ideal_is_maximal_subring(m2f2):
    a = Subset(m2f2, np.array([matrix_entry_digits(m2f2, i)[2] == 0
                               and matrix_entry_digits(m2f2, i)[3] == 0
                               for i in range(16)]))  # zero second row
    assert is_ideal(m2f2, a, "right")
    idz = idealizer(m2f2, a, "right")
    assert is_maximal_subring(m2f2, idz)


def test_idealizer_contains_subrings_where_two_sided(corpus):
    # the conductors are two-sided in R, so R always sits inside their idealizers
    for pair in corpus:
        T = pair.ring
        for P, side in ((pair.cond_r, "right"), (pair.cond_l, "left")):
            assert pair.subring <= idealizer(T, P, side), pair.label


def test_annihilators(m2f2):
    whole = Subset.full(m2f2)
    assert annihilator(m2f2, whole, Subset.from_indices(m2f2, [m2f2.zero]), "left").size == 16
    e11 = next(i for i in range(16) if matrix_entry_digits(m2f2, i) == (1, 0, 0, 0))
    lann = annihilator(m2f2, whole, Subset.from_indices(m2f2, [e11]), "left")
    assert sorted(lann.indices()) == sorted(
        i for i in range(16)
        if matrix_entry_digits(m2f2, i)[0] == 0 and matrix_entry_digits(m2f2, i)[2] == 0)


def test_jacobson_radical(z4, m2f2, f2):
    assert sorted(jacobson_radical(z4).indices()) == [0, 2]
    assert jacobson_radical(m2f2).size == 1
    tri = make_triangular_ring(f2, 2, "lower")
    J = jacobson_radical(tri)
    assert J.size == 2
    # the strictly-lower entry is the nonzero member
    nonzero = [i for i in J.indices() if i != tri.zero]
    assert len(nonzero) == 1


def test_quasi_duo_and_duo(z4, m2f2, f2xf2):
    assert is_quasi_duo(z4, "left") and is_duo(z4, "left")
    assert not is_quasi_duo(m2f2, "left")
    assert is_duo(f2xf2, "left") and is_duo(f2xf2, "right")


def test_core_of(m2f2, z4, lower_pair):
    two_sided = Subset.from_indices(z4, [0, 2])
    assert core_of(z4, two_sided, "two-sided") == two_sided
    a = Subset(m2f2, np.array([matrix_entry_digits(m2f2, i)[0] == 0
                               and matrix_entry_digits(m2f2, i)[2] == 0
                               for i in range(16)]))
    assert core_of(m2f2, a, "left").size == 1  # simple ring: core is 0
    # in R: the core of cond_r (a maximal right ideal of R) is itself
    R = lower_pair.subring
    assert core_of(lower_pair.ring, lower_pair.cond_r, "right", scope=R) == lower_pair.cond_r


def test_maximal_one_sided_above(m2f2, lower_pair):
    M = maximal_one_sided_above(m2f2, lower_pair.cond_l, "left")
    assert is_ideal(m2f2, M, "left")
    assert not is_ideal(M.ring, M, "two-sided")
    for x in np.flatnonzero(~M.mask):
        grown = ideal_closure(m2f2, Subset.from_indices(m2f2, list(M.indices()) + [int(x)]), "left")
        assert grown.mask.all()


def test_maximal_one_sided_ideals_are_prime(m2f2, z4, f2xf2):
    # every maximal one-sided ideal passes the one-sided primality predicate
    for T in (m2f2, z4, f2xf2):
        for side in ("left", "right"):
            for M in maximal_ideals(T, side):
                assert is_prime_one_sided_ideal(T, M, side)


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(0, 15), max_size=4))
def test_closures_idempotent(m2f2, gens):
    S = subring_closure(m2f2, Subset.from_indices(m2f2, gens))
    assert subring_closure(m2f2, S) == S
    for side in ("left", "right", "two-sided"):
        I = ideal_closure(m2f2, Subset.from_indices(m2f2, gens), side)
        assert ideal_closure(m2f2, I, side) == I
        assert is_ideal(m2f2, I, side)


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(0, 15), max_size=3))
def test_subring_closure_is_subring(m2f2, gens):
    S = subring_closure(m2f2, Subset.from_indices(m2f2, gens))
    assert is_subring(m2f2, S)
