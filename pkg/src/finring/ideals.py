"""Conductors of maximal-subring pairs and the primality/integrality predicates.

For a validated pair R < T the three conductors are the largest left ideal,
right ideal and two-sided ideal of T contained in R:

    cond_l = {x : Tx <= R}    cond_r = {x : xT <= R}    cond = {x : TxT <= R}

All predicates are exhaustive scans over the tables; witness-returning
variants report the first counterexample in element-index order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .rings import RingTable, Subset, subring_as_ring
from .substructures import (
    Side,
    _as_side,
    additive_closure,
    is_ideal,
    is_maximal_subring,
    is_subring,
    enumerate_ideals,
)


@dataclass(frozen=True, eq=False)
class ExtensionPair:
    """A validated pair (R a subring of T, usually maximal) with cached conductors."""

    ring: RingTable
    subring: Subset
    maximal: bool
    cond: Subset
    cond_l: Subset
    cond_r: Subset
    label: str

    def __repr__(self) -> str:
        return f"ExtensionPair({self.label})"


def conductor_masks(T: RingTable, R: Subset) -> tuple[Subset, Subset, Subset]:
    """(cond, cond_l, cond_r) of a subring R of T, by direct definitional scan."""
    rmask = R.mask
    cl = rmask[T.mul].all(axis=0)            # Tx <= R, column scan
    cr = rmask[T.mul].all(axis=1)            # xT <= R, row scan
    cond = cr[T.mul].all(axis=0)             # Tx <= cond_r  <=>  TxT <= R
    return Subset(T, cond), Subset(T, cl), Subset(T, cr)


def make_extension_pair(T: RingTable, R: Subset, label: str = "",
                        require_maximal: bool = True,
                        known_maximal: Optional[bool] = None) -> ExtensionPair:
    """Validate R as a proper unital subring of T and cache its conductors.

    Sanity of the cached conductors (sidedness, the containment chain) is
    re-verified here rather than trusted.
    """
    if not is_subring(T, R):
        raise ValueError("R is not a unital subring of T")
    if R.mask.all():
        raise ValueError("R must be a proper subring")
    maximal = known_maximal if known_maximal is not None else is_maximal_subring(T, R)
    if require_maximal and not maximal:
        raise ValueError("R is not a maximal subring of T")
    cond, cl, cr = conductor_masks(T, R)
    if not (cond <= (cl & cr)):
        raise AssertionError("conductor chain violated: cond must lie in cond_l & cond_r")
    prods = T.mul[np.ix_(cl.indices(), cr.indices())]
    if not cond.mask[prods].all():
        raise AssertionError("conductor chain violated: cond_l*cond_r must lie in cond")
    for c, side in ((cl, Side.TWO_SIDED), (cr, Side.TWO_SIDED)):
        if not is_ideal(T, c, side, scope=R):
            raise AssertionError("one-sided conductor is not a two-sided ideal of R")
    if not (is_ideal(T, cond, Side.TWO_SIDED) and is_ideal(T, cond, Side.TWO_SIDED, scope=R)):
        raise AssertionError("cond is not a two-sided ideal of both R and T")
    if not label:
        label = f"{T.label}>sub{R.size}"
    return ExtensionPair(T, R, maximal, cond, cl, cr, label)


def conductor(pair: ExtensionPair, side) -> Subset:
    side = _as_side(side)
    if side is Side.LEFT:
        return pair.cond_l
    if side is Side.RIGHT:
        return pair.cond_r
    return pair.cond


# ---------------------------------------------------------------------------
# primality predicates (witness functions return None when the property holds)


def _scope_indices(T: RingTable, scope: Optional[Subset]) -> np.ndarray:
    return (scope.indices() if scope is not None
            else np.arange(T.order)).astype(np.int64)


def _validate_proper_ideal(T: RingTable, P: Subset, side, scope: Optional[Subset]) -> None:
    scope_ = scope if scope is not None else Subset.full(T)
    if not is_ideal(T, P, side, scope=scope_):
        raise ValueError(f"P is not a {_as_side(side).value} ideal of the scope")
    if P.size == scope_.size:
        raise ValueError("P must be a proper ideal")


def not_prime_witness(T: RingTable, P: Subset, scope: Optional[Subset] = None) -> Optional[tuple[int, int]]:
    """First (a, b) outside P with a*scope*b inside P, or None if P is prime."""
    _validate_proper_ideal(T, P, Side.TWO_SIDED, scope)
    a, b = _kernels.not_prime_witness(T.mul, _scope_indices(T, scope), P.mask)
    return None if a < 0 else (a, b)


def is_prime_ideal(T: RingTable, P: Subset, scope: Optional[Subset] = None) -> bool:
    return not_prime_witness(T, P, scope) is None


def not_semiprime_witness(T: RingTable, P: Subset, scope: Optional[Subset] = None) -> Optional[int]:
    _validate_proper_ideal(T, P, Side.TWO_SIDED, scope)
    a = _kernels.not_semiprime_witness(T.mul, _scope_indices(T, scope), P.mask)
    return None if a < 0 else a


def is_semiprime_ideal(T: RingTable, P: Subset, scope: Optional[Subset] = None) -> bool:
    return not_semiprime_witness(T, P, scope) is None


def not_completely_prime_witness(T: RingTable, P: Subset,
                                 scope: Optional[Subset] = None) -> Optional[tuple[int, int]]:
    _validate_proper_ideal(T, P, Side.TWO_SIDED, scope)
    a, b = _kernels.not_completely_prime_witness(T.mul, _scope_indices(T, scope), P.mask)
    return None if a < 0 else (a, b)


def is_completely_prime_ideal(T: RingTable, P: Subset, scope: Optional[Subset] = None) -> bool:
    return not_completely_prime_witness(T, P, scope) is None


def cp_right_violation(T: RingTable, P: Subset) -> Optional[tuple[int, int]]:
    """Violation of the completely-prime-right-ideal condition for a right ideal.

    Searches for a, b with aP <= P, ab in P and neither a nor b in P.
    """
    _validate_proper_ideal(T, P, Side.RIGHT, None)
    a, b = _kernels.cp_right_witness(T.mul, P.mask)
    return None if a < 0 else (a, b)


def is_completely_prime_right_ideal(T: RingTable, P: Subset) -> bool:
    return cp_right_violation(T, P) is None


def prime_one_sided_violation(T: RingTable, P: Subset, side) -> Optional[tuple[int, int]]:
    """Violation of one-sided primality: a, b outside P with aTb <= P."""
    side = _as_side(side)
    if side is Side.TWO_SIDED:
        raise ValueError("use not_prime_witness for two-sided ideals")
    _validate_proper_ideal(T, P, side, None)
    a, b = _kernels.not_prime_witness(T.mul, np.arange(T.order, dtype=np.int64), P.mask)
    return None if a < 0 else (a, b)


def is_prime_one_sided_ideal(T: RingTable, P: Subset, side) -> bool:
    return prime_one_sided_violation(T, P, side) is None


def sandwich_pairs(T: RingTable, P: Subset) -> np.ndarray:
    """Boolean (n, n) matrix: entry [a, b] iff a*T*b lies inside P."""
    return _kernels.sandwich_pairs(T.mul, P.mask)


# ---------------------------------------------------------------------------
# prime lattice queries


def prime_ideals_over(T: RingTable, I: Subset, scope: Optional[Subset] = None,
                      cap: int = 16) -> list[Subset]:
    """All prime two-sided ideals of ``scope`` containing I (full-lattice scan)."""
    if scope is None:
        ideals = enumerate_ideals(T, Side.TWO_SIDED, cap=cap)
        primes = [J for J in ideals
                  if I <= J and J.size < T.order and is_prime_ideal(T, J)]
        return sorted(primes, key=lambda s: (s.size, s.key()))
    ring, embed = subring_as_ring(T, scope)
    local_I = Subset(ring, I.mask[embed])
    out = []
    for J in enumerate_ideals(ring, Side.TWO_SIDED, cap=cap):
        if not (local_I <= J) or J.size == ring.order:
            continue
        if is_prime_ideal(ring, J):
            mask = np.zeros(T.order, dtype=np.bool_)
            mask[embed[J.indices()]] = True
            out.append(Subset(T, mask))
    return sorted(out, key=lambda s: (s.size, s.key()))


def minimal_primes_over(T: RingTable, I: Subset, scope: Optional[Subset] = None,
                        cap: int = 16) -> list[Subset]:
    primes = prime_ideals_over(T, I, scope, cap=cap)
    return [P for P in primes if not any(Q < P for Q in primes)]


def prime_radical(T: RingTable, I: Subset, scope: Optional[Subset] = None,
                  cap: int = 16) -> Subset:
    """Intersection of all primes of the scope containing I."""
    scope_ = scope if scope is not None else Subset.full(T)
    mask = scope_.mask.copy()
    for P in prime_ideals_over(T, I, scope, cap=cap):
        mask &= P.mask
    return Subset(T, mask)


# ---------------------------------------------------------------------------
# nilpotency


def is_nilpotent_ideal(T: RingTable, I: Subset) -> tuple[bool, Optional[int]]:
    """Iterated set-product test; returns (nilpotent?, index).

    The power chain I, I^2, ... is computed as additive closures of pairwise
    products and must hit {0} within ``order`` steps.
    """
    zero_only = np.zeros(T.order, dtype=np.bool_)
    zero_only[T.zero] = True
    cur = I
    if np.array_equal(cur.mask, zero_only):
        return True, 1
    seen = {cur.key()}
    for k in range(2, T.order + 2):
        prods = T.mul[np.ix_(cur.indices(), I.indices())].ravel()
        nxt = additive_closure(T, Subset.from_indices(T, prods))
        if np.array_equal(nxt.mask, zero_only):
            return True, k
        if nxt.key() in seen:
            return False, None
        seen.add(nxt.key())
        cur = nxt
    return False, None


# ---------------------------------------------------------------------------
# bounded-degree integrality


def is_right_n_integral(pair: ExtensionPair, t: int, n: int) -> bool:
    """t is a root of a monic degree-n polynomial with coefficients acting
    from the right: t^n + t^(n-1) c_1 + ... + t c_(n-1) + c_n = 0."""
    return _n_integral(pair, t, n, right=True)


def is_left_n_integral(pair: ExtensionPair, t: int, n: int) -> bool:
    return _n_integral(pair, t, n, right=False)


def _n_integral(pair: ExtensionPair, t: int, n: int, right: bool) -> bool:
    if n < 1:
        raise ValueError("degree must be >= 1")
    T = pair.ring
    ridx = pair.subring.indices().astype(np.int64)
    if n == 1:
        # t + c = 0 for c in R, i.e. -t in R
        return bool(pair.subring.mask[T.neg[t]])
    if n == 2:
        fn = _kernels.right_quadratic_witness if right else _kernels.left_quadratic_witness
        a, _ = fn(T.add, T.mul, ridx, T.zero, t)
        return a >= 0
    powers = [T.one]
    for _ in range(n):
        powers.append(int(T.mul[powers[-1], t]))  # powers[k] = t^k
    for coeffs in itertools.product(ridx, repeat=n):
        acc = powers[n]
        for k, c in enumerate(coeffs, start=1):
            term = T.mul[powers[n - k], c] if right else T.mul[c, powers[n - k]]
            acc = int(T.add[acc, term])
        if acc == T.zero:
            return True
    return False


def is_n_integrally_closed(pair: ExtensionPair, n: int) -> bool:
    """No element outside R is left or right n-integral over R."""
    outside = np.flatnonzero(~pair.subring.mask)
    for t in outside:
        if is_right_n_integral(pair, int(t), n) or is_left_n_integral(pair, int(t), n):
            return False
    return True


def is_square_closed(pair: ExtensionPair) -> bool:
    """x^2 in R implies x in R."""
    T = pair.ring
    outside = np.flatnonzero(~pair.subring.mask)
    squares = T.mul[outside, outside]
    return not pair.subring.mask[squares].any()
