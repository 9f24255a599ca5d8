"""Closure engines and lattice enumeration for subrings and one/two-sided ideals.

All enumeration is closure-driven: subrings by BFS over single-element
extensions, ideals by join-closure of principal ideals.  Full-lattice
enumeration is guarded by an order cap; targeted operations (closures,
idealizer, annihilator, core) are uncapped.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .rings import CapExceeded, RingTable, Subset, subring_as_ring

DEFAULT_LATTICE_CAP = 16


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


def _as_side(side) -> Side:
    if isinstance(side, Side):
        return side
    return Side(side)


# ---------------------------------------------------------------------------
# closures


def additive_closure(T: RingTable, gens: Subset) -> Subset:
    mask = _kernels.additive_close(T.add, T.neg, T.zero, gens.mask)
    return Subset(T, mask)


def subring_closure(T: RingTable, gens: Subset) -> Subset:
    """Smallest unital subring containing ``gens`` (1 is always adjoined)."""
    seed = gens.mask.copy()
    seed[T.one] = True
    return Subset(T, _kernels.subring_close(T.add, T.neg, T.mul, T.zero, seed))


def ideal_closure(T: RingTable, gens: Subset, side, scope: Optional[Subset] = None) -> Subset:
    """Smallest ideal of the given sidedness containing ``gens``.

    ``scope`` restricts the absorbing multipliers to a subring (default: all
    of T), which turns this into ideal closure inside that subring.
    """
    side = _as_side(side)
    scope_idx = (scope.indices() if scope is not None
                 else np.arange(T.order)).astype(np.int64)
    mask = _kernels.ideal_close(
        T.add, T.neg, T.mul, T.zero, gens.mask, scope_idx,
        side in (Side.LEFT, Side.TWO_SIDED),
        side in (Side.RIGHT, Side.TWO_SIDED),
    )
    return Subset(T, mask)


# ---------------------------------------------------------------------------
# structural predicates


def is_subring(T: RingTable, S: Subset) -> bool:
    """Unital subring test: contains 0 and 1, closed under +, -, *."""
    if not (S.mask[T.zero] and S.mask[T.one]):
        return False
    idx = S.indices()
    if not S.mask[T.neg[idx]].all():
        return False
    return bool(S.mask[T.add[np.ix_(idx, idx)]].all()
                and S.mask[T.mul[np.ix_(idx, idx)]].all())


def is_additive_subgroup(T: RingTable, S: Subset) -> bool:
    if not S.mask[T.zero]:
        return False
    idx = S.indices()
    return bool(S.mask[T.add[np.ix_(idx, idx)]].all())


def is_ideal(T: RingTable, I: Subset, side, scope: Optional[Subset] = None) -> bool:
    """Ideal test of the given sidedness, inside ``scope`` (default all of T)."""
    side = _as_side(side)
    if not is_additive_subgroup(T, I):
        return False
    idx = I.indices()
    scope_idx = scope.indices() if scope is not None else np.arange(T.order)
    if scope is not None and (I.mask & ~scope.mask).any():
        return False
    ok = True
    if side in (Side.LEFT, Side.TWO_SIDED):
        ok = ok and bool(I.mask[T.mul[np.ix_(scope_idx, idx)]].all())
    if side in (Side.RIGHT, Side.TWO_SIDED):
        ok = ok and bool(I.mask[T.mul[np.ix_(idx, scope_idx)]].all())
    return ok


# ---------------------------------------------------------------------------
# lattice enumeration


def enumerate_subrings(T: RingTable, cap: int = DEFAULT_LATTICE_CAP) -> set[Subset]:
    """All unital subrings, by BFS over one-element extensions of known subrings."""
    if T.order > cap:
        raise CapExceeded(f"subring enumeration capped at order {cap}, got {T.order}")
    prime = subring_closure(T, Subset.empty(T))
    found = {prime.key(): prime}
    frontier = [prime]
    while frontier:
        nxt = []
        for S in frontier:
            if S.mask.all():
                continue
            for t in np.flatnonzero(~S.mask):
                seed = S.mask.copy()
                seed[t] = True
                closed = subring_closure(T, Subset(T, seed))
                if closed.key() not in found:
                    found[closed.key()] = closed
                    nxt.append(closed)
        frontier = nxt
    return set(found.values())


def enumerate_ideals(T: RingTable, side, cap: int = DEFAULT_LATTICE_CAP) -> set[Subset]:
    """All ideals of the given sidedness: join-closure of principal ideals.

    Every ideal is the join of the principal ideals of its members, and the
    join of two same-side ideals is the additive closure of their union, so
    the fixpoint below reaches the full lattice.
    """
    side = _as_side(side)
    if T.order > cap:
        raise CapExceeded(f"ideal enumeration capped at order {cap}, got {T.order}")
    zero = Subset.from_indices(T, [T.zero])
    found = {zero.key(): zero}
    principals = []
    for x in range(T.order):
        p = ideal_closure(T, Subset.from_indices(T, [x]), side)
        if p.key() not in found:
            found[p.key()] = p
        principals.append(p)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for I in frontier:
            for p in principals:
                if p <= I:
                    continue
                join = additive_closure(T, I | p)
                if join.key() not in found:
                    found[join.key()] = join
                    nxt.append(join)
        frontier = nxt
    return set(found.values())


def _maximal_members(candidates: Iterable[Subset]) -> set[Subset]:
    cands = list(candidates)
    out = set()
    for S in cands:
        if not any(S < other for other in cands):
            out.add(S)
    return out


def is_maximal_subring(T: RingTable, R: Subset) -> bool:
    """True iff adjoining any outside element saturates to the whole ring."""
    if not is_subring(T, R):
        raise ValueError("not a unital subring")
    if R.mask.all():
        raise ValueError("the whole ring is not a proper subring")
    for t in np.flatnonzero(~R.mask):
        grown = Subset.from_indices(T, list(R.indices()) + [int(t)])
        if not subring_closure(T, grown).mask.all():
            return False
    return True


def maximal_subrings(T: RingTable, cap: int = DEFAULT_LATTICE_CAP) -> set[Subset]:
    proper = [S for S in enumerate_subrings(T, cap=cap) if not S.mask.all()]
    return _maximal_members(proper)


def maximal_ideals(T: RingTable, side, cap: int = DEFAULT_LATTICE_CAP) -> set[Subset]:
    side = _as_side(side)
    proper = [I for I in enumerate_ideals(T, side, cap=cap) if not I.mask.all()]
    return _maximal_members(proper)


def maximal_one_sided_above(T: RingTable, seed: Subset, side) -> Subset:
    """Grow a proper one-sided ideal to a maximal one (greedy, canonical order).

    Deterministic targeted construction; avoids full lattice enumeration.
    """
    side = _as_side(side)
    if not is_ideal(T, seed, side):
        raise ValueError("seed is not an ideal of the requested sidedness")
    if seed.mask.all():
        raise ValueError("seed is the whole ring")
    cur = seed
    changed = True
    while changed:
        changed = False
        for x in np.flatnonzero(~cur.mask):
            grown = ideal_closure(T, Subset.from_indices(T, list(cur.indices()) + [int(x)]), side)
            if not grown.mask.all():
                cur = grown
                changed = True
                break
    return cur


# ---------------------------------------------------------------------------
# idealizer, annihilators, core, radical


def idealizer(T: RingTable, A: Subset, side_of_A) -> Subset:
    """Largest subring of T in which the one-sided ideal A is two-sided.

    For a right ideal A this is {r : rA <= A}; for a left ideal {r : Ar <= A}.
    """
    side = _as_side(side_of_A)
    if side is Side.TWO_SIDED:
        if not is_ideal(T, A, Side.TWO_SIDED):
            raise ValueError("not a two-sided ideal")
        return Subset.full(T)
    if not is_ideal(T, A, side):
        raise ValueError(f"not a {side.value} ideal")
    idx = A.indices()
    if idx.size == 0:
        return Subset.full(T)
    if side is Side.RIGHT:
        mask = A.mask[T.mul[:, idx]].all(axis=1)
    else:
        mask = A.mask[T.mul[idx, :]].all(axis=0)
    return Subset(T, mask)


def annihilator(T: RingTable, scope: Subset, S: Subset, side) -> Subset:
    """Annihilator of S inside ``scope``: left {a : aS=0}, right {a : Sa=0}."""
    side = _as_side(side)
    sidx = S.indices()
    mask = scope.mask.copy()
    if sidx.size:
        if side in (Side.LEFT, Side.TWO_SIDED):
            mask &= (T.mul[:, sidx] == T.zero).all(axis=1)
        if side in (Side.RIGHT, Side.TWO_SIDED):
            mask &= (T.mul[sidx, :] == T.zero).all(axis=0)
    return Subset(T, mask)


def core_of(T: RingTable, M: Subset, side_of_M, scope: Optional[Subset] = None) -> Subset:
    """Largest two-sided ideal of ``scope`` contained in the one-sided ideal M.

    For a right ideal M of S this is {a in S : Sa <= M}; mirrored for left.
    """
    side = _as_side(side_of_M)
    scope_ = scope if scope is not None else Subset.full(T)
    if not is_ideal(T, M, side, scope=scope_):
        raise ValueError(f"not a {side.value} ideal of the scope")
    if side is Side.TWO_SIDED:
        return M
    sidx = scope_.indices()
    within = np.zeros(T.order, dtype=np.bool_)
    if side is Side.RIGHT:
        # a qualifies iff s*a in M for every s in scope
        within[sidx] = M.mask[T.mul[np.ix_(sidx, sidx)]].all(axis=0)
    else:
        # a qualifies iff a*s in M for every s in scope
        within[sidx] = M.mask[T.mul[np.ix_(sidx, sidx)]].all(axis=1)
    return Subset(T, within)


def jacobson_radical(T: RingTable, cap: int = DEFAULT_LATTICE_CAP) -> Subset:
    """Intersection of the maximal left ideals (checked against the right side)."""
    left = maximal_ideals(T, Side.LEFT, cap=cap)
    mask = np.ones(T.order, dtype=np.bool_)
    for M in left:
        mask &= M.mask
    right = maximal_ideals(T, Side.RIGHT, cap=cap)
    rmask = np.ones(T.order, dtype=np.bool_)
    for M in right:
        rmask &= M.mask
    if not np.array_equal(mask, rmask):
        raise AssertionError("left and right Jacobson radicals disagree")
    return Subset(T, mask)


def is_quasi_duo(T: RingTable, side, cap: int = DEFAULT_LATTICE_CAP) -> bool:
    """Every maximal one-sided ideal of the given side is two-sided."""
    side = _as_side(side)
    if side is Side.TWO_SIDED:
        raise ValueError("quasi-duo is a one-sided notion")
    return all(is_ideal(T, M, Side.TWO_SIDED)
               for M in maximal_ideals(T, side, cap=cap))


def is_duo(T: RingTable, side) -> bool:
    """Every one-sided ideal of the given side is two-sided.

    Principal ideals suffice: an arbitrary one-sided ideal is a sum of
    principal ones, and a sum of two-sided ideals is two-sided.
    """
    side = _as_side(side)
    if side is Side.TWO_SIDED:
        raise ValueError("duo is a one-sided notion")
    for x in range(T.order):
        p = ideal_closure(T, Subset.from_indices(T, [x]), side)
        if not is_ideal(T, p, Side.TWO_SIDED):
            return False
    return True
