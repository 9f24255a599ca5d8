"""Check registry, corpus construction, suite runner and report emission.

Each check binds a finitely-checkable statement about a maximal-subring pair
to an executable predicate.  A check either passes, fails with the first
counterexample in canonical element order, or is vacuous because the pair
does not satisfy the check's hypothesis (including enumeration-cap
feasibility, so hypothesis-starved corpora are visible in the report rather
than silently skipped).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .dsl import parse_ring_expr, parse_ring_table_text
from .ideals import (
    ExtensionPair,
    conductor_masks,
    cp_right_violation,
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
    make_extension_pair,
    minimal_primes_over,
    not_completely_prime_witness,
    not_prime_witness,
    not_semiprime_witness,
    prime_ideals_over,
    prime_radical,
    sandwich_pairs,
)
from .modules import (
    endomorphism_ring,
    is_left_primitive_ideal,
    is_right_primitive_ideal,
    is_semisimple_isotypic,
    maximal_submodules,
    module_annihilator,
    phi_image_of_subring,
    phi_isomorphism_check,
    psi_embedding_check,
    quotient_module,
    torsion_witness,
)
from .rings import (
    RingTable,
    Subset,
    characteristic,
    centralizer,
    center,
    find_isomorphism,
    is_commutative,
    is_division_ring,
    matrix_entry_digits,
    scope_quotient,
    subring_as_ring,
    quotient_ring,
    index_digits,
)
from .substructures import (
    Side,
    additive_closure,
    enumerate_ideals,
    ideal_closure,
    idealizer,
    is_duo,
    is_ideal,
    is_maximal_subring,
    is_quasi_duo,
    jacobson_radical,
    maximal_ideals,
    maximal_one_sided_above,
    maximal_subrings,
    subring_closure,
    annihilator,
)


@dataclass(frozen=True)
class Caps:
    """Order caps guarding the exponential operations; configuration, not logic."""

    construction: int = 128
    subring_lattice: int = 16
    ideal_lattice: int = 32
    iso: int = 16
    endo_brute: int = 8


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    pair_label: str
    verdict: str                 # "pass" | "fail" | "vacuous"
    witness: tuple[str, ...]     # element names of the first counterexample
    micros: int
    note: str = ""


@dataclass(frozen=True)
class Check:
    check_id: str
    statement: str
    applies: Callable[["PairContext"], Optional[str]]   # vacuous reason or None
    body: Callable[["PairContext"], tuple[bool, tuple[int, ...], str]]


class PairContext:
    """Caches the expensive per-pair artifacts shared by many checks."""

    def __init__(self, pair: ExtensionPair, caps: Caps = DEFAULT_CAPS):
        self.pair = pair
        self.caps = caps
        self.T = pair.ring
        self.R = pair.subring
        self.cond = pair.cond
        self.cl = pair.cond_l
        self.cr = pair.cond_r

    # --- basic masks and flags -------------------------------------------

    @cached_property
    def zero_subset(self) -> Subset:
        return Subset.from_indices(self.T, [self.T.zero])

    @cached_property
    def comparable(self) -> bool:
        return self.cl <= self.cr or self.cr <= self.cl

    @cached_property
    def r_ring(self):
        ring, embed = subring_as_ring(self.T, self.R)
        return ring, embed

    def local(self, S: Subset) -> Subset:
        ring, embed = self.r_ring
        return Subset(ring, S.mask[embed])

    def lattice_ok_R(self) -> bool:
        return self.R.size <= self.caps.ideal_lattice

    def lattice_ok_T(self) -> bool:
        return self.T.order <= self.caps.ideal_lattice

    # --- spans and products ----------------------------------------------

    def product_set(self, A: Subset, B: Subset) -> np.ndarray:
        """Set of pairwise products a*b (A, B subsets of T)."""
        return np.unique(self.T.mul[np.ix_(A.indices(), B.indices())])

    def span_with_R(self, extra: np.ndarray) -> Subset:
        mask = self.R.mask.copy()
        mask[extra] = True
        return additive_closure(self.T, Subset(self.T, mask))

    def scalar_multiples(self, p: int) -> np.ndarray:
        """Vector of p*x for every element x."""
        out = np.full(self.T.order, self.T.zero, dtype=np.int64)
        for _ in range(p):
            out = self.T.add[out, np.arange(self.T.order)]
        return out

    # --- maximality of ideals (targeted, no lattice) ----------------------

    def is_max_two_sided_in_R(self, I: Subset) -> bool:
        if not (I < self.R):
            return False
        for x in np.flatnonzero(self.R.mask & ~I.mask):
            grown = ideal_closure(self.T, Subset.from_indices(self.T, list(I.indices()) + [int(x)]),
                                  Side.TWO_SIDED, scope=self.R)
            if not np.array_equal(grown.mask, self.R.mask):
                return False
        return True

    def is_max_two_sided_in_T(self, I: Subset) -> bool:
        if I.mask.all():
            return False
        for x in np.flatnonzero(~I.mask):
            grown = ideal_closure(self.T, Subset.from_indices(self.T, list(I.indices()) + [int(x)]),
                                  Side.TWO_SIDED)
            if not grown.mask.all():
                return False
        return True

    def is_max_one_sided_in_T(self, I: Subset, side: Side) -> bool:
        if I.mask.all():
            return False
        for x in np.flatnonzero(~I.mask):
            grown = ideal_closure(self.T, Subset.from_indices(self.T, list(I.indices()) + [int(x)]), side)
            if not grown.mask.all():
                return False
        return True

    # --- quotients and characteristics ------------------------------------

    @cached_property
    def q_R_mod_cl(self) -> RingTable:
        return scope_quotient(self.T, self.R, self.cl)

    @cached_property
    def q_R_mod_cr(self) -> RingTable:
        return scope_quotient(self.T, self.R, self.cr)

    @cached_property
    def q_R_mod_cond(self) -> RingTable:
        return scope_quotient(self.T, self.R, self.cond)

    # --- modules ------------------------------------------------------------

    @cached_property
    def mod_TR_right(self):
        return quotient_module(self.T, self.R, self.R, Side.RIGHT)

    @cached_property
    def mod_TR_left(self):
        return quotient_module(self.T, self.R, self.R, Side.LEFT)

    # --- lattices in R -------------------------------------------------------

    @cached_property
    def min_primes_cond(self) -> list[Subset]:
        return minimal_primes_over(self.T, self.cond, scope=self.R, cap=self.caps.ideal_lattice)

    @cached_property
    def primes_R(self) -> list[Subset]:
        return prime_ideals_over(self.T, self.zero_subset, scope=self.R, cap=self.caps.ideal_lattice)

    @cached_property
    def min_primes_zero_R(self) -> list[Subset]:
        return minimal_primes_over(self.T, self.zero_subset, scope=self.R, cap=self.caps.ideal_lattice)

    @cached_property
    def jacobson_R(self) -> Subset:
        ring, embed = self.r_ring
        local = jacobson_radical(ring, cap=self.caps.ideal_lattice)
        mask = np.zeros(self.T.order, dtype=np.bool_)
        mask[embed[local.indices()]] = True
        return Subset(self.T, mask)

    @cached_property
    def nil_star_R(self) -> Subset:
        return prime_radical(self.T, self.zero_subset, scope=self.R, cap=self.caps.ideal_lattice)

    @cached_property
    def sandwich_in_cond(self) -> np.ndarray:
        return sandwich_pairs(self.T, self.cond)

    @cached_property
    def integrally_closed_2(self) -> bool:
        return is_n_integrally_closed(self.pair, 2)

    @cached_property
    def square_closed(self) -> bool:
        return is_square_closed(self.pair)

    @cached_property
    def centralizer_R(self) -> Subset:
        return centralizer(self.T, self.R)


# ---------------------------------------------------------------------------
# check bodies.  Shorthand: each returns (ok, witness_indices, note).

_OK = (True, (), "")


def _fail(witness: Iterable[int], note: str) -> tuple[bool, tuple[int, ...], str]:
    return (False, tuple(int(w) for w in witness), note)


def _always(ctx: PairContext) -> Optional[str]:
    return None


def _needs_R_lattice(ctx: PairContext) -> Optional[str]:
    if not ctx.lattice_ok_R():
        return f"ideal-lattice enumeration beyond cap ({ctx.R.size} > {ctx.caps.ideal_lattice})"
    return None


def _c01(ctx: PairContext):
    T, C, Cl, Cr = ctx.T, ctx.cond, ctx.cl, ctx.cr
    for x in Cl.indices():
        for y in Cr.indices():
            if not C.mask[T.mul[x, y]]:
                return _fail((x, y), "product of one-sided conductors left the two-sided conductor")
    if not (C <= (Cl & Cr)):
        bad = np.flatnonzero(C.mask & ~(Cl.mask & Cr.mask))[0]
        return _fail((bad,), "two-sided conductor not inside the intersection")
    if additive_closure(T, Cl | Cr).mask.all():
        return _fail((), "sum of one-sided conductors is the whole ring")
    return _OK


def _c02(ctx: PairContext):
    for name, P in (("left", ctx.cl), ("right", ctx.cr)):
        w = not_prime_witness(ctx.T, P, scope=ctx.R)
        if w is not None:
            return _fail(w, f"{name} conductor not prime in the subring")
    return _OK


def _c03(ctx: PairContext):
    rad = prime_radical(ctx.T, ctx.cond, scope=ctx.R, cap=ctx.caps.ideal_lattice)
    if rad != (ctx.cl & ctx.cr):
        return _fail((), "prime radical of cond differs from cond_l & cond_r")
    return _OK


def _c04(ctx: PairContext):
    p = is_prime_ideal(ctx.T, ctx.cond, scope=ctx.R)
    e1 = (ctx.cond == ctx.cl) or (ctx.cond == ctx.cr)
    e2 = ctx.comparable
    if not (p == e1 == e2):
        return _fail((), f"equivalence broken: prime={p}, equals-a-side={e1}, comparable={e2}")
    return _OK


def _c05(ctx: PairContext):
    mp = ctx.min_primes_cond
    if len(mp) > 2:
        return _fail((), f"|Min_R(cond)| = {len(mp)} > 2")
    if (len(mp) == 1) != ctx.comparable:
        return _fail((), f"|Min_R(cond)| = {len(mp)} but comparable={ctx.comparable}")
    if ctx.comparable:
        return _OK
    if set(mp) != {ctx.cl, ctx.cr}:
        return _fail((), "Min_R(cond) is not {cond_l, cond_r}")
    if is_prime_ideal(ctx.T, ctx.cond):
        return (True, (), "cond is prime in the big ring")
    # second branch needs the full prime lattice of T and isomorphism search
    if not ctx.lattice_ok_T():
        return ("vacuous", (), f"needs the prime lattice of T (order {ctx.T.order} beyond cap)")
    mt = minimal_primes_over(ctx.T, ctx.cond, cap=ctx.caps.ideal_lattice)
    found_l = found_r = False
    for Q in mt:
        meet = Subset(ctx.T, Q.mask & ctx.R.mask)
        for target, flag in ((ctx.cl, "l"), (ctx.cr, "r")):
            if meet != target:
                continue
            QT = quotient_ring(ctx.T, Q)[0]
            RQ = scope_quotient(ctx.T, ctx.R, target)
            if QT.order > ctx.caps.iso or RQ.order > ctx.caps.iso:
                return ("vacuous", (), "quotient isomorphism search beyond cap")
            if find_isomorphism(RQ, QT, iso_cap=ctx.caps.iso) is not None:
                if flag == "l":
                    found_l = True
                else:
                    found_r = True
    if not (found_l and found_r):
        return _fail((), "missing minimal primes of T contracting to the one-sided conductors")
    return _OK


def _c06(ctx: PairContext):
    sp = is_semiprime_ideal(ctx.T, ctx.cond, scope=ctx.R)
    eq = ctx.cond == (ctx.cl & ctx.cr)
    if sp != eq:
        return _fail((), f"semiprime={sp} but cond==cond_l&cond_r is {eq}")
    return _OK


def _c07(ctx: PairContext):
    T = ctx.T
    full = Subset.full(T)
    combos = (
        ("r.ann_T of T/cond_r", ctx.cr, full, Side.RIGHT),
        ("l.ann_T of T/cond_l", ctx.cl, full, Side.LEFT),
        ("l.ann_R of T/cond_l", ctx.cl, ctx.R, Side.LEFT),
        ("r.ann_R of T/cond_r", ctx.cr, ctx.R, Side.RIGHT),
    )
    for name, sub, actor, side in combos:
        M = quotient_module(T, sub, actor, side)
        if module_annihilator(M) != ctx.cond:
            return _fail((), f"{name} differs from the two-sided conductor")
    return _OK


def _c08_applies(ctx: PairContext) -> Optional[str]:
    if not ctx.is_max_two_sided_in_R(ctx.cond):
        return "cond is not a maximal ideal of the subring"
    return None


def _c08(ctx: PairContext):
    if ctx.cond == ctx.cl == ctx.cr:
        return _OK
    return _fail((), "maximal cond must equal both one-sided conductors")


def _c09(ctx: PairContext):
    meet = ctx.cl & ctx.cr
    for name, I in (("Jacobson radical", ctx.jacobson_R), ("prime radical of 0", ctx.nil_star_R)):
        ring, embed = ctx.r_ring
        nil, _ = is_nilpotent_ideal(ring, ctx.local(I))
        if not nil:
            return _fail((), f"{name} of a finite ring must be nilpotent")
        if not (I <= meet):
            bad = np.flatnonzero(I.mask & ~meet.mask)[0]
            return _fail((bad,), f"{name} not inside cond_l & cond_r")
        prods = ctx.product_set(I, I)
        if not ctx.cond.mask[prods].all():
            bad = prods[~ctx.cond.mask[prods]][0]
            return _fail((bad,), f"square of the {name} not inside cond")
    return _OK


def _c10(ctx: PairContext):
    if not maximal_submodules(ctx.mod_TR_right):
        return _fail((), "finite nonzero module without maximal submodule")
    if not is_right_primitive_ideal(ctx.T, ctx.cl, scope=ctx.R, cap=ctx.caps.ideal_lattice):
        return _fail((), "cond_l is not a right primitive ideal of the subring")
    return _OK


def _c11_applies(ctx: PairContext) -> Optional[str]:
    if not is_commutative(ctx.T):
        return "big ring is not commutative"
    return _needs_R_lattice(ctx)


def _c11(ctx: PairContext):
    b2 = ctx.is_max_two_sided_in_R(ctx.cond)
    b3 = bool(maximal_submodules(ctx.mod_TR_right))
    # semisimple over R/cond: the radical of R/cond must kill T/R
    ring, embed = ctx.r_ring
    Q, proj = _scope_quotient_with_proj(ctx, ctx.cond)
    JQ = jacobson_radical(Q, cap=ctx.caps.ideal_lattice)
    M = ctx.mod_TR_right
    b4 = True
    for local_r in range(ring.order):
        if JQ.mask[proj[local_r]]:
            k = M.actor_pos(int(embed[local_r]))
            if not (M.action[:, k] == M.zero_coset).all():
                b4 = False
                break
    if not (b2 == b3 == b4):
        return _fail((), f"equivalence broken: cond-maximal={b2}, has-max-submodule={b3}, semisimple={b4}")
    return _OK


def _scope_quotient_with_proj(ctx: PairContext, ideal: Subset):
    ring, embed = ctx.r_ring
    local = Subset(ring, ideal.mask[embed])
    return quotient_ring(ring, local)


def _c12(ctx: PairContext):
    for name, I in (("cond_l", ctx.cl), ("cond_r", ctx.cr)):
        if not ctx.is_max_two_sided_in_R(I):
            return _fail((), f"{name} is not a maximal ideal of the subring")
    for M in (ctx.mod_TR_right, ctx.mod_TR_left):
        ss, iso = is_semisimple_isotypic(M, cap=ctx.caps.ideal_lattice)
        if not (ss and iso):
            return _fail((), "T/R is not isotypic semisimple over the subring")
    ring, _ = ctx.r_ring
    if len(maximal_ideals(ring, Side.RIGHT, cap=ctx.caps.ideal_lattice)) == 1:
        if not (ctx.cond == ctx.cl == ctx.cr):
            return _fail((), "local subring must have all three conductors equal")
    return _OK


def _c13(ctx: PairContext):
    T, P = ctx.T, ctx.cr
    cp_right_T = is_completely_prime_right_ideal(T, P)
    cp_in_R = is_completely_prime_ideal(T, P, scope=ctx.R)
    torsion = torsion_witness(ctx.pair)
    if cp_right_T:
        if not cp_in_R:
            w = not_completely_prime_witness(T, P, scope=ctx.R)
            return _fail(w or (), "forward: subring quotient by cond_r is not a domain")
        if torsion is not None:
            return _fail(torsion, "forward: T/cond_r has torsion over the subring quotient")
    if cp_in_R and torsion is None:
        if is_ideal(T, P, Side.TWO_SIDED):
            if ctx.cond != P:
                return _fail((), "converse: two-sided cond_r must equal cond")
        else:
            if not cp_right_T:
                w = cp_right_violation(T, P)
                return _fail(w or (), "converse: cond_r not completely prime as a right ideal")
            if idealizer(T, P, Side.RIGHT) != ctx.R:
                return _fail((), "converse: subring is not the idealizer of cond_r")
    if not cp_right_T and not (cp_in_R and torsion is None):
        return ("vacuous", (), "neither direction's hypothesis holds")
    return _OK


def _c14_applies(ctx: PairContext) -> Optional[str]:
    if not ctx.is_max_one_sided_in_T(ctx.cr, Side.RIGHT):
        return "cond_r is not a maximal right ideal of the big ring"
    return None


def _c14(ctx: PairContext):
    w = cp_right_violation(ctx.T, ctx.cr)
    if w is not None:
        return _fail(w, "maximal right ideal failed the completely-prime-right test")
    wcp = not_completely_prime_witness(ctx.T, ctx.cr, scope=ctx.R)
    if wcp is not None:
        return _fail(wcp, "subring quotient by cond_r is not a domain")
    tw = torsion_witness(ctx.pair)
    if tw is not None:
        return _fail(tw, "T/cond_r is not torsionfree")
    return _OK


def _c15_applies(ctx: PairContext) -> Optional[str]:
    if not is_completely_prime_right_ideal(ctx.T, ctx.cr):
        return "cond_r is not a completely prime right ideal of the big ring"
    return None


def _c15(ctx: PairContext):
    if is_ideal(ctx.T, ctx.cr, Side.TWO_SIDED):
        Q = quotient_ring(ctx.T, ctx.cr)[0]
        if not is_division_ring(Q):
            return _fail((), "T/cond_r is not a division ring")
    else:
        Q = ctx.q_R_mod_cr
        if not is_division_ring(Q):
            return _fail((), "R/cond_r is not a division ring")
    return _OK


def _c16_applies(ctx: PairContext) -> Optional[str]:
    if not is_duo(ctx.T, Side.LEFT):
        return "big ring is not left duo"
    return None


def _c16(ctx: PairContext):
    if ctx.cond != ctx.cl:
        return _fail((), "left duo: cond must equal cond_l")
    w = not_completely_prime_witness(ctx.T, ctx.cond, scope=ctx.R)
    if w is not None:
        return _fail(w, "cond is not completely prime in the subring")
    if is_duo(ctx.T, Side.RIGHT) and not (ctx.cond == ctx.cl == ctx.cr):
        return _fail((), "duo: all three conductors must coincide")
    return _OK


def _c17(ctx: PairContext):
    ct = ctx.centralizer_R
    if ct <= ctx.R:
        if not (center(ctx.T) <= ctx.R):
            return _fail((), "centralizer inside subring but center escapes it")
        return _OK
    if not (ctx.cond == ctx.cl == ctx.cr):
        return _fail((), "escaping centralizer forces all conductors equal")
    alpha = int(np.flatnonzero(ct.mask & ~ctx.R.mask)[0])
    grown = subring_closure(ctx.T, Subset.from_indices(ctx.T, list(ctx.R.indices()) + [alpha]))
    if not grown.mask.all():
        return _fail((alpha,), "central element outside subring fails to generate the big ring")
    return _OK


def _c18(ctx: PairContext):
    C, Cl, Cr, R, T = ctx.cond, ctx.cl, ctx.cr, ctx.R, ctx.T
    idz_r = idealizer(T, Cr, Side.RIGHT)
    idz_l = idealizer(T, Cl, Side.LEFT)
    cases = (
        (C == Cl) and (Cl < Cr) and (idz_r == R),
        (C == Cr) and (Cr < Cl) and (idz_l == R),
        (C < Cl) and (C < Cr) and (idz_l == R) and (idz_r == R),
        C == Cl == Cr,
    )
    hits = [i + 1 for i, c in enumerate(cases) if c]
    if len(hits) != 1:
        return _fail((), f"expected exactly one idealizer case, got {hits}")
    if not is_prime_ideal(T, C, scope=R) and hits != [3]:
        return _fail((), f"cond not prime in subring but case {hits[0]} held instead of 3")
    return _OK


def _c19(ctx: PairContext):
    verdict = phi_isomorphism_check(ctx.T, ctx.cr, Side.RIGHT)
    if not verdict.ok:
        return _fail(verdict.witness, f"idealizer-quotient map: {verdict.detail}")
    idz = idealizer(ctx.T, ctx.cr, Side.RIGHT)
    if idz == ctx.R:
        return (True, (), "subring is the idealizer; its quotient is the full endomorphism ring")
    # cond_r is two-sided: the subring image must be maximal in the endo ring
    M = quotient_module(ctx.T, ctx.cr, Subset.full(ctx.T), Side.RIGHT)
    E = endomorphism_ring(M)
    image = phi_image_of_subring(ctx.T, ctx.cr, ctx.R, E, Side.RIGHT)
    if image.mask.all() or not is_maximal_subring(E.ring, image):
        return _fail((), "image of the subring is not maximal in the endomorphism ring")
    return (True, (), "two-sided case: subring image is maximal in the endomorphism ring")


def _c20(ctx: PairContext):
    verdict = psi_embedding_check(ctx.pair)
    if not verdict.ok:
        return _fail(verdict.witness, verdict.detail)
    return _OK


def _c21(ctx: PairContext):
    M = ctx.mod_TR_right
    exponent = 1
    for c in range(M.size):
        k, acc = 1, c
        while acc != M.zero_coset:
            acc = int(M.coset_add[acc, c])
            k += 1
        exponent = exponent * k // np.gcd(exponent, k)
    chars = {characteristic(ctx.q_R_mod_cl), characteristic(ctx.q_R_mod_cr),
             characteristic(ctx.q_R_mod_cond)}
    if chars != {exponent}:
        return _fail((), f"quotient characteristics {sorted(chars)} != additive exponent {exponent}")
    p = exponent
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        return _fail((), f"common characteristic {p} is not prime")
    return _OK


def _c22_applies(ctx: PairContext) -> Optional[str]:
    reason = _needs_R_lattice(ctx)
    if reason:
        return reason
    chars = [characteristic(scope_quotient(ctx.T, ctx.R, P)) for P in ctx.primes_R]
    if len(set(chars)) != len(chars):
        return "characteristic map on the subring's prime spectrum is not injective"
    return None


def _c22(ctx: PairContext):
    if not (ctx.cl == ctx.cr and ctx.cond == ctx.cl):
        return _fail((), "injective characteristic map forces all conductors equal")
    if not is_prime_ideal(ctx.T, ctx.cond, scope=ctx.R):
        return _fail((), "cond must be prime in the subring")
    if not is_ideal(ctx.T, ctx.cond, Side.TWO_SIDED):
        return _fail((), "cond must be an ideal of the big ring")
    return _OK


def _c23_applies(ctx: PairContext) -> Optional[str]:
    ch = characteristic(ctx.T)
    if ch >= 2 and all(ch % d for d in range(2, ch)):
        return f"characteristic {ch} is prime"
    return None


def _c23(ctx: PairContext):
    ch = characteristic(ctx.T)
    primes = [p for p in range(2, ch + 1) if ch % p == 0 and all(p % d for d in range(2, p))]
    for p in primes:
        multiples = np.unique(ctx.scalar_multiples(p))
        nonzero = multiples.size > 1 or multiples[0] != ctx.T.zero
        if nonzero and ctx.cond.mask[multiples].all():
            return _OK
    return _fail((), "no nonzero prime multiple of the ring lands inside cond")


def _c24_applies(ctx: PairContext) -> Optional[str]:
    lann = annihilator(ctx.T, Subset.full(ctx.T), ctx.cond, Side.LEFT)
    rann = annihilator(ctx.T, Subset.full(ctx.T), ctx.cond, Side.RIGHT)
    if not additive_closure(ctx.T, lann | rann).mask.all():
        return "left and right annihilators of cond do not sum to the big ring"
    return None


def _c24(ctx: PairContext):
    prods = ctx.product_set(ctx.cond, ctx.cond)
    if not np.array_equal(prods, np.array([ctx.T.zero])):
        bad = prods[prods != ctx.T.zero][0]
        return _fail((bad,), "cond squared is nonzero")
    return _OK


def _c25_applies(ctx: PairContext) -> Optional[str]:
    reason = _needs_R_lattice(ctx)
    if reason:
        return reason
    h1 = not ctx.comparable
    h2 = bool((ctx.product_set(ctx.cl, ctx.cr) == ctx.T.zero).all())
    h3 = (ctx.cl & ctx.cr).size == 1 and ctx.cl.size > 1 and ctx.cr.size > 1
    if not (h1 or h2 or h3):
        return "no annihilator-hypothesis applies (comparable, nonzero product, nonzero meet)"
    return None


def _c25(ctx: PairContext):
    T, R, Cl, Cr = ctx.T, ctx.R, ctx.cl, ctx.cr
    h1 = not ctx.comparable
    h2 = bool((ctx.product_set(Cl, Cr) == T.zero).all())
    h3 = (Cl & Cr).size == 1 and Cl.size > 1 and Cr.size > 1
    l_ann = lambda S: annihilator(T, R, S, Side.LEFT)
    r_ann = lambda S: annihilator(T, R, S, Side.RIGHT)
    if h1:
        if not (l_ann(Cl) <= Cr and r_ann(Cl) <= Cr):
            return _fail((), "annihilators of cond_l escape cond_r")
        if not (l_ann(Cr) <= Cl and r_ann(Cr) <= Cl):
            return _fail((), "annihilators of cond_r escape cond_l")
    if h2:
        minp = set(ctx.min_primes_zero_R)
        if not minp <= {Cl, Cr}:
            return _fail((), "a minimal prime of the subring is not a conductor")
        if h1:
            if Cl != l_ann(Cr) or Cr != r_ann(Cl):
                return _fail((), "conductors are not the expected annihilators")
            if minp != {Cl, Cr}:
                return _fail((), "conductors are not exactly the minimal primes")
    if h3:
        if not (Cl == l_ann(Cr) == r_ann(Cr) and Cr == r_ann(Cl) == l_ann(Cl)):
            return _fail((), "zero-meet case: conductor/annihilator identities fail")
        if set(ctx.min_primes_zero_R) != {Cl, Cr}:
            return _fail((), "zero-meet case: minimal primes are not the conductors")
        if is_prime_ideal(T, ctx.zero_subset):
            return _fail((), "zero-meet case: the big ring must not be prime")
        ridx = R.indices()
        squares = T.mul[ridx, ridx]
        reduced = not ((squares == T.zero) & (ridx != T.zero)).any()
        if reduced:
            for P in (Cl, Cr):
                w = not_completely_prime_witness(T, P, scope=R)
                if w is not None:
                    return _fail(w, "reduced case: conductor not completely prime")
    return _OK


def _c26_applies(ctx: PairContext) -> Optional[str]:
    reason = _needs_R_lattice(ctx)
    if reason:
        return reason
    if len(ctx.min_primes_zero_R) < 3:
        return f"subring has only {len(ctx.min_primes_zero_R)} minimal primes"
    return None


def _c26(ctx: PairContext):
    if ctx.cond.size <= 1:
        return _fail((), "cond is zero despite three minimal primes")
    prods = ctx.product_set(ctx.cl, ctx.cr)
    if (prods == ctx.T.zero).all():
        return _fail((), "product of one-sided conductors is zero")
    return _OK


def _2int_conclusions(ctx: PairContext, P: Subset, mirror: bool):
    """Shared element-wise body for the sandwich theorems on cond_r / cond_l."""
    T, R = ctx.T, ctx.R
    qual = sandwich_pairs(T, P)
    ridx = R.indices()
    for a in range(T.order):
        if P.mask[a]:
            continue
        for b in range(T.order):
            if P.mask[b] or not qual[a, b]:
                continue
            if not is_right_n_integral(ctx.pair, a, 2):
                return _fail((a, b), "first element not right quadratic-integral")
            if not is_left_n_integral(ctx.pair, b, 2):
                return _fail((a, b), "second element not left quadratic-integral")
            for t, outside in ((a, not R.mask[a]), (b, not R.mask[b])):
                if outside:
                    rar = T.mul[np.ix_(T.mul[ridx, t], ridx)].ravel()
                    if not ctx.span_with_R(rar).mask.all():
                        return _fail((t,), "adjoining the element does not span the big ring")
            a_in, b_in = bool(R.mask[a]), bool(R.mask[b])
            if not mirror:
                if not b_in and a_in:
                    return _fail((a, b), "second outside forces first outside")
                if not a_in and b_in and not ctx.cl.mask[b]:
                    return _fail((a, b), "first outside: second must be outside or in cond_l")
            else:
                if not a_in and b_in:
                    return _fail((a, b), "first outside forces second outside")
                if not b_in and a_in and not ctx.cr.mask[a]:
                    return _fail((a, b), "second outside: first must be outside or in cond_r")
    return _OK


def _c27(ctx: PairContext):
    return _2int_conclusions(ctx, ctx.cr, mirror=False)


def _c28(ctx: PairContext):
    return _2int_conclusions(ctx, ctx.cl, mirror=True)


def _c29_applies(ctx: PairContext) -> Optional[str]:
    if not ctx.integrally_closed_2:
        return "subring is not quadratically integrally closed"
    return None


def _c29(ctx: PairContext):
    from .ideals import prime_one_sided_violation

    for P, side in ((ctx.cl, Side.LEFT), (ctx.cr, Side.RIGHT)):
        w = prime_one_sided_violation(ctx.T, P, side)
        if w is not None:
            return _fail(w, f"{side.value} conductor is not a prime one-sided ideal")
    return _OK


def _c30(ctx: PairContext):
    T, R, C = ctx.T, ctx.R, ctx.cond
    ridx = R.indices()
    alln = np.arange(T.order)
    qual = ctx.sandwich_in_cond
    for a in range(T.order):
        if C.mask[a]:
            continue
        for b in range(T.order):
            if C.mask[b] or not qual[a, b]:
                continue
            if not (R.mask[a] and R.mask[b]):
                return _fail((a, b), "sandwich elements must lie in the subring")
            rat = T.mul[np.ix_(T.mul[ridx, a], alln)].ravel()
            if not R.mask[rat].all():
                return _fail((a,), "R*a*T escapes the subring")
            tar = T.mul[np.ix_(T.mul[alln, a], ridx)].ravel()
            if R.mask[tar].all():
                return _fail((a,), "T*a*R unexpectedly inside the subring")
            if not ctx.span_with_R(tar).mask.all():
                return _fail((a,), "subring plus T*a*R does not span")
            tbr = T.mul[np.ix_(T.mul[alln, b], ridx)].ravel()
            if not R.mask[tbr].all():
                return _fail((b,), "T*b*R escapes the subring")
            rbt = T.mul[np.ix_(T.mul[ridx, b], alln)].ravel()
            if R.mask[rbt].all():
                return _fail((b,), "R*b*T unexpectedly inside the subring")
            if not ctx.span_with_R(rbt).mask.all():
                return _fail((b,), "subring plus R*b*T does not span")
            if not (ctx.cr.mask[a] and ctx.cl.mask[b]):
                return _fail((a, b), "membership in the one-sided conductors fails")
            if ctx.cl.mask[a] or ctx.cr.mask[b]:
                return _fail((a, b), "unexpected membership in the opposite conductors")
    return _OK


def _c31(ctx: PairContext):
    T, C = ctx.T, ctx.cond
    union = ctx.cl | ctx.cr
    for x in union.indices():
        xTx = T.mul[T.mul[int(x), np.arange(T.order)], int(x)]
        if C.mask[xTx].all() and not C.mask[x]:
            return _fail((x,), "sandwich-nilpotent conductor element escapes cond")
    return _OK


def _c32_applies(ctx: PairContext) -> Optional[str]:
    if not ctx.square_closed:
        return "squares of outside elements land outside the subring only"
    return None


def _c32(ctx: PairContext):
    w = not_semiprime_witness(ctx.T, ctx.cond)
    if w is not None:
        return _fail((w,), "cond is not semiprime in the big ring")
    if not is_prime_ideal(ctx.T, ctx.cond) and ctx.cond != (ctx.cl & ctx.cr):
        return _fail((), "cond neither prime in T nor the conductor intersection")
    return _OK


def _c33_applies(ctx: PairContext) -> Optional[str]:
    prods = ctx.product_set(ctx.cl, Subset.full(ctx.T))
    if not additive_closure(ctx.T, Subset.from_indices(ctx.T, prods)).mask.all():
        return "cond_l * T is a proper ideal"
    return _needs_R_lattice(ctx)


def _c33(ctx: PairContext):
    if idealizer(ctx.T, ctx.cl, Side.LEFT) != ctx.R:
        return _fail((), "subring is not the idealizer of cond_l")
    if not is_right_primitive_ideal(ctx.T, ctx.cl, scope=ctx.R, cap=ctx.caps.ideal_lattice):
        return _fail((), "cond_l is not right primitive in the subring")
    M = maximal_one_sided_above(ctx.T, ctx.cl, Side.LEFT)
    if is_ideal(ctx.T, M, Side.TWO_SIDED):
        return _fail((), "maximal left ideal above cond_l is two-sided (quasi-duo not refuted)")
    return _OK


def _c34_applies(ctx: PairContext) -> Optional[str]:
    if not ctx.is_max_two_sided_in_T(ctx.cond):
        return "cond is not a maximal ideal of the big ring"
    if not (ctx.cond < ctx.cl and ctx.cond < ctx.cr):
        return "cond equals one of the one-sided conductors"
    return _needs_R_lattice(ctx)


def _c34(ctx: PairContext):
    T, full = ctx.T, Subset.full(ctx.T)
    if not is_right_primitive_ideal(T, ctx.cl, scope=ctx.R, cap=ctx.caps.ideal_lattice):
        return _fail((), "cond_l is not right primitive in the subring")
    if not is_left_primitive_ideal(T, ctx.cr, scope=ctx.R, cap=ctx.caps.ideal_lattice):
        return _fail((), "cond_r is not left primitive in the subring")
    lann = annihilator(T, full, ctx.cl, Side.LEFT)
    meet = np.ones(T.order, dtype=np.bool_)
    for p in ctx.cl.indices():
        meet &= (T.mul[:, p] == T.zero)
    if not np.array_equal(lann.mask, meet):
        return _fail((), "left annihilator is not the meet of elementwise annihilators")
    rann = annihilator(T, full, ctx.cr, Side.RIGHT)
    meet = np.ones(T.order, dtype=np.bool_)
    for q in ctx.cr.indices():
        meet &= (T.mul[q, :] == T.zero)
    if not np.array_equal(rann.mask, meet):
        return _fail((), "right annihilator is not the meet of elementwise annihilators")
    return _OK


def _c35(ctx: PairContext):
    if ctx.centralizer_R <= ctx.R:
        return _OK
    if ctx.cond == ctx.cl == ctx.cr:
        return _OK
    return _fail((), "centralizer escapes the subring yet conductors differ")


def _c36_applies(ctx: PairContext) -> Optional[str]:
    if not is_prime_ideal(ctx.T, ctx.zero_subset):
        return "big ring is not prime"
    return _needs_R_lattice(ctx)


def _c36(ctx: PairContext):
    if not is_right_primitive_ideal(ctx.T, ctx.cl, scope=ctx.R, cap=ctx.caps.ideal_lattice):
        return _fail((), "cond_l is not right primitive in the subring")
    if not is_left_primitive_ideal(ctx.T, ctx.cr, scope=ctx.R, cap=ctx.caps.ideal_lattice):
        return _fail((), "cond_r is not left primitive in the subring")
    return _OK


CHECKS: tuple[Check, ...] = (
    Check("C01", "conductor containment chain and proper conductor sum", _always, _c01),
    Check("C02", "one-sided conductors are prime ideals of the subring", _always, _c02),
    Check("C03", "prime radical of cond is the meet of the one-sided conductors", _needs_R_lattice, _c03),
    Check("C04", "cond prime in R iff it equals a one-sided conductor iff those are comparable", _always, _c04),
    Check("C05", "at most two minimal primes over cond; incomparable branch structure", _needs_R_lattice, _c05),
    Check("C06", "cond semiprime in R iff cond equals the conductor intersection", _always, _c06),
    Check("C07", "cond is each of the four module annihilators of the conductor quotients", _always, _c07),
    Check("C08", "cond maximal in R forces all conductors equal", _c08_applies, _c08),
    Check("C09", "Jacobson and prime radicals sit inside the meet; their squares inside cond", _needs_R_lattice, _c09),
    Check("C10", "T/R has a maximal submodule and cond_l is right primitive in R", _needs_R_lattice, _c10),
    Check("C11", "commutative case: maximality, maximal submodules and semisimplicity agree", _c11_applies, _c11),
    Check("C12", "one-sided conductors are maximal ideals; T/R isotypic semisimple", _needs_R_lattice, _c12),
    Check("C13", "completely-prime-right conductor: forward and converse directions", _always, _c13),
    Check("C14", "maximal right conductor is completely prime with torsionfree quotient", _c14_applies, _c14),
    Check("C15", "completely-prime-right conductor: one of the quotients is a division ring", _c15_applies, _c15),
    Check("C16", "left duo big ring: cond equals cond_l and is completely prime in R", _c16_applies, _c16),
    Check("C17", "centralizer inside R, or all conductors equal with a central generator", _always, _c17),
    Check("C18", "exactly one of the four idealizer cases holds", _always, _c18),
    Check("C19", "idealizer quotient is the endomorphism ring of T/cond_r; dichotomy branch", _always, _c19),
    Check("C20", "R/cond_r embeds in the endomorphism ring of T/R", _always, _c20),
    Check("C21", "quotient characteristics agree and equal the prime additive exponent of T/R", _always, _c21),
    Check("C22", "injective characteristic map on Spec(R) forces one two-sided conductor", _c22_applies, _c22),
    Check("C23", "composite characteristic: a prime multiple of T lands in a nonzero cond", _c23_applies, _c23),
    Check("C24", "annihilators of cond summing to T force cond squared to vanish", _c24_applies, _c24),
    Check("C25", "annihilator identities and minimal-prime structure of the conductors", _c25_applies, _c25),
    Check("C26", "three or more minimal primes force nonzero cond and conductor product", _c26_applies, _c26),
    Check("C27", "sandwich pairs over cond_r: quadratic integrality and generation", _always, _c27),
    Check("C28", "sandwich pairs over cond_l: mirrored integrality and generation", _always, _c28),
    Check("C29", "quadratically closed subring: conductors are prime one-sided ideals of T", _c29_applies, _c29),
    Check("C30", "quadratically closed subring: sandwich pairs over cond land in the subring", _c29_applies, _c30),
    Check("C31", "conductor elements with sandwich square in cond lie in cond", _always, _c31),
    Check("C32", "square-closed subring: cond is semiprime in T; prime or the intersection", _c32_applies, _c32),
    Check("C33", "saturating cond_l: idealizer identity, primitivity, quasi-duo refutation", _c33_applies, _c33),
    Check("C34", "cond maximal in T with strict conductors: primitivity and annihilator meets", _c34_applies, _c34),
    Check("C35", "centralizer inside the subring or all conductors coincide", _always, _c35),
    Check("C36", "prime big ring: one-sided conductors are primitive in the subring", _c36_applies, _c36),
)

CHECKS_BY_ID = {c.check_id: c for c in CHECKS}


# ---------------------------------------------------------------------------
# corpus


F4_TABLE = """\
ring F4 4
zero 0
one 1
add
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0
mul
0 0 0 0
0 1 2 3
0 2 3 1
0 3 1 2
"""

F8_TABLE = """\
ring F8 8
zero 0
one 1
add
0 1 2 3 4 5 6 7
1 0 3 2 5 4 7 6
2 3 0 1 6 7 4 5
3 2 1 0 7 6 5 4
4 5 6 7 0 1 2 3
5 4 7 6 1 0 3 2
6 7 4 5 2 3 0 1
7 6 5 4 3 2 1 0
mul
0 0 0 0 0 0 0 0
0 1 2 3 4 5 6 7
0 2 4 6 3 1 7 5
0 3 6 5 7 4 1 2
0 4 3 7 6 2 5 1
0 5 1 4 2 7 3 6
0 6 7 1 5 3 2 4
0 7 5 2 1 6 4 3
"""


def triangular_subring(T: RingTable, shape: str) -> Subset:
    """The lower or upper triangular subring of a 2x2 (or kxk) matrix ring."""
    if T.origin is None or T.origin[0] != "matrix":
        raise ValueError("triangular subrings live inside matrix rings")
    base, k = T.origin[1], T.origin[2]
    mask = np.zeros(T.order, dtype=np.bool_)
    for idx in range(T.order):
        digits = matrix_entry_digits(T, idx)
        ok = True
        for i in range(k):
            for j in range(k):
                above = i < j if shape == "lower" else i > j
                if above and digits[i * k + j] != base.zero:
                    ok = False
        mask[idx] = ok
    return Subset(T, mask)


def discover_extensions(T: RingTable, caps: Caps = DEFAULT_CAPS,
                        entry_label: str = "") -> list[ExtensionPair]:
    """One validated pair per maximal subring of T, in canonical order.

    When the one-sided ideal lattices are within cap, cross-checks that the
    idealizer of every non-two-sided maximal one-sided ideal appears among
    the maximal subrings.
    """
    label = entry_label or T.label
    subs = sorted(maximal_subrings(T, cap=caps.subring_lattice),
                  key=lambda s: (s.size, s.key()))
    pairs = [make_extension_pair(T, S, f"{label}/m{k}", known_maximal=True)
             for k, S in enumerate(subs)]
    if T.order <= caps.ideal_lattice:
        found = {p.subring.key() for p in pairs}
        for side in (Side.LEFT, Side.RIGHT):
            for A in maximal_ideals(T, side, cap=caps.ideal_lattice):
                if is_ideal(T, A, Side.TWO_SIDED):
                    continue
                idz = idealizer(T, A, side)
                if idz.key() not in found:
                    raise AssertionError(
                        "idealizer of a non-two-sided maximal one-sided ideal "
                        "is missing from the discovered maximal subrings")
    return pairs


@dataclass(frozen=True)
class CorpusEntry:
    """One ring plus either full discovery or declared subring pairs."""

    ring: RingTable
    label: str
    discover: bool = False
    declared: tuple[tuple[str, Subset], ...] = ()


def corpus_pairs(entries: Sequence[CorpusEntry], caps: Caps = DEFAULT_CAPS) -> list[ExtensionPair]:
    """Validate every corpus entry into extension pairs (maximality enforced)."""
    pairs: list[ExtensionPair] = []
    for entry in entries:
        if entry.discover:
            pairs.extend(discover_extensions(entry.ring, caps, entry.label))
        for name, subset in entry.declared:
            pairs.append(make_extension_pair(entry.ring, subset, f"{entry.label}/{name}"))
    return pairs


def default_corpus(caps: Caps = DEFAULT_CAPS) -> list[CorpusEntry]:
    """The built-in corpus: matrix/triangular pairs, boolean products, a mixed
    characteristic product, and the small field extensions from tables."""
    entries: list[CorpusEntry] = []
    m2f2 = parse_ring_expr("Mat(Z(2),2)", order_cap=caps.construction)
    entries.append(CorpusEntry(m2f2, "Mat(Z(2),2)", discover=True))
    entries.append(CorpusEntry(m2f2, "Mat(Z(2),2)",
                               declared=(("lower", triangular_subring(m2f2, "lower")),
                                         ("upper", triangular_subring(m2f2, "upper")))))
    m2f3 = parse_ring_expr("Mat(Z(3),2)", order_cap=caps.construction)
    entries.append(CorpusEntry(m2f3, "Mat(Z(3),2)",
                               declared=(("lower", triangular_subring(m2f3, "lower")),
                                         ("upper", triangular_subring(m2f3, "upper")))))
    for k in range(1, 5):
        expr = "Z(2)" if k == 1 else "Prod(" + ",".join(["Z(2)"] * k) + ")"
        ring = parse_ring_expr(expr, order_cap=caps.construction)
        entries.append(CorpusEntry(ring, expr, discover=True))
    z4z2 = parse_ring_expr("Prod(Z(4),Z(2))", order_cap=caps.construction)
    diag = Subset(z4z2, np.array([index_digits(i, [4, 2])[1] == index_digits(i, [4, 2])[0] % 2
                                  for i in range(8)]))
    entries.append(CorpusEntry(z4z2, "Prod(Z(4),Z(2))", declared=(("diagZ4", diag),)))
    for table in (F4_TABLE, F8_TABLE):
        ring = parse_ring_table_text(table)
        prime_sub = subring_closure(ring, Subset.empty(ring))
        entries.append(CorpusEntry(ring, ring.label, declared=(("F2", prime_sub),)))
    return entries


# ---------------------------------------------------------------------------
# runner


def run_check(check: Check, pair_ctx: PairContext) -> CheckResult:
    start = time.perf_counter_ns()
    label = pair_ctx.pair.label
    reason = check.applies(pair_ctx)
    if reason is not None:
        micros = (time.perf_counter_ns() - start) // 1000
        return CheckResult(check.check_id, label, "vacuous", (), micros, reason)
    try:
        outcome = check.body(pair_ctx)
    except Exception as exc:  # a check must never abort a suite run
        micros = (time.perf_counter_ns() - start) // 1000
        return CheckResult(check.check_id, label, "fail", (), micros,
                           f"internal error: {exc!r}")
    micros = (time.perf_counter_ns() - start) // 1000
    status, witness, note = outcome
    if status == "vacuous":
        return CheckResult(check.check_id, label, "vacuous", (), micros, note)
    names = tuple(pair_ctx.T.elem_names[w] for w in witness)
    return CheckResult(check.check_id, label, "pass" if status is True else "fail",
                       names, micros, note)


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)
    entry_errors: list[str] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "vacuous": 0}
        for r in self.results:
            out[r.verdict] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0


def run_suite(pairs: Sequence[ExtensionPair], checks: Sequence[Check] = CHECKS,
              caps: Caps = DEFAULT_CAPS) -> SuiteReport:
    report = SuiteReport()
    for pair in pairs:
        ctx = PairContext(pair, caps)
        for check in checks:
            report.results.append(run_check(check, ctx))
    return report


def select_checks(spec: str) -> list[Check]:
    """Parse a comma-separated list of check ids (e.g. "C01,C05,C19")."""
    wanted = []
    for token in spec.split(","):
        token = token.strip().upper()
        if not token:
            continue
        if token not in CHECKS_BY_ID:
            raise ValueError(f"unknown check id {token!r}")
        wanted.append(CHECKS_BY_ID[token])
    return wanted


# ---------------------------------------------------------------------------
# reports


def emit_report(report: SuiteReport, fmt: str = "human") -> str:
    if fmt == "machine":
        lines = []
        for r in report.results:
            record = {"check_id": r.check_id, "pair_label": r.pair_label,
                      "verdict": r.verdict, "witness": list(r.witness),
                      "micros": int(r.micros)}
            lines.append(json.dumps(record, ensure_ascii=False))
        return "\n".join(lines) + ("\n" if lines else "")
    if fmt != "human":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = []
    for err in report.entry_errors:
        lines.append(f"corpus entry error: {err}")
    by_pair: dict[str, list[CheckResult]] = {}
    for r in report.results:
        by_pair.setdefault(r.pair_label, []).append(r)
    for label, results in by_pair.items():
        lines.append(f"== {label}")
        for r in results:
            mark = {"pass": "ok ", "fail": "FAIL", "vacuous": "  - "}[r.verdict]
            extra = ""
            if r.verdict == "fail":
                extra = f"  witness={list(r.witness)} {r.note}"
            elif r.verdict == "vacuous" and r.note:
                extra = f"  ({r.note})"
            elif r.note:
                extra = f"  ({r.note})"
            lines.append(f"  {r.check_id} {mark}{extra}")
    c = report.counts
    lines.append(f"checks: {c['pass']} pass, {c['fail']} fail, {c['vacuous']} vacuous"
                 f" over {len({r.pair_label for r in report.results})} pairs")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# corpus files (JSON)


def load_corpus_file(path: str, caps: Caps = DEFAULT_CAPS) -> tuple[list[CorpusEntry], list[str]]:
    """Read a JSON corpus description; entry errors are collected, not raised.

    Format: {"entries": [{"ring": EXPR, "mode": "discover"}
                          | {"ring": EXPR, "pairs": [{"name": N, "generators": [i, ...]}]}]}
    """
    import os

    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    base_dir = os.path.dirname(os.path.abspath(path))
    entries: list[CorpusEntry] = []
    errors: list[str] = []
    for k, raw in enumerate(doc.get("entries", [])):
        try:
            ring = parse_ring_expr(raw["ring"], base_dir=base_dir, order_cap=caps.construction)
            if raw.get("mode") == "discover":
                entries.append(CorpusEntry(ring, raw["ring"], discover=True))
                continue
            declared = []
            for p in raw.get("pairs", []):
                gens = Subset.from_indices(ring, p["generators"])
                declared.append((p["name"], subring_closure(ring, gens)))
            entries.append(CorpusEntry(ring, raw["ring"], declared=tuple(declared)))
        except Exception as exc:
            errors.append(f"entry {k}: {exc}")
    return entries, errors
