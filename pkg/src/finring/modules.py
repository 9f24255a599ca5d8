"""Finite quotient modules, their endomorphism rings, and primitivity tests.

A ModuleView is a quotient T/sub of the additive group of a ring by a
subgroup, together with a validated one-sided action of a subring (the
actor).  Endomorphism rings are assembled from the actor-commuting additive
self-maps, either by brute force over additive maps or, for cyclic modules,
by enumerating images of a generator; the two paths are cross-checked in the
test suite.  Maps are written on the left throughout, so for left modules the
endomorphism ring composes contravariantly (see ``phi_isomorphism_check``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .rings import CapExceeded, RingTable, Subset, subring_as_ring, quotient_ring
from .substructures import (
    Side,
    _as_side,
    core_of,
    idealizer,
    is_additive_subgroup,
    is_ideal,
    is_subring,
    jacobson_radical,
    maximal_ideals,
)
from .ideals import ExtensionPair

DEFAULT_ENDO_BRUTE_CAP = 8


class IllDefinedActionError(ValueError):
    """The requested module action is not representative-independent."""


@dataclass(frozen=True, eq=False)
class ModuleView:
    """Quotient module base/sub with a one-sided action of ``actor``."""

    base: RingTable
    sub: Subset
    actor: Subset
    action_side: Side
    coset_of: np.ndarray        # element index -> coset index
    reps: np.ndarray            # coset index -> representative element index
    coset_add: np.ndarray       # (m, m) coset addition table
    actor_elems: np.ndarray     # actor element indices (parent indexing)
    action: np.ndarray          # (m, len(actor_elems)) -> coset index
    zero_coset: int

    @property
    def size(self) -> int:
        return len(self.reps)

    def coset_name(self, c: int) -> str:
        return f"[{self.base.elem_names[self.reps[c]]}]"

    def actor_pos(self, elem: int) -> int:
        pos = int(np.searchsorted(self.actor_elems, elem))
        if pos >= len(self.actor_elems) or self.actor_elems[pos] != elem:
            raise ValueError("element is not in the actor")
        return pos

    def __repr__(self) -> str:
        return (f"ModuleView({self.base.label}/{self.sub.size}, "
                f"{self.action_side.value} action of {self.actor.size} elements)")


def quotient_module(T: RingTable, sub: Subset, actor: Subset, side) -> ModuleView:
    """Build T/sub with the chosen one-sided actor action, verifying everything.

    The action must be representative-independent: for a right action this
    means sub*actor stays in sub, mirrored for left.  Module laws
    (associativity with actor multiplication, trivial identity action) are
    replayed after construction.
    """
    side = _as_side(side)
    if side is Side.TWO_SIDED:
        raise ValueError("module action must be left or right")
    if not is_additive_subgroup(T, sub):
        raise IllDefinedActionError("sub is not an additive subgroup")
    if not is_subring(T, actor):
        raise ValueError("actor must be a unital subring")
    aidx = actor.indices()
    sidx = sub.indices()
    # representative independence
    for a in aidx:
        moved = T.mul[sidx, a] if side is Side.RIGHT else T.mul[a, sidx]
        bad = np.flatnonzero(~sub.mask[moved])
        if bad.size:
            s = int(sidx[bad[0]])
            raise IllDefinedActionError(
                f"action ill-defined: coset of {T.elem_names[s]} moved out of sub "
                f"by actor element {T.elem_names[int(a)]}")

    coset_min = np.empty(T.order, dtype=np.int64)
    for x in range(T.order):
        coset_min[x] = T.add[x, sidx].min()
    reps = np.unique(coset_min)
    coset_of = np.searchsorted(reps, coset_min)
    m = len(reps)
    coset_add = coset_of[T.add[np.ix_(reps, reps)]]
    if side is Side.RIGHT:
        action = coset_of[T.mul[np.ix_(reps, aidx)]]
    else:
        action = coset_of[T.mul[np.ix_(aidx, reps)].T]
    zero_coset = int(coset_of[T.zero])

    mv = ModuleView(T, sub, actor, side, coset_of, reps, coset_add,
                    aidx.astype(np.int64), action, zero_coset)
    _verify_module_laws(mv)
    return mv


def _verify_module_laws(M: ModuleView) -> None:
    T = M.base
    amap = {int(e): k for k, e in enumerate(M.actor_elems)}
    one_pos = amap[T.one]
    if not np.array_equal(M.action[:, one_pos], np.arange(M.size)):
        raise IllDefinedActionError("identity does not act trivially")
    # distributivity over coset addition and additive actor combinations
    for k, a in enumerate(M.actor_elems):
        acted = M.action[:, k]
        if not np.array_equal(M.coset_add[np.ix_(acted, acted)],
                              acted[M.coset_add]):
            raise IllDefinedActionError("action is not additive on cosets")
    # associativity with actor multiplication: acting by a then b equals
    # acting by a*b (right modules) or b*a (left modules, maps on the left)
    for i, a in enumerate(M.actor_elems):
        for j, b in enumerate(M.actor_elems):
            ab = int(T.mul[a, b]) if M.action_side is Side.RIGHT else int(T.mul[b, a])
            k = amap[ab]
            if not np.array_equal(M.action[M.action[:, i], j], M.action[:, k]):
                raise IllDefinedActionError("action incompatible with actor multiplication")


# ---------------------------------------------------------------------------
# submodules


def submodule_closure(M: ModuleView, gens: set[int]) -> frozenset[int]:
    """Smallest action-stable subgroup of cosets containing ``gens``."""
    known = {M.zero_coset} | set(gens)
    frontier = list(known)
    while frontier:
        x = frontier.pop()
        for y in list(known):
            s = int(M.coset_add[x, y])
            if s not in known:
                known.add(s)
                frontier.append(s)
        for k in range(len(M.actor_elems)):
            s = int(M.action[x, k])
            if s not in known:
                known.add(s)
                frontier.append(s)
    return frozenset(known)


def enumerate_submodules(M: ModuleView) -> set[frozenset[int]]:
    start = submodule_closure(M, set())
    found = {start}
    frontier = [start]
    every = frozenset(range(M.size))
    while frontier:
        nxt = []
        for S in frontier:
            if S == every:
                continue
            for c in range(M.size):
                if c in S:
                    continue
                grown = submodule_closure(M, set(S) | {c})
                if grown not in found:
                    found.add(grown)
                    nxt.append(grown)
        frontier = nxt
    return found


def maximal_submodules(M: ModuleView) -> set[frozenset[int]]:
    subs = [S for S in enumerate_submodules(M) if len(S) < M.size]
    return {S for S in subs if not any(S < S2 for S2 in subs)}


def is_simple_module(M: ModuleView) -> bool:
    if M.size <= 1:
        return False
    return len(enumerate_submodules(M)) == 2


def module_annihilator(M: ModuleView) -> Subset:
    """Actor elements acting as zero on every coset."""
    kill = (M.action == M.zero_coset).all(axis=0)
    mask = np.zeros(M.base.order, dtype=np.bool_)
    mask[M.actor_elems[kill]] = True
    return Subset(M.base, mask)


# ---------------------------------------------------------------------------
# primitivity


def is_primitive_ideal(T: RingTable, P: Subset, side,
                       scope: Optional[Subset] = None, cap: int = 16) -> bool:
    """P is the core of some maximal one-sided ideal of the scope.

    On finite rings this coincides with being the annihilator of a simple
    one-sided module, which is the cheaper test.  ``side=right`` asks for
    right primitivity (cores of maximal right ideals), mirrored for left.
    """
    side = _as_side(side)
    if side is Side.TWO_SIDED:
        raise ValueError("primitivity is one-sided")
    scope_ = scope if scope is not None else Subset.full(T)
    ring, embed = subring_as_ring(T, scope_)
    local_p = Subset(ring, P.mask[embed])
    if not is_ideal(ring, local_p, Side.TWO_SIDED):
        raise ValueError("P is not a two-sided ideal of the scope")
    for M in maximal_ideals(ring, side, cap=cap):
        if core_of(ring, M, side) == local_p:
            return True
    return False


def is_right_primitive_ideal(T: RingTable, P: Subset,
                             scope: Optional[Subset] = None, cap: int = 16) -> bool:
    return is_primitive_ideal(T, P, Side.RIGHT, scope, cap)


def is_left_primitive_ideal(T: RingTable, P: Subset,
                            scope: Optional[Subset] = None, cap: int = 16) -> bool:
    return is_primitive_ideal(T, P, Side.LEFT, scope, cap)


# ---------------------------------------------------------------------------
# endomorphism rings


@dataclass(frozen=True, eq=False)
class EndoRing:
    """Actor-linear self-maps of a module, assembled into a ring.

    ``maps[k]`` is the image table of the k-th endomorphism (coset -> coset);
    the ring tables are pointwise addition and left-composition
    (``mul[f, g]`` is f after g).
    """

    module: ModuleView
    ring: RingTable
    maps: np.ndarray

    def index_of(self, image_table) -> Optional[int]:
        arr = np.asarray(image_table, dtype=np.int64)
        for k in range(len(self.maps)):
            if np.array_equal(self.maps[k], arr):
                return k
        return None


def _group_generators(M: ModuleView) -> list[int]:
    """Greedy additive generating set of the coset group."""
    gens: list[int] = []
    span = submodule_gens_closure(M, gens)
    while len(span) < M.size:
        cand = min(c for c in range(M.size) if c not in span)
        gens.append(cand)
        span = submodule_gens_closure(M, gens)
    return gens


def submodule_gens_closure(M: ModuleView, gens: list[int]) -> set[int]:
    known = {M.zero_coset} | set(gens)
    frontier = list(known)
    while frontier:
        x = frontier.pop()
        for y in list(known):
            s = int(M.coset_add[x, y])
            if s not in known:
                known.add(s)
                frontier.append(s)
    return known


def _propagate_additive(M: ModuleView, img: dict[int, int]) -> Optional[dict[int, int]]:
    """Force-close a partial coset map under additivity; None on conflict."""
    img = dict(img)
    img[M.zero_coset] = M.zero_coset
    work = list(img)
    while work:
        x = work.pop()
        for y in list(img):
            z = int(M.coset_add[x, y])
            w = int(M.coset_add[img[x], img[y]])
            if z in img:
                if img[z] != w:
                    return None
            else:
                img[z] = w
                work.append(z)
    return img


def _commutes(M: ModuleView, table: np.ndarray) -> bool:
    return bool(np.array_equal(table[M.action], M.action[table, :]))


def additive_endomorphisms(M: ModuleView) -> list[np.ndarray]:
    """All additive self-maps of the coset group (brute force over generators)."""
    gens = _group_generators(M)
    out = []
    if not gens:
        out.append(np.full(M.size, M.zero_coset, dtype=np.int64))
        return out
    for images in itertools.product(range(M.size), repeat=len(gens)):
        img = _propagate_additive(M, dict(zip(gens, images)))
        if img is None or len(img) != M.size:
            continue
        table = np.array([img[c] for c in range(M.size)], dtype=np.int64)
        out.append(table)
    # dedupe (different generator images can force the same total map)
    seen: dict[bytes, np.ndarray] = {}
    for t in out:
        seen.setdefault(t.tobytes(), t)
    return list(seen.values())


def _endo_maps_brute(M: ModuleView, cap: int) -> list[np.ndarray]:
    if M.size > cap:
        raise CapExceeded(f"brute-force endomorphism search capped at {cap} cosets, got {M.size}")
    return [t for t in additive_endomorphisms(M) if _commutes(M, t)]


def _cyclic_generator(M: ModuleView) -> Optional[int]:
    for c in range(M.size):
        if len(submodule_closure(M, {c})) == M.size:
            return c
    return None


def _endo_maps_cyclic(M: ModuleView, gen: int) -> list[np.ndarray]:
    """Maps commuting with the action are fixed by the image of a generator."""
    out: dict[bytes, np.ndarray] = {}
    for target in range(M.size):
        img = {M.zero_coset: M.zero_coset, gen: target}
        ok = True
        changed = True
        while changed and ok:
            changed = False
            for x in list(img):
                for k in range(len(M.actor_elems)):
                    y = int(M.action[x, k])
                    w = int(M.action[img[x], k])
                    if y in img:
                        if img[y] != w:
                            ok = False
                            break
                    else:
                        img[y] = w
                        changed = True
                if not ok:
                    break
            if not ok:
                break
            forced = _propagate_additive(M, img)
            if forced is None:
                ok = False
                break
            if len(forced) > len(img):
                img = forced
                changed = True
            else:
                img = forced
        if not ok or len(img) != M.size:
            continue
        table = np.array([img[c] for c in range(M.size)], dtype=np.int64)
        if _commutes(M, table):
            out.setdefault(table.tobytes(), table)
    return list(out.values())


def endomorphism_ring(M: ModuleView, method: str = "auto",
                      brute_cap: int = DEFAULT_ENDO_BRUTE_CAP) -> EndoRing:
    """Ring of actor-commuting additive self-maps under pointwise + and composition.

    ``method`` picks the enumeration path: "brute" (all additive maps,
    capped), "cyclic" (generator images; needs a cyclic module) or "auto".
    A zero module is rejected: its endomorphism ring would have 1 = 0.
    """
    if M.size <= 1:
        raise ValueError("degenerate module: endomorphism ring would have 1 = 0")
    if method == "auto":
        gen = _cyclic_generator(M)
        maps = _endo_maps_cyclic(M, gen) if gen is not None else _endo_maps_brute(M, brute_cap)
    elif method == "brute":
        maps = _endo_maps_brute(M, brute_cap)
    elif method == "cyclic":
        gen = _cyclic_generator(M)
        if gen is None:
            raise ValueError("module is not cyclic")
        maps = _endo_maps_cyclic(M, gen)
    else:
        raise ValueError(f"unknown method {method!r}")

    maps.sort(key=lambda t: tuple(t))
    maps_arr = np.stack(maps)
    index = {t.tobytes(): k for k, t in enumerate(maps)}
    n = len(maps)
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            s = M.coset_add[maps[i], maps[j]]
            add[i, j] = index[s.astype(np.int64).tobytes()]
            c = maps[i][maps[j]]  # composition: apply j, then i
            mul[i, j] = index[c.astype(np.int64).tobytes()]
    zero_map = np.full(M.size, M.zero_coset, dtype=np.int64)
    id_map = np.arange(M.size, dtype=np.int64)
    zero = index[zero_map.tobytes()]
    one = index[id_map.tobytes()]
    names = ["(" + ",".join(str(v) for v in t) + ")" for t in maps]
    ring = RingTable(add, mul, zero, one, f"End({M.base.label}/{M.sub.size})",
                     origin=("endo", M), elem_names=names)
    return EndoRing(M, ring, maps_arr)


# ---------------------------------------------------------------------------
# the idealizer-quotient isomorphism and the subring embedding


@dataclass(frozen=True)
class MapCheckVerdict:
    ok: bool
    detail: str
    witness: tuple[int, ...] = ()


def phi_isomorphism_check(T: RingTable, A: Subset, side=Side.RIGHT,
                          endo_method: str = "auto") -> MapCheckVerdict:
    """Replay the idealizer-quotient map onto the endomorphism ring of T/A.

    For a right ideal A the map sends r + A to the endo x + A -> rx + A of
    the right T-module T/A, and must be a ring isomorphism onto End(T/A).
    For a left ideal the same construction is an isomorphism onto the
    opposite of End(T/A) (maps are written on the left), so the
    multiplicativity check runs contravariantly.
    """
    side = _as_side(side)
    if side is Side.TWO_SIDED:
        raise ValueError("A must be one-sided (a two-sided ideal works as either)")
    if not is_ideal(T, A, side):
        raise ValueError(f"A is not a {side.value} ideal")
    I = idealizer(T, A, side)
    M = quotient_module(T, A, Subset.full(T), side)
    E = endomorphism_ring(M, method=endo_method)

    ring_I, embed = subring_as_ring(T, I)
    local_A = Subset(ring_I, A.mask[embed])
    Q, proj = quotient_ring(ring_I, local_A)

    # phi on each idealizer element; must factor through Q exactly
    phi_of_q: dict[int, int] = {}
    for local_r, r in enumerate(embed):
        if side is Side.RIGHT:
            table = M.coset_of[T.mul[r, M.reps]]
        else:
            table = M.coset_of[T.mul[M.reps, r]]
        k = E.index_of(table)
        if k is None:
            return MapCheckVerdict(False, "image map is not an endomorphism", (int(r),))
        q = int(proj[local_r])
        if q in phi_of_q:
            if phi_of_q[q] != k:
                return MapCheckVerdict(False, "map not constant on cosets", (int(r),))
        else:
            phi_of_q[q] = k

    if len(phi_of_q) != Q.order:
        return MapCheckVerdict(False, "some coset has no image")
    img = np.array([phi_of_q[q] for q in range(Q.order)], dtype=np.int64)
    if len(set(int(v) for v in img)) != Q.order:
        return MapCheckVerdict(False, "map is not injective")
    if Q.order != E.ring.order:
        return MapCheckVerdict(False, f"not surjective: {Q.order} cosets vs {E.ring.order} endos")
    if img[Q.zero] != E.ring.zero or img[Q.one] != E.ring.one:
        return MapCheckVerdict(False, "map does not preserve 0/1")
    if not np.array_equal(img[Q.add], E.ring.add[img[:, None], img[None, :]]):
        return MapCheckVerdict(False, "map is not additive")
    if side is Side.RIGHT:
        mul_ok = np.array_equal(img[Q.mul], E.ring.mul[img[:, None], img[None, :]])
    else:
        # left ideals: composition reverses, the map is onto the opposite ring
        mul_ok = np.array_equal(img[Q.mul], E.ring.mul[img[None, :], img[:, None]])
    if not mul_ok:
        return MapCheckVerdict(False, "map is not multiplicative")
    return MapCheckVerdict(True, f"idealizer quotient (order {Q.order}) matches End")


def phi_image_of_subring(T: RingTable, A: Subset, R: Subset, E: EndoRing,
                         side=Side.RIGHT) -> Subset:
    """Image of R/A inside the endomorphism ring (for the maximality branch)."""
    side = _as_side(side)
    M = E.module
    hit = np.zeros(E.ring.order, dtype=np.bool_)
    for r in R.indices():
        if side is Side.RIGHT:
            table = M.coset_of[T.mul[int(r), M.reps]]
        else:
            table = M.coset_of[T.mul[M.reps, int(r)]]
        k = E.index_of(table)
        if k is None:
            raise ValueError("subring element does not act as an endomorphism")
        hit[k] = True
    return Subset(E.ring, hit)


def psi_embedding_check(pair: ExtensionPair, endo_method: str = "auto") -> MapCheckVerdict:
    """Replay r + cond_r -> (x + R -> rx + R) into End of the right R-module T/R.

    Must be well-defined, injective, additive, multiplicative and unital:
    R/cond_r embeds as a subring of the endomorphism ring.
    """
    T = pair.ring
    R = pair.subring
    A = pair.cond_r
    M = quotient_module(T, R, R, Side.RIGHT)
    E = endomorphism_ring(M, method=endo_method)

    ring_R, embed = subring_as_ring(T, R)
    local_A = Subset(ring_R, A.mask[embed])
    Q, proj = quotient_ring(ring_R, local_A)

    psi_of_q: dict[int, int] = {}
    for local_r, r in enumerate(embed):
        table = M.coset_of[T.mul[int(r), M.reps]]
        k = E.index_of(table)
        if k is None:
            return MapCheckVerdict(False, "image is not an R-linear endomorphism", (int(r),))
        q = int(proj[local_r])
        if q in psi_of_q:
            if psi_of_q[q] != k:
                return MapCheckVerdict(False, "kernel is not exactly cond_r", (int(r),))
        else:
            psi_of_q[q] = k
    img = np.array([psi_of_q[q] for q in range(Q.order)], dtype=np.int64)
    if len(set(int(v) for v in img)) != Q.order:
        return MapCheckVerdict(False, "embedding is not injective")
    if img[Q.zero] != E.ring.zero or img[Q.one] != E.ring.one:
        return MapCheckVerdict(False, "embedding not unital")
    if not np.array_equal(img[Q.add], E.ring.add[img[:, None], img[None, :]]):
        return MapCheckVerdict(False, "embedding not additive")
    if not np.array_equal(img[Q.mul], E.ring.mul[img[:, None], img[None, :]]):
        return MapCheckVerdict(False, "embedding not multiplicative")
    return MapCheckVerdict(True, f"R/cond_r (order {Q.order}) embeds in End (order {E.ring.order})")


# ---------------------------------------------------------------------------
# torsionfree / semisimple


def torsion_witness(pair: ExtensionPair) -> Optional[tuple[int, int]]:
    """For P = cond_r: first (r, t) with r, t outside P but rt inside P.

    None means T/P is a torsionfree left R/P-module.
    """
    T = pair.ring
    P = pair.cond_r
    ridx = pair.subring.indices()
    r_out = ridx[~P.mask[ridx]]
    t_out = np.flatnonzero(~P.mask)
    if r_out.size == 0 or t_out.size == 0:
        return None
    bad = P.mask[T.mul[np.ix_(r_out, t_out)]]
    hits = np.argwhere(bad)
    if hits.size:
        i, j = hits[0]
        return int(r_out[i]), int(t_out[j])
    return None


def is_torsionfree_module(pair: ExtensionPair) -> bool:
    return torsion_witness(pair) is None


def is_semisimple_isotypic(M: ModuleView, cap: int = 16) -> tuple[bool, bool]:
    """(semisimple?, isotypic?) for a module over its (finite, hence Artinian) actor.

    Semisimple iff the Jacobson radical of the actor kills the module;
    isotypic additionally requires actor/ann(M) to be a simple ring.
    """
    T = M.base
    actor_ring, embed = subring_as_ring(T, M.actor)
    J = jacobson_radical(actor_ring, cap=cap)
    semisimple = True
    for local_j in J.indices():
        parent = int(embed[local_j])
        k = M.actor_pos(parent)
        if not (M.action[:, k] == M.zero_coset).all():
            semisimple = False
            break
    ann = module_annihilator(M)
    local_ann = Subset(actor_ring, ann.mask[embed])
    isotypic = semisimple and _is_simple_ring(actor_ring, local_ann)
    return semisimple, isotypic


def _is_simple_ring(R: RingTable, modulo: Subset) -> bool:
    """R/modulo has no proper nonzero two-sided ideal (targeted closure test)."""
    from .substructures import ideal_closure

    if modulo.mask.all():
        return False
    Q, _ = quotient_ring(R, modulo)
    for x in range(Q.order):
        if x == Q.zero:
            continue
        grown = ideal_closure(Q, Subset.from_indices(Q, [x]), Side.TWO_SIDED)
        if not grown.mask.all():
            return False
    return True
