"""Finite unital rings as explicit Cayley tables over dense element indices.

A ring of order ``n`` stores its addition and multiplication tables as
``(n, n)`` int32 arrays; elements are the indices ``0..n-1`` and all structure
lives in the tables.  Constructors compose rings (cyclic, matrix, triangular,
product, quotient, opposite) and every constructed ring is validated against
the full axiom list.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels

DEFAULT_CONSTRUCTION_CAP = 128
DEFAULT_ISO_CAP = 16


class InvalidRingError(ValueError):
    """Raised when candidate tables violate a ring axiom."""

    def __init__(self, violation: "AxiomViolation"):
        super().__init__(str(violation))
        self.violation = violation


class CapExceeded(RuntimeError):
    """An operation would exceed its configured order cap."""


@dataclass(frozen=True)
class AxiomViolation:
    law: str
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.law} (witness elements {self.witness})"


def check_ring_axioms(add, mul, zero: int, one: int) -> Optional[AxiomViolation]:
    """Return the first violated ring law, or None if the tables form a ring.

    Checks, in order: table shape/range, 1 != 0, commutativity and
    associativity of addition, the additive identity and inverses,
    associativity of multiplication, the two-sided multiplicative identity,
    and both distributive laws.  Everything is an exhaustive table scan.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n) or n == 0:
        return AxiomViolation("tables must be square and of equal size", ())
    for name, t in (("add", add), ("mul", mul)):
        if t.min() < 0 or t.max() >= n:
            bad = np.argwhere((t < 0) | (t >= n))[0]
            return AxiomViolation(f"{name} entry out of range", tuple(int(v) for v in bad))
    if not (0 <= zero < n and 0 <= one < n):
        return AxiomViolation("zero/one index out of range", (zero, one))
    if zero == one:
        return AxiomViolation("1 != 0 required", (zero,))

    if not np.array_equal(add, add.T):
        a, b = np.argwhere(add != add.T)[0]
        return AxiomViolation("addition not commutative", (int(a), int(b)))
    lhs = add[add]          # [a,b,c] = (a+b)+c
    rhs = add[:, add]       # [a,b,c] = a+(b+c)
    if not np.array_equal(lhs, rhs):
        a, b, c = np.argwhere(lhs != rhs)[0]
        return AxiomViolation("addition not associative", (int(a), int(b), int(c)))
    if not np.array_equal(add[zero], np.arange(n)):
        a = int(np.argwhere(add[zero] != np.arange(n))[0][0])
        return AxiomViolation("zero is not an additive identity", (a,))
    has_inv = (add == zero).any(axis=1)
    if not has_inv.all():
        return AxiomViolation("element without additive inverse", (int(np.flatnonzero(~has_inv)[0]),))

    lhs = mul[mul]
    rhs = mul[:, mul]
    if not np.array_equal(lhs, rhs):
        a, b, c = np.argwhere(lhs != rhs)[0]
        return AxiomViolation("multiplication not associative", (int(a), int(b), int(c)))
    if not (np.array_equal(mul[one], np.arange(n)) and np.array_equal(mul[:, one], np.arange(n))):
        return AxiomViolation("one is not a two-sided identity", (one,))

    lhs = mul[:, add]                              # a*(b+c)
    rhs = add[mul[:, :, None], mul[:, None, :]]    # a*b + a*c
    if not np.array_equal(lhs, rhs):
        a, b, c = np.argwhere(lhs != rhs)[0]
        return AxiomViolation("left distributivity fails", (int(a), int(b), int(c)))
    lhs = mul[add]                                 # (a+b)*c
    rhs = add[mul[:, None, :], mul[None, :, :]]    # a*c + b*c
    if not np.array_equal(lhs, rhs):
        a, b, c = np.argwhere(lhs != rhs)[0]
        return AxiomViolation("right distributivity fails", (int(a), int(b), int(c)))
    return None


class RingTable:
    """A finite unital ring given by explicit addition/multiplication tables."""

    __slots__ = ("order", "add", "mul", "zero", "one", "neg", "label", "origin", "elem_names")

    def __init__(self, add, mul, zero: int, one: int, label: str,
                 origin: tuple = None, elem_names: Sequence[str] = None,
                 validate: bool = True):
        add = np.array(add, dtype=np.int32, copy=True, order="C")
        mul = np.array(mul, dtype=np.int32, copy=True, order="C")
        if validate:
            violation = check_ring_axioms(add, mul, zero, one)
            if violation is not None:
                raise InvalidRingError(violation)
        n = add.shape[0]
        neg = np.ascontiguousarray(np.argwhere(add == zero)[:, 1].astype(np.int32))
        if elem_names is None:
            elem_names = tuple(f"e{i}" for i in range(n))
        else:
            elem_names = tuple(elem_names)
            if len(set(elem_names)) != n:
                raise ValueError("element names must be injective")
        for arr in (add, mul, neg):
            arr.setflags(write=False)
        self.order = n
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.neg = neg
        self.label = label
        self.origin = origin
        self.elem_names = elem_names

    def __setattr__(self, name, value):
        if hasattr(self, "elem_names") and name in self.__slots__:
            raise AttributeError("RingTable is immutable")
        super().__setattr__(name, value)

    def __repr__(self) -> str:
        return f"RingTable({self.label}, order={self.order})"

    def name_of(self, i: int) -> str:
        return self.elem_names[i]

    def elements(self) -> range:
        return range(self.order)


class Subset:
    """A membership mask over a parent ring's elements.

    Carries no structural claim by itself; being a subring or an ideal is
    established by the predicates in :mod:`finring.substructures`.
    """

    __slots__ = ("ring", "mask")

    def __init__(self, ring: RingTable, mask):
        mask = np.array(mask, dtype=np.bool_, copy=True, order="C")
        if mask.shape != (ring.order,):
            raise ValueError(f"mask length {mask.shape} does not match ring order {ring.order}")
        mask.setflags(write=False)
        self.ring = ring
        self.mask = mask

    @classmethod
    def from_indices(cls, ring: RingTable, indices: Iterable[int]) -> "Subset":
        mask = np.zeros(ring.order, dtype=np.bool_)
        for i in indices:
            mask[i] = True
        return cls(ring, mask)

    @classmethod
    def empty(cls, ring: RingTable) -> "Subset":
        return cls(ring, np.zeros(ring.order, dtype=np.bool_))

    @classmethod
    def full(cls, ring: RingTable) -> "Subset":
        return cls(ring, np.ones(ring.order, dtype=np.bool_))

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def names(self) -> list[str]:
        return [self.ring.elem_names[i] for i in self.indices()]

    def key(self) -> bytes:
        return self.mask.tobytes()

    def __contains__(self, i: int) -> bool:
        return bool(self.mask[i])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subset) and other.ring is self.ring
                and np.array_equal(other.mask, self.mask))

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask.tobytes()))

    def __le__(self, other: "Subset") -> bool:
        self._check_same_ring(other)
        return bool((~self.mask | other.mask).all())

    def __lt__(self, other: "Subset") -> bool:
        return self <= other and self != other

    def __and__(self, other: "Subset") -> "Subset":
        self._check_same_ring(other)
        return Subset(self.ring, self.mask & other.mask)

    def __or__(self, other: "Subset") -> "Subset":
        self._check_same_ring(other)
        return Subset(self.ring, self.mask | other.mask)

    def _check_same_ring(self, other: "Subset") -> None:
        if other.ring is not self.ring:
            raise ValueError("subsets belong to different rings")

    def __repr__(self) -> str:
        inside = ",".join(self.names()) if self.size <= 8 else f"{self.size} elements"
        return f"Subset({self.ring.label}: {inside})"


# ---------------------------------------------------------------------------
# constructors


def make_cyclic_ring(n: int) -> RingTable:
    """The ring of residues mod n (n >= 2)."""
    if n <= 1:
        raise ValueError("cyclic ring needs n >= 2 so that 1 != 0")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return RingTable(add, mul, 0, 1, f"Z({n})",
                     origin=("cyclic", n),
                     elem_names=[str(i) for i in range(n)])


def _mixed_radix_tables(component_tables, sizes):
    """Componentwise table combine for tuple-indexed elements (row-major)."""
    total = 1
    for s in sizes:
        total *= s
    digits = np.empty((total, len(sizes)), dtype=np.int64)
    rest = np.arange(total)
    for pos in range(len(sizes) - 1, -1, -1):
        digits[:, pos] = rest % sizes[pos]
        rest //= sizes[pos]
    out = np.zeros((total, total), dtype=np.int64)
    for pos, table in enumerate(component_tables):
        out *= sizes[pos]
        out += np.asarray(table, dtype=np.int64)[np.ix_(digits[:, pos], digits[:, pos])]
    return out, digits


def index_digits(total_index: int, sizes: Sequence[int]) -> tuple[int, ...]:
    """Decode a row-major packed index into its component digits."""
    out = []
    rest = total_index
    for s in reversed(sizes):
        out.append(rest % s)
        rest //= s
    return tuple(reversed(out))


def pack_digits(digits: Sequence[int], sizes: Sequence[int]) -> int:
    out = 0
    for d, s in zip(digits, sizes):
        out = out * s + d
    return out


def make_product_ring(factors: Sequence[RingTable], order_cap: int = DEFAULT_CONSTRUCTION_CAP) -> RingTable:
    """Direct product with componentwise operations; indices packed row-major."""
    if not factors:
        raise ValueError("product needs at least one factor")
    total = 1
    for f in factors:
        total *= f.order
    if total > order_cap:
        raise CapExceeded(f"product order {total} exceeds cap {order_cap}")
    sizes = [f.order for f in factors]
    add, digits = _mixed_radix_tables([f.add for f in factors], sizes)
    mul, _ = _mixed_radix_tables([f.mul for f in factors], sizes)
    zero = pack_digits([f.zero for f in factors], sizes)
    one = pack_digits([f.one for f in factors], sizes)
    names = ["(" + ",".join(f.elem_names[d] for f, d in zip(factors, row)) + ")"
             for row in digits]
    label = "Prod(" + ",".join(f.label for f in factors) + ")"
    return RingTable(add, mul, zero, one, label,
                     origin=("product", tuple(factors)), elem_names=names)


def _matrix_mul_table(base: RingTable, coords, sizes, k):
    total = len(coords)
    badd = base.add.astype(np.int64)
    bmul = base.mul.astype(np.int64)
    mul = np.empty((total, total), dtype=np.int64)
    for x in range(total):
        xm = coords[x].reshape(k, k)
        for y in range(total):
            ym = coords[y].reshape(k, k)
            out = np.full((k, k), base.zero, dtype=np.int64)
            for i in range(k):
                for j in range(k):
                    acc = base.zero
                    for l in range(k):
                        acc = badd[acc, bmul[xm[i, l], ym[l, j]]]
                    out[i, j] = acc
            mul[x, y] = pack_digits(out.ravel(), sizes)
    return mul


def make_matrix_ring(base: RingTable, k: int, order_cap: int = DEFAULT_CONSTRUCTION_CAP) -> RingTable:
    """Full k x k matrix ring over ``base``; entries packed row-major."""
    if k < 1:
        raise ValueError("matrix size must be >= 1")
    total = base.order ** (k * k)
    if total > order_cap:
        raise CapExceeded(f"matrix ring order {total} exceeds cap {order_cap}")
    sizes = [base.order] * (k * k)
    add, digits = _mixed_radix_tables([base.add] * (k * k), sizes)
    mul = _matrix_mul_table(base, digits, sizes, k)
    zero = pack_digits([base.zero] * (k * k), sizes)
    eye = [[base.one if i == j else base.zero for j in range(k)] for i in range(k)]
    one = pack_digits([v for row in eye for v in row], sizes)

    def render(row):
        rows = []
        for i in range(k):
            rows.append("[" + ",".join(base.elem_names[row[i * k + j]] for j in range(k)) + "]")
        return "[" + ",".join(rows) + "]"

    names = [render(row) for row in digits]
    return RingTable(add, mul, zero, one, f"Mat({base.label},{k})",
                     origin=("matrix", base, k), elem_names=names)


def matrix_entry_digits(T: RingTable, index: int) -> tuple[int, ...]:
    """Row-major base-ring digits of a matrix-ring element."""
    if T.origin is None or T.origin[0] != "matrix":
        raise ValueError("ring was not built by make_matrix_ring")
    base, k = T.origin[1], T.origin[2]
    return index_digits(index, [base.order] * (k * k))


def make_triangular_ring(base: RingTable, k: int, shape: str = "lower",
                         order_cap: int = DEFAULT_CONSTRUCTION_CAP) -> RingTable:
    """Standalone ring of k x k lower (or upper) triangular matrices over ``base``."""
    if k < 2:
        raise ValueError("triangular ring needs k >= 2")
    if shape not in ("lower", "upper"):
        raise ValueError("shape must be 'lower' or 'upper'")
    if shape == "lower":
        positions = [(i, j) for i in range(k) for j in range(k) if i >= j]
    else:
        positions = [(i, j) for i in range(k) for j in range(k) if i <= j]
    m = len(positions)
    total = base.order ** m
    if total > order_cap:
        raise CapExceeded(f"triangular ring order {total} exceeds cap {order_cap}")
    sizes = [base.order] * m
    add, digits = _mixed_radix_tables([base.add] * m, sizes)
    pos_of = {p: t for t, p in enumerate(positions)}
    badd = base.add.astype(np.int64)
    bmul = base.mul.astype(np.int64)
    mul = np.empty((total, total), dtype=np.int64)
    for x in range(total):
        for y in range(total):
            out = []
            for (i, j) in positions:
                acc = base.zero
                for l in range(k):
                    xi = digits[x, pos_of[(i, l)]] if (i, l) in pos_of else base.zero
                    yj = digits[y, pos_of[(l, j)]] if (l, j) in pos_of else base.zero
                    acc = badd[acc, bmul[xi, yj]]
                out.append(acc)
            mul[x, y] = pack_digits(out, sizes)
    zero = pack_digits([base.zero] * m, sizes)
    one = pack_digits([base.one if i == j else base.zero for (i, j) in positions], sizes)

    def render(row):
        rows = []
        for i in range(k):
            cells = []
            for j in range(k):
                cells.append(base.elem_names[row[pos_of[(i, j)]]] if (i, j) in pos_of
                             else base.elem_names[base.zero])
            rows.append("[" + ",".join(cells) + "]")
        return "[" + ",".join(rows) + "]"

    names = [render(row) for row in digits]
    return RingTable(add, mul, zero, one, f"Tri({base.label},{k},{shape})",
                     origin=("tri", base, k, shape, tuple(positions)), elem_names=names)


def opposite_ring(T: RingTable) -> RingTable:
    """Same additive group, multiplication reversed."""
    return RingTable(T.add, T.mul.T.copy(), T.zero, T.one, f"Op({T.label})",
                     origin=("op", T), elem_names=T.elem_names)


def quotient_ring(T: RingTable, ideal: Subset) -> tuple[RingTable, np.ndarray]:
    """Quotient by a proper two-sided ideal; returns the ring and the projection.

    Cosets are indexed by their minimal representative; the projection maps
    each element index of ``T`` to its coset index.  Well-definedness of coset
    multiplication is verified, not assumed, so a subset that fails to be a
    two-sided ideal is rejected with a witness.
    """
    from .substructures import is_ideal  # local import to avoid a cycle

    if ideal.ring is not T:
        raise ValueError("ideal belongs to a different ring")
    if ideal.mask.all():
        raise ValueError("quotient by the whole ring is not a ring (1 = 0)")
    if not is_ideal(T, ideal, "two-sided"):
        raise ValueError("subset is not a two-sided ideal")
    iidx = ideal.indices()
    coset_min = np.full(T.order, -1, dtype=np.int64)
    for x in range(T.order):
        coset_min[x] = T.add[x, iidx].min()
    reps = np.unique(coset_min)
    proj = np.searchsorted(reps, coset_min)
    m = len(reps)
    qadd = proj[T.add[np.ix_(reps, reps)]]
    qmul = proj[T.mul[np.ix_(reps, reps)]]
    # verify coset operations are representative-independent
    if not np.array_equal(proj[T.add], qadd[proj[:, None], proj[None, :]]):
        raise ValueError("coset addition ill-defined (not an additive subgroup)")
    if not np.array_equal(proj[T.mul], qmul[proj[:, None], proj[None, :]]):
        a, b = np.argwhere(proj[T.mul] != qmul[proj[:, None], proj[None, :]])[0]
        raise ValueError(f"coset multiplication ill-defined at ({T.elem_names[a]}, {T.elem_names[b]})")
    names = [f"[{T.elem_names[r]}]" for r in reps]
    Q = RingTable(qadd, qmul, int(proj[T.zero]), int(proj[T.one]),
                  f"{T.label}/{ideal.size}",
                  origin=("quotient", T, ideal), elem_names=names)
    return Q, proj


def subring_as_ring(T: RingTable, sub: Subset) -> tuple[RingTable, np.ndarray]:
    """Extract a unital subring as a standalone ring.

    Returns the new ring and the index embedding (new index -> parent index).
    """
    from .substructures import is_subring

    if not is_subring(T, sub):
        raise ValueError("subset is not a unital subring")
    embed = sub.indices()
    back = np.full(T.order, -1, dtype=np.int64)
    back[embed] = np.arange(len(embed))
    add = back[T.add[np.ix_(embed, embed)]]
    mul = back[T.mul[np.ix_(embed, embed)]]
    names = [T.elem_names[i] for i in embed]
    R = RingTable(add, mul, int(back[T.zero]), int(back[T.one]),
                  f"{T.label}|{sub.size}",
                  origin=("subring", T, sub), elem_names=names)
    return R, embed


def scope_quotient(T: RingTable, scope: Subset, ideal: Subset) -> RingTable:
    """Quotient of the subring ``scope`` by an ideal of it (both given in T)."""
    R, embed = subring_as_ring(T, scope)
    local = Subset(R, ideal.mask[embed])
    return quotient_ring(R, local)[0]


# ---------------------------------------------------------------------------
# element-level queries


def characteristic(T: RingTable) -> int:
    """Additive order of 1 (always positive on finite rings)."""
    k, acc = 1, T.one
    while acc != T.zero:
        acc = int(T.add[acc, T.one])
        k += 1
    return k


def additive_order(T: RingTable, x: int) -> int:
    k, acc = 1, x
    while acc != T.zero:
        acc = int(T.add[acc, x])
        k += 1
    return k


def centralizer(T: RingTable, X: Subset) -> Subset:
    """Elements commuting with every member of X."""
    idx = X.indices()
    if idx.size == 0:
        return Subset.full(T)
    mask = (T.mul[:, idx] == T.mul[idx, :].T).all(axis=1)
    return Subset(T, mask)


def center(T: RingTable) -> Subset:
    return centralizer(T, Subset.full(T))


def is_commutative(T: RingTable) -> bool:
    return bool(np.array_equal(T.mul, T.mul.T))


def is_domain(T: RingTable) -> bool:
    """No zero divisors (2 <= order so 1 != 0 already holds)."""
    nz = np.flatnonzero(np.arange(T.order) != T.zero)
    return not (T.mul[np.ix_(nz, nz)] == T.zero).any()


def is_division_ring(T: RingTable) -> bool:
    for x in range(T.order):
        if x == T.zero:
            continue
        inv = np.flatnonzero((T.mul[x] == T.one) & (T.mul[:, x] == T.one))
        if inv.size == 0:
            return False
    return True


def units_count(T: RingTable) -> int:
    count = 0
    for x in range(T.order):
        if ((T.mul[x] == T.one) & (T.mul[:, x] == T.one)).any():
            count += 1
    return count


# ---------------------------------------------------------------------------
# isomorphism search


def _additive_order_profile(T: RingTable) -> dict[int, int]:
    prof: dict[int, int] = {}
    for x in range(T.order):
        o = additive_order(T, x)
        prof[o] = prof.get(o, 0) + 1
    return prof


def _invariant_vector(T: RingTable, x: int) -> tuple:
    return (additive_order(T, x),
            int(T.mul[x, x] == x),
            int(T.mul[x, x] == T.zero))


def find_isomorphism(A: RingTable, B: RingTable,
                     iso_cap: int = DEFAULT_ISO_CAP) -> Optional[np.ndarray]:
    """Search for a unit-preserving ring isomorphism A -> B.

    Returns the image array (``img[a]`` is the image of ``a``) or None.  The
    search maps a generating sequence of A and forces everything else through
    additive/multiplicative closure, pruning candidate images by additive
    order and idempotency/square-zero flags.
    """
    if A.order > iso_cap or B.order > iso_cap:
        raise CapExceeded(f"isomorphism search capped at order {iso_cap}")
    if A.order != B.order:
        return None
    if characteristic(A) != characteristic(B):
        return None
    if _additive_order_profile(A) != _additive_order_profile(B):
        return None

    n = A.order

    def propagate(img):
        """Close a partial map under + and *; return False on conflict."""
        known = [x for x in range(n) if img[x] >= 0]
        head = 0
        while head < len(known):
            x = known[head]
            head += 1
            for y in list(known):
                for ta, tb in ((A.add, B.add), (A.mul, B.mul)):
                    for (u, v) in ((x, y), (y, x)):
                        z = int(ta[u, v])
                        w = int(tb[img[u], img[v]])
                        if img[z] < 0:
                            img[z] = w
                            known.append(z)
                        elif img[z] != w:
                            return False
        return True

    base = np.full(n, -1, dtype=np.int64)
    base[A.zero] = B.zero
    base[A.one] = B.one
    if not propagate(base):
        return None

    b_profiles = [_invariant_vector(B, y) for y in range(n)]

    def extend(img):
        unmapped = [x for x in range(n) if img[x] < 0]
        if not unmapped:
            used = set(int(v) for v in img)
            if len(used) != n:
                return None
            if np.array_equal(img[A.add], B.add[img[:, None], img[None, :]]) and \
               np.array_equal(img[A.mul], B.mul[img[:, None], img[None, :]]):
                return img
            return None
        g = unmapped[0]
        want = _invariant_vector(A, g)
        taken = set(int(v) for v in img if v >= 0)
        for cand in range(n):
            if cand in taken or b_profiles[cand] != want:
                continue
            trial = img.copy()
            trial[g] = cand
            if propagate(trial):
                out = extend(trial)
                if out is not None:
                    return out
        return None

    return extend(base)
