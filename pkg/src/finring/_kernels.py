"""Hot closure/scan kernels over Cayley tables.

Everything here operates on raw tables: ``add``/``mul`` are ``(n, n)`` int32
arrays of element indices, masks are ``(n,)`` bool arrays, ``scope`` is a
sorted int64 index vector.  Two interchangeable backends exist:

* loop kernels compiled with numba ``@njit`` (fast, early-exit scans), and
* vectorised plain-numpy fallbacks.

The active backend is chosen once at import time from the ``FINRING_NUMBA``
environment variable: ``auto`` (default) uses numba when importable, ``0``
forces the numpy fallback, ``1`` requires numba.  Both implementations stay
importable (``numpy_impl`` / ``numba_impl``) so they can be benchmarked and
cross-checked against each other.

Witness-returning scans iterate in ascending element-index order, so the
first counterexample they report is canonical.
"""

from __future__ import annotations

import os
from types import SimpleNamespace

import numpy as np

__all__ = [
    "ACTIVE_BACKEND",
    "numpy_impl",
    "numba_impl",
    "additive_close",
    "subring_close",
    "ideal_close",
    "not_prime_witness",
    "not_semiprime_witness",
    "not_completely_prime_witness",
    "cp_right_witness",
    "sandwich_pairs",
    "right_quadratic_witness",
    "left_quadratic_witness",
]


# ---------------------------------------------------------------------------
# numpy backend (vectorised)


def _additive_close_np(add, neg, zero, mask):
    cur = mask.copy()
    cur[zero] = True
    while True:
        idx = np.flatnonzero(cur)
        nxt = cur.copy()
        nxt[neg[idx]] = True
        nxt[add[np.ix_(idx, idx)].ravel()] = True
        if np.array_equal(nxt, cur):
            return cur
        cur = nxt


def _subring_close_np(add, neg, mul, zero, mask):
    cur = mask.copy()
    cur[zero] = True
    while True:
        idx = np.flatnonzero(cur)
        nxt = cur.copy()
        nxt[neg[idx]] = True
        nxt[add[np.ix_(idx, idx)].ravel()] = True
        nxt[mul[np.ix_(idx, idx)].ravel()] = True
        if np.array_equal(nxt, cur):
            return cur
        cur = nxt


def _ideal_close_np(add, neg, mul, zero, mask, scope, absorb_left, absorb_right):
    cur = mask.copy()
    cur[zero] = True
    while True:
        idx = np.flatnonzero(cur)
        nxt = cur.copy()
        nxt[neg[idx]] = True
        nxt[add[np.ix_(idx, idx)].ravel()] = True
        if absorb_left:
            nxt[mul[np.ix_(scope, idx)].ravel()] = True
        if absorb_right:
            nxt[mul[np.ix_(idx, scope)].ravel()] = True
        if np.array_equal(nxt, cur):
            return cur
        cur = nxt


def _not_prime_witness_np(mul, scope, pmask):
    # first (a, b) in scope order with a,b outside P and a*s*b in P for all s
    outside = scope[~pmask[scope]]
    if outside.size == 0:
        return (-1, -1)
    for a in outside:
        asb = mul[mul[a, scope]][:, outside]  # [s, j] = (a*s) * b_j
        bad = pmask[asb].all(axis=0)
        hits = np.flatnonzero(bad)
        if hits.size:
            return (int(a), int(outside[hits[0]]))
    return (-1, -1)


def _not_semiprime_witness_np(mul, scope, pmask):
    outside = scope[~pmask[scope]]
    for a in outside:
        if pmask[mul[mul[a, scope], a]].all():
            return int(a)
    return -1


def _not_completely_prime_witness_np(mul, scope, pmask):
    outside = scope[~pmask[scope]]
    if outside.size == 0:
        return (-1, -1)
    prod_in_p = pmask[mul[np.ix_(outside, outside)]]
    hits = np.argwhere(prod_in_p)
    if hits.size:
        a, b = hits[0]
        return (int(outside[a]), int(outside[b]))
    return (-1, -1)


def _cp_right_witness_np(mul, pmask):
    # Reyes violation: aP <= P, ab in P, a and b outside P
    n = mul.shape[0]
    pidx = np.flatnonzero(pmask)
    keeps = (
        pmask[mul[:, pidx]].all(axis=1) if pidx.size else np.ones(n, dtype=np.bool_)
    )
    cand_a = np.flatnonzero(keeps & ~pmask)
    cand_b = np.flatnonzero(~pmask)
    if cand_a.size == 0 or cand_b.size == 0:
        return (-1, -1)
    prod_in_p = pmask[mul[np.ix_(cand_a, cand_b)]]
    hits = np.argwhere(prod_in_p)
    if hits.size:
        i, j = hits[0]
        return (int(cand_a[i]), int(cand_b[j]))
    return (-1, -1)


def _sandwich_pairs_np(mul, pmask):
    # qual[a, b] = True iff a*t*b in P for every t
    step = mul[mul]  # [a, t, b] = (a*t)*b
    return pmask[step].all(axis=1)


def _right_quadratic_witness_np(add, mul, scope, zero, t):
    # t^2 + t*c1 + c2 == 0 with c1, c2 in scope; coefficients act from the right
    t2 = mul[t, t]
    v = add[t2, mul[t, scope]]
    hit = np.argwhere(add[np.ix_(v, scope)] == zero)
    if hit.size:
        i, j = hit[0]
        return (int(scope[i]), int(scope[j]))
    return (-1, -1)


def _left_quadratic_witness_np(add, mul, scope, zero, t):
    t2 = mul[t, t]
    v = add[t2, mul[scope, t]]
    hit = np.argwhere(add[np.ix_(v, scope)] == zero)
    if hit.size:
        i, j = hit[0]
        return (int(scope[i]), int(scope[j]))
    return (-1, -1)


numpy_impl = SimpleNamespace(
    name="numpy",
    additive_close=_additive_close_np,
    subring_close=_subring_close_np,
    ideal_close=_ideal_close_np,
    not_prime_witness=_not_prime_witness_np,
    not_semiprime_witness=_not_semiprime_witness_np,
    not_completely_prime_witness=_not_completely_prime_witness_np,
    cp_right_witness=_cp_right_witness_np,
    sandwich_pairs=_sandwich_pairs_np,
    right_quadratic_witness=_right_quadratic_witness_np,
    left_quadratic_witness=_left_quadratic_witness_np,
)


# ---------------------------------------------------------------------------
# loop backend (numba-compiled when available)


def _additive_close_loop(add, neg, zero, mask):
    n = add.shape[0]
    out = mask.copy()
    out[zero] = True
    elems = np.empty(n, np.int64)
    cnt = 0
    for i in range(n):
        if out[i]:
            elems[cnt] = i
            cnt += 1
    head = 0
    while head < cnt:
        x = elems[head]
        head += 1
        y = neg[x]
        if not out[y]:
            out[y] = True
            elems[cnt] = y
            cnt += 1
        j = 0
        while j < cnt:
            s = add[x, elems[j]]
            if not out[s]:
                out[s] = True
                elems[cnt] = s
                cnt += 1
            j += 1
    return out


def _subring_close_loop(add, neg, mul, zero, mask):
    n = add.shape[0]
    out = mask.copy()
    out[zero] = True
    elems = np.empty(n, np.int64)
    cnt = 0
    for i in range(n):
        if out[i]:
            elems[cnt] = i
            cnt += 1
    head = 0
    while head < cnt:
        x = elems[head]
        head += 1
        y = neg[x]
        if not out[y]:
            out[y] = True
            elems[cnt] = y
            cnt += 1
        j = 0
        while j < cnt:
            e = elems[j]
            for s in (add[x, e], mul[x, e], mul[e, x]):
                if not out[s]:
                    out[s] = True
                    elems[cnt] = s
                    cnt += 1
            j += 1
    return out


def _ideal_close_loop(add, neg, mul, zero, mask, scope, absorb_left, absorb_right):
    n = add.shape[0]
    out = mask.copy()
    out[zero] = True
    elems = np.empty(n, np.int64)
    cnt = 0
    for i in range(n):
        if out[i]:
            elems[cnt] = i
            cnt += 1
    head = 0
    while head < cnt:
        x = elems[head]
        head += 1
        y = neg[x]
        if not out[y]:
            out[y] = True
            elems[cnt] = y
            cnt += 1
        j = 0
        while j < cnt:
            s = add[x, elems[j]]
            if not out[s]:
                out[s] = True
                elems[cnt] = s
                cnt += 1
            j += 1
        for k in range(scope.shape[0]):
            t = scope[k]
            if absorb_left:
                s = mul[t, x]
                if not out[s]:
                    out[s] = True
                    elems[cnt] = s
                    cnt += 1
            if absorb_right:
                s = mul[x, t]
                if not out[s]:
                    out[s] = True
                    elems[cnt] = s
                    cnt += 1
    return out


def _not_prime_witness_loop(mul, scope, pmask):
    m = scope.shape[0]
    for i in range(m):
        a = scope[i]
        if pmask[a]:
            continue
        for j in range(m):
            b = scope[j]
            if pmask[b]:
                continue
            ok = True
            for k in range(m):
                if not pmask[mul[mul[a, scope[k]], b]]:
                    ok = False
                    break
            if ok:
                return (int(a), int(b))
    return (-1, -1)


def _not_semiprime_witness_loop(mul, scope, pmask):
    m = scope.shape[0]
    for i in range(m):
        a = scope[i]
        if pmask[a]:
            continue
        ok = True
        for k in range(m):
            if not pmask[mul[mul[a, scope[k]], a]]:
                ok = False
                break
        if ok:
            return int(a)
    return -1


def _not_completely_prime_witness_loop(mul, scope, pmask):
    m = scope.shape[0]
    for i in range(m):
        a = scope[i]
        if pmask[a]:
            continue
        for j in range(m):
            b = scope[j]
            if pmask[b]:
                continue
            if pmask[mul[a, b]]:
                return (int(a), int(b))
    return (-1, -1)


def _cp_right_witness_loop(mul, pmask):
    n = mul.shape[0]
    for a in range(n):
        if pmask[a]:
            continue
        keeps = True
        for p in range(n):
            if pmask[p] and not pmask[mul[a, p]]:
                keeps = False
                break
        if not keeps:
            continue
        for b in range(n):
            if pmask[b]:
                continue
            if pmask[mul[a, b]]:
                return (int(a), int(b))
    return (-1, -1)


def _sandwich_pairs_loop(mul, pmask):
    n = mul.shape[0]
    qual = np.empty((n, n), np.bool_)
    for a in range(n):
        for b in range(n):
            ok = True
            for t in range(n):
                if not pmask[mul[mul[a, t], b]]:
                    ok = False
                    break
            qual[a, b] = ok
    return qual


def _right_quadratic_witness_loop(add, mul, scope, zero, t):
    m = scope.shape[0]
    t2 = mul[t, t]
    for i in range(m):
        v = add[t2, mul[t, scope[i]]]
        for j in range(m):
            if add[v, scope[j]] == zero:
                return (int(scope[i]), int(scope[j]))
    return (-1, -1)


def _left_quadratic_witness_loop(add, mul, scope, zero, t):
    m = scope.shape[0]
    t2 = mul[t, t]
    for i in range(m):
        v = add[t2, mul[scope[i], t]]
        for j in range(m):
            if add[v, scope[j]] == zero:
                return (int(scope[i]), int(scope[j]))
    return (-1, -1)


_LOOP_FNS = {
    "additive_close": _additive_close_loop,
    "subring_close": _subring_close_loop,
    "ideal_close": _ideal_close_loop,
    "not_prime_witness": _not_prime_witness_loop,
    "not_semiprime_witness": _not_semiprime_witness_loop,
    "not_completely_prime_witness": _not_completely_prime_witness_loop,
    "cp_right_witness": _cp_right_witness_loop,
    "sandwich_pairs": _sandwich_pairs_loop,
    "right_quadratic_witness": _right_quadratic_witness_loop,
    "left_quadratic_witness": _left_quadratic_witness_loop,
}


def _build_numba_impl():
    from numba import njit

    ns = SimpleNamespace(name="numba")
    for fname, fn in _LOOP_FNS.items():
        setattr(ns, fname, njit(cache=True)(fn))
    return ns


_FLAG = os.environ.get("FINRING_NUMBA", "auto").strip().lower()

numba_impl = None
if _FLAG not in ("0", "false", "off", "no"):
    try:
        numba_impl = _build_numba_impl()
    except ImportError:
        if _FLAG in ("1", "true", "on", "yes"):
            raise

_active = numba_impl if numba_impl is not None else numpy_impl
ACTIVE_BACKEND = _active.name

additive_close = _active.additive_close
subring_close = _active.subring_close
ideal_close = _active.ideal_close
not_prime_witness = _active.not_prime_witness
not_semiprime_witness = _active.not_semiprime_witness
not_completely_prime_witness = _active.not_completely_prime_witness
cp_right_witness = _active.cp_right_witness
sandwich_pairs = _active.sandwich_pairs
right_quadratic_witness = _active.right_quadratic_witness
left_quadratic_witness = _active.left_quadratic_witness
