"""Pure-Python bitmask kernels: the import-time fallback for the compiled core.

All functions operate on per-vertex neighborhood bitmasks.  Subset scans run
in cardinality order, enumerating each cardinality in lexicographic order of
the sorted vertex tuples, so the first feasible subset found is the
lexicographically smallest optimum.  The compiled kernel in ``_ckernels``
implements byte-for-byte identical semantics.
"""

from __future__ import annotations

BACKEND = "python"

KIND_DOMINATING = 0
KIND_INDEPENDENT_DOMINATING = 1
KIND_CONNECTED_DOMINATING = 2
KIND_CONVEX_DOMINATING = 3
KIND_WEAKLY_CONNECTED_DOMINATING = 4
KIND_SUPER_DOMINATING = 5
KIND_INDEPENDENT = 6

_INDEPENDENT_KINDS = (KIND_INDEPENDENT_DOMINATING, KIND_INDEPENDENT)


def _connected_mask(sub: int, open_m) -> bool:
    reach = sub & (-sub)
    frontier = reach
    while frontier:
        grow = 0
        f = frontier
        while f:
            b = f & (-f)
            f ^= b
            grow |= open_m[b.bit_length() - 1]
        frontier = grow & sub & ~reach
        reach |= frontier
    return reach == sub


def _weakly_connected(sub: int, full: int, open_m) -> bool:
    # Caller guarantees N[sub] == full, so the weak subgraph spans all vertices.
    reach = sub & (-sub)
    frontier = reach
    while frontier:
        grow = 0
        f = frontier
        while f:
            b = f & (-f)
            f ^= b
            v = b.bit_length() - 1
            if b & sub:
                grow |= open_m[v]
            else:
                grow |= open_m[v] & sub
        frontier = grow & ~reach
        reach |= frontier
    return reach == full


def _convex(sub: int, n: int, intervals) -> bool:
    rest = sub
    while rest:
        ub = rest & (-rest)
        rest ^= ub
        u = ub.bit_length() - 1
        others = rest
        while others:
            wb = others & (-others)
            others ^= wb
            w = wb.bit_length() - 1
            if intervals[u * n + w] & ~sub:
                return False
    return True


def _super(sub: int, full: int, open_m) -> bool:
    out = full & ~sub
    while out:
        vb = out & (-out)
        out ^= vb
        allowed = sub | vb
        cand = open_m[vb.bit_length() - 1] & sub
        ok = False
        while cand:
            ub = cand & (-cand)
            cand ^= ub
            if not (open_m[ub.bit_length() - 1] & ~allowed):
                ok = True
                break
        if not ok:
            return False
    return True


def _leaf_ok(kind: int, sub: int, cover: int, full: int, n: int, open_m, intervals) -> bool:
    if kind == KIND_INDEPENDENT:
        return True
    if cover != full:
        return False
    if kind in (KIND_DOMINATING, KIND_INDEPENDENT_DOMINATING):
        return True
    if kind == KIND_CONNECTED_DOMINATING:
        return _connected_mask(sub, open_m)
    if kind == KIND_CONVEX_DOMINATING:
        return _convex(sub, n, intervals)
    if kind == KIND_WEAKLY_CONNECTED_DOMINATING:
        return _weakly_connected(sub, full, open_m)
    if kind == KIND_SUPER_DOMINATING:
        return _super(sub, full, open_m)
    raise ValueError(f"unknown kind code {kind}")


def _suffix_cover(n: int, closed_m) -> list[int]:
    suffix = [0] * (n + 2)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | closed_m[v]
    return suffix


def _scan_k(kind, n, k, open_m, closed_m, intervals, full, suffix):
    """Lex-first feasible subset of size k, or None."""
    independent = kind in _INDEPENDENT_KINDS
    covering = kind != KIND_INDEPENDENT

    def rec(start: int, picked: int, sub: int, cover: int):
        if picked == k:
            return sub if _leaf_ok(kind, sub, cover, full, n, open_m, intervals) else None
        need = k - picked
        for v in range(start, n - need + 1):
            bit = 1 << v
            if independent and (open_m[v] & sub):
                continue
            new_cover = cover | closed_m[v]
            if covering and (full & ~(new_cover | suffix[v + 1])):
                continue
            found = rec(v + 1, picked + 1, sub | bit, new_cover)
            if found is not None:
                return found
        return None

    return rec(0, 0, 0, 0)


def scan_min(kind: int, n: int, open_m, closed_m, intervals=None):
    """Minimum feasible subset: ``(size, mask)`` or None when infeasible."""
    full = (1 << n) - 1
    suffix = _suffix_cover(n, closed_m)
    for k in range(1, n + 1):
        found = _scan_k(kind, n, k, open_m, closed_m, intervals, full, suffix)
        if found is not None:
            return k, found
    return None


def scan_max_independent(n: int, open_m):
    """Maximum independent set: ``(size, mask)``; the empty set for n == 0."""
    full = (1 << n) - 1
    suffix = _suffix_cover(n, [0] * n)
    for k in range(n, 0, -1):
        found = _scan_k(KIND_INDEPENDENT, n, k, open_m, [0] * n, None, full, suffix)
        if found is not None:
            return k, found
    return 0, 0


def enumerate_size(kind: int, n: int, open_m, closed_m, intervals, k: int, cap: int):
    """All feasible subsets of size k in lex order: ``(masks, hit_cap)``."""
    full = (1 << n) - 1
    suffix = _suffix_cover(n, closed_m)
    independent = kind in _INDEPENDENT_KINDS
    covering = kind != KIND_INDEPENDENT
    out: list[int] = []

    def rec(start: int, picked: int, sub: int, cover: int) -> bool:
        if picked == k:
            if _leaf_ok(kind, sub, cover, full, n, open_m, intervals):
                out.append(sub)
                if len(out) > cap:
                    return False
            return True
        need = k - picked
        for v in range(start, n - need + 1):
            if independent and (open_m[v] & sub):
                continue
            new_cover = cover | closed_m[v]
            if covering and (full & ~(new_cover | suffix[v + 1])):
                continue
            if not rec(v + 1, picked + 1, sub | (1 << v), new_cover):
                return False
        return True

    if k == 0:
        if _leaf_ok(kind, 0, 0, full, n, open_m, intervals):
            out.append(0)
        return out, False
    completed = rec(0, 0, 0, 0)
    return out, not completed


def _rev_mask(mask: int, n: int) -> int:
    rev = 0
    for v in range(n):
        if mask & (1 << v):
            rev |= 1 << (n - 1 - v)
    return rev


def roman_min(n: int, closed_m):
    """Minimum Roman weight over all 2-label sets B2, with B1 forced.

    For a fixed B2 the cheapest completion labels exactly the vertices
    outside N[B2] with 1, giving weight ``2|B2| + n - |N[B2]|``; every
    minimum-weight assignment has this forced form, since a 1-label inside
    N[B2] could be lowered to 0.  Returns ``(weight, b2_mask)`` with ties
    broken by fewest 2-labels, then lexicographically smallest B2.
    """
    full = (1 << n) - 1
    suffix = _suffix_cover(n, closed_m)
    state = {"key": (3 * n + 1, 0, 0), "mask": 0}

    def rec(v: int, twos: int, cover: int, mask: int):
        floor = 2 * twos + (full & ~(cover | suffix[v])).bit_count()
        if floor > state["key"][0]:
            return
        if v == n:
            weight = 2 * twos + (full & ~cover).bit_count()
            key = (weight, twos, -_rev_mask(mask, n))
            if key < state["key"]:
                state["key"] = key
                state["mask"] = mask
            return
        rec(v + 1, twos, cover, mask)
        rec(v + 1, twos + 1, cover | closed_m[v], mask | (1 << v))

    rec(0, 0, 0, 0)
    return state["key"][0], state["mask"]


def roman_enumerate(n: int, closed_m, target_weight: int, cap: int):
    """All B2 masks whose forced completion has the target weight."""
    full = (1 << n) - 1
    suffix = _suffix_cover(n, closed_m)
    out: list[int] = []

    def rec(v: int, twos: int, cover: int, mask: int) -> bool:
        floor = 2 * twos + (full & ~(cover | suffix[v])).bit_count()
        if floor > target_weight:
            return True
        if v == n:
            if 2 * twos + (full & ~cover).bit_count() == target_weight:
                out.append(mask)
                if len(out) > cap:
                    return False
            return True
        if not rec(v + 1, twos, cover, mask):
            return False
        return rec(v + 1, twos + 1, cover | closed_m[v], mask | (1 << v))

    completed = rec(0, 0, 0, 0)
    out.sort(key=lambda m: (m.bit_count(), -_rev_mask(m, n)))
    return out, not completed
