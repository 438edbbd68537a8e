# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; semantics mirror rootdom._pykernels exactly.

Same scan order (cardinality, then lexicographic within a cardinality),
same pruning, same tie-breaking, so witnesses agree bit for bit with the
pure-Python fallback.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"

KIND_DOMINATING = 0
KIND_INDEPENDENT_DOMINATING = 1
KIND_CONNECTED_DOMINATING = 2
KIND_CONVEX_DOMINATING = 3
KIND_WEAKLY_CONNECTED_DOMINATING = 4
KIND_SUPER_DOMINATING = 5
KIND_INDEPENDENT = 6

ctypedef unsigned long long u64

cdef u64 NOT_FOUND = <u64> - 1


cdef u64* _to_array(seq, int size) except NULL:
    cdef u64* arr = <u64*> malloc((size if size > 0 else 1) * sizeof(u64))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(size):
        arr[i] = seq[i]
    return arr


cdef bint _connected_mask(u64 sub, u64* open_m) nogil:
    cdef u64 reach = sub & (~sub + 1)
    cdef u64 frontier = reach
    cdef u64 grow, f, bit
    while frontier:
        grow = 0
        f = frontier
        while f:
            bit = f & (~f + 1)
            f ^= bit
            grow |= open_m[__builtin_ctzll(bit)]
        frontier = grow & sub & ~reach
        reach |= frontier
    return reach == sub


cdef bint _weakly_connected(u64 sub, u64 full, u64* open_m) nogil:
    cdef u64 reach = sub & (~sub + 1)
    cdef u64 frontier = reach
    cdef u64 grow, f, bit
    cdef int v
    while frontier:
        grow = 0
        f = frontier
        while f:
            bit = f & (~f + 1)
            f ^= bit
            v = __builtin_ctzll(bit)
            if bit & sub:
                grow |= open_m[v]
            else:
                grow |= open_m[v] & sub
        frontier = grow & ~reach
        reach |= frontier
    return reach == full


cdef bint _convex(u64 sub, int n, u64* intervals) nogil:
    cdef u64 rest = sub
    cdef u64 others, ub, wb
    cdef int u, w
    while rest:
        ub = rest & (~rest + 1)
        rest ^= ub
        u = __builtin_ctzll(ub)
        others = rest
        while others:
            wb = others & (~others + 1)
            others ^= wb
            w = __builtin_ctzll(wb)
            if intervals[u * n + w] & ~sub:
                return False
    return True


cdef bint _super(u64 sub, u64 full, u64* open_m) nogil:
    cdef u64 out = full & ~sub
    cdef u64 vb, cand, ub, allowed
    cdef bint ok
    while out:
        vb = out & (~out + 1)
        out ^= vb
        allowed = sub | vb
        cand = open_m[__builtin_ctzll(vb)] & sub
        ok = False
        while cand:
            ub = cand & (~cand + 1)
            cand ^= ub
            if (open_m[__builtin_ctzll(ub)] & ~allowed) == 0:
                ok = True
                break
        if not ok:
            return False
    return True


cdef bint _leaf_ok(int kind, u64 sub, u64 cover, u64 full, int n,
                   u64* open_m, u64* intervals) nogil:
    if kind == 6:
        return True
    if cover != full:
        return False
    if kind == 0 or kind == 1:
        return True
    if kind == 2:
        return _connected_mask(sub, open_m)
    if kind == 3:
        return _convex(sub, n, intervals)
    if kind == 4:
        return _weakly_connected(sub, full, open_m)
    return _super(sub, full, open_m)


cdef u64 _rec_scan(int kind, int n, int k, int start, int picked, u64 sub,
                   u64 cover, u64 full, u64* open_m, u64* closed_m,
                   u64* intervals, u64* suffix) nogil:
    cdef int v
    cdef u64 bit, new_cover, found
    cdef bint independent = (kind == 1 or kind == 6)
    cdef bint covering = kind != 6
    if picked == k:
        if _leaf_ok(kind, sub, cover, full, n, open_m, intervals):
            return sub
        return NOT_FOUND
    for v in range(start, n - (k - picked) + 1):
        bit = (<u64>1) << v
        if independent and (open_m[v] & sub):
            continue
        new_cover = cover | closed_m[v]
        if covering and (full & ~(new_cover | suffix[v + 1])):
            continue
        found = _rec_scan(kind, n, k, v + 1, picked + 1, sub | bit, new_cover,
                          full, open_m, closed_m, intervals, suffix)
        if found != NOT_FOUND:
            return found
    return NOT_FOUND


cdef int _rec_enum(int kind, int n, int k, int start, int picked, u64 sub,
                   u64 cover, u64 full, u64* open_m, u64* closed_m,
                   u64* intervals, u64* suffix, list out, long cap):
    cdef int v
    cdef u64 bit, new_cover
    cdef bint independent = (kind == 1 or kind == 6)
    cdef bint covering = kind != 6
    if picked == k:
        if _leaf_ok(kind, sub, cover, full, n, open_m, intervals):
            out.append(sub)
            if len(out) > cap:
                return 0
        return 1
    for v in range(start, n - (k - picked) + 1):
        bit = (<u64>1) << v
        if independent and (open_m[v] & sub):
            continue
        new_cover = cover | closed_m[v]
        if covering and (full & ~(new_cover | suffix[v + 1])):
            continue
        if not _rec_enum(kind, n, k, v + 1, picked + 1, sub | bit, new_cover,
                         full, open_m, closed_m, intervals, suffix, out, cap):
            return 0
    return 1


cdef u64* _suffix_cover(int n, u64* closed_m) except NULL:
    cdef u64* suffix = <u64*> malloc((n + 2) * sizeof(u64))
    if suffix == NULL:
        raise MemoryError()
    suffix[n + 1] = 0
    suffix[n] = 0
    cdef int v
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | closed_m[v]
    return suffix


def scan_min(int kind, int n, open_m_seq, closed_m_seq, intervals_seq=None):
    """Minimum feasible subset: ``(size, mask)`` or None when infeasible."""
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* open_m = NULL
    cdef u64* closed_m = NULL
    cdef u64* intervals = NULL
    cdef u64* suffix = NULL
    cdef u64 found
    cdef int k
    try:
        open_m = _to_array(open_m_seq, n)
        closed_m = _to_array(closed_m_seq, n)
        if intervals_seq is not None:
            intervals = _to_array(intervals_seq, n * n)
        suffix = _suffix_cover(n, closed_m)
        for k in range(1, n + 1):
            found = _rec_scan(kind, n, k, 0, 0, 0, 0, full,
                              open_m, closed_m, intervals, suffix)
            if found != NOT_FOUND:
                return k, found
        return None
    finally:
        free(open_m)
        free(closed_m)
        free(intervals)
        free(suffix)


def scan_max_independent(int n, open_m_seq):
    """Maximum independent set: ``(size, mask)``; the empty set for n == 0."""
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* open_m = NULL
    cdef u64* zeros = NULL
    cdef u64* suffix = NULL
    cdef u64 found
    cdef int k, i
    try:
        open_m = _to_array(open_m_seq, n)
        zeros = <u64*> malloc((n if n else 1) * sizeof(u64))
        if zeros == NULL:
            raise MemoryError()
        for i in range(n):
            zeros[i] = 0
        suffix = _suffix_cover(n, zeros)
        for k in range(n, 0, -1):
            found = _rec_scan(KIND_INDEPENDENT, n, k, 0, 0, 0, 0, full,
                              open_m, zeros, NULL, suffix)
            if found != NOT_FOUND:
                return k, found
        return 0, 0
    finally:
        free(open_m)
        free(zeros)
        free(suffix)


def enumerate_size(int kind, int n, open_m_seq, closed_m_seq, intervals_seq,
                   int k, long cap):
    """All feasible subsets of size k in lex order: ``(masks, hit_cap)``."""
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* open_m = NULL
    cdef u64* closed_m = NULL
    cdef u64* intervals = NULL
    cdef u64* suffix = NULL
    cdef list out = []
    cdef int completed
    try:
        open_m = _to_array(open_m_seq, n)
        closed_m = _to_array(closed_m_seq, n)
        if intervals_seq is not None:
            intervals = _to_array(intervals_seq, n * n)
        suffix = _suffix_cover(n, closed_m)
        if k == 0:
            if _leaf_ok(kind, 0, 0, full, n, open_m, intervals):
                out.append(0)
            return out, False
        completed = _rec_enum(kind, n, k, 0, 0, 0, 0, full,
                              open_m, closed_m, intervals, suffix, out, cap)
        return out, not completed
    finally:
        free(open_m)
        free(closed_m)
        free(intervals)
        free(suffix)


cdef u64 _rev_mask(u64 mask, int n) nogil:
    cdef u64 rev = 0
    cdef int v
    for v in range(n):
        if mask & ((<u64>1) << v):
            rev |= (<u64>1) << (n - 1 - v)
    return rev


cdef struct RomanBest:
    long weight
    long twos
    u64 rev
    u64 mask


cdef void _rec_roman(int v, int n, int twos, u64 cover, u64 mask, u64 full,
                     u64* closed_m, u64* suffix, RomanBest* best) nogil:
    cdef long floor_w = 2 * twos + __builtin_popcountll(full & ~(cover | suffix[v]))
    if floor_w > best.weight:
        return
    cdef long weight
    cdef u64 rev
    if v == n:
        weight = 2 * twos + __builtin_popcountll(full & ~cover)
        if weight < best.weight or (
            weight == best.weight and (
                twos < best.twos or (twos == best.twos and _rev_mask(mask, n) > best.rev)
            )
        ):
            best.weight = weight
            best.twos = twos
            best.rev = _rev_mask(mask, n)
            best.mask = mask
        return
    _rec_roman(v + 1, n, twos, cover, mask, full, closed_m, suffix, best)
    _rec_roman(v + 1, n, twos + 1, cover | closed_m[v], mask | ((<u64>1) << v),
               full, closed_m, suffix, best)


def roman_min(int n, closed_m_seq):
    """Minimum Roman weight via 2-label sets with forced 1-completion.

    Same forced-B1 argument as the pure backend: for a fixed 2-set the
    cheapest valid completion puts a 1 exactly on each uncovered vertex.
    Ties break by fewest 2-labels, then lexicographically smallest 2-set.
    """
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* closed_m = NULL
    cdef u64* suffix = NULL
    cdef RomanBest best
    best.weight = 3 * n + 1
    best.twos = 0
    best.rev = 0
    best.mask = 0
    try:
        closed_m = _to_array(closed_m_seq, n)
        suffix = _suffix_cover(n, closed_m)
        _rec_roman(0, n, 0, 0, 0, full, closed_m, suffix, &best)
        return best.weight, best.mask
    finally:
        free(closed_m)
        free(suffix)


cdef int _rec_roman_enum(int v, int n, int twos, u64 cover, u64 mask, u64 full,
                         u64* closed_m, u64* suffix, long target, list out,
                         long cap):
    cdef long floor_w = 2 * twos + __builtin_popcountll(full & ~(cover | suffix[v]))
    if floor_w > target:
        return 1
    if v == n:
        if 2 * twos + __builtin_popcountll(full & ~cover) == target:
            out.append(mask)
            if len(out) > cap:
                return 0
        return 1
    if not _rec_roman_enum(v + 1, n, twos, cover, mask, full, closed_m,
                           suffix, target, out, cap):
        return 0
    return _rec_roman_enum(v + 1, n, twos + 1, cover | closed_m[v],
                           mask | ((<u64>1) << v), full, closed_m, suffix,
                           target, out, cap)


def roman_enumerate(int n, closed_m_seq, long target_weight, long cap):
    """All 2-set masks whose forced completion has the target weight."""
    cdef u64 full = ((<u64>1) << n) - 1
    cdef u64* closed_m = NULL
    cdef u64* suffix = NULL
    cdef list out = []
    cdef int completed
    try:
        closed_m = _to_array(closed_m_seq, n)
        suffix = _suffix_cover(n, closed_m)
        completed = _rec_roman_enum(0, n, 0, 0, 0, full, closed_m, suffix,
                                    target_weight, out, cap)
    finally:
        free(closed_m)
        free(suffix)
    out.sort(key=lambda m: (bin(m).count("1"), -int(_rev_mask(m, n))))
    return out, not completed
