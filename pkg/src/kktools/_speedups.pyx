# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled mask kernels; signatures mirror `_pure`.

New-shadow/new-shade use the closed forms (initial-run deletions, below-minimum
insertions); the pure backend derives the same sets from the ownership rule and
the parity tests compare the two.
"""

from cython.operator cimport dereference as deref, preincrement as inc
from libc.stdint cimport uint64_t
from libcpp.algorithm cimport sort as cpp_sort
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector


cdef list _sorted_list(vector[uint64_t]& vec):
    cpp_sort(vec.begin(), vec.end())
    cdef size_t i
    return [vec[i] for i in range(vec.size())]


cdef void _drain(unordered_set[uint64_t]& seen, vector[uint64_t]& vec):
    cdef unordered_set[uint64_t].iterator it = seen.begin()
    while it != seen.end():
        vec.push_back(deref(it))
        inc(it)


def shadow_masks(masks):
    """Sorted distinct masks obtained by dropping one element from a member."""
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] out
    cdef uint64_t m, x, low
    for pym in masks:
        m = pym
        x = m
        while x:
            low = x & (~x + 1)
            seen.insert(m ^ low)
            x ^= low
    _drain(seen, out)
    return _sorted_list(out)


def shade_masks(masks, n):
    """Sorted distinct masks obtained by adding one element within {1..n}."""
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] out
    cdef uint64_t m, x, low, full = (<uint64_t>1 << <int>n) - 1
    for pym in masks:
        m = pym
        x = full & ~m
        while x:
            low = x & (~x + 1)
            seen.insert(m | low)
            x ^= low
    _drain(seen, out)
    return _sorted_list(out)


def new_shadow_masks(masks, n):
    """Shadow sets owned by a member: delete one element of the initial run
    1, 2, ... of consecutive elements (the trailing ones of the mask)."""
    cdef vector[uint64_t] out
    cdef uint64_t m
    cdef int b
    for pym in masks:
        m = pym
        b = 0
        while (m >> b) & 1:
            out.push_back(m ^ (<uint64_t>1 << b))
            b += 1
    return _sorted_list(out)


def new_shade_masks(masks, n):
    """Shade sets owned by a member: insert one element below the minimum
    (below everything, for the empty set)."""
    cdef vector[uint64_t] out
    cdef uint64_t m
    cdef int b, low
    for pym in masks:
        m = pym
        if m == 0:
            low = n
        else:
            low = 0
            while not (m >> low) & 1:
                low += 1
        for b in range(low):
            out.push_back(m | (<uint64_t>1 << b))
    return _sorted_list(out)


def prefix_shadow_sizes(masks):
    """|shadow of the first m members| for m = 0..len(masks), by explicit
    union of enumerated deletions."""
    cdef unordered_set[uint64_t] seen
    cdef uint64_t m, x, low
    sizes = [0]
    for pym in masks:
        m = pym
        x = m
        while x:
            low = x & (~x + 1)
            seen.insert(m ^ low)
            x ^= low
        sizes.append(seen.size())
    return sizes


def suffix_shade_sizes(masks, n):
    """|shade of the last m members| for m = 0..len(masks)."""
    cdef unordered_set[uint64_t] seen
    cdef uint64_t m, x, low, full = (<uint64_t>1 << <int>n) - 1
    sizes = [0]
    for pym in reversed(masks):
        m = pym
        x = full & ~m
        while x:
            low = x & (~x + 1)
            seen.insert(m | low)
            x ^= low
        sizes.append(seen.size())
    return sizes


def scan_pairs(families, k, exact, require_side, i_start, i_end):
    """Maximize |A|+|B| over ordered pairs of families whose disjointness
    relation is a partial matching of size <= k (== k in exact mode).

    families: list of tuples of masks; outer index runs over [i_start, i_end).
    In exact mode the side condition k <= min(|A|, |B|) applies; require_side
    imposes it in the at-most mode too.  Returns (best_total, [(i, j), ...]),
    (-1, []) when no pair qualifies.
    """
    cdef vector[uint64_t] flat
    cdef vector[int] offs
    cdef int maxlen = 0
    offs.push_back(0)
    for fam in families:
        for pym in fam:
            flat.push_back(pym)
        offs.push_back(flat.size())
        if len(fam) > maxlen:
            maxlen = len(fam)

    cdef int nf = len(families)
    cdef int kk = k
    cdef bint ex = bool(exact)
    cdef bint side = bool(require_side)
    cdef int lo = i_start, hi = i_end
    cdef vector[int] used
    used.resize(maxlen if maxlen > 0 else 1)

    cdef int best = -1
    cdef vector[int] hit_i, hit_j
    cdef int i, j, la, lb, total, count, partner, ai, bi
    cdef uint64_t a
    cdef bint ok

    for i in range(lo, hi):
        la = offs[i + 1] - offs[i]
        for j in range(nf):
            lb = offs[j + 1] - offs[j]
            if (ex or side) and (kk > la or kk > lb):
                continue
            total = la + lb
            if total < best:
                continue
            for bi in range(lb):
                used[bi] = 0
            count = 0
            ok = True
            for ai in range(offs[i], offs[i + 1]):
                a = flat[ai]
                partner = -1
                for bi in range(lb):
                    if (a & flat[offs[j] + bi]) == 0:
                        if partner >= 0:
                            ok = False
                            break
                        partner = bi
                if not ok:
                    break
                if partner >= 0:
                    if used[partner]:
                        ok = False
                        break
                    used[partner] = 1
                    count += 1
                    if count > kk:
                        ok = False
                        break
            if not ok:
                continue
            if ex and count != kk:
                continue
            if total > best:
                best = total
                hit_i.clear()
                hit_j.clear()
            hit_i.push_back(i)
            hit_j.push_back(j)

    return best, [(hit_i[t], hit_j[t]) for t in range(<int>hit_i.size())]
