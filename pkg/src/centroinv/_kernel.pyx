# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled census over all involutions of [m].

Statement-for-statement twin of _kernel_py.involution_census; see that file
for the contract.  C arrays and a recursive cdef walker make the m = 14, 15
sweeps take seconds instead of minutes.
"""

from libc.string cimport memset


cdef struct Acc:
    int m
    int n
    bint require_centro
    bint require_avoid321
    long long count
    long long des_t[24]
    long long desp_t[16]
    long long maj_t[256]
    long long majp_t[64]
    long long fp_t[24]


cdef void _visit(Acc* acc, int* perm) noexcept:
    cdef int m = acc.m
    cdef int n = acc.n
    cdef int i, v, best_mid, prefix_max
    cdef int d, dp, mj, mjp, fp
    if acc.require_centro:
        for i in range(1, m + 1):
            if perm[i] + perm[m + 1 - i] != m + 1:
                return
    if acc.require_avoid321:
        best_mid = 0
        prefix_max = 0
        for i in range(1, m + 1):
            v = perm[i]
            if v < best_mid:
                return
            if v < prefix_max:
                if v > best_mid:
                    best_mid = v
            else:
                prefix_max = v
    d = dp = mj = mjp = fp = 0
    for i in range(1, m):
        if perm[i] > perm[i + 1]:
            d += 1
            mj += i
            if i <= n:
                dp += 1
                mjp += i
    for i in range(1, m + 1):
        if perm[i] == i:
            fp += 1
    acc.count += 1
    acc.des_t[d] += 1
    acc.desp_t[dp] += 1
    acc.maj_t[mj] += 1
    acc.majp_t[mjp] += 1
    acc.fp_t[fp] += 1


cdef void _rec(Acc* acc, int* perm, int i) noexcept:
    cdef int m = acc.m
    cdef int j
    while i <= m and perm[i]:
        i += 1
    if i > m:
        _visit(acc, perm)
        return
    perm[i] = i
    _rec(acc, perm, i + 1)
    perm[i] = 0
    for j in range(i + 1, m + 1):
        if not perm[j]:
            perm[i] = j
            perm[j] = i
            _rec(acc, perm, i + 1)
            perm[j] = 0
    perm[i] = 0


def involution_census(int m, bint require_centro=False, bint require_avoid321=False):
    """One pass over the involutions of [m]; see _kernel_py for the contract."""
    if m < 0 or m > 20:
        raise ValueError("m out of supported range 0..20")
    cdef Acc acc
    memset(&acc, 0, sizeof(acc))
    acc.m = m
    acc.n = m // 2
    acc.require_centro = require_centro
    acc.require_avoid321 = require_avoid321
    cdef int perm[21]
    memset(perm, 0, sizeof(perm))
    _rec(&acc, perm, 1)
    cdef int n = acc.n
    return {
        "count": acc.count,
        "des": tuple([acc.des_t[i] for i in range(max(m, 1))]),
        "des+": tuple([acc.desp_t[i] for i in range(n + 1)]),
        "maj": tuple([acc.maj_t[i] for i in range(m * (m - 1) // 2 + 1)]),
        "maj+": tuple([acc.majp_t[i] for i in range(n * (n + 1) // 2 + 1)]),
        "fp": tuple([acc.fp_t[i] for i in range(m + 1)]),
    }
