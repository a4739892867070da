# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_kernels_py``.

Same signatures and results.  ``walk`` works on 64-bit coordinates with
128-bit squares; callers must check the coordinate bounds first (see
``ietkit._backend.walk_fits``) and use the Python version otherwise.
"""

cdef extern from *:
    # Cython only needs an integer type here; C sees the real 128-bit type
    ctypedef long long i128 "__int128"

from libc.stdint cimport int64_t


cdef inline int _sign_pq(int64_t p, int64_t q, int64_t d) noexcept nogil:
    cdef i128 pp, qq
    if q == 0:
        return (p > 0) - (p < 0)
    cdef int sq = 1 if q > 0 else -1
    if p == 0 or (p > 0) == (q > 0):
        return sq
    pp = <i128>p * p
    qq = <i128>q * q * d
    if pp > qq:
        return -sq
    return sq


def sign_pq(p, q, d):
    return _sign_pq(p, q, d)


def walk(int64_t p, int64_t q, int64_t d,
         int64_t b1p, int64_t b1q, int64_t b2p, int64_t b2q,
         shifts, bint right_closed, Py_ssize_t n):
    cdef int64_t s0p = shifts[0][0], s0q = shifts[0][1]
    cdef int64_t s1p = shifts[1][0], s1q = shifts[1][1]
    cdef int64_t s2p = shifts[2][0], s2q = shifts[2][1]
    cdef bytearray out = bytearray(n)
    cdef unsigned char[::1] view = out
    cdef int edge = 0 if right_closed else -1
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            if _sign_pq(p - b1p, q - b1q, d) <= edge:
                view[i] = 0
                p += s0p
                q += s0q
            elif _sign_pq(p - b2p, q - b2q, d) <= edge:
                view[i] = 1
                p += s1p
                q += s1q
            else:
                view[i] = 2
                p += s2p
                q += s2q
    return bytes(out), p, q


cdef inline long _det(long* a) noexcept nogil:
    return (a[0] * (a[4] * a[8] - a[5] * a[7])
            - a[1] * (a[3] * a[8] - a[5] * a[6])
            + a[2] * (a[3] * a[7] - a[4] * a[6]))


def det3(a):
    cdef long buf[9]
    cdef int i
    for i in range(9):
        buf[i] = a[i]
    return _det(buf)


def eigvec_unimodular(long r0, long r1, long r2):
    cdef list found = []
    cdef long a[9]
    cdef long c, x0, x1, x2, z0, z1, z2, det
    cdef int ci
    for ci in range(2):
        c = 1 if ci == 0 else -1
        for x0 in range(r0 + 1):
            for x1 in range(r0 + 1):
                for x2 in range(r0 + 1):
                    for z0 in range(r2 + 1):
                        for z1 in range(r2 + 1):
                            for z2 in range(r2 + 1):
                                a[3] = x0 + z0 - c
                                a[4] = x1 + z1 + c
                                a[5] = x2 + z2 - c
                                if (a[3] < 0 or a[3] > r1 or a[4] < 0 or a[4] > r1
                                        or a[5] < 0 or a[5] > r1):
                                    continue
                                a[0] = x0; a[1] = x1; a[2] = x2
                                a[6] = z0; a[7] = z1; a[8] = z2
                                det = _det(a)
                                if det == 1 or det == -1:
                                    found.append((a[0], a[1], a[2], a[3], a[4],
                                                  a[5], a[6], a[7], a[8]))
    return found


def right_quotients(m, candidates):
    cdef long mm[9]
    cdef long a[9]
    cdef long adj[9]
    cdef long b[9]
    cdef long det, v
    cdef int i, j
    cdef bint ok
    cdef list pairs = []
    for i in range(9):
        mm[i] = m[i]
    for cand in candidates:
        for i in range(9):
            a[i] = cand[i]
        det = _det(a)
        adj[0] = a[4] * a[8] - a[5] * a[7]
        adj[1] = a[2] * a[7] - a[1] * a[8]
        adj[2] = a[1] * a[5] - a[2] * a[4]
        adj[3] = a[5] * a[6] - a[3] * a[8]
        adj[4] = a[0] * a[8] - a[2] * a[6]
        adj[5] = a[2] * a[3] - a[0] * a[5]
        adj[6] = a[3] * a[7] - a[4] * a[6]
        adj[7] = a[1] * a[6] - a[0] * a[7]
        adj[8] = a[0] * a[4] - a[1] * a[3]
        ok = True
        for i in range(3):
            for j in range(3):
                v = det * (adj[3 * i] * mm[j] + adj[3 * i + 1] * mm[3 + j]
                           + adj[3 * i + 2] * mm[6 + j])
                if v < 0:
                    ok = False
                    break
                b[3 * i + j] = v
            if not ok:
                break
        if ok:
            pairs.append((tuple(cand), (b[0], b[1], b[2], b[3], b[4],
                                        b[5], b[6], b[7], b[8])))
    return pairs
