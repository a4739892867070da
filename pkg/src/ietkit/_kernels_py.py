"""Pure-Python versions of the hot loops.

These mirror ``_kernels.pyx`` function for function and are used when the
compiled extension is missing or ``IETKIT_PURE_PYTHON`` is set.  Numbers of
Q(sqrt(d)) arrive pre-scaled to integer pairs ``(p, q)`` meaning
``(p + q*sqrt(d)) / D`` for a common denominator ``D`` that cancels out of
every comparison.
"""

from itertools import product


def sign_pq(p, q, d):
    """Sign of ``p + q*sqrt(d)`` for integers p, q."""
    if q == 0:
        return (p > 0) - (p < 0)
    sq = 1 if q > 0 else -1
    if p == 0 or (p > 0) == (q > 0):
        return sq
    if p * p > q * q * d:
        return -sq
    return sq


def walk(p, q, d, b1p, b1q, b2p, b2q, shifts, right_closed, n):
    """Iterate a three-piece translation ``n`` times.

    At each step the point is classified against the cut points ``b1 < b2``
    (region 0, 1 or 2; a point equal to a cut goes right for half-open
    ``[ , )`` pieces and left when ``right_closed``), the region index is
    recorded and the matching shift from ``shifts`` is added.

    Returns ``(regions, p, q)`` where ``regions`` is a bytes object of
    region indices and ``(p, q)`` is the point after the last step.
    """
    (s0p, s0q), (s1p, s1q), (s2p, s2q) = shifts
    out = bytearray(n)
    edge = 0 if right_closed else -1
    for i in range(n):
        if sign_pq(p - b1p, q - b1q, d) <= edge:
            out[i] = 0
            p += s0p
            q += s0q
        elif sign_pq(p - b2p, q - b2q, d) <= edge:
            out[i] = 1
            p += s1p
            q += s1q
        else:
            out[i] = 2
            p += s2p
            q += s2q
    return bytes(out), p, q


def det3(a):
    return (
        a[0] * (a[4] * a[8] - a[5] * a[7])
        - a[1] * (a[3] * a[8] - a[5] * a[6])
        + a[2] * (a[3] * a[7] - a[4] * a[6])
    )


def _adjugate(a):
    return (
        a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
        a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
        a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3],
    )


def eigvec_unimodular(r0, r1, r2):
    """All flat 3x3 matrices with ``0 <= a[i][j] <= r_i``, determinant +-1 and
    ``(1,-1,1) A = c (1,-1,1)`` for some ``c`` in {1, -1}.

    The middle row is forced by the other two and ``c``, so only rows 0 and 2
    are enumerated.
    """
    found = []
    for c in (1, -1):
        for x0, x1, x2 in product(range(r0 + 1), repeat=3):
            for z0, z1, z2 in product(range(r2 + 1), repeat=3):
                y0 = x0 + z0 - c
                y1 = x1 + z1 + c
                y2 = x2 + z2 - c
                if not (0 <= y0 <= r1 and 0 <= y1 <= r1 and 0 <= y2 <= r1):
                    continue
                a = (x0, x1, x2, y0, y1, y2, z0, z1, z2)
                if det3(a) in (1, -1):
                    found.append(a)
    return found


def right_quotients(m, candidates):
    """Pairs ``(A, B)`` with ``A`` from ``candidates`` and ``B = A^-1 M``
    a non-negative integer matrix.  Every candidate must be unimodular."""
    pairs = []
    for a in candidates:
        det = det3(a)
        adj = _adjugate(a)
        b = []
        for i in range(3):
            for j in range(3):
                v = det * (adj[3 * i] * m[j] + adj[3 * i + 1] * m[3 + j] + adj[3 * i + 2] * m[6 + j])
                if v < 0:
                    break
                b.append(v)
            else:
                continue
            break
        if len(b) == 9:
            pairs.append((a, tuple(b)))
    return pairs
