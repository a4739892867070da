"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``IETKIT_PURE_PYTHON=1`` to force the fallback.  ``BACKEND`` names the
active choice; both modules stay importable for tests and benchmarks.
"""

import os

from . import _kernels_py as python_kernels

try:
    from . import _kernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and not os.environ.get("IETKIT_PURE_PYTHON"):
    kernels = compiled_kernels
    BACKEND = "cython"
else:
    kernels = python_kernels
    BACKEND = "python"

# 64-bit coordinates with 128-bit squares, with a safety margin
_COORD_LIMIT = 1 << 62
_SQUARE_LIMIT = 1 << 125


def walk_fits(p, q, d, cuts, shifts, n):
    """True when a ``walk`` of ``n`` steps cannot overflow the compiled kernel."""
    grow_p = n * max(abs(s[0]) for s in shifts)
    grow_q = n * max(abs(s[1]) for s in shifts)
    bp = max(abs(p), *(abs(c[0]) for c in cuts)) + grow_p
    bq = max(abs(q), *(abs(c[1]) for c in cuts)) + grow_q
    # differences against a cut can double the magnitude
    bp *= 2
    bq *= 2
    return (
        bp < _COORD_LIMIT
        and bq < _COORD_LIMIT
        and bp * bp < _SQUARE_LIMIT
        and bq * bq * d < _SQUARE_LIMIT
    )


def walk(p, q, d, cut1, cut2, shifts, right_closed, n, backend=None):
    k = _pick(backend)
    if k is not python_kernels and not walk_fits(p, q, d, (cut1, cut2), shifts, n):
        k = python_kernels
    return k.walk(p, q, d, cut1[0], cut1[1], cut2[0], cut2[1], shifts, right_closed, n)


def eigvec_unimodular(r0, r1, r2, backend=None):
    return _pick(backend).eigvec_unimodular(r0, r1, r2)


def right_quotients(m, candidates, backend=None):
    return _pick(backend).right_quotients(m, candidates)


def _pick(backend):
    if backend is None:
        return kernels
    if backend == "python":
        return python_kernels
    if backend == "cython":
        if compiled_kernels is None:
            raise RuntimeError("compiled kernels are not built")
        return compiled_kernels
    raise ValueError(f"unknown backend {backend!r}")
