"""The monoid E(3,N) of non-negative integer 3x3 matrices ``M`` with
``det M = +-1`` and ``M E M^T = +-E``.

Matrices are tuples of three row tuples of Python ints.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import _backend

__all__ = [
    "Matrix",
    "E",
    "P",
    "IDENTITY",
    "MatrixError",
    "GuardExceeded",
    "Membership",
    "FactorPair",
    "as_matrix",
    "parse_matrix",
    "format_matrix",
    "transpose",
    "mat_mul",
    "det",
    "inverse_unimodular",
    "is_in_E3N",
    "membership",
    "left_eigvec_check",
    "is_unit",
    "permutation_matrices",
    "mk",
    "mk_tilde",
    "m1_tilde",
    "factor_pairs",
    "canonical_pairs",
    "is_nondecomposable",
    "enumeration_guard",
    "enumerate_E3N",
]

Matrix = Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]

E: Matrix = ((0, 1, 1), (-1, 0, 1), (-1, -1, 0))
P: Matrix = ((0, 0, 1), (0, 1, 0), (1, 0, 0))
IDENTITY: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_NEG_E: Matrix = tuple(tuple(-x for x in row) for row in E)
_EIGVEC = (1, -1, 1)

DEFAULT_GUARD = 4


class MatrixError(ValueError):
    pass


class GuardExceeded(MatrixError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if len(m) != 3 or any(len(row) != 3 for row in m):
        raise MatrixError(f"expected a 3x3 matrix, got {rows!r}")
    return m


def _flat(m: Matrix) -> Tuple[int, ...]:
    return tuple(x for row in m for x in row)


def _unflat(a: Sequence[int]) -> Matrix:
    return (tuple(a[0:3]), tuple(a[3:6]), tuple(a[6:9]))


def parse_matrix(text: str) -> Matrix:
    """Parse ``"0 1 0; 0 2 1; 1 0 2"``."""
    rows = [r.split() for r in text.strip().split(";")]
    try:
        return as_matrix([[int(x) for x in r] for r in rows])
    except ValueError as exc:
        if isinstance(exc, MatrixError):
            raise
        raise MatrixError(f"bad matrix {text!r}: {exc}; expected rows like '0 1 0; 0 2 1; 1 0 2'") from None


def format_matrix(m: Matrix) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def det(m: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _adjugate(m: Matrix) -> Matrix:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def inverse_unimodular(m: Matrix) -> Matrix:
    dm = det(m)
    if dm not in (1, -1):
        raise MatrixError(f"matrix has determinant {dm}, not +-1")
    return tuple(tuple(dm * x for x in row) for row in _adjugate(m))


@dataclass(frozen=True)
class Membership:
    """Outcome of the E(3,N) test.

    ``eps`` is the sign in ``M E M^T = eps E`` and ``c`` the eigenvalue of
    the left eigenvector (1,-1,1); either is None when it does not exist.
    ``failed`` names the first condition that does not hold.
    """

    member: bool
    det: int
    eps: Optional[int]
    c: Optional[int]
    failed: Optional[str] = None

    def __bool__(self) -> bool:
        return self.member

    def describe(self) -> str:
        def signed(v):
            return "none" if v is None else f"{v:+d}"

        head = "member" if self.member else f"non-member ({self.failed})"
        c = "none" if self.c is None else str(self.c)
        return f"{head} eps={signed(self.eps)} det={self.det} c={c}"


def membership(m: Matrix) -> Membership:
    m = as_matrix(m)
    dm = det(m)
    mem = mat_mul(mat_mul(m, E), transpose(m))
    eps = 1 if mem == E else -1 if mem == _NEG_E else None
    c = left_eigvec_check(m)
    failed = None
    if any(x < 0 for row in m for x in row):
        failed = "negative entry"
    elif dm not in (1, -1):
        failed = f"det={dm}"
    elif eps is None:
        failed = "M E M^T != +-E"
    return Membership(failed is None, dm, eps, c, failed)


def is_in_E3N(m: Matrix) -> bool:
    return membership(m).member


def left_eigvec_check(m: Matrix) -> Optional[int]:
    """``c`` with ``(1,-1,1) M = c (1,-1,1)``, or None."""
    row = tuple(sum(v * m[i][j] for i, v in enumerate(_EIGVEC)) for j in range(3))
    c = row[0]
    if row == tuple(c * v for v in _EIGVEC):
        return c
    return None


def is_unit(m: Matrix) -> bool:
    return as_matrix(m) in (IDENTITY, P)


def permutation_matrices() -> List[Matrix]:
    from itertools import permutations

    return [tuple(tuple(int(j == s[i]) for j in range(3)) for i in range(3)) for s in permutations(range(3))]


def _check_k(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}")
    return k


def mk(k: int) -> Matrix:
    _check_k(k)
    return ((0, k, k - 1), (0, k + 1, k), (1, 0, 2))


def mk_tilde(k: int) -> Matrix:
    _check_k(k)
    return ((k - 1, 0, k), (k, 0, k + 1), (0, 1, 0))


def m1_tilde() -> Matrix:
    return ((0, 0, 1), (1, 0, 2), (0, 1, 0))


@dataclass(frozen=True, order=True)
class FactorPair:
    left: Matrix
    right: Matrix

    def product(self) -> Matrix:
        return mat_mul(self.left, self.right)

    def swap_unit(self) -> "FactorPair":
        """The partner ``(left P, P right)`` in the same unit orbit."""
        return FactorPair(mat_mul(self.left, P), mat_mul(P, self.right))

    def __str__(self) -> str:
        return f"[{format_matrix(self.left)}] * [{format_matrix(self.right)}]"


def _require_member(m: Matrix) -> Matrix:
    m = as_matrix(m)
    info = membership(m)
    if not info.member:
        raise MatrixError(f"{format_matrix(m)} is not in E(3,N): {info.failed}")
    return m


def factor_pairs(m: Matrix, backend: Optional[str] = None) -> List[FactorPair]:
    """Every ordered factorization ``M = A B`` with A, B non-unit members of E(3,N).

    Search space: ``a_ik b_kj <= m_ij`` and row k of B is nonzero, so row i
    of A is bounded by the largest entry of row i of M.  A must also carry
    (1,-1,1) as a left eigenvector with eigenvalue +-1, which fixes its
    middle row from the other two.  Each surviving A with ``det = +-1``
    yields ``B = A^-1 M`` exactly, kept when non-negative and a member.
    """
    m = _require_member(m)
    bounds = [max(row) for row in m]
    cands = _backend.eigvec_unimodular(*bounds, backend=_safe_backend(bounds, backend))
    raw = _backend.right_quotients(_flat(m), cands, backend=_safe_backend(bounds, backend))
    pairs = []
    for fa, fb in raw:
        a, b = _unflat(fa), _unflat(fb)
        if is_unit(a) or is_unit(b):
            continue
        if is_in_E3N(a) and is_in_E3N(b):
            pairs.append(FactorPair(a, b))
    pairs.sort()
    return pairs


def _safe_backend(bounds, backend):
    # the compiled search keeps entries and cofactor products in C longs
    if backend is None and max(bounds) > 10_000:
        return "python"
    return backend


def canonical_pairs(pairs: Sequence[FactorPair]) -> List[FactorPair]:
    """One representative per unit orbit ``{(A, B), (A P, P B)}``: the one
    with the lexicographically smaller left factor."""
    return sorted({min(fp, fp.swap_unit()) for fp in pairs})


def is_nondecomposable(m: Matrix, backend: Optional[str] = None) -> bool:
    return not factor_pairs(m, backend=backend)


def enumeration_guard() -> int:
    raw = os.environ.get("IETKIT_MAX_ENTRY_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    try:
        return int(raw)
    except ValueError:
        raise MatrixError(f"IETKIT_MAX_ENTRY_GUARD must be an integer, got {raw!r}") from None


def enumerate_E3N(max_entry: int, backend: Optional[str] = None) -> List[Matrix]:
    """All members of E(3,N) whose entries are at most ``max_entry``."""
    guard = enumeration_guard()
    if max_entry < 0:
        raise MatrixError("max_entry must be non-negative")
    if max_entry > guard:
        raise GuardExceeded(
            f"max_entry={max_entry} exceeds the guard {guard}; raise IETKIT_MAX_ENTRY_GUARD to allow it"
        )
    cands = _backend.eigvec_unimodular(max_entry, max_entry, max_entry, backend=backend)
    return sorted(m for m in map(_unflat, cands) if is_in_E3N(m))
