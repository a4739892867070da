"""Verification procedures that check concrete, exact instances of the
monoid and dynamics claims, each returning a :class:`VerificationReport`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .e3n import (
    FactorPair,
    Matrix,
    canonical_pairs,
    enumerate_E3N,
    factor_pairs,
    format_matrix,
    is_unit,
    m1_tilde,
    membership,
    mk,
    mk_tilde,
)
from .iet3 import (
    Closure,
    IetParams,
    code_orbit,
    conjugate_reflect,
    derive_phik_params,
    iet_apply,
    is_aperiodic,
    orbit_point,
)
from .qfield import QuadExt, qx_parse
from .wordmorph import (
    Morphism,
    apply_morphism,
    apply_morphism_window,
    format_morphism,
    incidence_matrix,
    parse_morphism,
    phi_k,
    xi,
)

__all__ = [
    "Status",
    "VerificationReport",
    "DEFAULT_CAP",
    "TREE_DEPTH_CAP",
    "verify_phik",
    "verify_phik_two_sided",
    "phik_negative_control",
    "verify_xi",
    "xi_negative_control",
    "verify_unique_decomposition",
    "witness_family",
    "factorization_tree",
    "check_morphism",
    "enumerate_E3N",
    "parse_report_line",
    "reproduce",
]

DEFAULT_CAP = 4
TREE_DEPTH_CAP = 8


class Status(enum.Enum):
    VERIFIED = "verified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"

    @property
    def exit_code(self) -> int:
        return {"verified": 0, "refuted": 1, "inconclusive": 3}[self.value]


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    status: Status
    params: Dict[str, str] = field(default_factory=dict)
    witness: str = ""

    def __post_init__(self):
        if self.status is Status.REFUTED and not self.witness:
            raise ValueError("a refuted report needs a witness")

    @property
    def verified(self) -> bool:
        return self.status is Status.VERIFIED

    def params_text(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params.items())

    def to_line(self) -> str:
        fields = (self.claim_id, self.status.value, self.params_text(), self.witness)
        return "\t".join(f.replace("\t", " ").replace("\n", " ") for f in fields)

    def summary(self) -> str:
        lines = [f"{self.claim_id}: {self.status.value.upper()}"]
        for k, v in self.params.items():
            lines.append(f"  {k} = {v}")
        if self.witness:
            lines.append(f"  witness: {self.witness}")
        return "\n".join(lines)


def parse_report_line(line: str) -> VerificationReport:
    claim, status, params, witness = line.rstrip("\n").split("\t")
    kv = {}
    for item in params.split():
        key, _, value = item.partition("=")
        kv[key] = value
    return VerificationReport(claim, Status(status), kv, witness)


def _iet_params(p: IetParams, x0: QuadExt) -> Dict[str, str]:
    return {
        "d": str(p.d),
        "alpha": str(p.alpha),
        "beta": str(p.beta),
        "gamma": str(p.gamma),
        "closure": p.closure.value,
        "x0": str(x0),
    }


def _first_mismatch(w: str, v: str, offset: int = 0) -> Optional[str]:
    for i, (a, b) in enumerate(zip(w, v)):
        if a != b:
            return f"index {i + offset}: expected {a}, got {b}"
    if len(w) != len(v):
        return f"length {len(w)} vs {len(v)}"
    return None


def _check_phik_pre(k: int, p: IetParams, x0) -> QuadExt:
    if p.closure is not Closure.LEFT:
        raise ValueError("phi_k verification needs left-closed parameters")
    if not is_aperiodic(p):
        raise ValueError("phi_k verification needs aperiodic parameters")
    return orbit_point(p, x0)


def verify_phik(
    k: int, p: IetParams, x0, n: int = 1000, beta_offset: Optional[QuadExt] = None
) -> VerificationReport:
    """Compare ``phi_k(u)`` with the coding of the derived transformation.

    ``u`` is the coding of ``x0`` on indices ``0..n``; the derived
    parameters and the shifted seed come from :func:`derive_phik_params`.
    ``beta_offset`` perturbs the derived middle length and exists only for
    negative controls.
    """
    x0 = _check_phik_pre(k, p, x0)
    der = derive_phik_params(k, p)
    target = der.params
    if beta_offset is not None:
        target = IetParams(target.alpha, target.beta + beta_offset, target.gamma, target.closure)
    u = code_orbit(p, x0, 0, n).letters
    w = apply_morphism(phi_k(k), u)
    v = code_orbit(target, der.seed(x0), 0, len(w) - 1).letters
    params = {"k": str(k), **_iet_params(p, x0), "n": str(n)}
    if beta_offset is not None:
        params["beta_offset"] = str(beta_offset)
    mismatch = _first_mismatch(w, v)
    if mismatch is not None:
        return VerificationReport("phik-preserves", Status.REFUTED, params, mismatch)
    if not is_aperiodic(target):
        return VerificationReport(
            "phik-preserves", Status.REFUTED, params, f"derived parameters periodic: {target}"
        )
    return VerificationReport(
        "phik-preserves", Status.VERIFIED, params, f"{len(w)} letters agree; derived {target}"
    )


def phik_negative_control(k: int, p: IetParams, x0, n: int = 1000) -> VerificationReport:
    """:func:`verify_phik` with the derived middle length off by gamma; must refute."""
    return verify_phik(k, p, x0, n, beta_offset=p.gamma)


def verify_phik_two_sided(k: int, p: IetParams, x0, n: int = 1000) -> VerificationReport:
    """Like :func:`verify_phik` on indices ``-n..n``, anchoring ``phi_k(u_0)`` at 0."""
    x0 = _check_phik_pre(k, p, x0)
    der = derive_phik_params(k, p)
    u = code_orbit(p, x0, -n, n)
    w = apply_morphism_window(phi_k(k), u)
    v = code_orbit(der.params, der.seed(x0), w.start, w.stop - 1)
    params = {"k": str(k), **_iet_params(p, x0), "n": str(n)}
    mismatch = _first_mismatch(w.letters, v.letters, w.start)
    if mismatch is not None:
        return VerificationReport("phik-preserves-two-sided", Status.REFUTED, params, mismatch)
    return VerificationReport(
        "phik-preserves-two-sided",
        Status.VERIFIED,
        params,
        f"indices {w.start}..{w.stop - 1} agree",
    )


def verify_xi(p: IetParams, x0, N: int = 500, mirrored_seed: Optional[QuadExt] = None) -> VerificationReport:
    """Check that swapping A and C in the coding of ``x0`` gives the coding
    of the mirror image ``L - x0`` under the mirrored transformation, on
    indices ``-N..N``.  ``mirrored_seed`` overrides the mirrored point for
    negative controls."""
    if p.closure is not Closure.LEFT:
        raise ValueError("xi verification needs left-closed parameters")
    x0 = orbit_point(p, x0)
    mirror, seed = conjugate_reflect(p, x0)
    if mirrored_seed is not None:
        seed = mirrored_seed
    u = code_orbit(p, x0, -N, N)
    expected = apply_morphism(xi(), u.letters)
    got = code_orbit(mirror, seed, -N, N).letters
    params = {**_iet_params(p, x0), "N": str(N)}
    if mirrored_seed is not None:
        params["mirrored_seed"] = str(mirrored_seed)
    mismatch = _first_mismatch(expected, got, -N)
    if mismatch is not None:
        return VerificationReport("xi-conjugacy", Status.REFUTED, params, mismatch)
    return VerificationReport("xi-conjugacy", Status.VERIFIED, params, f"indices {-N}..{N} agree")


def xi_negative_control(p: IetParams, x0, N: int = 500) -> VerificationReport:
    """:func:`verify_xi` with the mirrored seed moved one step along its orbit; must refute."""
    x0 = orbit_point(p, x0)
    mirror, seed = conjugate_reflect(p, x0)
    return verify_xi(p, x0, N, mirrored_seed=iet_apply(mirror, seed))


def _pairs_text(pairs) -> str:
    return " | ".join(str(fp) for fp in pairs) if pairs else "none"


def verify_unique_decomposition(k: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Exhaustively factor ``mk(k)`` and compare with the unit orbit of
    ``(mk_tilde(k), m1_tilde())``."""
    params = {"k": str(k), "cap": str(cap)}
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > cap:
        return VerificationReport(
            "mk-unique-decomposition", Status.INCONCLUSIVE, params, f"k={k} exceeds feasibility cap {cap}"
        )
    expected_pair = FactorPair(mk_tilde(k), m1_tilde())
    expected = {expected_pair, expected_pair.swap_unit()}
    found = factor_pairs(mk(k))
    if set(found) == expected and len(found) == 2:
        return VerificationReport(
            "mk-unique-decomposition", Status.VERIFIED, params, f"2 ordered pairs: {_pairs_text(found)}"
        )
    extra = [fp for fp in found if fp not in expected]
    missing = [fp for fp in sorted(expected) if fp not in found]
    return VerificationReport(
        "mk-unique-decomposition",
        Status.REFUTED,
        params,
        f"unexpected: {_pairs_text(extra)}; missing: {_pairs_text(missing)}",
    )


def witness_family(kmax: int, cap: int = DEFAULT_CAP) -> List[Tuple[Matrix, VerificationReport]]:
    """``mk_tilde(k)`` for ``k = 1..kmax``, each with a non-decomposability report."""
    if kmax > cap:
        raise ValueError(f"kmax={kmax} exceeds feasibility cap {cap}")
    out = []
    for k in range(1, kmax + 1):
        m = mk_tilde(k)
        params = {"k": str(k), "matrix": format_matrix(m).replace("; ", ";").replace(" ", ",")}
        info = membership(m)
        if not info.member:
            rep = VerificationReport("nondecomposable", Status.REFUTED, params, f"not in E(3,N): {info.failed}")
        else:
            pairs = factor_pairs(m)
            if pairs:
                rep = VerificationReport("nondecomposable", Status.REFUTED, params, _pairs_text(pairs))
            else:
                rep = VerificationReport(
                    "nondecomposable", Status.VERIFIED, params, "exhaustive search found no non-unit factor pair"
                )
        out.append((m, rep))
    return out


def factorization_tree(m: Matrix, max_depth: int = TREE_DEPTH_CAP):
    """Split ``m`` recursively along the first canonical factor pair.

    Returns ``(tree, complete)`` where a leaf is a matrix and an inner node
    is a ``(left_tree, right_tree)`` tuple; ``complete`` is False when the
    depth cap stopped the recursion before every leaf was non-decomposable.
    """
    complete = True

    def split(x: Matrix, depth: int):
        nonlocal complete
        if is_unit(x):
            return x
        pairs = canonical_pairs(factor_pairs(x))
        if not pairs:
            return x
        if depth >= max_depth:
            complete = False
            return x
        fp = pairs[0]
        return (split(fp.left, depth + 1), split(fp.right, depth + 1))

    return split(m, 0), complete


def check_morphism(m: Morphism) -> VerificationReport:
    """Best-effort refutation that ``m`` preserves 3iet words.

    A nonsingular incidence matrix outside E(3,N) refutes; anything else is
    inconclusive, since finite windows can never confirm preservation.
    """
    mat = incidence_matrix(m)
    info = membership(mat)
    params = {"morphism": format_morphism(m)}
    if info.det != 0 and not info.member:
        return VerificationReport(
            "morphism-check",
            Status.REFUTED,
            params,
            f"incidence matrix {format_matrix(mat)} is nonsingular but not in E(3,N): {info.failed}",
        )
    reason = "singular incidence matrix" if info.det == 0 else "incidence matrix is in E(3,N)"
    return VerificationReport("morphism-check", Status.INCONCLUSIVE, params, f"{reason}; no refutation found")


def reproduce(report: VerificationReport) -> VerificationReport:
    """Re-run the check a report describes, from its parameter record alone."""
    kv = report.params
    claim = report.claim_id
    if claim in ("phik-preserves", "phik-preserves-two-sided", "xi-conjugacy"):
        d = int(kv["d"])
        p = IetParams(
            qx_parse(kv["alpha"], d), qx_parse(kv["beta"], d), qx_parse(kv["gamma"], d), Closure(kv["closure"])
        )
        x0 = qx_parse(kv["x0"], d)
        if claim == "xi-conjugacy":
            seed = qx_parse(kv["mirrored_seed"], d) if "mirrored_seed" in kv else None
            return verify_xi(p, x0, int(kv["N"]), mirrored_seed=seed)
        if claim == "phik-preserves-two-sided":
            return verify_phik_two_sided(int(kv["k"]), p, x0, int(kv["n"]))
        offset = qx_parse(kv["beta_offset"], d) if "beta_offset" in kv else None
        return verify_phik(int(kv["k"]), p, x0, int(kv["n"]), beta_offset=offset)
    if claim == "mk-unique-decomposition":
        return verify_unique_decomposition(int(kv["k"]), int(kv["cap"]))
    if claim == "nondecomposable":
        k = int(kv["k"])
        return witness_family(k, cap=max(k, DEFAULT_CAP))[-1][1]
    if claim == "morphism-check":
        return check_morphism(parse_morphism(kv["morphism"]))
    raise ValueError(f"unknown claim id {claim!r}")
