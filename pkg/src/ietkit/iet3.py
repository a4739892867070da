"""Three-interval exchange transformations and the coding of their orbits.

The domain ``[0, L)`` (or ``(0, L]``), ``L = alpha + beta + gamma``, is cut
into ``I_A``, ``I_B``, ``I_C`` of lengths alpha, beta, gamma and ``T``
translates each piece so that their order is reversed::

    T(x) = x + beta + gamma    on I_A
           x - alpha + gamma   on I_B
           x - alpha - beta    on I_C

Orbit coding records which piece each ``T^n(x0)`` falls in.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from . import _backend
from .qfield import QuadExt, qx, qx_floor, qx_linearly_independent_over_Q
from .wordmorph import Window

__all__ = [
    "Closure",
    "IetParams",
    "DomainError",
    "PhikDerivation",
    "interval_of",
    "iet_apply",
    "iet_apply_inverse",
    "in_domain",
    "orbit_point",
    "code_orbit",
    "code_orbit_direct",
    "is_aperiodic",
    "period_bound",
    "smallest_period",
    "conjugate_reflect",
    "derive_phik_params",
]


class Closure(enum.Enum):
    LEFT = "left"    # [0, a), [a, a+b), [a+b, L)
    RIGHT = "right"  # (0, a], (a, a+b], (a+b, L]


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class IetParams:
    alpha: QuadExt
    beta: QuadExt
    gamma: QuadExt
    closure: Closure = Closure.LEFT

    def __post_init__(self):
        ds = {self.alpha.d, self.beta.d, self.gamma.d}
        if len(ds) != 1:
            raise ValueError(f"parameters live in different fields: d in {sorted(ds)}")
        for name in ("alpha", "beta", "gamma"):
            if getattr(self, name).sign() <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        object.__setattr__(self, "closure", Closure(self.closure))

    @classmethod
    def of(cls, alpha, beta, gamma, d: int = 5, closure=Closure.LEFT) -> "IetParams":
        """Build from ints, Fractions, strings in the qfield grammar or QuadExts."""
        return cls(qx(alpha, d), qx(beta, d), qx(gamma, d), Closure(closure))

    @property
    def d(self) -> int:
        return self.alpha.d

    @property
    def length(self) -> QuadExt:
        return self.alpha + self.beta + self.gamma

    def lengths(self) -> Tuple[QuadExt, QuadExt, QuadExt]:
        return (self.alpha, self.beta, self.gamma)

    def __str__(self) -> str:
        return f"alpha={self.alpha} beta={self.beta} gamma={self.gamma} d={self.d} closure={self.closure.value}"


def _below(x: QuadExt, cut: QuadExt, closure: Closure) -> bool:
    s = (x - cut).sign()
    return s < 0 if closure is Closure.LEFT else s <= 0


def in_domain(p: IetParams, x: QuadExt) -> bool:
    if p.closure is Closure.LEFT:
        return x.sign() >= 0 and (x - p.length).sign() < 0
    return x.sign() > 0 and (x - p.length).sign() <= 0


def _require_domain(p: IetParams, x: QuadExt) -> QuadExt:
    x = qx(x, p.d)
    if not in_domain(p, x):
        lo, hi = ("[0", ")") if p.closure is Closure.LEFT else ("(0", "]")
        raise DomainError(f"{x} lies outside the domain {lo}, {p.length}{hi}")
    return x


def orbit_point(p: IetParams, x0) -> QuadExt:
    """Validate a seed point against the domain of ``p``."""
    return _require_domain(p, x0)


def interval_of(p: IetParams, x) -> str:
    x = _require_domain(p, x)
    if _below(x, p.alpha, p.closure):
        return "A"
    if _below(x, p.alpha + p.beta, p.closure):
        return "B"
    return "C"


def iet_apply(p: IetParams, x) -> QuadExt:
    letter = interval_of(p, x)
    x = qx(x, p.d)
    if letter == "A":
        return x + p.beta + p.gamma
    if letter == "B":
        return x - p.alpha + p.gamma
    return x - p.alpha - p.beta


def iet_apply_inverse(p: IetParams, x) -> QuadExt:
    """The preimage of ``x``; the images of I_C, I_B, I_A tile the domain in that order."""
    x = _require_domain(p, x)
    if _below(x, p.gamma, p.closure):
        return x + p.alpha + p.beta
    if _below(x, p.beta + p.gamma, p.closure):
        return x + p.alpha - p.gamma
    return x - p.beta - p.gamma


# --- fast coding through the walk kernel ----------------------------------


def _scale(values):
    """Common denominator D and integer pairs (a*D, b*D) for each value."""
    den = 1
    for v in values:
        den = math.lcm(den, v.a.denominator, v.b.denominator)
    return den, [(int(v.a * den), int(v.b * den)) for v in values]


def _walk_letters(p: IetParams, x0: QuadExt, n: int, backward: bool) -> Tuple[str, QuadExt]:
    al, be, ga = p.lengths()
    if backward:
        cuts = (ga, be + ga)
        shifts = (al + be, al - ga, -be - ga)
        labels = "CBA"
    else:
        cuts = (al, al + be)
        shifts = (be + ga, ga - al, -al - be)
        labels = "ABC"
    den, scaled = _scale([x0, *cuts, *shifts])
    (px, qx_), c1, c2, *sh = scaled
    regions, pe, qe = _backend.walk(
        px, qx_, p.d, c1, c2, tuple(sh), p.closure is Closure.RIGHT, n
    )
    end = QuadExt(Fraction(pe, den), Fraction(qe, den), p.d)
    return regions.translate(_LABELS[labels]).decode("ascii"), end


_LABELS = {
    labels: bytes.maketrans(b"\x00\x01\x02", labels.encode("ascii")) for labels in ("ABC", "CBA")
}


def code_orbit(p: IetParams, x0, start: int, stop: int) -> Window:
    """Letters ``u_n`` for ``start <= n <= stop`` of the coding of ``x0``."""
    if start > stop:
        raise ValueError(f"empty index range [{start}, {stop}]")
    x0 = _require_domain(p, x0)
    parts = []
    if start < 0:
        back, _ = _walk_letters(p, x0, -start, backward=True)
        # back[j] is u_{-(j+1)}
        parts.append(back[::-1][: min(stop, -1) - start + 1])
    if stop >= 0:
        first = max(start, 0)
        fwd, _ = _walk_letters(p, x0, stop + 1, backward=False)
        parts.append(fwd[first:])
    return Window(start, "".join(parts))


def code_orbit_direct(p: IetParams, x0, start: int, stop: int) -> Window:
    """Same as :func:`code_orbit`, by iterating ``T`` on QuadExt values.

    Slow; kept as the reference the kernel path is checked against.
    """
    if start > stop:
        raise ValueError(f"empty index range [{start}, {stop}]")
    x0 = _require_domain(p, x0)
    x = x0
    for _ in range(-start if start < 0 else 0):
        x = iet_apply_inverse(p, x)
    if start > 0:
        for _ in range(start):
            x = iet_apply(p, x)
    letters = []
    for _ in range(start, stop + 1):
        letters.append(interval_of(p, x))
        x = iet_apply(p, x)
    return Window(start, "".join(letters))


# --- periodicity -----------------------------------------------------------


def is_aperiodic(p: IetParams) -> bool:
    return qx_linearly_independent_over_Q(p.alpha + p.beta, p.beta + p.gamma)


def period_bound(p: IetParams) -> Optional[int]:
    """Upper bound on the period of every orbit of a periodic ``T``.

    When ``alpha+beta = m*theta`` and ``beta+gamma = n*theta`` with coprime
    integers m, n, every translation ``T`` performs is an integer multiple
    of ``theta``, so an orbit visits at most ``ceil(L/theta)`` points.  For
    rational parameters with common denominator q and ``L = 1`` this is at
    most q.  Returns None for aperiodic parameters.
    """
    if is_aperiodic(p):
        return None
    u = p.alpha + p.beta
    ratio = (p.beta + p.gamma) / u
    assert ratio.is_rational()
    m = ratio.a.denominator
    theta = u / m
    steps = p.length / theta
    fl = qx_floor(steps)
    return fl if steps == fl else fl + 1


def smallest_period(letters: str) -> int:
    """Smallest ``t >= 1`` with ``letters[i] == letters[i+t]`` throughout, by brute force."""
    n = len(letters)
    for t in range(1, n + 1):
        if all(letters[i] == letters[i + t] for i in range(n - t)):
            return t
    return n


# --- derived transformations ---------------------------------------------


def conjugate_reflect(p: IetParams, x0) -> Tuple[IetParams, QuadExt]:
    """Mirror ``x -> L - x``: lengths reversed, closure flipped, seed reflected."""
    if p.closure is not Closure.LEFT:
        raise ValueError("conjugate_reflect expects left-closed parameters")
    x0 = _require_domain(p, x0)
    mirrored = IetParams(p.gamma, p.beta, p.alpha, Closure.RIGHT)
    return mirrored, p.length - x0


@dataclass(frozen=True)
class PhikDerivation:
    """Parameters of the transformation whose codings are the phi_k images.

    ``shift`` is added to an old seed ``x0`` to get the new seed; it moves
    the derived domain, which naturally starts at ``-shift``, to origin 0.
    """

    k: int
    params: IetParams
    shift: QuadExt

    def seed(self, x0: QuadExt) -> QuadExt:
        return x0 + self.shift


def derive_phik_params(k: int, p: IetParams) -> PhikDerivation:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be an integer >= 1, got {k!r}")
    if p.closure is not Closure.LEFT:
        raise ValueError("derive_phik_params expects left-closed parameters")
    al, be, ga = p.lengths()
    new = IetParams(ga, k * al + (k + 1) * be, (k - 1) * al + k * be + 2 * ga, Closure.LEFT)
    return PhikDerivation(k, new, (k - 1) * al + k * be + ga)
