from fractions import Fraction

import pytest

from ietkit import _backend
from ietkit.iet3 import IetParams
from ietkit.qfield import QuadExt, qx_parse

# aperiodic parameter sets: (alpha, beta, gamma, d)
APERIODIC = {
    "golden": ("-1/2+1/2*s", "3/2-1/2*s", "1", 5),
    "sqrt2": ("-1+s", "1/2", "1/3", 2),
    "sqrt3": ("1/5", "1/4*s", "2-s", 3),
}

# seeds per fixture, in qfield text; the second one sits exactly on the A|B cut
SEEDS = {
    "golden": ["0", "-1/2+1/2*s", "2/3"],
    "sqrt2": ["0", "-1+s", "1/7"],
    "sqrt3": ["0", "1/5", "1/3+1/8*s"],
}


def fixture_params(name: str) -> IetParams:
    a, b, c, d = APERIODIC[name]
    return IetParams.of(a, b, c, d)


def fixture_grid():
    """(name, params, seed) for every aperiodic fixture and seed."""
    out = []
    for name in APERIODIC:
        p = fixture_params(name)
        for s in SEEDS[name]:
            out.append((name, p, qx_parse(s, p.d)))
    return out


def golden() -> IetParams:
    return fixture_params("golden")


def rational_fixtures(count: int = 20):
    """Deterministic rational (hence periodic) parameter sets in Q(sqrt(5))."""
    out = []
    q = 3
    while len(out) < count:
        # at most three compositions q = i + j + k per denominator
        comps = [(i, j, q - i - j) for i in range(1, q - 1) for j in range(1, q - i)]
        for i, j, k in comps[:: max(1, len(comps) // 3)][:3]:
            p = IetParams(*(QuadExt(Fraction(x, q), 0, 5) for x in (i, j, k)))
            if len(out) < count and p not in out:
                out.append(p)
        q += 1
    return out


BACKENDS = ["python"] + (["cython"] if _backend.compiled_kernels is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param

# CLI flags for the golden fixture; values starting with '-' need the = form
GOLDEN_FLAGS = ["--disc", "5", "--alpha=-1/2+1/2*s", "--beta", "3/2-1/2*s", "--gamma", "1"]
