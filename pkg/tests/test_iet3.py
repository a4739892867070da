import math
import random
from fractions import Fraction as F

import pytest

from ietkit import _backend
from ietkit.iet3 import (
    Closure,
    DomainError,
    IetParams,
    code_orbit,
    code_orbit_direct,
    conjugate_reflect,
    derive_phik_params,
    iet_apply,
    iet_apply_inverse,
    in_domain,
    interval_of,
    is_aperiodic,
    period_bound,
    smallest_period,
)
from ietkit.qfield import QuadExt, qx_parse

from conftest import fixture_grid, golden, rational_fixtures

THIRDS = IetParams.of(F(1, 3), F(1, 3), F(1, 3))
THIRDS_R = IetParams.of(F(1, 3), F(1, 3), F(1, 3), closure="right")
HALF_THIRD_QUARTER = IetParams.of(F(1, 2), F(1, 3), F(1, 4))

# first ten letters of the golden coding of 0, pinned from code_orbit_direct
GOLDEN_0_9 = "ACACBCACAC"


def random_domain_points(p, count, seed=0):
    rng = random.Random(seed)
    root = math.sqrt(p.d)
    pts = []
    while len(pts) < count:
        b = F(rng.randint(-20, 20), 7)
        a = F(rng.uniform(0, float(p.length)) - float(b) * root).limit_denominator(10**6)
        x = QuadExt(a, b, p.d)
        if in_domain(p, x):
            pts.append(x)
    return pts


def test_interval_of_examples():
    assert interval_of(THIRDS, F(1, 3)) == "B"
    assert interval_of(THIRDS_R, F(1, 3)) == "A"
    # alpha + beta == 1 exactly for the golden fixture, so 1 opens I_C
    assert interval_of(golden(), 1) == "C"
    assert interval_of(golden(), F(99, 100)) == "B"
    assert interval_of(golden(), golden().alpha) == "B"
    with pytest.raises(DomainError):
        interval_of(THIRDS, 1)
    with pytest.raises(DomainError):
        interval_of(THIRDS_R, 0)
    assert interval_of(THIRDS_R, 1) == "C"


def test_iet_apply_examples():
    assert iet_apply(HALF_THIRD_QUARTER, 0) == F(7, 12)
    assert iet_apply(THIRDS, F(2, 3)) == 0
    assert iet_apply(THIRDS, F(1, 3)) == F(1, 3)


def test_inverse_examples():
    assert iet_apply_inverse(HALF_THIRD_QUARTER, F(7, 12)) == 0
    assert iet_apply_inverse(THIRDS, 0) == F(2, 3)


@pytest.mark.parametrize("name, p, x0", fixture_grid()[::3])
def test_inverse_round_trip(name, p, x0):
    for x in random_domain_points(p, 200):
        assert iet_apply(p, iet_apply_inverse(p, x)) == x
        assert iet_apply_inverse(p, iet_apply(p, x)) == x


def test_inverse_round_trip_right_closed():
    p = IetParams(golden().alpha, golden().beta, golden().gamma, Closure.RIGHT)
    for x in random_domain_points(p, 200, seed=1) + [p.alpha, p.alpha + p.beta, p.length, p.gamma]:
        assert iet_apply(p, iet_apply_inverse(p, x)) == x


@pytest.mark.parametrize("name, p, x0", fixture_grid())
def test_image_intervals_tile_domain(name, p, x0):
    al, be, ga = p.lengths()
    images = {
        "A": (0 + be + ga, al + be + ga),
        "B": (al - al + ga, al + be - al + ga),
        "C": (al + be - al - be, p.length - al - be),
    }
    # images of C, B, A sit side by side from 0 to L
    assert images["C"][0] == 0
    assert images["C"][1] == images["B"][0]
    assert images["B"][1] == images["A"][0]
    assert images["A"][1] == p.length


def test_code_orbit_examples():
    assert code_orbit(THIRDS, 0, 0, 5).letters == "ACACAC"
    assert code_orbit(golden(), 0, 0, 9).letters == GOLDEN_0_9
    assert code_orbit_direct(golden(), 0, 0, 9).letters == GOLDEN_0_9
    for p, x in [(THIRDS, F(1, 6)), (golden(), golden().alpha)]:
        assert code_orbit(p, x, 0, 0).letters == interval_of(p, x)


def test_code_orbit_rejects_bad_ranges():
    with pytest.raises(ValueError):
        code_orbit(THIRDS, 0, 3, 2)
    with pytest.raises(DomainError):
        code_orbit(THIRDS, 1, 0, 2)


@pytest.mark.parametrize("name, p, x0", fixture_grid())
@pytest.mark.parametrize("closure", ["left", "right"])
def test_kernel_coding_matches_direct_iteration(name, p, x0, closure, backend, monkeypatch):
    monkeypatch.setattr(_backend, "kernels", getattr(_backend, f"{'compiled' if backend == 'cython' else 'python'}_kernels"))
    p = IetParams(p.alpha, p.beta, p.gamma, Closure(closure))
    if not in_domain(p, x0):
        x0 = p.length
    for lo, hi in [(0, 150), (-150, -1), (-60, 60), (7, 40), (-40, -7)]:
        assert code_orbit(p, x0, lo, hi) == code_orbit_direct(p, x0, lo, hi)


def test_wide_coordinates_fall_back_to_python():
    # denominators near 2**70 make the 64-bit kernel unsafe
    big = 2**70 + 1
    p = IetParams.of(QuadExt(F(1, big), F(1, 3), 5), F(1, 2), F(1, 3))
    assert not _backend.walk_fits(big, big, 5, [(0, 0)], [(big, big)] * 3, 10)
    assert code_orbit(p, 0, -30, 30) == code_orbit_direct(p, 0, -30, 30)


@pytest.mark.parametrize("name, p, x0", fixture_grid())
def test_orbit_stays_in_domain(name, p, x0):
    x = x0
    for _ in range(300):
        x = iet_apply(p, x)
        assert in_domain(p, x)


def test_is_aperiodic_examples():
    assert not is_aperiodic(HALF_THIRD_QUARTER)
    assert is_aperiodic(golden())
    s5 = QuadExt(0, 1, 5)
    assert not is_aperiodic(IetParams(s5, s5, s5))


@pytest.mark.parametrize("p", rational_fixtures() + [IetParams.of("s", "s", "s"), IetParams.of("-2+s", "3-s", "-1+s")])
def test_periodic_codings_repeat_within_bound(p):
    assert not is_aperiodic(p)
    q = period_bound(p)
    for x0 in (0, p.alpha, p.length / 3):
        w = code_orbit(p, x0, 0, 4 * q).letters
        t = smallest_period(w)
        assert t <= q
        # the point orbit closes up within the bound as well
        x = iet_apply(p, x0)
        steps = 1
        while x != x0:
            x = iet_apply(p, x)
            steps += 1
        assert t <= steps <= q


def test_period_bound_values():
    assert period_bound(THIRDS) == 2  # every translation is a multiple of 2/3
    assert period_bound(HALF_THIRD_QUARTER) == 13  # theta = 1/12, L = 13/12
    assert period_bound(golden()) is None
    # alpha+beta = 1, beta+gamma = 2, L = sqrt5: ceil(sqrt5) = 3
    assert period_bound(IetParams.of("-2+s", "3-s", "-1+s")) == 3


@pytest.mark.parametrize("name, p, x0", fixture_grid())
def test_aperiodic_factor_counts(name, p, x0):
    w = code_orbit(p, x0, 0, 999).letters
    for n in range(1, 21):
        count = len({w[i : i + n] for i in range(len(w) - n + 1)})
        assert n + 1 <= count <= 2 * n + 1


def test_smallest_period_brute_force():
    assert smallest_period("ABABAB") == 2
    assert smallest_period("ABCABCA") == 3
    assert smallest_period("AAB") == 3
    assert smallest_period("A") == 1


def test_conjugate_reflect_examples():
    pt, xt = conjugate_reflect(THIRDS, 0)
    assert pt == THIRDS_R and xt == 1
    pt, xt = conjugate_reflect(HALF_THIRD_QUARTER, F(1, 2))
    assert pt == IetParams.of(F(1, 4), F(1, 3), F(1, 2), closure="right")
    assert xt == F(7, 12)  # L - x0 = 13/12 - 1/2
    with pytest.raises(ValueError):
        conjugate_reflect(THIRDS_R, F(1, 2))


def test_derive_phik_examples():
    der = derive_phik_params(1, THIRDS)
    assert der.params == IetParams.of(F(1, 3), 1, 1)
    assert der.shift == F(2, 3)
    p = golden()
    al, be, ga = p.lengths()
    der = derive_phik_params(2, p)
    assert der.params.lengths() == (ga, 2 * al + 3 * be, al + 2 * be + 2 * ga)
    for k in range(1, 8):
        der = derive_phik_params(k, p)
        assert der.params.length == (2 * k - 1) * al + (2 * k + 1) * be + 3 * ga
        # the derived middle piece starts at -shift + gamma and ends at alpha + beta
        assert der.shift == (k - 1) * al + k * be + ga
        assert -der.shift + der.params.alpha + der.params.beta == al + be
    with pytest.raises(ValueError):
        derive_phik_params(0, p)


def test_params_validation():
    with pytest.raises(ValueError):
        IetParams.of(0, 1, 1)
    with pytest.raises(ValueError):
        IetParams.of("1-s", 1, 1)
    with pytest.raises(ValueError):
        IetParams(qx_parse("1", 5), qx_parse("1", 2), qx_parse("1", 5))
