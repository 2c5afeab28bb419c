import math

import pytest
from hypothesis import given, settings, strategies as st

from zetaladder.dirichlet import partial_sum, tail_bound, tail_correction_bound, zeta_direct
from zetaladder.errors import ConvergenceError, DomainError

from oracles import zeta_brute

ZETA2 = 1.6449340668482264  # zeta_brute(2)
ZETA3 = 1.2020569031595942  # zeta_brute(3)


def test_oracle_values_frozen():
    assert zeta_brute(2).real == pytest.approx(ZETA2, abs=1e-15)
    assert zeta_brute(3).real == pytest.approx(ZETA3, abs=1e-15)
    assert ZETA2 == pytest.approx(math.pi**2 / 6, abs=1e-15)


@pytest.mark.parametrize("s, expected", [(2, ZETA2), (3, ZETA3)])
def test_known_values(s, expected):
    res = zeta_direct(s, 1e-10)
    assert abs(res.value - expected) <= 1e-10
    assert res.err_estimate <= 1e-10
    assert (res.method, res.depth_k) == ("direct", 0)


def test_large_sigma():
    res = zeta_direct(100, 1e-12)
    assert abs(res.value - 1) <= 1e-12


def test_complex_point_against_brute_force():
    s = 2.5 + 3j
    assert abs(zeta_direct(s, 1e-11).value - zeta_brute(s)) <= 1e-11


def test_domain():
    with pytest.raises(DomainError):
        zeta_direct(1.9)
    with pytest.raises(DomainError):
        zeta_direct(float("nan"))
    with pytest.raises(ValueError):
        zeta_direct(2, 0)


def test_rounding_floor_is_reported():
    with pytest.raises(ConvergenceError):
        zeta_direct(3, 1e-18)


@given(st.floats(2, 12), st.floats(-20, 20))
@settings(max_examples=40, deadline=None)
def test_conjugate_symmetry_bit_for_bit(x, y):
    s = complex(x, y)
    a = zeta_direct(s, 1e-8).value
    b = zeta_direct(s.conjugate(), 1e-8).value
    assert a == b.conjugate()


def test_monotone_refinement():
    grid = [2, 2.5 + 1j, 3 - 2j, 4 + 4j]
    refs = [zeta_brute(s) for s in grid]
    prev = [math.inf] * len(grid)
    for tol in [1e-4, 1e-6, 1e-8, 1e-10]:
        errs = [abs(zeta_direct(s, tol).value - r) for s, r in zip(grid, refs)]
        for e, p in zip(errs, prev):
            assert e <= p + 1e-15
        prev = errs


@pytest.mark.parametrize("s", [2, 2.5 + 4j, 3 - 1j, 5 + 10j])
@pytest.mark.parametrize("N", [2, 10, 100])
def test_bare_tail_bound_honoured(s, N):
    head = partial_sum(s, N)
    longer = partial_sum(s, 10 * N)
    assert abs(longer - head) <= tail_bound(complex(s).real, N)


@pytest.mark.parametrize("s", [2, 2 + 5j, 3.5 - 2j])
def test_corrected_tail_bound_honoured(s):
    N = 50
    exact_tail = zeta_brute(s) - partial_sum(s, N)
    corr = N ** (1 - s) / (s - 1)
    assert abs(exact_tail - corr) <= tail_correction_bound(s, N)
