import math

import pytest

from relayrates.channels import LineGeometry, oneway_from_geometry
from relayrates.oneway import df_rate
from relayrates.search import (
    Interval,
    LogInterval,
    SearchBudget,
    SphereGroup,
    coeffs_to_angles,
    golden_max,
    maximize,
    sphere_to_coeffs,
)


def test_quadratic_optimum():
    budget = SearchBudget(coarse_steps=11, refine_rounds=3)
    params, val = maximize(lambda x: -((x[0] - 0.3) ** 2), [Interval(0.0, 1.0)], budget)
    assert abs(params[0] - 0.3) < 5e-3
    assert val <= 0.0


def test_constant_objective_lexicographic_tie_break():
    params, val = maximize(lambda x: 1.0, [Interval(0.0, 1.0), Interval(0.0, 1.0)])
    assert params == (0.0, 0.0)
    assert val == 1.0


def test_df_rate_search_midpoint():
    ch = oneway_from_geometry(LineGeometry(0.5, 3.0), 10.0)
    rho, val = golden_max(lambda r: df_rate(ch, r), 0.0, 1.0)
    assert abs(rho) < 1e-6
    assert val == pytest.approx(0.5 * math.log2(81.0), abs=1e-9)


def test_sphere_expansion_on_budget():
    for angles in ((0.0, 0.0), (0.7, 0.3), (math.pi / 2, math.pi / 2)):
        coeffs = sphere_to_coeffs(3.0, angles)
        assert sum(c * c for c in coeffs) == pytest.approx(9.0, abs=1e-9)
        assert all(c >= 0.0 for c in coeffs)
    # endpoint angles give exact zeros
    assert sphere_to_coeffs(3.0, (math.pi / 2,)) == (0.0, 3.0)


def test_sphere_roundtrip():
    coeffs = sphere_to_coeffs(2.0, (0.3, 1.1, 0.6))
    back = sphere_to_coeffs(2.0, coeffs_to_angles(coeffs))
    assert back == pytest.approx(coeffs, abs=1e-9)


def test_log_interval_and_seed():
    budget = SearchBudget(coarse_steps=5, refine_rounds=2)
    params, val = maximize(
        lambda x: -((math.log10(x[0]) - 2.345) ** 2),
        [LogInterval(1e-3, 1e6)],
        budget,
        seeds=[(10 ** 2.345,)],
    )
    assert val == pytest.approx(0.0, abs=1e-18)


def test_sphere_group_optimum():
    # maximize first coefficient on the sphere: all power into it
    params, val = maximize(
        lambda x: x[0], [SphereGroup(3, 2.0)], SearchBudget(coarse_steps=5, refine_rounds=2)
    )
    assert val == pytest.approx(2.0, abs=1e-9)
    assert params == pytest.approx((2.0, 0.0, 0.0), abs=1e-9)


def test_determinism():
    budget = SearchBudget(coarse_steps=7, refine_rounds=3)

    def obj(x):
        return math.sin(3 * x[0]) * math.cos(2 * x[1]) + 0.1 * x[0]

    domain = [Interval(0.0, 2.0), Interval(-1.0, 1.0)]
    first = maximize(obj, domain, budget)
    second = maximize(obj, domain, budget)
    assert first == second


def test_monotone_in_budget():
    def obj(x):
        return -((x[0] - 0.41) ** 2) - ((x[1] - 0.13) ** 2)

    domain = [Interval(0.0, 1.0), Interval(0.0, 1.0)]
    for steps in (5, 9, 17):
        b1 = SearchBudget(coarse_steps=steps, refine_rounds=2)
        b2 = SearchBudget(coarse_steps=2 * steps, refine_rounds=2)
        _, v1 = maximize(obj, domain, b1)
        _, v2 = maximize(obj, domain, b2)
        assert v2 >= v1 - b1.tol


def test_blockwise_path_used_for_large_grids():
    # 8 dims at 9 steps would be 43 M points; must still terminate and find
    # the separable optimum
    domain = [Interval(0.0, 1.0)] * 8
    budget = SearchBudget(coarse_steps=9, refine_rounds=3)
    target = (0.2, 0.4, 0.6, 0.8, 0.1, 0.3, 0.5, 0.7)
    params, val = maximize(
        lambda x: -sum((xi - t) ** 2 for xi, t in zip(x, target)), domain, budget
    )
    assert val > -1e-4


def test_invalid_objective_everywhere():
    with pytest.raises(ValueError):
        maximize(lambda x: math.inf, [Interval(0.0, 1.0)])


def test_empty_domain():
    with pytest.raises(ValueError):
        maximize(lambda x: 1.0, [])


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(coarse_steps=1)
    with pytest.raises(ValueError):
        SearchBudget(refine_rounds=-1)
    with pytest.raises(ValueError):
        SearchBudget(refine_shrink=1.0)
    with pytest.raises(ValueError):
        SearchBudget(tol=0.0)
