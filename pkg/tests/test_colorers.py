"""Randomized colorers: guarantees under their stated edge budgets."""

import math
import random
from fractions import Fraction

import pytest

from chromabound import colorers, core, exact
from chromabound.errors import RestartsExhaustedError
from conftest import random_instance


def test_base_palette_and_edge_limit_values():
    assert colorers.default_base_palette(3, 3) == 2
    assert colorers.default_base_palette(3, 4) == 2
    assert colorers.default_base_palette(4, 6) == 4
    assert colorers.alon_edge_limit(3, 3) == 8
    assert colorers.alon_edge_limit(3, 3, a=1) == 4
    assert colorers.alon_edge_limit(3, 4, a=3) == 18


def test_alon_edge_limit_guards():
    with pytest.raises(ValueError):
        colorers.alon_edge_limit(3, 3, a=3)
    with pytest.raises(ValueError):
        colorers.alon_edge_limit(3, 3, a=0)


def test_expected_monochromatic_is_exact():
    assert colorers.expected_monochromatic(8, 3, 2) == Fraction(2)
    assert colorers.expected_monochromatic(9, 3, 3) == Fraction(1)
    assert colorers.expected_monochromatic(5, 2, 4) == Fraction(5, 4)


def test_run_config_guards():
    with pytest.raises(ValueError):
        colorers.RandomizedRunConfig(1, max_restarts=0)


def test_alon_battery_within_budget_always_colors():
    rng = random.Random(4242)
    for _ in range(60):
        H = random_instance(rng, 3, 6, 12, 1, 7)
        config = colorers.RandomizedRunConfig(rng.randrange(1 << 30), max_restarts=200)
        result = colorers.alon_recolor(H, 3, config)
        ok, _ = core.is_proper(H, result.coloring)
        assert ok
        assert 1 <= result.restarts <= 200
        assert result.coloring.palette == 3


def test_alon_deterministic_under_seed():
    H = core.random_uniform(3, 10, 6, 11)
    config = colorers.RandomizedRunConfig(61, max_restarts=100)
    a = colorers.alon_recolor(H, 3, config)
    b = colorers.alon_recolor(H, 3, config)
    assert a == b


def test_alon_exhaustion_reports_attempts():
    H = core.fano()
    config = colorers.RandomizedRunConfig(13, max_restarts=3)
    with pytest.raises(RestartsExhaustedError) as err:
        colorers.alon_recolor(H, 2, config, a=1)
    assert err.value.attempts == 3
    assert len(err.value.stats["mono_counts"]) == 3


def test_degree_sum_target_fano(fano):
    bound, need = colorers.degree_sum_target(fano)
    assert need == 9
    assert bound == pytest.approx((2 / 3) * 7 * math.sqrt(3))


def test_degree_sum_target_ignores_isolated_vertices():
    H = core.Hypergraph.build(2, 4, [(0, 1)])
    bound, need = colorers.degree_sum_target(H)
    assert bound == pytest.approx(1.0)
    assert need == 1


def test_weighted_independent_set_meets_target(fano):
    config = colorers.RandomizedRunConfig(17, max_restarts=2000)
    result = colorers.weighted_independent_set(fano, config)
    picked = set(result.vertices)
    assert all(any(v not in picked for v in e) for e in fano.edges)
    deg = core.degrees(fano)
    assert result.degree_sum == sum(deg[v] for v in picked)
    assert result.degree_sum >= 9


def test_weighted_independent_set_battery_brackets_optimum():
    rng = random.Random(515)
    for _ in range(40):
        n = rng.choice((2, 3))
        H = random_instance(rng, n, n, 16, 0, 8)
        config = colorers.RandomizedRunConfig(rng.randrange(1 << 30), max_restarts=3000)
        result = colorers.weighted_independent_set(H, config)
        _, need = colorers.degree_sum_target(H)
        optimum, _ = exact.max_degree_sum_independent_set(H)
        assert need <= result.degree_sum <= optimum


def test_weighted_independent_set_deterministic():
    H = core.random_uniform(3, 12, 6, 99)
    config = colorers.RandomizedRunConfig(3, max_restarts=500)
    assert colorers.weighted_independent_set(
        H, config
    ) == colorers.weighted_independent_set(H, config)


def test_peel_budget_values():
    for r, budget in ((6, 8), (7, 12), (8, 18), (9, 27)):
        assert (r**3) // 27 == budget


def test_peel_rejects_over_budget():
    H = core.complete(3, 6)
    with pytest.raises(ValueError):
        colorers.peel_color(H, 6, colorers.RandomizedRunConfig(1))


def test_peel_rejects_bad_constant(fano):
    with pytest.raises(ValueError):
        colorers.peel_color(
            fano, 6, colorers.RandomizedRunConfig(1), c=Fraction(1, 2)
        )
    with pytest.raises(ValueError):
        colorers.peel_color(fano, 6, colorers.RandomizedRunConfig(1), c=Fraction(0))


def test_peel_fano_with_six_colors(fano):
    result = colorers.peel_color(fano, 6, colorers.RandomizedRunConfig(8))
    ok, _ = core.is_proper(fano, result.coloring)
    assert ok
    assert result.coloring.palette == 6
    palettes = [r_prime for r_prime, _, _ in result.rounds]
    assert palettes == sorted(palettes, reverse=True)


def test_peel_single_edge_three_colors():
    H = core.Hypergraph.build(3, 3, [(0, 1, 2)])
    result = colorers.peel_color(H, 3, colorers.RandomizedRunConfig(2))
    ok, _ = core.is_proper(H, result.coloring)
    assert ok


def test_peel_battery_within_budget_never_fails():
    rng = random.Random(7777)
    for r in (6, 7, 8, 9):
        budget = (r**3) // 27
        for _ in range(15):
            H = random_instance(rng, 3, 10, 18, 1, budget)
            config = colorers.RandomizedRunConfig(rng.randrange(1 << 30))
            result = colorers.peel_color(H, r, config)
            ok, _ = core.is_proper(H, result.coloring)
            assert ok
            assert result.coloring.palette == r


def test_peel_deterministic_under_seed():
    H = core.random_uniform(3, 14, 8, 21)
    config = colorers.RandomizedRunConfig(9)
    assert colorers.peel_color(H, 6, config) == colorers.peel_color(H, 6, config)
