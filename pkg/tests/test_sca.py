import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binselect.sca import (
    ScaConfig,
    StepRandoms,
    draw_step_randoms,
    r1_schedule,
    sca_update,
    sca_update_dim,
)


# ---------------------------------------------------------------- schedule

def test_r1_starts_at_a():
    assert r1_schedule(0, 300, 2.0) == 2.0
    assert r1_schedule(0, 7, 3.5) == 3.5


def test_r1_ends_at_zero():
    assert r1_schedule(300, 300, 2.0) == pytest.approx(0.0, abs=1e-12)


def test_r1_midpoint():
    assert r1_schedule(150, 300, 2.0) == pytest.approx(1.0, abs=1e-12)


def test_r1_out_of_range_rejected():
    with pytest.raises(ValueError, match="outside"):
        r1_schedule(301, 300, 2.0)
    with pytest.raises(ValueError, match="outside"):
        r1_schedule(-1, 300, 2.0)
    with pytest.raises(ValueError, match="at least 1"):
        r1_schedule(0, 0, 2.0)


@settings(max_examples=100, deadline=None)
@given(
    t=st.integers(min_value=0, max_value=500),
    max_iterations=st.integers(min_value=1, max_value=500),
    a=st.floats(min_value=0.1, max_value=10.0),
)
def test_r1_linear_and_decreasing(t, max_iterations, a):
    t = min(t, max_iterations)
    value = r1_schedule(t, max_iterations, a)
    assert value == pytest.approx(a * (1.0 - t / max_iterations), rel=1e-12, abs=1e-12)
    if t < max_iterations:
        assert r1_schedule(t + 1, max_iterations, a) <= value


# ------------------------------------------------------------------- draws

def test_draws_stay_in_bounds():
    rng = np.random.default_rng(0)
    draws = [draw_step_randoms(rng) for _ in range(2000)]
    r2 = np.array([d.r2 for d in draws])
    r3 = np.array([d.r3 for d in draws])
    r4 = np.array([d.r4 for d in draws])
    assert r2.min() >= 0.0 and r2.max() < 2.0 * np.pi
    assert r3.min() >= 0.0 and r3.max() < 2.0
    assert r4.min() >= 0.0 and r4.max() < 1.0
    # the r2 range covers the full circle, not just half of it
    assert r2.max() > np.pi
    assert r3.max() > 1.0


def test_draws_deterministic_per_seed():
    a = draw_step_randoms(np.random.default_rng(9))
    b = draw_step_randoms(np.random.default_rng(9))
    assert a == b


def test_draw_means_are_plausible():
    rng = np.random.default_rng(4)
    draws = [draw_step_randoms(rng) for _ in range(20000)]
    assert np.mean([d.r2 for d in draws]) == pytest.approx(np.pi, abs=0.05)
    assert np.mean([d.r3 for d in draws]) == pytest.approx(1.0, abs=0.02)
    assert np.mean([d.r4 for d in draws]) == pytest.approx(0.5, abs=0.02)


# ----------------------------------------------------------------- update

def test_update_fixed_point_when_on_destination():
    randoms = StepRandoms(r2=1.2, r3=1.0, r4=0.3)
    assert sca_update_dim(0.7, 0.7, 1.5, randoms) == 0.7


def test_update_frozen_when_r1_zero():
    randoms = StepRandoms(r2=1.2, r3=0.7, r4=0.9)
    assert sca_update_dim(0.3, 0.9, 0.0, randoms) == 0.3


def test_update_sine_branch_closed_form():
    randoms = StepRandoms(r2=np.pi / 2.0, r3=1.0, r4=0.0)
    assert sca_update_dim(0.0, 1.0, 1.0, randoms) == pytest.approx(1.0, abs=1e-12)


def test_update_cosine_branch_at_half():
    # r4 = 0.5 falls on the cosine side of the strict r4 < 0.5 split
    randoms = StepRandoms(r2=np.pi / 2.0, r3=1.0, r4=0.5)
    assert sca_update_dim(0.0, 1.0, 1.0, randoms) == pytest.approx(0.0, abs=1e-15)


def test_update_branch_selection():
    sine = StepRandoms(r2=np.pi / 2.0, r3=1.0, r4=0.499)
    cosine = StepRandoms(r2=np.pi / 2.0, r3=1.0, r4=0.501)
    moved_sine = sca_update_dim(0.0, 1.0, 1.0, sine)
    moved_cosine = sca_update_dim(0.0, 1.0, 1.0, cosine)
    assert moved_sine == pytest.approx(1.0, abs=1e-12)
    assert moved_cosine == pytest.approx(0.0, abs=1e-15)


def test_update_unclamped():
    randoms = StepRandoms(r2=np.pi / 2.0, r3=2.0, r4=0.0)
    moved = sca_update_dim(-5.0, 10.0, 2.0, randoms)
    assert moved == pytest.approx(-5.0 + 2.0 * 25.0, rel=1e-12)


bounded = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)


@settings(max_examples=150, deadline=None)
@given(
    x=bounded,
    p=bounded,
    r1=st.floats(min_value=0.0, max_value=2.0),
    r2=st.floats(min_value=0.0, max_value=2.0 * np.pi),
    r3=st.floats(min_value=0.0, max_value=2.0),
    r4=st.floats(min_value=0.0, max_value=1.0),
)
def test_update_amplitude_bounded(x, p, r1, r2, r3, r4):
    moved = sca_update_dim(x, p, r1, StepRandoms(r2=r2, r3=r3, r4=r4))
    bound = r1 * abs(r3 * p - x)
    assert abs(moved - x) <= bound * (1.0 + 1e-12) + 1e-9


def test_vectorized_update_matches_scalar():
    rng = np.random.default_rng(55)
    shape = (6, 4)
    x = rng.normal(0.0, 2.0, shape)
    p = rng.normal(0.0, 2.0, shape[1])
    r2 = rng.uniform(0.0, 2.0 * np.pi, shape)
    r3 = rng.uniform(0.0, 2.0, shape)
    r4 = rng.random(shape)
    moved = sca_update(x, p, 1.3, r2, r3, r4)
    for i in range(shape[0]):
        for j in range(shape[1]):
            randoms = StepRandoms(r2=r2[i, j], r3=r3[i, j], r4=r4[i, j])
            assert moved[i, j] == sca_update_dim(x[i, j], p[j], 1.3, randoms)


# ------------------------------------------------------------------ config

def test_config_defaults():
    config = ScaConfig()
    assert config.a == 2.0
    assert config.max_iterations == 300
    assert config.population_size == 20


def test_config_validation():
    with pytest.raises(ValueError, match="positive"):
        ScaConfig(a=0.0)
    with pytest.raises(ValueError, match="non-negative"):
        ScaConfig(max_iterations=-1)
    with pytest.raises(ValueError, match="population"):
        ScaConfig(population_size=1)
    assert ScaConfig(max_iterations=0).max_iterations == 0
