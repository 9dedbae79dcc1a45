import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binselect.knn import error_rate
from binselect.objective import (
    Evaluation,
    FitnessParams,
    evaluate,
    fitness,
    make_knn_objective,
)
from conftest import random_problem


DEFAULT = FitnessParams(alpha=0.99)


# ---------------------------------------------------------- FitnessParams

def test_params_beta_complements_alpha():
    params = FitnessParams(alpha=0.75)
    assert params.beta == 0.25
    assert DEFAULT.alpha == 0.99
    assert DEFAULT.beta == pytest.approx(0.01)


@pytest.mark.parametrize("alpha", [-0.01, 1.01, 2.0])
def test_params_alpha_out_of_range(alpha):
    with pytest.raises(ValueError, match="alpha"):
        FitnessParams(alpha=alpha)


# ---------------------------------------------------------------- fitness

def test_fitness_perfect_small_subset():
    assert fitness(0.0, 3, 10, DEFAULT) == pytest.approx(0.003, abs=1e-12)


def test_fitness_full_subset_with_error():
    expected = 0.99 * 0.1 + 0.01 * 1.0
    assert fitness(0.1, 10, 10, DEFAULT) == pytest.approx(expected, abs=1e-12)


def test_fitness_worst_case_is_one():
    assert fitness(1.0, 10, 10, DEFAULT) == pytest.approx(1.0, abs=1e-12)


def test_fitness_alpha_boundaries():
    assert fitness(0.4, 5, 10, FitnessParams(alpha=1.0)) == pytest.approx(0.4)
    assert fitness(0.4, 5, 10, FitnessParams(alpha=0.0)) == pytest.approx(0.5)


def test_fitness_empty_subset_rejected():
    with pytest.raises(ValueError, match="empty subset"):
        fitness(0.1, 0, 10, DEFAULT)


def test_fitness_oversized_subset_rejected():
    with pytest.raises(ValueError, match="out of range"):
        fitness(0.1, 11, 10, DEFAULT)


def test_fitness_error_out_of_range_rejected():
    with pytest.raises(ValueError, match="error"):
        fitness(1.5, 3, 10, DEFAULT)


@settings(max_examples=100, deadline=None)
@given(
    error=st.floats(min_value=0.0, max_value=1.0),
    n_selected=st.integers(min_value=1, max_value=30),
    n_total=st.integers(min_value=30, max_value=60),
    alpha=st.floats(min_value=0.0, max_value=1.0),
)
def test_fitness_bounded_by_unit_interval(error, n_selected, n_total, alpha):
    value = fitness(error, n_selected, n_total, FitnessParams(alpha=alpha))
    assert 0.0 <= value <= 1.0


@settings(max_examples=100, deadline=None)
@given(
    e1=st.floats(min_value=0.0, max_value=1.0),
    e2=st.floats(min_value=0.0, max_value=1.0),
    n_selected=st.integers(min_value=1, max_value=20),
)
def test_fitness_monotone_in_error(e1, e2, n_selected):
    low, high = sorted([e1, e2])
    assert fitness(low, n_selected, 20, DEFAULT) <= fitness(high, n_selected, 20, DEFAULT)


@settings(max_examples=100, deadline=None)
@given(
    error=st.floats(min_value=0.0, max_value=1.0),
    n1=st.integers(min_value=1, max_value=20),
    n2=st.integers(min_value=1, max_value=20),
)
def test_fitness_monotone_in_subset_size(error, n1, n2):
    small, large = sorted([n1, n2])
    assert fitness(error, small, 20, DEFAULT) <= fitness(error, large, 20, DEFAULT)


# --------------------------------------------------------------- evaluate

def test_evaluate_accuracy_complements_error():
    rng = np.random.default_rng(41)
    train, test = random_problem(rng, n_train=20, n_test=10, dim=6)
    mask = np.array([1, 1, 0, 1, 0, 0], dtype=np.uint8)
    result = evaluate(mask, train, test, k=3, params=DEFAULT)
    err = error_rate(train, test, mask, k=3)
    assert result.accuracy == 1.0 - err
    assert result.n_selected == 3
    assert result.fitness == fitness(err, 3, 6, DEFAULT)


def test_evaluate_empty_mask_rejected():
    rng = np.random.default_rng(41)
    train, test = random_problem(rng, n_train=10, n_test=5, dim=4)
    with pytest.raises(ValueError, match="empty subset"):
        evaluate(np.zeros(4, dtype=np.uint8), train, test, k=3, params=DEFAULT)


def test_evaluate_prefers_clean_single_feature():
    # feature 0 equals the label; the rest is noise, so the lone marker
    # feature must beat the all-features mask
    rng = np.random.default_rng(11)
    n = 40
    labels = np.arange(n) % 2
    x = rng.uniform(0.0, 1.0, (n, 6))
    x[:, 0] = labels
    train_x, test_x = x[:30], x[30:]
    train_y, test_y = labels[:30], labels[30:]
    from conftest import make_views

    train, test = make_views(train_x, train_y, test_x, test_y)
    single = evaluate(np.array([1, 0, 0, 0, 0, 0], dtype=np.uint8), train, test, 5, DEFAULT)
    full = evaluate(np.ones(6, dtype=np.uint8), train, test, 5, DEFAULT)
    assert single.accuracy == 1.0
    assert single.fitness < full.fitness


# ------------------------------------------------------- make_knn_objective

def test_objective_matches_evaluate_exactly():
    rng = np.random.default_rng(2025)
    for _ in range(10):
        train, test = random_problem(
            rng,
            n_train=int(rng.integers(8, 30)),
            n_test=int(rng.integers(2, 10)),
            dim=int(rng.integers(2, 8)),
        )
        dim = train.x.shape[1]
        objective = make_knn_objective(train, test, k=3, params=DEFAULT)
        for _ in range(8):
            mask = (rng.random(dim) < 0.5).astype(np.uint8)
            if not mask.any():
                mask[int(rng.integers(dim))] = 1
            fast = objective(mask)
            slow = evaluate(mask, train, test, k=3, params=DEFAULT)
            assert fast == slow


def test_objective_empty_mask_rejected():
    rng = np.random.default_rng(3)
    train, test = random_problem(rng, n_train=10, n_test=4, dim=3)
    objective = make_knn_objective(train, test, k=3, params=DEFAULT)
    with pytest.raises(ValueError, match="empty subset"):
        objective(np.zeros(3, dtype=np.uint8))


def test_evaluation_is_plain_data():
    result = Evaluation(fitness=0.5, accuracy=0.9, n_selected=2)
    assert result == Evaluation(fitness=0.5, accuracy=0.9, n_selected=2)
