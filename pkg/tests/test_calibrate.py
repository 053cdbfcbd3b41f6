import itertools

import pytest

from resume_ensemble.aggregate import WeightVector
from resume_ensemble.calibrate import (
    CalibrationError,
    default_grid,
    ensemble_rs,
    grid_search_weights,
    rs_weight_sweep,
    scale_class,
)
from resume_ensemble.corpus import generate_synthetic
from resume_ensemble.extractors import MockProfile
from resume_ensemble.metrics import RSWeights, evaluate_corpus
from resume_ensemble.simulation import PLANTED_PROFILES, panel_predictions, phone_noisy_pairs


@pytest.fixture(scope="module")
def setup():
    corpus = generate_synthetic(40, seed=13)
    profiles = [
        MockProfile.build(m, seed=13, rates=s["rates"], kinds=s["kinds"])
        for m, s in sorted(PLANTED_PROFILES.items())
    ]
    return list(corpus), panel_predictions(corpus, profiles)


def test_default_grid_has_27_points_in_25_scale_classes():
    grid = default_grid(["c", "a", "b"])
    assert len(grid) == 27
    assert {w.as_tuple() for w in grid} == set(itertools.product((1, 2, 3), repeat=3))
    assert len({scale_class(w) for w in grid}) == 25


def test_single_point_grid_returns_that_point(setup):
    validation, preds = setup
    w = WeightVector({"noisy_b": 1, "noisy_c": 1, "reliable": 5})
    result = grid_search_weights(validation, preds, [w])
    assert result.best_weights == w
    assert result.best_rs == ensemble_rs(validation, preds, w)


def test_default_search_traces_every_point(setup):
    validation, preds = setup
    result = grid_search_weights(validation, preds)
    assert len(result.grid) == 27
    assert result.best_rs == max(rs for _, rs in result.grid)
    # multiples of each other score identically
    by_class = {}
    for w, rs in result.grid:
        by_class.setdefault(scale_class(w), set()).add(rs)
    assert all(len(v) == 1 for v in by_class.values())
    # smallest total among the maxima
    winners = [w for w, rs in result.grid if rs == result.best_rs]
    assert result.best_weights.total == min(w.total for w in winners)


def test_scale_classes_agree_on_other_corpora():
    for seed in (1, 2):
        corpus = generate_synthetic(15, seed=seed)
        profiles = [
            MockProfile.build(m, seed=seed, rates=s["rates"], kinds=s["kinds"])
            for m, s in sorted(PLANTED_PROFILES.items())
        ]
        preds = panel_predictions(corpus, profiles)
        a = WeightVector({"noisy_b": 1, "noisy_c": 2, "reliable": 3})
        b = WeightVector({"noisy_b": 2, "noisy_c": 4, "reliable": 6})
        assert ensemble_rs(list(corpus), preds, a) == ensemble_rs(list(corpus), preds, b)


def test_best_is_at_least_any_grid_point(setup):
    validation, preds = setup
    result = grid_search_weights(validation, preds)
    assert all(result.best_rs >= ensemble_rs(validation, preds, w) for w in default_grid(list(preds)))


def test_search_is_deterministic(setup):
    validation, preds = setup
    a = grid_search_weights(validation, preds)
    b = grid_search_weights(validation, preds)
    assert a.best_weights == b.best_weights and [rs for _, rs in a.grid] == [rs for _, rs in b.grid]


def test_search_errors(setup):
    validation, preds = setup
    partial = {m: dict(p) for m, p in preds.items()}
    del partial["reliable"][validation[0][0].id]
    with pytest.raises(CalibrationError, match="missing"):
        grid_search_weights(validation, partial)
    with pytest.raises(CalibrationError):
        grid_search_weights([], preds)
    with pytest.raises(CalibrationError):
        grid_search_weights(validation, preds, [])
    with pytest.raises(CalibrationError):
        grid_search_weights(validation, preds, [WeightVector({"reliable": 1})])


def test_result_serialization(setup):
    validation, preds = setup
    result = grid_search_weights(validation, preds, default_grid(list(preds), (1, 2)))
    d = result.to_dict()
    assert d["best_weights"] == result.best_weights.to_dict() and len(d["grid"]) == 8
    lines = result.table().splitlines()
    assert len(lines) == 10 and lines[0].startswith("weights")


# -- RS weight sweep ---------------------------------------------------------

def test_sweep_at_default_equals_evaluate_corpus():
    pairs = phone_noisy_pairs(3, n=30)
    (_, rs), = rs_weight_sweep(pairs, [0.35])
    assert rs == pytest.approx(evaluate_corpus(pairs).rs, abs=1e-12)


def test_sweep_at_zero_ignores_skills():
    pairs = phone_noisy_pairs(3, n=30)
    (_, rs), = rs_weight_sweep(pairs, [0.0])
    assert rs == pytest.approx(evaluate_corpus(pairs, RSWeights().with_skill_weight(0.0)).rs)
    assert rs < evaluate_corpus(pairs).rs


def test_sweep_rejects_out_of_range():
    with pytest.raises(ValueError):
        rs_weight_sweep(phone_noisy_pairs(3, n=5), [1.0])
    with pytest.raises(ValueError):
        rs_weight_sweep(phone_noisy_pairs(3, n=5), [-0.1])


def test_with_skill_weight_keeps_ratios():
    w = RSWeights().with_skill_weight(0.5)
    assert sum(w.as_dict().values()) == pytest.approx(1.0)
    assert w.email / w.phone == pytest.approx(1.0)
    assert w.email / w.remainder["name"] == pytest.approx(0.15 / 0.0875)
