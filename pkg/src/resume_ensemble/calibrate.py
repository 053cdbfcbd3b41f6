"""Choosing the voting weights on validation data, and RS weight sensitivity."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .aggregate import WeightVector, aggregate
from .extractors import ModelPrediction
from .metrics import RSWeights, evaluate_corpus, recruitment_similarity
from .schema import ParsedResume, ResumeDocument


class CalibrationError(ValueError):
    pass


@dataclass
class CalibrationResult:
    best_weights: WeightVector
    grid: list[tuple[WeightVector, float]]  # in the order the grid was given
    runtime: float  # seconds

    @property
    def best_rs(self) -> float:
        return max(rs for _, rs in self.grid)

    def to_dict(self) -> dict:
        return {
            "best_weights": self.best_weights.to_dict(),
            "best_rs": self.best_rs,
            "grid": [{"weights": w.to_dict(), "rs": rs} for w, rs in self.grid],
            "runtime_seconds": self.runtime,
        }

    def table(self) -> str:
        rows = sorted(self.grid, key=lambda item: (-item[1], _tie_key(item[0])))
        width = max(len(str(w)) for w, _ in rows)
        lines = [f"{'weights'.ljust(width)}  RS (%)", "-" * (width + 8)]
        lines += [f"{str(w).ljust(width)}  {100 * rs:6.2f}" for w, rs in rows]
        return "\n".join(lines)


def default_grid(model_ids: Sequence[str], values: Sequence[int] = (1, 2, 3)) -> list[WeightVector]:
    """Every assignment of ``values`` to the models (|values|^k points)."""
    ids = sorted(model_ids)
    return [WeightVector(dict(zip(ids, combo))) for combo in itertools.product(values, repeat=len(ids))]


def scale_class(weights: WeightVector) -> tuple[Fraction, ...]:
    """Identical for vectors that are positive multiples of each other."""
    fracs = [Fraction(w) for w in weights.as_tuple()]
    total = sum(fracs)
    return tuple(f / total for f in fracs)


def _tie_key(weights: WeightVector) -> tuple:
    return (weights.total, weights.as_tuple())


def ensemble_rs(
    validation: Sequence[tuple[ResumeDocument, ParsedResume]],
    predictions: Mapping[str, Mapping[str, ParsedResume]],
    weights: WeightVector,
    rs_weights: RSWeights | None = None,
) -> float:
    """Mean RS of the ensemble on ``validation`` using the deterministic consensus fallback."""
    total = []
    for doc, gold in validation:
        panel = [ModelPrediction(m, predictions[m][doc.id]) for m in sorted(predictions)]
        fused, _ = aggregate(panel, weights, None, doc.raw_text)
        total.append(recruitment_similarity(fused, gold, rs_weights))
    return math.fsum(total) / len(total)


def grid_search_weights(
    validation: Sequence[tuple[ResumeDocument, ParsedResume]],
    predictions: Mapping[str, Mapping[str, ParsedResume]],
    grid: Sequence[WeightVector] | None = None,
    rs_weights: RSWeights | None = None,
) -> CalibrationResult:
    """Score every weight vector in ``grid`` by mean validation RS.

    ``predictions[model_id][document_id]`` must hold a normalized prediction
    for every pair; nothing is re-extracted. Vectors that are multiples of
    one another give the same aggregate, so each scale class is scored once.
    The best vector has maximal RS, then smallest total weight, then the
    smallest weights in model-id order.
    """
    started = time.perf_counter()
    if not validation:
        raise CalibrationError("validation set is empty")
    if not predictions:
        raise CalibrationError("no model predictions given")
    missing = [
        (m, doc.id) for m in sorted(predictions) for doc, _ in validation if doc.id not in predictions[m]
    ]
    if missing:
        shown = ", ".join(f"{m}/{d}" for m, d in missing[:5])
        raise CalibrationError(f"missing predictions for {len(missing)} (model, document) pairs: {shown}")
    if grid is None:
        grid = default_grid(list(predictions))
    if not grid:
        raise CalibrationError("grid is empty")
    for w in grid:
        if set(w.weights) != set(predictions):
            raise CalibrationError(f"grid point {w} does not weight exactly the models {sorted(predictions)}")

    cache: dict[tuple, float] = {}
    trace = []
    for w in grid:
        key = scale_class(w)
        if key not in cache:
            cache[key] = ensemble_rs(validation, predictions, w, rs_weights)
        trace.append((w, cache[key]))

    best = max(trace, key=lambda item: item[1])[1]
    best_weights = min((w for w, rs in trace if rs == best), key=_tie_key)
    return CalibrationResult(best_weights, trace, time.perf_counter() - started)


def rs_weight_sweep(
    pairs: Sequence[tuple[ParsedResume, ParsedResume]],
    skill_weight_values: Sequence[float],
    base: RSWeights | None = None,
) -> list[tuple[float, float]]:
    """Mean RS over (prediction, gold) pairs for each skills weight.

    The other weights of ``base`` are rescaled to keep the total at 1.
    """
    base = base or RSWeights()
    out = []
    for value in skill_weight_values:
        if not 0.0 <= value < 1.0:
            raise ValueError(f"skills weight must be in [0, 1), got {value}")
        rs_weights = base.with_skill_weight(value)
        out.append((value, evaluate_corpus(pairs, rs_weights).rs))
    return out
