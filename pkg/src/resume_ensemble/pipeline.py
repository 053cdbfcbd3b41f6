"""End-to-end ensemble parsing: extract with every backend, normalize, aggregate."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .aggregate import ConfigurationError, ConsensusDelegate, FieldVote, WeightVector, aggregate
from .extractors import Backend, ExtractionFailure, ModelPrediction, PanelEntry, run_panel
from .normalize import SkillOntology, normalize_fields
from .schema import ParsedResume, ResumeDocument


@dataclass(frozen=True)
class EnsembleResult:
    document_id: str
    resume: ParsedResume | None  # None when every backend failed
    votes: tuple[FieldVote, ...]
    predictions: tuple[ModelPrediction, ...]  # normalized, sorted by model id
    failures: tuple[ExtractionFailure, ...]


def normalize_panel(entries: Sequence[PanelEntry], ontology: SkillOntology) -> list[PanelEntry]:
    return [
        replace(
            entry,
            predictions=tuple(
                replace(p, prediction=normalize_fields(p.prediction, ontology)) for p in entry.predictions
            ),
        )
        for entry in entries
    ]


def check_weights(model_ids: Sequence[str], weights: WeightVector) -> None:
    missing = sorted(set(model_ids) - set(weights.weights))
    if missing:
        raise ConfigurationError(f"no weight configured for model(s): {', '.join(missing)}")


def ensemble_parse(
    documents: Sequence[ResumeDocument],
    backends: Sequence[Backend],
    weights: WeightVector,
    ontology: SkillOntology | None = None,
    delegate: ConsensusDelegate | None = None,
    max_workers: int = 1,
) -> list[EnsembleResult]:
    """Parse ``documents`` with the whole panel and fuse the results.

    The weight check runs before any extraction so a misconfigured panel
    costs nothing.
    """
    check_weights([b.model_id for b in backends], weights)
    ontology = ontology or SkillOntology.default()
    panel = normalize_panel(run_panel(documents, backends, max_workers=max_workers), ontology)
    texts = {doc.id: doc.raw_text for doc in documents}

    results = []
    for entry in panel:
        if entry.failed:
            results.append(EnsembleResult(entry.document_id, None, (), (), entry.failures))
            continue
        resume, votes = aggregate(entry.predictions, weights, delegate, texts[entry.document_id])
        results.append(
            EnsembleResult(entry.document_id, resume, tuple(votes), entry.predictions, entry.failures)
        )
    return results
