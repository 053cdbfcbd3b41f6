"""Offline ensemble-vs-single-model simulation with mock extractors.

Three mock backends stand in for a reliable structured-output model
(``phi``, weight 3), a fast general model (``gemma``, weight 2) and a model
strong on free-form content (``llama``, weight 1). Their error profiles put
each one's field-level exact match around 0.8 on synthetic resumes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .aggregate import ConsensusDelegate, GroundedConsensus, WeightVector, aggregate
from .calibrate import CalibrationResult, grid_search_weights
from .corpus import Corpus, GeneratorConfig, generate_synthetic
from .extractors import MockBackend, MockProfile, corrupt_resume, run_panel
from .metrics import MetricReport, RSWeights, evaluate_corpus
from .normalize import SkillOntology
from .pipeline import normalize_panel
from .schema import ParsedResume

PANEL_WEIGHTS = {"phi": 3, "gemma": 2, "llama": 1}

PANEL_PROFILES = {
    # Reliable on structure. Drops contact fields, hallucinates skills, copies
    # an outlier address into job locations, merges education entries.
    "phi": {
        "rates": {"name": 0.05, "email": 0.12, "phone": 0.14, "department": 0.10,
                  "skills": 0.28, "experience": 0.40, "education": 0.35},
        "kinds": {"name": "typo", "email": "drop", "phone": "drop", "department": "drop",
                  "skills": "wrong_value", "experience": "wrong_value", "education": "merge_bullets"},
    },
    # Fast and accurate on short fields, misses skills and whole jobs.
    "gemma": {
        "rates": {"name": 0.08, "email": 0.10, "phone": 0.10, "department": 0.15,
                  "skills": 0.35, "experience": 0.10, "education": 0.38},
        "kinds": {"name": "typo", "email": "drop", "phone": "drop", "department": "wrong_value",
                  "skills": "drop", "experience": "drop", "education": "wrong_value"},
    },
    # Good with skills, noisy elsewhere.
    "llama": {
        "rates": {"name": 0.10, "email": 0.15, "phone": 0.20, "department": 0.12,
                  "skills": 0.15, "experience": 0.12, "education": 0.40},
        "kinds": {"name": "typo", "email": "typo", "phone": "drop", "department": "wrong_value",
                  "skills": "drop", "experience": "drop", "education": "wrong_value"},
    },
}


def panel_profiles(seed: int) -> list[MockProfile]:
    return [
        MockProfile.build(model_id, seed=seed, rates=spec["rates"], kinds=spec["kinds"])
        for model_id, spec in sorted(PANEL_PROFILES.items())
    ]


@dataclass
class SimulationResult:
    corpus: Corpus
    reports: dict[str, MetricReport]  # model id -> report, plus "ensemble"
    runtime: float

    @property
    def singles(self) -> dict[str, MetricReport]:
        return {k: v for k, v in self.reports.items() if k != "ensemble"}

    @property
    def ensemble(self) -> MetricReport:
        return self.reports["ensemble"]


def simulate(
    seed: int,
    n: int = 340,
    profiles: list[MockProfile] | None = None,
    weights: WeightVector | None = None,
    delegate: ConsensusDelegate | None = None,
    config: GeneratorConfig = GeneratorConfig(),
    rs_weights: RSWeights | None = None,
    max_workers: int = 1,
) -> SimulationResult:
    """Generate ``n`` resumes, run the mock panel, and score singles and ensemble."""
    started = time.perf_counter()
    ontology = SkillOntology.default()
    corpus = generate_synthetic(n, seed, config=config, ontology=ontology)
    profiles = profiles if profiles is not None else panel_profiles(seed)
    weights = weights or WeightVector(PANEL_WEIGHTS)
    delegate = delegate if delegate is not None else GroundedConsensus()
    golds = corpus.golds()

    backends = [MockBackend(p, golds) for p in profiles]
    panel = normalize_panel(run_panel(corpus.documents, backends, max_workers), ontology)
    texts = {doc.id: doc.raw_text for doc in corpus.documents}

    per_model: dict[str, list] = {p.model_id: [] for p in profiles}
    fused_pairs = []
    for entry in panel:
        gold = golds[entry.document_id]
        for pred in entry.predictions:
            per_model[pred.model_id].append((pred.prediction, gold))
        fused, _ = aggregate(entry.predictions, weights, delegate, texts[entry.document_id])
        fused_pairs.append((fused, gold))

    reports = {m: evaluate_corpus(pairs, rs_weights) for m, pairs in sorted(per_model.items())}
    reports["ensemble"] = evaluate_corpus(fused_pairs, rs_weights)
    return SimulationResult(corpus, reports, time.perf_counter() - started)


# -- calibration scenarios ---------------------------------------------------

PLANTED_PROFILES = {
    # near-perfect on nested fields, occasional scalar slips
    "reliable": {
        "rates": {"name": 0.05, "email": 0.05, "phone": 0.05, "department": 0.05,
                  "skills": 0.10, "experience": 0.02, "education": 0.02},
        "kinds": {"name": "typo", "email": "typo", "phone": "typo", "department": "wrong_value",
                  "skills": "drop", "experience": "typo", "education": "typo"},
    },
    "noisy_b": {
        "rates": {"name": 0.25, "email": 0.25, "phone": 0.25, "department": 0.25,
                  "skills": 0.30, "experience": 0.50, "education": 0.50},
        "kinds": {"name": "typo", "email": "typo", "phone": "typo", "department": "wrong_value",
                  "skills": "wrong_value", "experience": "wrong_value", "education": "wrong_value"},
    },
    "noisy_c": {
        "rates": {"name": 0.25, "email": 0.25, "phone": 0.25, "department": 0.25,
                  "skills": 0.30, "experience": 0.50, "education": 0.50},
        "kinds": {"name": "typo", "email": "typo", "phone": "typo", "department": "wrong_value",
                  "skills": "drop", "experience": "drop", "education": "merge_bullets"},
    },
}


def panel_predictions(
    corpus: Corpus, profiles: list[MockProfile], ontology: SkillOntology | None = None
) -> dict[str, dict[str, ParsedResume]]:
    """Normalized mock predictions as ``{model_id: {document_id: resume}}``."""
    ontology = ontology or SkillOntology.default()
    golds = corpus.golds()
    panel = normalize_panel(run_panel(corpus.documents, [MockBackend(p, golds) for p in profiles]), ontology)
    out: dict[str, dict[str, ParsedResume]] = {p.model_id: {} for p in profiles}
    for entry in panel:
        for pred in entry.predictions:
            out[pred.model_id][entry.document_id] = pred.prediction
    return out


def planted_calibration(seed: int, n: int = 200, grid: list[WeightVector] | None = None) -> CalibrationResult:
    """Grid-search weights for a panel where only ``reliable`` is trustworthy."""
    ontology = SkillOntology.default()
    corpus = generate_synthetic(n, seed, ontology=ontology)
    profiles = [
        MockProfile.build(m, seed=seed, rates=spec["rates"], kinds=spec["kinds"])
        for m, spec in sorted(PLANTED_PROFILES.items())
    ]
    predictions = panel_predictions(corpus, profiles, ontology)
    return grid_search_weights(list(corpus), predictions, grid)


def phone_noisy_pairs(seed: int, n: int = 200, phone_error_rate: float = 0.6) -> list[tuple[ParsedResume, ParsedResume]]:
    """(prediction, gold) pairs whose skills are exact and whose phones are often wrong."""
    corpus = generate_synthetic(n, seed)
    profile = MockProfile.build(
        "phone_noisy", seed=seed, rates={"phone": phone_error_rate}, kinds={"phone": "typo"}
    )
    return [(corrupt_resume(gold, profile, doc.id), gold) for doc, gold in corpus]
