"""Per-field fusion of normalized predictions from several backends.

Scalar fields are settled by weighted majority, skills by a weighted
threshold (strictly more than half the panel weight), and the nested
histories by a consensus delegate whenever the backends disagree.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping, Protocol, Sequence

from .extractors import ChatClient, EndpointConfig, ModelPrediction, repair_json
from .normalize import collapse_ws, normalize_education, normalize_experience
from .schema import (
    NESTED_FIELDS,
    PLACEHOLDER,
    SCALAR_FIELDS,
    EducationEntry,
    ExperienceEntry,
    ParsedResume,
    canonical_json,
    education_from_list,
    experience_from_list,
    validate,
)

logger = logging.getLogger(__name__)


class ConfigurationError(ValueError):
    """The panel and the weight vector do not fit together."""


class NoCandidatesError(ValueError):
    pass


class ConsensusError(RuntimeError):
    """A delegate could not produce a usable fused value."""


@dataclass(frozen=True)
class WeightVector:
    """Positive voting weight per model id."""

    weights: Mapping[str, float]

    def __post_init__(self) -> None:
        if not self.weights:
            raise ConfigurationError("weight vector must have at least one entry")
        for model_id, w in self.weights.items():
            if isinstance(w, bool) or not isinstance(w, (int, float)) and not hasattr(w, "numerator"):
                raise ConfigurationError(f"weight for {model_id!r} must be a number")
            if not math.isfinite(w) or w <= 0:
                raise ConfigurationError(f"weight for {model_id!r} must be positive and finite, got {w}")

    def __getitem__(self, model_id: str) -> float:
        return self.weights[model_id]

    def __contains__(self, model_id: object) -> bool:
        return model_id in self.weights

    @property
    def model_ids(self) -> list[str]:
        return sorted(self.weights)

    @property
    def total(self) -> float:
        return math.fsum(self.weights.values())

    def as_tuple(self) -> tuple:
        return tuple(self.weights[m] for m in self.model_ids)

    def scaled(self, factor: float) -> "WeightVector":
        return WeightVector({m: w * factor for m, w in self.weights.items()})

    def to_dict(self) -> dict[str, float]:
        return {m: self.weights[m] for m in self.model_ids}

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse ``"phi=3,gemma=2,llama=1"``."""
        weights: dict[str, float] = {}
        for part in text.split(","):
            if not part.strip():
                continue
            name, sep, value = part.partition("=")
            if not sep or not name.strip():
                raise ConfigurationError(f"expected model=weight, got {part!r}")
            try:
                number = float(value)
            except ValueError:
                raise ConfigurationError(f"weight for {name.strip()!r} is not a number: {value!r}") from None
            weights[name.strip()] = int(number) if number.is_integer() else number
        return cls(weights)

    def __str__(self) -> str:
        return ",".join(f"{m}={_fmt(self.weights[m])}" for m in self.model_ids)


def _fmt(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


@dataclass(frozen=True)
class FieldVote:
    """Audit record of how one field was decided."""

    field: str
    candidates: tuple[tuple[Any, str, float], ...]  # (value, model_id, weight)
    strategy_used: str  # majority | threshold | consensus | passthrough
    winner: Any
    tally: Mapping[str, float]
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "field": self.field,
            "strategy_used": self.strategy_used,
            "note": self.note,
            "winner": _plain(self.winner),
            "tally": dict(self.tally),
            "candidates": [
                {"model_id": m, "weight": w, "value": _plain(v)} for v, m, w in self.candidates
            ],
        }


def _plain(value: Any) -> Any:
    return json.loads(canonical_json(value))


# -- voting primitives -------------------------------------------------------

def weighted_majority_vote(candidates: Sequence[tuple[Hashable, float]]) -> tuple[Hashable, dict]:
    """Pick the value with the largest cumulative weight.

    Ties are broken by: non-placeholder beats ``"N/A"``, then the largest
    single supporting weight, then the lexicographically smallest value.

    Returns:
        (winner, tally) where tally maps each value to its cumulative weight.
    """
    if not candidates:
        raise NoCandidatesError("weighted_majority_vote needs at least one candidate")
    support: dict[Hashable, list[float]] = {}
    for value, weight in candidates:
        if weight <= 0:
            raise ValueError(f"weights must be positive, got {weight}")
        support.setdefault(value, []).append(weight)
    tally = {v: math.fsum(ws) for v, ws in support.items()}
    ranked = sorted(
        support,
        key=lambda v: (-tally[v], v == PLACEHOLDER, -max(support[v]), v),
    )
    ordered_tally = {v: tally[v] for v in ranked}
    return ranked[0], ordered_tally


def weighted_threshold_vote(
    skill_lists: Sequence[tuple[Sequence[str], float]],
    threshold: float | None = None,
) -> list[str]:
    """Keep items whose cumulative support strictly exceeds ``threshold``.

    ``threshold`` defaults to half the total panel weight. Output is sorted by
    descending support, ties by first appearance in panel order. Each list
    counts an item at most once.
    """
    if threshold is None:
        threshold = math.fsum(w for _, w in skill_lists) / 2
    support, first = _support(skill_lists)
    kept = [s for s in support if support[s] > threshold]
    return sorted(kept, key=lambda s: (-support[s], first[s]))


def _support(skill_lists: Iterable[tuple[Sequence[str], float]]) -> tuple[dict[str, float], dict[str, int]]:
    weights: dict[str, list[float]] = {}
    first: dict[str, int] = {}
    for items, w in skill_lists:
        for s in dict.fromkeys(items):
            weights.setdefault(s, []).append(w)
            first.setdefault(s, len(first))
    return {s: math.fsum(ws) for s, ws in weights.items()}, first


# -- consensus ---------------------------------------------------------------

@dataclass(frozen=True)
class ConsensusRequest:
    field: str
    document_text: str
    candidates: tuple[tuple[str, float, str], ...]  # (model_id, weight, value as JSON text)

    def __post_init__(self) -> None:
        if self.field not in NESTED_FIELDS:
            raise ValueError(f"consensus only applies to {NESTED_FIELDS}, got {self.field!r}")
        if len({c[2] for c in self.candidates}) < 2:
            raise ValueError("consensus needs at least two distinct candidate values")


class ConsensusDelegate(Protocol):
    name: str

    def fuse(self, request: ConsensusRequest) -> str:
        """Return the fused value as JSON text (a list, or ``{field: list}``)."""
        ...


def _entries_from(field_name: str, value: Any, where: str = "") -> tuple:
    if field_name == "experience":
        return normalize_experience(experience_from_list(value, where or field_name))
    return normalize_education(education_from_list(value, where or field_name))


def fallback_consensus(request: ConsensusRequest) -> tuple:
    """The candidate of the heaviest model; ties go to the smallest model id."""
    model_id, _, text = min(request.candidates, key=lambda c: (-c[1], c[0]))
    return _entries_from(request.field, json.loads(text))


def _decode_delegate_answer(request: ConsensusRequest, text: str) -> tuple:
    obj = json.loads(text)
    if isinstance(obj, dict):
        if request.field in obj:
            obj = obj[request.field]
        elif len(obj) == 1:
            obj = next(iter(obj.values()))
        else:
            raise ConsensusError(f"delegate answer has no {request.field!r} key")
    entries = _entries_from(request.field, obj)
    problems = validate(ParsedResume(**{request.field: entries}))
    if problems:
        raise ConsensusError("delegate answer fails validation: " + "; ".join(map(str, problems)))
    return entries


def consensus(request: ConsensusRequest, delegate: ConsensusDelegate | None = None) -> tuple[tuple, str]:
    """Fuse conflicting nested candidates.

    Returns (entries, note). Without a delegate, or when the delegate fails
    in any way, the deterministic fallback is used and the note says why.
    """
    if delegate is None:
        return fallback_consensus(request), "fallback"
    try:
        entries = _decode_delegate_answer(request, delegate.fuse(request))
    except Exception as exc:  # delegate outages must never fail aggregation
        logger.warning("consensus delegate %s failed on %s: %s", delegate.name, request.field, exc)
        return fallback_consensus(request), f"fallback: {type(exc).__name__}: {exc}"
    return entries, f"delegate: {delegate.name}"


def _norm_text(text: str) -> str:
    return collapse_ws(text).lower()


def _bounded_find(haystack: str, needle: str) -> int:
    """Index of ``needle`` in ``haystack`` not glued to neighbouring alphanumerics, or -1."""
    if not needle:
        return -1
    start = haystack.find(needle)
    while start != -1:
        end = start + len(needle)
        before = haystack[start - 1] if start else " "
        after = haystack[end] if end < len(haystack) else " "
        if not before.isalnum() and not after.isalnum():
            return start
        start = haystack.find(needle, start + 1)
    return -1


class GroundedConsensus:
    """Offline delegate that fuses nested candidates against the source document.

    Entries are clustered by employer (experience) or institution (education).
    A cluster survives if its key occurs in the document or if more than half
    the panel weight proposes it. Inside a cluster, text values that occur in
    the document are preferred before weighted voting; bullets are pooled and
    kept when they occur in the document or have majority support. Surviving
    items are ordered by their position in the document.
    """

    name = "grounded"

    def fuse(self, request: ConsensusRequest) -> str:
        text = _norm_text(request.document_text)
        total = math.fsum(w for _, w, _ in request.candidates)
        key_attr = "company" if request.field == "experience" else "institution"

        clusters: dict[str, list[tuple[str, float, Any]]] = {}
        for model_id, weight, value in sorted(request.candidates, key=lambda c: c[0]):
            seen: set[str] = set()
            for entry in _entries_from(request.field, json.loads(value)):
                key = _norm_text(getattr(entry, key_attr))
                if key in seen:
                    continue
                seen.add(key)
                clusters.setdefault(key, []).append((model_id, weight, entry))

        kept = []
        for rank, (key, members) in enumerate(clusters.items()):
            pos = _bounded_find(text, key) if key != PLACEHOLDER.lower() else -1
            support = math.fsum(w for _, w, _ in members)
            if pos >= 0 or support > total / 2:
                kept.append((pos if pos >= 0 else math.inf, rank, members))
        if not kept:
            raise ConsensusError("no candidate entry is grounded in the document")
        kept.sort(key=lambda k: (k[0], k[1]))

        fused = [self._merge(request.field, members, text, total) for _, _, members in kept]
        return json.dumps({request.field: [_plain(e) for e in fused]}, ensure_ascii=False)

    def _pick_text(self, values: list[tuple[str, float]], text: str) -> str:
        grounded = [
            (v, w) for v, w in values if v == PLACEHOLDER or _bounded_find(text, _norm_text(v)) >= 0
        ]
        return weighted_majority_vote(grounded or values)[0]

    def _merge(self, field_name: str, members, text: str, total: float):
        entries = [(w, e) for _, w, e in members]
        if field_name == "experience":
            pooled, first = _support([(e.bullets, w) for w, e in entries])
            bullets = []
            for b, support in pooled.items():
                pos = _bounded_find(text, _norm_text(b))
                if pos >= 0 or support > total / 2:
                    bullets.append((pos if pos >= 0 else math.inf, first[b], b))
            bullets.sort()
            return ExperienceEntry(
                title=self._pick_text([(e.title, w) for w, e in entries], text),
                company=self._pick_text([(e.company, w) for w, e in entries], text),
                location=self._pick_text([(e.location, w) for w, e in entries], text),
                start_date=weighted_majority_vote([(e.start_date, w) for w, e in entries])[0],
                end_date=weighted_majority_vote([(e.end_date, w) for w, e in entries])[0],
                bullets=tuple(b for _, _, b in bullets),
            )
        return EducationEntry(
            degree=self._pick_text([(e.degree, w) for w, e in entries], text),
            institution=self._pick_text([(e.institution, w) for w, e in entries], text),
            field_of_study=self._pick_text([(e.field_of_study, w) for w, e in entries], text),
            start_date=weighted_majority_vote([(e.start_date, w) for w, e in entries])[0],
            end_date=weighted_majority_vote([(e.end_date, w) for w, e in entries])[0],
        )


CONSENSUS_SYSTEM_PROMPT = (
    "You reconcile conflicting structured extractions of one resume. "
    "Reply with one JSON object and nothing else."
)


def consensus_prompt(request: ConsensusRequest) -> str:
    lines = [
        f"Field: {request.field}",
        "",
        "Resume:",
        request.document_text,
        "",
        "Candidate extractions (model, voting weight, value):",
    ]
    for model_id, weight, value in request.candidates:
        lines.append(f"- {model_id} (weight {_fmt(weight)}): {value}")
    lines += [
        "",
        "Using the resume as the source of truth, return the correct value as "
        f'{{"{request.field}": [...]}} with the same entry keys as the candidates. '
        "Keep each bullet as a separate string and write dates as YYYY-MM-DD.",
    ]
    return "\n".join(lines)


class ChatConsensusDelegate:
    """Consensus delegate backed by a chat-completion endpoint."""

    def __init__(self, config: EndpointConfig, client: ChatClient | None = None):
        self.config = config
        self.client = client or ChatClient(config)
        self.name = config.model_id

    def fuse(self, request: ConsensusRequest) -> str:
        raw = self.client.complete(
            [
                {"role": "system", "content": CONSENSUS_SYSTEM_PROMPT},
                {"role": "user", "content": consensus_prompt(request)},
            ]
        )
        return repair_json(raw)


def build_delegate(spec: Mapping[str, Any] | str | None) -> ConsensusDelegate | None:
    """``None``/``"fallback"`` -> no delegate; ``"grounded"``; or an http endpoint spec."""
    if spec is None:
        return None
    if isinstance(spec, str):
        spec = {"type": spec}
    kind = spec.get("type", "fallback")
    if kind == "fallback":
        return None
    if kind == "grounded":
        return GroundedConsensus()
    if kind == "http":
        return ChatConsensusDelegate(EndpointConfig.from_dict(spec))
    raise ValueError(f"unknown consensus delegate type {kind!r}")


# -- aggregation -------------------------------------------------------------

def aggregate(
    predictions: Sequence[ModelPrediction],
    weights: WeightVector,
    delegate: ConsensusDelegate | None = None,
    document_text: str = "",
) -> tuple[ParsedResume, list[FieldVote]]:
    """Fuse one document's normalized predictions into a single resume.

    Returns the fused resume and one :class:`FieldVote` per schema field.

    Raises:
        NoCandidatesError: ``predictions`` is empty.
        ConfigurationError: a model has no weight or appears twice.
    """
    if not predictions:
        raise NoCandidatesError("aggregate needs at least one prediction")
    ids = [p.model_id for p in predictions]
    if len(set(ids)) != len(ids):
        raise ConfigurationError(f"duplicate model ids among predictions: {sorted(ids)}")
    missing = sorted(set(ids) - set(weights.weights))
    if missing:
        raise ConfigurationError(f"no weight configured for model(s): {', '.join(missing)}")

    panel = sorted(predictions, key=lambda p: p.model_id)
    votes: list[FieldVote] = []
    values: dict[str, Any] = {}

    for name in SCALAR_FIELDS:
        cands = tuple((getattr(p.prediction, name), p.model_id, weights[p.model_id]) for p in panel)
        winner, tally = weighted_majority_vote([(v, w) for v, _, w in cands])
        values[name] = winner
        votes.append(FieldVote(name, cands, "majority", winner, tally))

    lists = [(p.prediction.skills, weights[p.model_id]) for p in panel]
    threshold = math.fsum(w for _, w in lists) / 2
    skills = weighted_threshold_vote(lists, threshold)
    support, _ = _support(lists)
    values["skills"] = tuple(skills)
    votes.append(
        FieldVote(
            "skills",
            tuple((p.prediction.skills, p.model_id, weights[p.model_id]) for p in panel),
            "threshold",
            tuple(skills),
            dict(sorted(support.items(), key=lambda kv: (-kv[1], kv[0]))),
            note=f"threshold {_fmt(threshold)} (strict)",
        )
    )

    for name in NESTED_FIELDS:
        cands = tuple((getattr(p.prediction, name), p.model_id, weights[p.model_id]) for p in panel)
        texts = [canonical_json(v) for v, _, _ in cands]
        grouped: dict[str, list[float]] = {}
        for t, (_, _, w) in zip(texts, cands):
            grouped.setdefault(t, []).append(w)
        tally = {t: math.fsum(ws) for t, ws in sorted(grouped.items(), key=lambda kv: (-math.fsum(kv[1]), kv[0]))}
        if len(grouped) == 1:
            values[name] = cands[0][0]
            votes.append(FieldVote(name, cands, "passthrough", cands[0][0], tally))
            continue
        request = ConsensusRequest(
            name, document_text, tuple((m, w, t) for (_, m, w), t in zip(cands, texts))
        )
        fused, note = consensus(request, delegate)
        values[name] = fused
        votes.append(FieldVote(name, cands, "consensus", fused, tally, note=note))

    return ParsedResume(**values), votes
