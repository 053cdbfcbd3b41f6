"""Extractor backends: anything that maps a resume document to a prediction.

A backend is any object with a ``model_id`` attribute and an
``extract(document) -> ModelPrediction`` method. Two are provided:

* :class:`MockBackend` corrupts a known gold resume with a seeded,
  per-field error profile. Used for offline simulation and tests.
* :class:`ChatCompletionBackend` prompts an LLM behind a chat-completion
  HTTP endpoint and repairs its JSON reply.

:func:`run_panel` runs a set of backends over a set of documents.
"""

from __future__ import annotations

import json
import logging
import os
import random
import re
import string
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from dataclasses import replace as _replace
from pathlib import Path
from typing import Any, Mapping, Protocol, Sequence

import httpx

from .rng import derive_rng
from .schema import (
    FIELDS,
    NESTED_FIELDS,
    PLACEHOLDER,
    EducationEntry,
    ExperienceEntry,
    ParsedResume,
    ResumeDocument,
    SchemaError,
    resume_from_dict,
    serialize_resume,
)
from .vocab import (
    EMAIL_DOMAINS,
    FIRST_NAMES,
    HALLUCINATED_SKILLS,
    INSTITUTIONS,
    LAST_NAMES,
    OUTLIER_LOCATIONS,
    PROFESSIONS,
)

logger = logging.getLogger(__name__)

CORRUPTION_KINDS = ("drop", "typo", "merge_bullets", "wrong_value")


class ExtractionError(RuntimeError):
    """Base class for backend failures."""


class BackendUnavailable(ExtractionError):
    """Transport failure that persisted through every retry."""


class ExtractionFailed(ExtractionError):
    """The backend answered, but no resume could be recovered from the answer."""

    def __init__(self, message: str, raw_response: str = ""):
        super().__init__(message)
        self.raw_response = raw_response


@dataclass(frozen=True)
class ModelPrediction:
    model_id: str
    prediction: ParsedResume
    latency: float = 0.0  # milliseconds
    raw_response: str = ""


@dataclass(frozen=True)
class ExtractionFailure:
    document_id: str
    model_id: str
    error: str
    message: str
    raw_response: str = ""

    def to_dict(self) -> dict[str, str]:
        return {
            "document_id": self.document_id,
            "model_id": self.model_id,
            "error": self.error,
            "message": self.message,
        }


@dataclass(frozen=True)
class PanelEntry:
    document_id: str
    predictions: tuple[ModelPrediction, ...]
    failures: tuple[ExtractionFailure, ...] = ()

    @property
    def failed(self) -> bool:
        """True when every backend failed on this document."""
        return not self.predictions


class Backend(Protocol):
    model_id: str

    def extract(self, document: ResumeDocument) -> ModelPrediction: ...


# -- JSON repair -------------------------------------------------------------

_FENCE = re.compile(r"```[a-zA-Z0-9_-]*\s*\n?(.*?)```", re.DOTALL)


def _scan_object(text: str, start: int) -> tuple[str, int] | None:
    """Return (object text without trailing commas, end index) for the object at ``start``."""
    depth = 0
    in_str = False
    escaped = False
    out: list[str] = []
    i = start
    while i < len(text):
        ch = text[i]
        if in_str:
            out.append(ch)
            if escaped:
                escaped = False
            elif ch == "\\":
                escaped = True
            elif ch == '"':
                in_str = False
        elif ch == '"':
            in_str = True
            out.append(ch)
        elif ch in "{[":
            depth += 1
            out.append(ch)
        elif ch in "}]":
            # drop a trailing comma before the closer
            j = len(out) - 1
            while j >= 0 and out[j].isspace():
                j -= 1
            if j >= 0 and out[j] == ",":
                del out[j]
            depth -= 1
            out.append(ch)
            if depth == 0:
                return "".join(out), i + 1
        else:
            out.append(ch)
        i += 1
    return None


def repair_json(raw: str) -> str:
    """Recover the first top-level JSON object from an LLM reply.

    Strips code fences, surrounding prose and trailing commas. Returns compact
    JSON text.

    Raises:
        ExtractionFailed: no JSON object could be recovered.
    """
    candidates = [m.group(1) for m in _FENCE.finditer(raw)] + [raw]
    for text in candidates:
        pos = text.find("{")
        while pos != -1:
            scanned = _scan_object(text, pos)
            if scanned is None:
                break
            body, end = scanned
            try:
                obj = json.loads(body)
            except json.JSONDecodeError:
                pos = text.find("{", pos + 1)
                continue
            return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))
    raise ExtractionFailed("no JSON object found in response", raw_response=raw)


# -- mock backend ------------------------------------------------------------

@dataclass(frozen=True)
class MockProfile:
    """Error profile of a simulated extractor.

    ``per_field_error_rate[f]`` is the probability that field ``f`` is
    corrupted on a given document; ``corruption_kind[f]`` says how.
    """

    model_id: str
    per_field_error_rate: Mapping[str, float]
    corruption_kind: Mapping[str, str]
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.model_id:
            raise ValueError("model_id must be non-empty")
        for f in FIELDS:
            if f not in self.per_field_error_rate or f not in self.corruption_kind:
                raise ValueError(f"mock profile {self.model_id!r} has no entry for field {f!r}")
        for f, p in self.per_field_error_rate.items():
            if f not in FIELDS:
                raise ValueError(f"unknown field {f!r}")
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"error rate for {f!r} must be in [0, 1], got {p}")
        for f, kind in self.corruption_kind.items():
            if kind not in CORRUPTION_KINDS:
                raise ValueError(f"unknown corruption kind {kind!r} for {f!r}")

    @classmethod
    def build(
        cls,
        model_id: str,
        seed: int = 0,
        rates: Mapping[str, float] | None = None,
        kinds: Mapping[str, str] | None = None,
        default_kind: str = "typo",
    ) -> "MockProfile":
        """Fill unspecified fields with rate 0 and ``default_kind``."""
        rates = dict(rates or {})
        kinds = dict(kinds or {})
        return cls(
            model_id=model_id,
            per_field_error_rate={f: float(rates.get(f, 0.0)) for f in FIELDS},
            corruption_kind={f: kinds.get(f, default_kind) for f in FIELDS},
            seed=seed,
        )

    @classmethod
    def from_dict(cls, obj: Mapping[str, Any], default_seed: int = 0) -> "MockProfile":
        return cls.build(
            obj["model_id"],
            seed=int(obj.get("seed", default_seed)),
            rates=obj.get("per_field_error_rate"),
            kinds=obj.get("corruption_kind"),
            default_kind=obj.get("default_kind", "typo"),
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": "mock",
            "model_id": self.model_id,
            "seed": self.seed,
            "per_field_error_rate": dict(self.per_field_error_rate),
            "corruption_kind": dict(self.corruption_kind),
        }


def _typo(text: str, rng: random.Random) -> str:
    positions = [i for i, ch in enumerate(text) if ch.isalnum()]
    if not positions:
        return text + rng.choice(string.ascii_lowercase)
    i = rng.choice(positions)
    ch = text[i]
    if ch.isdigit():
        pool = string.digits
    elif ch.isupper():
        pool = string.ascii_uppercase
    else:
        pool = string.ascii_lowercase
    new = rng.choice([c for c in pool if c != ch])
    return text[:i] + new + text[i + 1 :]


def _other(pool: Sequence[str], current: str, rng: random.Random) -> str:
    return rng.choice([v for v in pool if v != current])


def _wrong_scalar(field_name: str, gold: str, rng: random.Random) -> str:
    if field_name == "name":
        while True:
            value = f"{rng.choice(FIRST_NAMES)} {rng.choice(LAST_NAMES)}"
            if value != gold:
                return value
    if field_name == "email":
        while True:
            value = f"{rng.choice(FIRST_NAMES)}.{rng.choice(LAST_NAMES)}@{rng.choice(EMAIL_DOMAINS)}".lower()
            if value != gold:
                return value
    if field_name == "phone":
        while True:
            value = f"+1-555-{rng.randint(100, 999)}-{rng.randint(1000, 9999)}"
            if value != gold:
                return value
    departments = sorted({p.department for p in PROFESSIONS})
    return _other(departments, gold, rng)


def _corrupt_scalar(field_name: str, gold: str, kind: str, rng: random.Random) -> str:
    if kind == "drop" and gold != PLACEHOLDER:
        return PLACEHOLDER
    if kind == "typo" and gold != PLACEHOLDER:
        out = _typo(gold, rng)
        return out.lower() if field_name == "email" else out
    return _wrong_scalar(field_name, gold, rng)


def _corrupt_skills(gold: tuple[str, ...], kind: str, rng: random.Random) -> tuple[str, ...]:
    skills = list(gold)
    if kind == "drop" and skills:
        del skills[rng.randrange(len(skills))]
        return tuple(skills)
    if kind == "typo" and skills:
        i = rng.randrange(len(skills))
        skills[i] = _typo(skills[i], rng)
        return tuple(skills)
    if kind == "merge_bullets" and len(skills) >= 2:
        i = rng.randrange(len(skills) - 1)
        skills[i : i + 2] = [f"{skills[i]}/{skills[i + 1]}"]
        return tuple(skills)
    # wrong_value: a hallucinated extra skill
    extra = rng.choice([s for s in HALLUCINATED_SKILLS if s not in gold])
    skills.insert(rng.randrange(len(skills) + 1), extra)
    return tuple(skills)


def _merge_text(a: str, b: str) -> str:
    return f"{a} and {b}"


def _corrupt_experience(gold: tuple[ExperienceEntry, ...], kind: str, rng: random.Random):
    entries = list(gold)
    if kind == "drop" and entries:
        del entries[rng.randrange(len(entries))]
        return tuple(entries)
    if kind == "typo" and entries:
        i = rng.randrange(len(entries))
        e = entries[i]
        slots = ["title", "company"] + (["location"] if e.location != PLACEHOLDER else [])
        slots += [f"bullet{j}" for j in range(len(e.bullets))]
        slot = rng.choice(slots)
        if slot.startswith("bullet"):
            j = int(slot[6:])
            bullets = list(e.bullets)
            bullets[j] = _typo(bullets[j], rng)
            entries[i] = _replace(e, bullets=tuple(bullets))
        else:
            entries[i] = _replace(e, **{slot: _typo(getattr(e, slot), rng)})
        return tuple(entries)
    if kind == "merge_bullets":
        mergeable = [i for i, e in enumerate(entries) if len(e.bullets) >= 2]
        if mergeable:
            i = rng.choice(mergeable)
            bullets = list(entries[i].bullets)
            j = rng.randrange(len(bullets) - 1)
            bullets[j : j + 2] = [_merge_text(bullets[j], bullets[j + 1])]
            entries[i] = _replace(entries[i], bullets=tuple(bullets))
            return tuple(entries)
    # wrong_value: one outlier location string copied into every entry
    location = rng.choice(OUTLIER_LOCATIONS)
    if not entries:
        return (ExperienceEntry(title="Consultant", company="Freelance", location=location),)
    return tuple(_replace(e, location=location) for e in entries)


def _corrupt_education(gold: tuple[EducationEntry, ...], kind: str, rng: random.Random):
    entries = list(gold)
    if kind == "drop" and entries:
        del entries[rng.randrange(len(entries))]
        return tuple(entries)
    if kind == "typo" and entries:
        i = rng.randrange(len(entries))
        e = entries[i]
        slots = ["degree", "institution"] + (["field_of_study"] if e.field_of_study != PLACEHOLDER else [])
        slot = rng.choice(slots)
        entries[i] = _replace(e, **{slot: _typo(getattr(e, slot), rng)})
        return tuple(entries)
    if kind == "merge_bullets" and len(entries) >= 2:
        i = rng.randrange(len(entries) - 1)
        a, b = entries[i], entries[i + 1]
        merged = EducationEntry(
            degree=_merge_text(a.degree, b.degree),
            institution=a.institution,
            field_of_study=a.field_of_study,
            start_date=b.start_date,
            end_date=a.end_date,
        )
        entries[i : i + 2] = [merged]
        return tuple(entries)
    # wrong_value: an institution the candidate never attended
    if not entries:
        return (EducationEntry(degree="BSc", institution=rng.choice(INSTITUTIONS)),)
    i = rng.randrange(len(entries))
    entries[i] = _replace(entries[i], institution=_other(INSTITUTIONS, entries[i].institution, rng))
    return tuple(entries)


def corrupt_resume(gold: ParsedResume, profile: MockProfile, document_id: str) -> ParsedResume:
    """Apply ``profile``'s corruptions to ``gold`` for one document.

    Each field draws from its own stream keyed by (seed, model_id, document
    id, field), so the outcome is independent of call order. A corruption
    that cannot apply (dropping an absent value, merging a single item)
    falls back to ``wrong_value``; every applied corruption changes the field.
    """
    values: dict[str, Any] = {}
    for f in FIELDS:
        value = getattr(gold, f)
        rng = derive_rng("mock", profile.seed, profile.model_id, document_id, f)
        if rng.random() < profile.per_field_error_rate[f]:
            kind = profile.corruption_kind[f]
            if f == "skills":
                value = _corrupt_skills(value, kind, rng)
            elif f == "experience":
                value = _corrupt_experience(value, kind, rng)
            elif f == "education":
                value = _corrupt_education(value, kind, rng)
            else:
                value = _corrupt_scalar(f, value, kind, rng)
        values[f] = value
    return ParsedResume(**values)


class MockBackend:
    """Deterministic stand-in for a fine-tuned extractor.

    Output is a pure function of (profile, document id, gold resume).
    """

    def __init__(self, profile: MockProfile, golds: Mapping[str, ParsedResume]):
        self.profile = profile
        self.golds = golds

    @property
    def model_id(self) -> str:
        return self.profile.model_id

    def extract(self, document: ResumeDocument) -> ModelPrediction:
        try:
            gold = self.golds[document.id]
        except KeyError:
            raise ExtractionFailed(f"mock backend has no gold for document {document.id!r}") from None
        prediction = corrupt_resume(gold, self.profile, document.id)
        return ModelPrediction(self.model_id, prediction, 0.0, serialize_resume(prediction))


# -- chat-completion backend -------------------------------------------------

SYSTEM_PROMPT = "You extract structured data from resumes. Reply with one JSON object and nothing else."

RESUME_PROMPT = (
    "Extract the candidate's details from the resume below as a JSON object with keys "
    '"name", "email", "phone", "department", "skills" (list of strings), '
    '"experience" (list of objects with "title", "company", "location", "start_date", '
    '"end_date", "bullets"), and "education" (list of objects with "degree", '
    '"institution", "field_of_study", "start_date", "end_date"). '
    'Write dates as YYYY-MM-DD and use "N/A" for anything not stated.\n\n'
    "Resume:\n{resume}"
)

FIELD_PROMPTS: dict[str, str] = {
    "name": "Extract the candidate's name.",
    "email": "Extract the candidate's email address.",
    "phone": "Extract the candidate's phone number.",
    "department": "Extract the department or professional area the candidate works in.",
    "skills": "Extract the candidate's skills as a list of strings.",
    "experience": (
        "Extract the candidate's work experience as a list of objects with "
        '"title", "company", "location", "start_date", "end_date", "bullets".'
    ),
    "education": (
        "Extract the candidate's education as a list of objects with "
        '"degree", "institution", "field_of_study", "start_date", "end_date".'
    ),
}

FIELD_PROMPT_SUFFIX = (
    ' Reply with a JSON object of the form {{"{field}": ...}}; use "N/A" if it is not stated.'
    "\n\nResume:\n{resume}"
)


@dataclass(frozen=True)
class EndpointConfig:
    """Connection and prompting settings for a chat-completion endpoint.

    The API key is read from the environment variable named by
    ``api_key_env_var`` at request time; it is never stored.
    """

    model_id: str
    base_url: str
    api_key_env_var: str = "OPENAI_API_KEY"
    prompt_template_per_field: Mapping[str, str] = field(default_factory=lambda: dict(FIELD_PROMPTS))
    timeout: float = 60.0  # seconds
    max_retries: int = 2
    model: str | None = None
    path: str = "/chat/completions"
    per_field: bool = False
    prompt_template: str = RESUME_PROMPT
    temperature: float = 0.0
    backoff: float = 0.5

    def __post_init__(self) -> None:
        if self.timeout <= 0:
            raise ValueError("timeout must be > 0")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")

    @property
    def url(self) -> str:
        return self.base_url.rstrip("/") + "/" + self.path.lstrip("/")

    @classmethod
    def from_dict(cls, obj: Mapping[str, Any]) -> "EndpointConfig":
        known = {f for f in cls.__dataclass_fields__}
        kwargs = {k: v for k, v in obj.items() if k in known}
        if "prompt_template_per_field" in kwargs:
            kwargs["prompt_template_per_field"] = {**FIELD_PROMPTS, **kwargs["prompt_template_per_field"]}
        return cls(**kwargs)


class ChatClient:
    """Minimal chat-completion client with retries on transport errors, 429 and 5xx."""

    def __init__(self, config: EndpointConfig, transport: httpx.BaseTransport | None = None):
        self.config = config
        # httpx.Client is safe for concurrent requests; no other mutable state here
        self._http = httpx.Client(timeout=config.timeout, transport=transport)

    def close(self) -> None:
        self._http.close()

    def complete(self, messages: list[dict[str, str]]) -> str:
        cfg = self.config
        headers = {"Content-Type": "application/json"}
        key = os.environ.get(cfg.api_key_env_var, "")
        if key:
            headers["Authorization"] = f"Bearer {key}"
        body = {"model": cfg.model or cfg.model_id, "messages": messages, "temperature": cfg.temperature}

        last_error = "no attempt made"
        for attempt in range(cfg.max_retries + 1):
            if attempt:
                time.sleep(cfg.backoff * 2 ** (attempt - 1))
            try:
                resp = self._http.post(cfg.url, json=body, headers=headers)
            except httpx.TransportError as exc:
                last_error = f"{type(exc).__name__}: {exc}"
                logger.warning("%s attempt %d failed: %s", cfg.model_id, attempt + 1, last_error)
                continue
            if resp.status_code == 429 or resp.status_code >= 500:
                last_error = f"HTTP {resp.status_code}"
                logger.warning("%s attempt %d failed: %s", cfg.model_id, attempt + 1, last_error)
                continue
            if resp.status_code >= 400:
                raise BackendUnavailable(f"{cfg.model_id}: HTTP {resp.status_code}: {resp.text[:200]}")
            try:
                return resp.json()["choices"][0]["message"]["content"]
            except (ValueError, KeyError, IndexError, TypeError):
                raise ExtractionFailed(
                    f"{cfg.model_id}: response is not a chat completion", raw_response=resp.text
                ) from None
        raise BackendUnavailable(
            f"{cfg.model_id}: giving up after {cfg.max_retries + 1} attempts ({last_error})"
        )


class ChatCompletionBackend:
    def __init__(self, config: EndpointConfig, client: ChatClient | None = None):
        self.config = config
        self.client = client or ChatClient(config)

    @property
    def model_id(self) -> str:
        return self.config.model_id

    def _ask(self, prompt: str) -> tuple[dict, str]:
        raw = self.client.complete(
            [{"role": "system", "content": SYSTEM_PROMPT}, {"role": "user", "content": prompt}]
        )
        return json.loads(repair_json(raw)), raw

    def extract(self, document: ResumeDocument) -> ModelPrediction:
        started = time.perf_counter()
        if self.config.per_field:
            obj: dict[str, Any] = {}
            raws = []
            for f in FIELDS:
                template = self.config.prompt_template_per_field[f] + FIELD_PROMPT_SUFFIX
                answer, raw = self._ask(template.format(field=f, resume=document.raw_text))
                raws.append(raw)
                if f in answer:
                    obj[f] = answer[f]
            raw = "\n".join(raws)
        else:
            obj, raw = self._ask(self.config.prompt_template.format(resume=document.raw_text))
        try:
            prediction = resume_from_dict(_coerce_placeholders(obj))
        except SchemaError as exc:
            raise ExtractionFailed(f"{self.model_id}: {exc}", raw_response=raw) from None
        latency = (time.perf_counter() - started) * 1000.0
        return ModelPrediction(self.model_id, prediction, latency, raw)


def _coerce_placeholders(obj: dict) -> dict:
    """Models often answer "N/A" for a whole list field; treat that as empty."""
    out = dict(obj)
    for key in ("skills",) + NESTED_FIELDS:
        if isinstance(out.get(key), str) and out[key].strip().upper() in ("N/A", "NONE", ""):
            out[key] = []
    return out


# -- panel -------------------------------------------------------------------

def _run_one(backend: Backend, document: ResumeDocument) -> ModelPrediction | ExtractionFailure:
    try:
        return backend.extract(document)
    except Exception as exc:  # a failing backend must not abort the panel
        return ExtractionFailure(
            document_id=document.id,
            model_id=backend.model_id,
            error=type(exc).__name__,
            message=str(exc),
            raw_response=getattr(exc, "raw_response", ""),
        )


def run_panel(
    documents: Sequence[ResumeDocument],
    backends: Sequence[Backend],
    max_workers: int = 1,
) -> list[PanelEntry]:
    """Run every backend on every document.

    Results come back in document order with predictions sorted by model id,
    whatever order the tasks complete in. Failed extractions are recorded as
    :class:`ExtractionFailure` entries.
    """
    if not backends:
        raise ValueError("run_panel needs at least one backend")
    if not documents:
        raise ValueError("run_panel needs at least one document")
    ids = [b.model_id for b in backends]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate model ids in panel: {ids}")

    tasks = [(doc, backend) for doc in documents for backend in backends]
    if max_workers <= 1:
        results = [_run_one(b, d) for d, b in tasks]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda t: _run_one(t[1], t[0]), tasks))

    by_doc: dict[str, list] = {doc.id: [] for doc in documents}
    for (doc, _), result in zip(tasks, results):
        by_doc[doc.id].append(result)

    entries = []
    for doc in documents:
        got = by_doc[doc.id]
        preds = sorted((r for r in got if isinstance(r, ModelPrediction)), key=lambda p: p.model_id)
        fails = sorted((r for r in got if isinstance(r, ExtractionFailure)), key=lambda f: f.model_id)
        if not preds:
            logger.error("all backends failed on document %s", doc.id)
        entries.append(PanelEntry(doc.id, tuple(preds), tuple(fails)))
    return entries


# -- configuration file ------------------------------------------------------

@dataclass
class PanelConfig:
    """Parsed backend configuration file.

    Format::

        {"backends": [{"type": "mock", "model_id": "phi", ...},
                      {"type": "http", "model_id": "gemma", "base_url": "...", ...}],
         "weights": {"phi": 3, "gemma": 2},              # optional
         "consensus": {"type": "grounded"}}               # optional
    """

    backends: list[MockProfile | EndpointConfig]
    weights: dict[str, float] | None = None
    consensus: dict[str, Any] | None = None

    @property
    def model_ids(self) -> list[str]:
        return [b.model_id for b in self.backends]


def parse_panel_config(obj: Mapping[str, Any], default_seed: int = 0) -> PanelConfig:
    if not isinstance(obj, Mapping) or not isinstance(obj.get("backends"), list) or not obj["backends"]:
        raise ValueError("config must be an object with a non-empty 'backends' list")
    specs: list[MockProfile | EndpointConfig] = []
    for i, spec in enumerate(obj["backends"]):
        kind = spec.get("type", "mock")
        try:
            if kind == "mock":
                specs.append(MockProfile.from_dict(spec, default_seed=default_seed))
            elif kind == "http":
                specs.append(EndpointConfig.from_dict(spec))
            else:
                raise ValueError(f"unknown backend type {kind!r}")
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"backends[{i}]: {exc}") from None
    ids = [s.model_id for s in specs]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate model ids in config: {ids}")
    return PanelConfig(specs, obj.get("weights"), obj.get("consensus"))


def load_panel_config(path: str | Path, default_seed: int = 0) -> PanelConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_panel_config(json.load(fh), default_seed=default_seed)


def build_backends(config: PanelConfig, golds: Mapping[str, ParsedResume]) -> list[Backend]:
    backends: list[Backend] = []
    for spec in config.backends:
        if isinstance(spec, MockProfile):
            backends.append(MockBackend(spec, golds))
        else:
            backends.append(ChatCompletionBackend(spec))
    return backends
