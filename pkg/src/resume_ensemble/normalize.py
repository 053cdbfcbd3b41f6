"""Canonicalization of raw predictions so different backends become comparable.

Dates become ``YYYY-MM-DD`` (missing month/day default to 01), skills are
folded through a synonym ontology and deduplicated, and blank values are
replaced by the ``"N/A"`` placeholder.
"""

from __future__ import annotations

import calendar
import json
import logging
import re
from dataclasses import dataclass, field
from datetime import date
from importlib import resources
from pathlib import Path
from typing import Mapping

from .schema import (
    PLACEHOLDER,
    PRESENT,
    EducationEntry,
    ExperienceEntry,
    ParsedResume,
)

logger = logging.getLogger(__name__)

_MONTHS: dict[str, int] = {}
for _i in range(1, 13):
    _MONTHS[calendar.month_name[_i].lower()] = _i
    _MONTHS[calendar.month_abbr[_i].lower()] = _i
_MONTHS["sept"] = 9

_PLACEHOLDER_TOKENS = {"", "n/a", "na", "none", "null", "-"}

_RE_YMD = re.compile(r"^(\d{4})-(\d{1,2})-(\d{1,2})$")
_RE_YM = re.compile(r"^(\d{4})-(\d{1,2})$")
_RE_Y = re.compile(r"^(\d{4})$")
_RE_MON_Y = re.compile(r"^([a-z]+)\.?,?\s+(\d{4})$")
_RE_M_SLASH_Y = re.compile(r"^(\d{1,2})[/-](\d{4})$")
_WS = re.compile(r"\s+")


def collapse_ws(text: str) -> str:
    return _WS.sub(" ", text).strip()


def normalize_date(raw: str | None) -> str:
    """Map a date string to ``YYYY-MM-DD``, ``"present"`` or ``"N/A"``.

    Accepted: ``YYYY-MM-DD``, ``YYYY-MM``, ``YYYY``, ``Mon YYYY``,
    ``Month YYYY``, ``MM/YYYY``, ``MM-YYYY`` and ``present``/``current``.
    Day-first or month-first full dates (``01/02/2020``) are rejected rather
    than guessed.
    """
    if raw is None:
        return PLACEHOLDER
    text = collapse_ws(str(raw)).lower()
    if text in _PLACEHOLDER_TOKENS:
        return PLACEHOLDER
    if text in ("present", "current"):
        return PRESENT

    y = m = d = None
    if match := _RE_YMD.match(text):
        y, m, d = (int(g) for g in match.groups())
    elif match := _RE_YM.match(text):
        y, m, d = int(match[1]), int(match[2]), 1
    elif match := _RE_Y.match(text):
        y, m, d = int(match[1]), 1, 1
    elif (match := _RE_MON_Y.match(text)) and match[1] in _MONTHS:
        y, m, d = int(match[2]), _MONTHS[match[1]], 1
    elif match := _RE_M_SLASH_Y.match(text):
        y, m, d = int(match[2]), int(match[1]), 1

    if y is not None:
        try:
            return date(y, m, d).isoformat()
        except ValueError:
            pass
    logger.warning("unrecognized date %r, using placeholder", raw)
    return PLACEHOLDER


@dataclass(frozen=True)
class SkillOntology:
    """Variant-to-canonical skill mapping.

    The map must be idempotent: a canonical form may appear as a key only if
    it maps to itself.
    """

    canonical_map: Mapping[str, str] = field(default_factory=dict)
    case_insensitive: bool = True

    def __post_init__(self) -> None:
        lookup: dict[str, str] = {}
        for variant, canonical in self.canonical_map.items():
            key = self._key(collapse_ws(variant))
            if key in lookup and lookup[key] != canonical:
                raise ValueError(
                    f"ontology maps {variant!r} ambiguously: {lookup[key]!r} vs {canonical!r}"
                )
            lookup[key] = canonical
        for canonical in set(lookup.values()):
            target = lookup.get(self._key(canonical))
            if target is not None and target != canonical:
                raise ValueError(
                    f"ontology is not idempotent: canonical {canonical!r} maps to {target!r}"
                )
        # canonical forms fold to themselves, so "python" finds "Python"
        for canonical in sorted(set(lookup.values())):
            lookup.setdefault(self._key(canonical), canonical)
        object.__setattr__(self, "_lookup", lookup)

    def _key(self, text: str) -> str:
        return text.lower() if self.case_insensitive else text

    def lookup(self, text: str) -> str | None:
        return self._lookup.get(self._key(text))  # type: ignore[attr-defined]

    def variants_of(self, canonical: str) -> list[str]:
        return sorted(v for v, c in self.canonical_map.items() if c == canonical and v != canonical)

    @classmethod
    def from_dict(cls, obj: Mapping[str, object]) -> "SkillOntology":
        obj = dict(obj)
        flag = obj.pop("case_insensitive", True)
        if not isinstance(flag, bool):
            raise ValueError("'case_insensitive' must be a boolean")
        for k, v in obj.items():
            if not isinstance(v, str):
                raise ValueError(f"ontology entry {k!r} must map to a string")
        return cls(canonical_map=obj, case_insensitive=flag)  # type: ignore[arg-type]

    @classmethod
    def load(cls, path: str | Path) -> "SkillOntology":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def default(cls) -> "SkillOntology":
        text = resources.files(__package__).joinpath("data/ontology.json").read_text("utf-8")
        return cls.from_dict(json.loads(text))

    def to_dict(self) -> dict[str, object]:
        return {"case_insensitive": self.case_insensitive, **self.canonical_map}


def canonicalize_skill(raw: str, ontology: SkillOntology) -> str:
    text = collapse_ws(raw)
    mapped = ontology.lookup(text)
    return mapped if mapped is not None else text


def normalize_scalar(value: str | None) -> str:
    if value is None:
        return PLACEHOLDER
    text = collapse_ws(value)
    if text.lower() in _PLACEHOLDER_TOKENS:
        return PLACEHOLDER
    return text


def normalize_skills(skills, ontology: SkillOntology) -> tuple[str, ...]:
    out: list[str] = []
    seen: set[str] = set()
    for raw in skills:
        skill = canonicalize_skill(raw, ontology)
        if not skill or skill in seen:
            continue
        seen.add(skill)
        out.append(skill)
    return tuple(out)


def normalize_experience(entries) -> tuple[ExperienceEntry, ...]:
    out = []
    for e in entries:
        bullets = tuple(b for b in (collapse_ws(x) for x in e.bullets) if b)
        out.append(
            ExperienceEntry(
                title=normalize_scalar(e.title),
                company=normalize_scalar(e.company),
                location=normalize_scalar(e.location),
                start_date=_no_present(normalize_date(e.start_date)),
                end_date=normalize_date(e.end_date),
                bullets=bullets,
            )
        )
    return tuple(out)


def normalize_education(entries) -> tuple[EducationEntry, ...]:
    return tuple(
        EducationEntry(
            degree=normalize_scalar(e.degree),
            institution=normalize_scalar(e.institution),
            field_of_study=normalize_scalar(e.field_of_study),
            start_date=_no_present(normalize_date(e.start_date)),
            end_date=_no_present(normalize_date(e.end_date)),
        )
        for e in entries
    )


def _no_present(value: str) -> str:
    # only an experience end date may be open-ended
    return PLACEHOLDER if value == PRESENT else value


def normalize_fields(prediction: ParsedResume, ontology: SkillOntology) -> ParsedResume:
    """Return the canonical form of ``prediction``; the result always validates."""
    email = normalize_scalar(prediction.email)
    if email != PLACEHOLDER:
        email = email.lower()
    return ParsedResume(
        name=normalize_scalar(prediction.name),
        email=email,
        phone=normalize_scalar(prediction.phone),
        department=normalize_scalar(prediction.department),
        skills=normalize_skills(prediction.skills, ontology),
        experience=normalize_experience(prediction.experience),
        education=normalize_education(prediction.education),
    )
