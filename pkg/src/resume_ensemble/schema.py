"""Structured resume data model, canonical JSON form and validation.

A parsed resume carries seven fields: four scalars (name, email, phone,
department), a skill list, and two nested histories (experience, education).
Missing scalars are represented by the placeholder ``"N/A"``; missing lists
are empty.

All value types are frozen dataclasses holding tuples, so they are hashable,
comparable by value and safe to share between threads.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, fields
from datetime import date
from typing import Any

logger = logging.getLogger(__name__)

PLACEHOLDER = "N/A"
PRESENT = "present"

SCALAR_FIELDS = ("name", "email", "phone", "department")
NESTED_FIELDS = ("experience", "education")
# canonical serialization order
FIELDS = ("name", "email", "phone", "department", "skills", "experience", "education")

_ISO_DATE = re.compile(r"^\d{4}-\d{2}-\d{2}$")


class SchemaError(ValueError):
    """A JSON value has the wrong type for a schema field."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class ResumeParseError(ValueError):
    """The input is not valid JSON."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class ExperienceEntry:
    title: str = PLACEHOLDER
    company: str = PLACEHOLDER
    location: str = PLACEHOLDER
    start_date: str = PLACEHOLDER
    end_date: str = PLACEHOLDER
    bullets: tuple[str, ...] = ()


@dataclass(frozen=True)
class EducationEntry:
    degree: str = PLACEHOLDER
    institution: str = PLACEHOLDER
    field_of_study: str = PLACEHOLDER
    start_date: str = PLACEHOLDER
    end_date: str = PLACEHOLDER


@dataclass(frozen=True)
class ParsedResume:
    """The structured output of one parse: one value per schema field."""

    name: str = PLACEHOLDER
    email: str = PLACEHOLDER
    phone: str = PLACEHOLDER
    department: str = PLACEHOLDER
    skills: tuple[str, ...] = ()
    experience: tuple[ExperienceEntry, ...] = ()
    education: tuple[EducationEntry, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {f: _plain(getattr(self, f)) for f in FIELDS}

    def replace(self, **changes: Any) -> "ParsedResume":
        values = {f: getattr(self, f) for f in FIELDS}
        values.update(changes)
        for key in ("skills", "experience", "education"):
            values[key] = tuple(values[key])
        return ParsedResume(**values)


@dataclass(frozen=True)
class ResumeDocument:
    """An unstructured input document."""

    id: str
    raw_text: str

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("document id must be a non-empty string")


@dataclass(frozen=True)
class Violation:
    field: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.field} [{self.rule}]: {self.message}"


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, (ExperienceEntry, EducationEntry)):
        return {f.name: _plain(getattr(value, f.name)) for f in fields(value)}
    return value


# -- parsing -----------------------------------------------------------------

def _scalar(obj: dict, key: str, where: str) -> str:
    value = obj.get(key)
    if value is None:
        return PLACEHOLDER
    if not isinstance(value, str):
        raise SchemaError(where, f"expected a string, got {type(value).__name__}")
    return value


def _string_list(value: Any, where: str) -> tuple[str, ...]:
    if value is None:
        return ()
    if not isinstance(value, list):
        raise SchemaError(where, f"expected a list, got {type(value).__name__}")
    for i, item in enumerate(value):
        if not isinstance(item, str):
            raise SchemaError(f"{where}[{i}]", f"expected a string, got {type(item).__name__}")
    return tuple(value)


def _entries(value: Any, where: str, cls: type) -> tuple:
    if value is None:
        return ()
    if not isinstance(value, list):
        raise SchemaError(where, f"expected a list, got {type(value).__name__}")
    out = []
    for i, item in enumerate(value):
        loc = f"{where}[{i}]"
        if not isinstance(item, dict):
            raise SchemaError(loc, f"expected an object, got {type(item).__name__}")
        kwargs: dict[str, Any] = {}
        names = [f.name for f in fields(cls)]
        for name in names:
            if name == "bullets":
                kwargs[name] = _string_list(item.get(name), f"{loc}.bullets")
            else:
                kwargs[name] = _scalar(item, name, f"{loc}.{name}")
        unknown = sorted(set(item) - set(names))
        if unknown:
            logger.warning("ignoring unknown keys in %s: %s", loc, ", ".join(unknown))
        out.append(cls(**kwargs))
    return tuple(out)


def experience_from_list(value: Any, where: str = "experience") -> tuple[ExperienceEntry, ...]:
    return _entries(value, where, ExperienceEntry)


def education_from_list(value: Any, where: str = "education") -> tuple[EducationEntry, ...]:
    return _entries(value, where, EducationEntry)


def resume_from_dict(obj: Any) -> ParsedResume:
    """Build a ParsedResume from a decoded JSON object, filling gaps with placeholders."""
    if not isinstance(obj, dict):
        raise SchemaError("<root>", f"expected an object, got {type(obj).__name__}")
    unknown = sorted(set(obj) - set(FIELDS))
    if unknown:
        logger.warning("ignoring unknown resume keys: %s", ", ".join(unknown))
    return ParsedResume(
        name=_scalar(obj, "name", "name"),
        email=_scalar(obj, "email", "email"),
        phone=_scalar(obj, "phone", "phone"),
        department=_scalar(obj, "department", "department"),
        skills=_string_list(obj.get("skills"), "skills"),
        experience=experience_from_list(obj.get("experience")),
        education=education_from_list(obj.get("education")),
    )


def parse_resume_json(text: str | bytes) -> ParsedResume:
    """Parse resume JSON text.

    Absent fields become ``"N/A"`` (scalars) or empty lists; JSON ``null`` is
    treated as absent. Unknown keys are logged and ignored.

    Raises:
        ResumeParseError: the text is not valid JSON.
        SchemaError: a field holds a value of the wrong JSON type.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise ResumeParseError(exc.msg, offset) from None
    return resume_from_dict(obj)


# -- serialization -----------------------------------------------------------

def canonical_json(value: Any) -> str:
    """Compact, key-order-preserving, UTF-8 JSON text for any schema value."""
    return json.dumps(_plain(value), ensure_ascii=False, separators=(",", ":"))


def serialize_resume(resume: ParsedResume) -> str:
    return canonical_json(resume.to_dict())


# -- validation --------------------------------------------------------------

def is_iso_date(text: str) -> bool:
    if not _ISO_DATE.match(text):
        return False
    try:
        date.fromisoformat(text)
    except ValueError:
        return False
    return True


def _check_scalar(value: str, where: str, out: list[Violation]) -> None:
    if not isinstance(value, str):
        out.append(Violation(where, "type", f"expected text, got {type(value).__name__}"))
    elif not value.strip():
        out.append(Violation(where, "empty_scalar", "must be non-empty text or 'N/A'"))


def _check_date(value: str, where: str, out: list[Violation], allow_present: bool) -> None:
    if value == PLACEHOLDER or (allow_present and value == PRESENT):
        return
    if not isinstance(value, str) or not is_iso_date(value):
        out.append(Violation(where, "date_pattern", f"{value!r} is not YYYY-MM-DD"))


def validate(resume: ParsedResume) -> list[Violation]:
    """Return every invariant violation in ``resume``; empty means valid."""
    out: list[Violation] = []
    for name in SCALAR_FIELDS:
        _check_scalar(getattr(resume, name), name, out)

    seen: set[str] = set()
    for i, skill in enumerate(resume.skills):
        if not isinstance(skill, str) or not skill.strip():
            out.append(Violation(f"skills[{i}]", "empty_skill", "skill must be non-empty text"))
        elif skill in seen:
            out.append(Violation(f"skills[{i}]", "duplicate_skill", f"{skill!r} listed twice"))
        seen.add(skill)

    for i, entry in enumerate(resume.experience):
        loc = f"experience[{i}]"
        for name in ("title", "company", "location"):
            _check_scalar(getattr(entry, name), f"{loc}.{name}", out)
        _check_date(entry.start_date, f"{loc}.start_date", out, allow_present=False)
        _check_date(entry.end_date, f"{loc}.end_date", out, allow_present=True)
        for j, bullet in enumerate(entry.bullets):
            if not isinstance(bullet, str) or not bullet.strip():
                out.append(Violation(f"{loc}.bullets[{j}]", "empty_bullet", "bullet must be non-empty"))

    for i, entry in enumerate(resume.education):
        loc = f"education[{i}]"
        for name in ("degree", "institution", "field_of_study"):
            _check_scalar(getattr(entry, name), f"{loc}.{name}", out)
        _check_date(entry.start_date, f"{loc}.start_date", out, allow_present=False)
        _check_date(entry.end_date, f"{loc}.end_date", out, allow_present=False)
    return out
