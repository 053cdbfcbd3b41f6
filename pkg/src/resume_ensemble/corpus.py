"""Corpus I/O, deterministic train/validation/test splitting and synthetic resumes.

JSONL corpus format, one object per line::

    {"id": "syn-00001", "raw_text": "...", "gold": {<resume object>}, "profession": "Finance"}

``profession`` is optional. Golds are normalized on load.
"""

from __future__ import annotations

import calendar
import json
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .normalize import SkillOntology, normalize_fields
from .rng import derive_rng, derive_seed
from .schema import (
    PLACEHOLDER,
    PRESENT,
    EducationEntry,
    ExperienceEntry,
    ParsedResume,
    ResumeDocument,
    SchemaError,
    resume_from_dict,
    validate,
)
from .vocab import (
    CITIES,
    COMPANIES,
    DUTY_VERBS,
    EMAIL_DOMAINS,
    FIRST_NAMES,
    INSTITUTIONS,
    LAST_NAMES,
    PROFESSIONS,
    Profession,
)


class CorpusError(ValueError):
    pass


@dataclass
class Corpus:
    entries: list[tuple[ResumeDocument, ParsedResume]] = field(default_factory=list)
    profession_labels: dict[str, str] = field(default_factory=dict)
    # per-document generation record (synthetic corpora only)
    metadata: dict[str, dict] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for doc, _ in self.entries:
            if doc.id in seen:
                raise CorpusError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def ids(self) -> list[str]:
        return [doc.id for doc, _ in self.entries]

    @property
    def documents(self) -> list[ResumeDocument]:
        return [doc for doc, _ in self.entries]

    def golds(self) -> dict[str, ParsedResume]:
        return {doc.id: gold for doc, gold in self.entries}

    def subset(self, ids: Iterable[str]) -> "Corpus":
        index = {doc.id: (doc, gold) for doc, gold in self.entries}
        chosen = [index[i] for i in ids]
        keep = {doc.id for doc, _ in chosen}
        return Corpus(
            entries=chosen,
            profession_labels={k: v for k, v in self.profession_labels.items() if k in keep},
            metadata={k: v for k, v in self.metadata.items() if k in keep},
        )


# -- JSONL -------------------------------------------------------------------

def load_corpus(path: str | Path, ontology: SkillOntology | None = None) -> Corpus:
    """Read a JSONL corpus, normalizing every gold resume.

    Raises:
        CorpusError: a line is malformed (the message names the line number)
            or an id repeats.
    """
    ontology = ontology or SkillOntology.default()
    entries: list[tuple[ResumeDocument, ParsedResume]] = []
    labels: dict[str, str] = {}
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                if not isinstance(obj, dict):
                    raise CorpusError("expected a JSON object")
                doc_id = obj.get("id")
                if not isinstance(doc_id, str) or not doc_id:
                    raise CorpusError("missing or empty 'id'")
                raw_text = obj.get("raw_text", "")
                if not isinstance(raw_text, str):
                    raise CorpusError("'raw_text' must be a string")
                gold = normalize_fields(resume_from_dict(obj.get("gold", {})), ontology)
            except (json.JSONDecodeError, SchemaError, CorpusError) as exc:
                raise CorpusError(f"{path}: line {lineno}: {exc}") from None
            if doc_id in seen:
                raise CorpusError(f"{path}: line {lineno}: duplicate id {doc_id!r}")
            seen.add(doc_id)
            entries.append((ResumeDocument(doc_id, raw_text), gold))
            if isinstance(obj.get("profession"), str):
                labels[doc_id] = obj["profession"]
    return Corpus(entries=entries, profession_labels=labels)


def corpus_lines(corpus: Corpus) -> list[str]:
    lines = []
    for doc, gold in corpus.entries:
        obj = {"id": doc.id, "raw_text": doc.raw_text, "gold": gold.to_dict()}
        if doc.id in corpus.profession_labels:
            obj["profession"] = corpus.profession_labels[doc.id]
        lines.append(json.dumps(obj, ensure_ascii=False, separators=(",", ":")))
    return lines


def write_corpus(corpus: Corpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in corpus_lines(corpus):
            fh.write(line + "\n")


def write_metadata(corpus: Corpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump({"documents": corpus.metadata}, fh, ensure_ascii=False, indent=1, sort_keys=True)
        fh.write("\n")


# -- splitting ---------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.8
    validation_fraction: float = 0.1
    test_fraction: float = 0.1
    seed: int = 0
    stratify_by_profession: bool = True

    def __post_init__(self) -> None:
        fracs = self.fractions()
        if any(f <= 0 for f in fracs):
            raise ValueError("every split fraction must be > 0")
        if sum(fracs) != 1:
            raise ValueError(f"split fractions must sum to 1, got {float(sum(fracs))}")

    def fractions(self) -> tuple[Fraction, Fraction, Fraction]:
        # decimal-string conversion keeps 0.1 exact so floor(3400 * 0.1) == 340
        return tuple(  # type: ignore[return-value]
            Fraction(str(f)) for f in (self.train_fraction, self.validation_fraction, self.test_fraction)
        )


def _largest_remainder(sizes: dict[str, int], frac: Fraction, total: int, cap: dict[str, int]) -> dict[str, int]:
    """Allocate ``total`` items over groups proportionally, never above ``cap``."""
    exact = {g: n * frac for g, n in sizes.items()}
    alloc = {g: min(math.floor(v), cap[g]) for g, v in exact.items()}
    order = sorted(sizes, key=lambda g: (-(exact[g] - math.floor(exact[g])), g))
    short = total - sum(alloc.values())
    while short > 0:
        progressed = False
        for g in order:
            if short == 0:
                break
            if alloc[g] < cap[g]:
                alloc[g] += 1
                short -= 1
                progressed = True
        if not progressed:
            raise CorpusError("cannot satisfy split sizes")
        # a second sweep only happens when caps forced an overflow
        order = sorted(sizes, key=lambda g: (alloc[g] - exact[g], g))
    return alloc


def split_corpus(corpus: Corpus, spec: SplitSpec = SplitSpec()) -> tuple[Corpus, Corpus, Corpus]:
    """Partition ``corpus`` into (train, validation, test).

    Validation and test sizes are ``floor(n * fraction)``; the remainder goes to
    train. With stratification each profession's share is within one document
    of its proportional target.
    """
    n = len(corpus)
    if n == 0:
        raise CorpusError("cannot split an empty corpus")
    if n < 3:
        raise CorpusError(f"corpus of {n} documents is too small for a three-way split")
    _, f_val, f_test = spec.fractions()
    n_val = math.floor(n * f_val)
    n_test = math.floor(n * f_test)

    groups: dict[str, list[str]] = defaultdict(list)
    for doc_id in corpus.ids:
        key = corpus.profession_labels.get(doc_id, "") if spec.stratify_by_profession else ""
        groups[key].append(doc_id)

    sizes = {g: len(ids) for g, ids in groups.items()}
    val_alloc = _largest_remainder(sizes, f_val, n_val, sizes)
    rest = {g: sizes[g] - val_alloc[g] for g in sizes}
    test_alloc = _largest_remainder(sizes, f_test, n_test, rest)

    train_ids: list[str] = []
    val_ids: list[str] = []
    test_ids: list[str] = []
    for g in sorted(groups):
        ids = list(groups[g])
        random.Random(derive_seed("split", spec.seed, g)).shuffle(ids)
        v, t = val_alloc[g], test_alloc[g]
        val_ids += ids[:v]
        test_ids += ids[v : v + t]
        train_ids += ids[v + t :]

    order = {doc_id: i for i, doc_id in enumerate(corpus.ids)}
    parts = []
    for ids in (train_ids, val_ids, test_ids):
        parts.append(corpus.subset(sorted(ids, key=order.__getitem__)))
    return parts[0], parts[1], parts[2]


# -- synthetic generation ----------------------------------------------------

LAYOUTS = ("plain", "labeled", "bulleted", "shuffled")


@dataclass(frozen=True)
class GeneratorConfig:
    """Noise knobs for synthetic resumes; all probabilities in [0, 1]."""

    date_variation: float = 0.6
    synonym_rate: float = 0.25
    omission_rate: float = 0.08
    edge_case_rate: float = 0.05
    layouts: tuple[str, ...] = LAYOUTS

    @classmethod
    def noiseless(cls) -> "GeneratorConfig":
        return cls(date_variation=0.0, synonym_rate=0.0, omission_rate=0.0, edge_case_rate=0.0)

    def __post_init__(self) -> None:
        for name in ("date_variation", "synonym_rate", "omission_rate", "edge_case_rate"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must be in [0, 1]")
        unknown = set(self.layouts) - set(LAYOUTS)
        if unknown or not self.layouts:
            raise ValueError(f"unknown layouts: {sorted(unknown)}")


def _render_date(iso: str, rng: random.Random, variation: float, transforms: list) -> str:
    if iso == PRESENT:
        if rng.random() < variation:
            shown = rng.choice(["Present", "Current", "present"])
            transforms.append({"kind": "date_format", "gold": iso, "rendered": shown})
            return shown
        return iso
    if rng.random() >= variation:
        return iso
    y, m, _ = iso.split("-")
    month = int(m)
    options = [
        f"{calendar.month_abbr[month]} {y}",
        f"{calendar.month_name[month]} {y}",
        f"{m}/{y}",
        f"{y}-{m}",
        f"{m}-{y}",
    ]
    if month == 1:
        options.append(y)
    shown = rng.choice(options)
    transforms.append({"kind": "date_format", "gold": iso, "rendered": shown})
    return shown


def _month_date(year: int, month: int) -> str:
    return f"{year:04d}-{month:02d}-01"


def _make_gold(rng: random.Random, prof: Profession, cfg: GeneratorConfig, transforms: list) -> ParsedResume:
    first, last = rng.choice(FIRST_NAMES), rng.choice(LAST_NAMES)
    name = f"{first} {last}"
    email = f"{first}.{last}{rng.randint(1, 99)}@{rng.choice(EMAIL_DOMAINS)}".lower()
    phone = f"+1-555-{rng.randint(100, 999)}-{rng.randint(1000, 9999)}"
    department = prof.department

    edge = None
    if rng.random() < cfg.edge_case_rate:
        edge = rng.choice(["empty_section", "single_entry", "long_skills"])
        transforms.append({"kind": "edge_case", "case": edge})

    skills = rng.sample(prof.skills, rng.randint(4, min(7, len(prof.skills))))
    if edge == "long_skills":
        pool = sorted({s for p in PROFESSIONS for s in p.skills} - set(skills))
        skills += rng.sample(pool, rng.randint(12, 16))

    n_exp = rng.randint(1, 3)
    n_edu = rng.randint(1, 2)
    if edge == "single_entry":
        n_exp, n_edu = 1, 1
    empty = rng.choice(["skills", "experience", "education"]) if edge == "empty_section" else None

    duties = [f"{v} {d}" for v in DUTY_VERBS for d in prof.duties]
    rng.shuffle(duties)
    companies = rng.sample(COMPANIES, n_exp)

    experience = []
    year = 2024 - rng.randint(0, 2)
    for k in range(n_exp):
        end_year = year
        start_year = end_year - rng.randint(1, 4)
        start = _month_date(start_year, rng.randint(1, 12))
        if k == 0 and rng.random() < 0.5:
            end = PRESENT
        else:
            end = _month_date(end_year, rng.randint(1, 12))
        location = rng.choice(CITIES)
        if rng.random() < cfg.omission_rate:
            location = PLACEHOLDER
            transforms.append({"kind": "omitted", "field": f"experience[{k}].location"})
        bullets = tuple(duties.pop() for _ in range(rng.randint(2, 4)))
        experience.append(
            ExperienceEntry(
                title=rng.choice(prof.titles),
                company=companies[k],
                location=location,
                start_date=start,
                end_date=end,
                bullets=bullets,
            )
        )
        year = start_year - rng.randint(0, 1)

    education = []
    degrees = rng.sample(prof.degrees, n_edu)
    institutions = rng.sample(INSTITUTIONS, n_edu)
    edu_end = year
    for k in range(n_edu):
        length = 2 if degrees[k][0].startswith("M") else rng.randint(3, 4)
        field_of_study = degrees[k][1]
        if rng.random() < cfg.omission_rate:
            field_of_study = PLACEHOLDER
            transforms.append({"kind": "omitted", "field": f"education[{k}].field_of_study"})
        education.append(
            EducationEntry(
                degree=degrees[k][0],
                institution=institutions[k],
                field_of_study=field_of_study,
                start_date=_month_date(edu_end - length, 9),
                end_date=_month_date(edu_end, 6),
            )
        )
        edu_end -= length + rng.randint(0, 1)

    if rng.random() < cfg.omission_rate:
        phone = PLACEHOLDER
        transforms.append({"kind": "omitted", "field": "phone"})
    if rng.random() < cfg.omission_rate:
        department = PLACEHOLDER
        transforms.append({"kind": "omitted", "field": "department"})

    gold = ParsedResume(
        name=name,
        email=email,
        phone=phone,
        department=department,
        skills=tuple(skills),
        experience=tuple(experience),
        education=tuple(education),
    )
    if empty is not None:
        gold = gold.replace(**{empty: ()})
    return gold


def _join_and(items: Sequence[str]) -> str:
    if len(items) <= 1:
        return "".join(items)
    return ", ".join(items[:-1]) + " and " + items[-1]


class _Renderer:
    """Renders one gold resume into raw text, recording every noise transform."""

    def __init__(self, gold: ParsedResume, rng: random.Random, cfg: GeneratorConfig,
                 ontology: SkillOntology, transforms: list):
        self.gold = gold
        self.rng = rng
        self.cfg = cfg
        self.transforms = transforms
        self.skills = [self._skill(s, ontology) for s in gold.skills]
        self.exp_dates = [
            (self._date(e.start_date), self._date(e.end_date)) for e in gold.experience
        ]
        self.edu_dates = [
            (self._date(e.start_date), self._date(e.end_date)) for e in gold.education
        ]

    def _date(self, iso: str) -> str:
        return _render_date(iso, self.rng, self.cfg.date_variation, self.transforms)

    def _skill(self, skill: str, ontology: SkillOntology) -> str:
        variants = ontology.variants_of(skill)
        if variants and self.rng.random() < self.cfg.synonym_rate:
            shown = self.rng.choice(variants)
            self.transforms.append({"kind": "skill_synonym", "gold": skill, "rendered": shown})
            return shown
        return skill

    def contact_lines(self) -> list[str]:
        g = self.gold
        lines = [f"Email: {g.email}"]
        if g.phone != PLACEHOLDER:
            lines.append(f"Phone: {g.phone}")
        if g.department != PLACEHOLDER:
            lines.append(f"Department: {g.department}")
        return lines

    def labeled_sections(self) -> dict[str, list[str]]:
        g = self.gold
        sections: dict[str, list[str]] = {"contact": self.contact_lines()}
        if self.skills:
            sections["skills"] = ["SKILLS", ", ".join(self.skills)]
        if g.experience:
            lines = ["EXPERIENCE"]
            for e, (start, end) in zip(g.experience, self.exp_dates):
                head = [e.title, e.company] + ([e.location] if e.location != PLACEHOLDER else [])
                lines.append(" | ".join(head))
                lines.append(f"{start} - {end}")
                lines += [f"- {b}" for b in e.bullets]
                lines.append("")
            sections["experience"] = lines[:-1]
        if g.education:
            lines = ["EDUCATION"]
            for e, (start, end) in zip(g.education, self.edu_dates):
                if e.field_of_study != PLACEHOLDER:
                    lines.append(f"{e.degree} in {e.field_of_study}, {e.institution}")
                else:
                    lines.append(f"{e.degree}, {e.institution}")
                lines.append(f"{start} - {end}")
            sections["education"] = lines
        return sections

    def labeled(self, order: Sequence[str] = ("contact", "skills", "experience", "education")) -> str:
        sections = self.labeled_sections()
        blocks = [self.gold.name]
        for key in order:
            if key in sections:
                blocks.append("\n".join(sections[key]))
        return "\n\n".join(blocks)

    def shuffled(self) -> str:
        order = ["contact", "skills", "experience", "education"]
        self.rng.shuffle(order)
        self.transforms.append({"kind": "section_order", "order": order})
        return self.labeled(order)

    def bulleted(self) -> str:
        g = self.gold
        contact = [g.email] + ([g.phone] if g.phone != PLACEHOLDER else [])
        lines = [g.name, " * ".join(contact)]
        if g.department != PLACEHOLDER:
            lines.append(f"Department: {g.department}")
        if self.skills:
            lines.append("")
            lines.append("Skills:")
            lines += [f"* {s}" for s in self.skills]
        if g.experience:
            lines.append("")
            lines.append("Work History:")
            for e, (start, end) in zip(g.experience, self.exp_dates):
                where = f", {e.location}" if e.location != PLACEHOLDER else ""
                lines.append(f"* {e.title}, {e.company}{where} ({start} to {end})")
                lines += [f"    - {b}" for b in e.bullets]
        if g.education:
            lines.append("")
            lines.append("Education:")
            for e, (start, end) in zip(g.education, self.edu_dates):
                subject = f", {e.field_of_study}" if e.field_of_study != PLACEHOLDER else ""
                lines.append(f"* {e.degree}{subject}, {e.institution} ({start} to {end})")
        return "\n".join(lines)

    def plain(self) -> str:
        g = self.gold
        paras = []
        intro = f"{g.name}"
        if g.department != PLACEHOLDER:
            intro += f" works in {g.department}."
        else:
            intro += " is looking for a new role."
        contact = f" Contact: {g.email}"
        if g.phone != PLACEHOLDER:
            contact += f" or {g.phone}"
        paras.append(intro + contact + ".")
        if self.skills:
            paras.append("Core skills include " + _join_and(self.skills) + ".")
        for e, (start, end) in zip(g.experience, self.exp_dates):
            where = f" in {e.location}" if e.location != PLACEHOLDER else ""
            text = f"From {start} to {end}, {g.name} worked as {e.title} at {e.company}{where}."
            text += " Responsibilities: " + "; ".join(e.bullets) + "."
            paras.append(text)
        for e, (start, end) in zip(g.education, self.edu_dates):
            subject = f" in {e.field_of_study}" if e.field_of_study != PLACEHOLDER else ""
            paras.append(f"Studied {e.degree}{subject} at {e.institution} from {start} to {end}.")
        return "\n\n".join(paras)


def generate_entry(
    index: int,
    seed: int,
    profession_pool: Sequence[Profession] = PROFESSIONS,
    config: GeneratorConfig = GeneratorConfig(),
    ontology: SkillOntology | None = None,
) -> tuple[ResumeDocument, ParsedResume, str, dict]:
    """Generate entry ``index``; depends only on (seed, index), never on n."""
    ontology = ontology or SkillOntology.default()
    rng = derive_rng("synth", seed, index)
    transforms: list[dict] = []
    prof = rng.choice(list(profession_pool))
    gold = _make_gold(rng, prof, config, transforms)
    layout = rng.choice(list(config.layouts))
    renderer = _Renderer(gold, rng, config, ontology, transforms)
    raw_text = getattr(renderer, layout)()
    doc = ResumeDocument(id=f"syn-{index:05d}", raw_text=raw_text)
    meta = {"layout": layout, "profession": prof.name, "transforms": transforms}
    return doc, gold, prof.name, meta


def generate_synthetic(
    n: int,
    seed: int,
    profession_pool: Sequence[Profession] = PROFESSIONS,
    config: GeneratorConfig = GeneratorConfig(),
    ontology: SkillOntology | None = None,
) -> Corpus:
    """Generate ``n`` synthetic resumes with gold annotations.

    Each entry draws from its own random stream keyed by (seed, index), so
    the first k entries are identical for any n >= k.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not profession_pool:
        raise ValueError("profession_pool must not be empty")
    ontology = ontology or SkillOntology.default()
    entries, labels, metadata = [], {}, {}
    for i in range(n):
        doc, gold, prof, meta = generate_entry(i, seed, profession_pool, config, ontology)
        assert not validate(gold), validate(gold)
        entries.append((doc, gold))
        labels[doc.id] = prof
        metadata[doc.id] = meta
    return Corpus(entries=entries, profession_labels=labels, metadata=metadata)
