"""Evaluation metrics for parsed resumes.

Text metrics (token F1, BLEU-4, ROUGE-L) work on lowercased whitespace
tokens. Structured fields are flattened to text first by :func:`linearize`:

* scalars: the value itself (``"N/A"`` when absent);
* skills: canonical skills sorted alphabetically, one per line;
* experience: one ``title | company | location | start | end`` line per
  entry followed by one line per bullet;
* education: one ``degree | institution | field | start | end`` line per entry;
* an empty list linearizes to ``"N/A"``.

Exact match is field-level: the share of the seven fields that match.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .schema import FIELDS, NESTED_FIELDS, PLACEHOLDER, SCALAR_FIELDS, ParsedResume, canonical_json

# -- text primitives ---------------------------------------------------------


def tokenize(text: str) -> list[str]:
    return text.lower().split()


def token_f1(pred_text: str, gold_text: str) -> float:
    pred, gold = tokenize(pred_text), tokenize(gold_text)
    if not pred and not gold:
        return 1.0
    if not pred or not gold:
        return 0.0
    overlap = sum((Counter(pred) & Counter(gold)).values())
    if overlap == 0:
        return 0.0
    precision = overlap / len(pred)
    recall = overlap / len(gold)
    return 2 * precision * recall / (precision + recall)


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu(pred_text: str, gold_text: str, max_n: int = 4) -> float:
    """Sentence BLEU with uniform weights and a single reference.

    Unigram precision is unsmoothed (no shared token means 0). Higher orders
    use add-one smoothing, ``(matches + 1) / (candidates + 1)``, so short but
    correct predictions are not zeroed out.
    """
    cand, ref = tokenize(pred_text), tokenize(gold_text)
    if not cand or not ref:
        return 0.0
    log_p = 0.0
    for n in range(1, max_n + 1):
        c_grams, r_grams = _ngrams(cand, n), _ngrams(ref, n)
        matches = sum((c_grams & r_grams).values())
        total = max(len(cand) - n + 1, 0)
        if n == 1:
            if matches == 0:
                return 0.0
            p = matches / total
        else:
            p = (matches + 1) / (total + 1)
        log_p += math.log(p) / max_n
    bp = 1.0 if len(cand) > len(ref) else math.exp(1 - len(ref) / len(cand))
    return bp * math.exp(log_p)


def lcs_length(a: Sequence, b: Sequence) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def rouge_l(pred_text: str, gold_text: str) -> float:
    pred, gold = tokenize(pred_text), tokenize(gold_text)
    if not pred and not gold:
        return 1.0
    if not pred or not gold:
        return 0.0
    lcs = lcs_length(pred, gold)
    if lcs == 0:
        return 0.0
    p, r = lcs / len(pred), lcs / len(gold)
    return 2 * p * r / (p + r)


def edit_distance(a: str, b: str) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, start=1):
        cur = [i]
        for j, y in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y)))
        prev = cur
    return prev[-1]


def levenshtein_similarity(a: str, b: str) -> float:
    if not a and not b:
        return 1.0
    return 1.0 - edit_distance(a, b) / max(len(a), len(b))


def jaccard(a, b) -> float:
    a, b = set(a), set(b)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


# -- structured fields -------------------------------------------------------

def linearize(resume: ParsedResume, field_name: str) -> str:
    value = getattr(resume, field_name)
    if field_name in SCALAR_FIELDS:
        return value
    if not value:
        return PLACEHOLDER
    if field_name == "skills":
        return "\n".join(sorted(value))
    lines = []
    if field_name == "experience":
        for e in value:
            lines.append(" | ".join([e.title, e.company, e.location, e.start_date, e.end_date]))
            lines.extend(e.bullets)
    else:
        for e in value:
            lines.append(" | ".join([e.degree, e.institution, e.field_of_study, e.start_date, e.end_date]))
    return "\n".join(lines)


def field_exact_match(pred: ParsedResume, gold: ParsedResume, field_name: str) -> bool:
    p, g = getattr(pred, field_name), getattr(gold, field_name)
    if field_name == "skills":
        return set(p) == set(g)
    if field_name in NESTED_FIELDS:
        return canonical_json(p) == canonical_json(g)
    return p == g


def exact_match(pred: ParsedResume, gold: ParsedResume) -> float:
    """Fraction of the seven fields that match exactly."""
    return sum(field_exact_match(pred, gold, f) for f in FIELDS) / len(FIELDS)


# -- recruitment similarity --------------------------------------------------

DEFAULT_REMAINDER = {"name": 0.0875, "department": 0.0875, "experience": 0.0875, "education": 0.0875}


@dataclass(frozen=True)
class RSWeights:
    """Field weights of the recruitment-similarity composite; they sum to 1."""

    skills: float = 0.35
    email: float = 0.15
    phone: float = 0.15
    remainder: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_REMAINDER))

    def __post_init__(self) -> None:
        for f in self.remainder:
            if f not in FIELDS or f in ("skills", "email", "phone"):
                raise ValueError(f"remainder weight for unsupported field {f!r}")
        weights = self.as_dict()
        if any(w < 0 for w in weights.values()):
            raise ValueError("RS weights must be non-negative")
        total = math.fsum(weights.values())
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"RS weights must sum to 1, got {total!r}")

    def as_dict(self) -> dict[str, float]:
        out = {"skills": self.skills, "email": self.email, "phone": self.phone}
        out.update(self.remainder)
        return out

    def with_skill_weight(self, skills: float) -> "RSWeights":
        """Set the skills weight and rescale every other weight proportionally."""
        if not 0.0 <= skills < 1.0:
            raise ValueError(f"skills weight must be in [0, 1), got {skills}")
        if self.skills >= 1.0:
            raise ValueError("cannot rescale: every other weight is zero")
        k = (1.0 - skills) / (1.0 - self.skills)
        return RSWeights(
            skills=skills,
            email=self.email * k,
            phone=self.phone * k,
            remainder={f: w * k for f, w in self.remainder.items()},
        )

    @classmethod
    def from_dict(cls, obj: Mapping[str, float]) -> "RSWeights":
        obj = dict(obj)
        return cls(
            skills=obj.pop("skills", 0.0),
            email=obj.pop("email", 0.0),
            phone=obj.pop("phone", 0.0),
            remainder=obj,
        )


def field_similarity(pred: ParsedResume, gold: ParsedResume, field_name: str) -> float:
    if field_name == "skills":
        return jaccard(pred.skills, gold.skills)
    if field_name in NESTED_FIELDS:
        return rouge_l(linearize(pred, field_name), linearize(gold, field_name))
    return levenshtein_similarity(getattr(pred, field_name), getattr(gold, field_name))


def recruitment_similarity(pred: ParsedResume, gold: ParsedResume, rs_weights: RSWeights | None = None) -> float:
    rs_weights = rs_weights or RSWeights()
    return math.fsum(
        w * field_similarity(pred, gold, f) for f, w in rs_weights.as_dict().items() if w
    )


# -- corpus report -----------------------------------------------------------

METRIC_ROWS = (
    ("em", "EM (field-level)"),
    ("f1", "F1"),
    ("bleu", "BLEU"),
    ("rouge_l", "ROUGE-L"),
    ("rs", "RS"),
)


@dataclass
class MetricReport:
    em: float
    f1: float
    bleu: float
    rouge_l: float
    rs: float
    per_field: dict[str, dict[str, float]]
    nested_rouge: dict[str, float]
    n_documents: int

    def to_dict(self) -> dict:
        return {
            "n_documents": self.n_documents,
            "em": self.em,
            "em_definition": "field-level",
            "f1": self.f1,
            "bleu": self.bleu,
            "rouge_l": self.rouge_l,
            "rs": self.rs,
            "nested_rouge_l": dict(self.nested_rouge),
            "per_field": {f: dict(v) for f, v in self.per_field.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def document_scores(pred: ParsedResume, gold: ParsedResume, rs_weights: RSWeights | None = None) -> dict:
    per_field = {}
    for f in FIELDS:
        p_text, g_text = linearize(pred, f), linearize(gold, f)
        per_field[f] = {
            "em": float(field_exact_match(pred, gold, f)),
            "f1": token_f1(p_text, g_text),
            "bleu": bleu(p_text, g_text),
            "rouge_l": rouge_l(p_text, g_text),
            "similarity": field_similarity(pred, gold, f),
        }

    def mean_of(key: str) -> float:
        return math.fsum(per_field[f][key] for f in FIELDS) / len(FIELDS)

    return {
        "em": mean_of("em"),
        "f1": mean_of("f1"),
        "bleu": mean_of("bleu"),
        "rouge_l": mean_of("rouge_l"),
        "rs": recruitment_similarity(pred, gold, rs_weights),
        "per_field": per_field,
    }


def evaluate_corpus(
    pairs: Sequence[tuple[ParsedResume, ParsedResume]],
    rs_weights: RSWeights | None = None,
) -> MetricReport:
    """Average every metric over (prediction, gold) pairs, in the given order."""
    if not pairs:
        raise ValueError("evaluate_corpus needs at least one pair")
    scores = [document_scores(p, g, rs_weights) for p, g in pairs]
    n = len(scores)

    def mean(values) -> float:
        return math.fsum(values) / n

    per_field = {
        f: {k: mean(s["per_field"][f][k] for s in scores) for k in scores[0]["per_field"][f]}
        for f in FIELDS
    }
    return MetricReport(
        em=mean(s["em"] for s in scores),
        f1=mean(s["f1"] for s in scores),
        bleu=mean(s["bleu"] for s in scores),
        rouge_l=mean(s["rouge_l"] for s in scores),
        rs=mean(s["rs"] for s in scores),
        per_field=per_field,
        nested_rouge={f: per_field[f]["rouge_l"] for f in NESTED_FIELDS},
        n_documents=n,
    )


def format_table(reports: Mapping[str, MetricReport]) -> str:
    """Aligned text table: one row per metric, one column per run, values in %."""
    labels = list(reports)
    rows = [(name, [getattr(reports[l], key) for l in labels]) for key, name in METRIC_ROWS]
    rows += [
        (f"ROUGE-L {f}", [reports[l].nested_rouge[f] for l in labels]) for f in NESTED_FIELDS
    ]
    first = max(len("Metric (%)"), *(len(r[0]) for r in rows))
    widths = [max(len(l), 6) for l in labels]
    header = "Metric (%)".ljust(first) + "".join("  " + l.rjust(w) for l, w in zip(labels, widths))
    lines = [header, "-" * len(header)]
    for name, values in rows:
        cells = "".join("  " + f"{100 * v:.1f}".rjust(w) for v, w in zip(values, widths))
        lines.append(name.ljust(first) + cells)
    lines.append(f"n = {reports[labels[0]].n_documents} documents")
    return "\n".join(lines)
