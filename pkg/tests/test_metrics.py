import json
import math
import random

import pytest

from resume_ensemble.metrics import (
    RSWeights,
    bleu,
    edit_distance,
    evaluate_corpus,
    exact_match,
    field_similarity,
    format_table,
    jaccard,
    levenshtein_similarity,
    linearize,
    recruitment_similarity,
    rouge_l,
    token_f1,
)
from resume_ensemble.schema import FIELDS, EducationEntry, ExperienceEntry, ParsedResume

from oracles import bleu_oracle, f1_oracle, levenshtein_oracle, random_sentence, random_word, rouge_oracle
from resumes import sample_resume

GOLD = sample_resume()


# -- text metrics ------------------------------------------------------------

def test_token_f1_examples():
    assert token_f1("machine learning", "machine learning") == 1.0
    assert token_f1("the cat sat", "the cat") == pytest.approx(0.8)
    assert token_f1("", "abc") == 0.0
    assert token_f1("", "") == 1.0
    assert token_f1("A a", "a") == pytest.approx(2 * 0.5 * 1 / 1.5)


def test_bleu_examples():
    assert bleu("one two three four", "one two three four") == pytest.approx(1.0)
    assert bleu("", "anything") == 0.0
    assert bleu("anything", "") == 0.0
    assert bleu("x y", "a b") == 0.0


def test_bleu_brevity_penalty_by_hand():
    # c = 3 candidate tokens, r = 5 reference tokens
    cand, ref = "the cat sat", "the cat sat on mats"
    p1 = 3 / 3
    p2 = (2 + 1) / (2 + 1)
    p3 = (1 + 1) / (1 + 1)
    p4 = (0 + 1) / (0 + 1)
    expected = math.exp(1 - 5 / 3) * (p1 * p2 * p3 * p4) ** 0.25
    assert bleu(cand, ref) == pytest.approx(expected, abs=1e-12)
    assert bleu(cand, ref) < 1.0


def test_bleu_smoothing_by_hand():
    cand, ref = "a b c d e", "a b x d e"
    # unigrams 4/5; bigrams "a b", "d e" match; no trigram or 4-gram matches
    p = [4 / 5, (2 + 1) / (4 + 1), (0 + 1) / (3 + 1), (0 + 1) / (2 + 1)]
    assert bleu(cand, ref) == pytest.approx(math.prod(p) ** 0.25, abs=1e-12)


def test_rouge_examples():
    assert rouge_l("a b c d", "a b c d") == 1.0
    assert rouge_l("a b c d", "a c d e") == pytest.approx(0.75)
    assert rouge_l("a b", "c d") == 0.0


def test_levenshtein_examples():
    assert levenshtein_similarity("kitten", "sitting") == pytest.approx(1 - 3 / 7)
    assert edit_distance("kitten", "sitting") == 3
    assert levenshtein_similarity("same", "same") == 1.0
    assert levenshtein_similarity("a", "b") == 0.0
    assert levenshtein_similarity("", "") == 1.0


def test_jaccard():
    assert jaccard(["a", "b"], ["b", "c"]) == pytest.approx(1 / 3)
    assert jaccard([], []) == 1.0


@pytest.mark.parametrize(
    "fn, oracle, gen",
    [
        (token_f1, f1_oracle, random_sentence),
        (bleu, bleu_oracle, random_sentence),
        (rouge_l, rouge_oracle, random_sentence),
        (levenshtein_similarity, levenshtein_oracle, random_word),
    ],
    ids=["token_f1", "bleu", "rouge_l", "levenshtein"],
)
def test_metric_matches_oracle_on_100_random_pairs(fn, oracle, gen):
    rng = random.Random(hash(fn.__name__) % 1000)
    for _ in range(100):
        a, b = gen(rng), gen(rng)
        if rng.random() < 0.2:
            b = a
        assert abs(fn(a, b) - oracle(a, b)) <= 1e-9, (a, b)


def test_symmetry_and_range():
    rng = random.Random(4)
    for _ in range(200):
        a, b = random_sentence(rng), random_sentence(rng)
        assert rouge_l(a, b) == pytest.approx(rouge_l(b, a), abs=1e-15)
        w1, w2 = random_word(rng), random_word(rng)
        assert levenshtein_similarity(w1, w2) == levenshtein_similarity(w2, w1)
        for fn in (token_f1, bleu, rouge_l):
            assert 0.0 <= fn(a, b) <= 1.0


# -- structured fields -------------------------------------------------------

def test_linearization():
    assert linearize(GOLD, "name") == "Ada Lovelace"
    assert linearize(GOLD, "skills") == "Docker\nPython\nSQL"
    assert linearize(GOLD, "experience").splitlines() == [
        "Data Engineer | Acme Analytics | Boston, MA | 2019-03-01 | present",
        "Built streaming pipelines",
        "Mentored two analysts",
        "Analyst | Globex | N/A | 2016-06-01 | 2019-02-01",
        "Automated weekly reports",
    ]
    assert linearize(GOLD, "education") == "BSc | State University | Mathematics | 2012-09-01 | 2016-06-01"
    assert linearize(ParsedResume(), "experience") == "N/A"


def test_exact_match_examples():
    assert exact_match(GOLD, GOLD) == 1.0
    assert exact_match(GOLD.replace(email="x@y.z"), GOLD) == pytest.approx(6 / 7)
    assert exact_match(ParsedResume(), GOLD) == 0.0
    assert exact_match(GOLD.replace(skills=tuple(reversed(GOLD.skills))), GOLD) == 1.0


# -- recruitment similarity --------------------------------------------------

def test_rs_closed_forms():
    assert recruitment_similarity(GOLD, GOLD) == pytest.approx(1.0, abs=1e-12)
    no_phone = GOLD.replace(phone="xxxxxxxxxxx")
    assert field_similarity(no_phone, GOLD, "phone") == 0.0
    assert recruitment_similarity(no_phone, GOLD) == pytest.approx(0.85, abs=1e-12)
    half = GOLD.replace(skills=("Python", "SQL", "Docker", "Go", "Rust", "Java"))
    assert jaccard(half.skills, GOLD.skills) == 0.5
    assert recruitment_similarity(half, GOLD) == pytest.approx(0.825, abs=1e-12)


def test_rs_is_affine_in_each_field():
    w = RSWeights().as_dict()
    variants = {
        "name": GOLD.replace(name="Ada L."),
        "email": GOLD.replace(email="ada@example.org"),
        "department": GOLD.replace(department="Eng"),
        "skills": GOLD.replace(skills=("Python",)),
        "experience": GOLD.replace(experience=GOLD.experience[:1]),
        "education": GOLD.replace(education=()),
    }
    for f, pred in variants.items():
        delta = 1.0 - field_similarity(pred, GOLD, f)
        assert recruitment_similarity(pred, GOLD) == pytest.approx(1.0 - w[f] * delta, abs=1e-12)


def test_rs_weights_validation():
    assert sum(RSWeights().as_dict().values()) == pytest.approx(1.0, abs=1e-12)
    assert sum(RSWeights().remainder.values()) == pytest.approx(0.35, abs=1e-12)
    with pytest.raises(ValueError):
        RSWeights(skills=0.5)
    with pytest.raises(ValueError):
        RSWeights(skills=0.35, email=-0.15, phone=0.45)
    with pytest.raises(ValueError):
        RSWeights(remainder={"hobbies": 0.35})
    custom = RSWeights.from_dict({"skills": 0.5, "email": 0.25, "phone": 0.25})
    assert recruitment_similarity(GOLD.replace(name="zzz"), GOLD, custom) == 1.0


def test_skill_weight_rescaling():
    w = RSWeights().with_skill_weight(0.2)
    assert w.skills == 0.2 and sum(w.as_dict().values()) == pytest.approx(1.0, abs=1e-12)
    assert w.email / w.phone == pytest.approx(1.0)
    with pytest.raises(ValueError):
        RSWeights().with_skill_weight(1.0)


def test_rs_skill_sensitivity_direction():
    rng = random.Random(8)
    for _ in range(200):
        pred = GOLD.replace(
            phone=rng.choice(["N/A", "+1 555-0199", GOLD.phone]),
            name=rng.choice(["Ada Lovelace", "Ada", "A. Lovelace"]),
        )
        s_skills = field_similarity(pred, GOLD, "skills")
        others = RSWeights().as_dict()
        others.pop("skills")
        mean_other = sum(w * field_similarity(pred, GOLD, f) for f, w in others.items()) / sum(others.values())
        lo, hi = RSWeights().with_skill_weight(0.2), RSWeights().with_skill_weight(0.35)
        if s_skills > mean_other:
            assert recruitment_similarity(pred, GOLD, hi) > recruitment_similarity(pred, GOLD, lo)


# -- corpus report -----------------------------------------------------------

def test_identical_corpus_scores_one():
    report = evaluate_corpus([(GOLD, GOLD)] * 3)
    for key in ("em", "f1", "bleu", "rouge_l", "rs"):
        assert getattr(report, key) == pytest.approx(1.0)
    assert report.nested_rouge == {"experience": 1.0, "education": 1.0}
    assert report.n_documents == 3


def test_single_pair_report_equals_pair_metrics():
    pred = GOLD.replace(email="x@y.z", skills=("Python",))
    report = evaluate_corpus([(pred, GOLD)])
    assert report.em == exact_match(pred, GOLD)
    assert report.rs == recruitment_similarity(pred, GOLD)
    assert report.per_field["email"]["similarity"] == levenshtein_similarity("x@y.z", GOLD.email)


def test_report_is_in_range_and_serializes():
    rng = random.Random(0)
    pairs = []
    for _ in range(20):
        pred = GOLD.replace(
            name=rng.choice(["Ada", "N/A", GOLD.name]),
            experience=rng.choice([(), GOLD.experience[:1], GOLD.experience]),
            education=rng.choice([(), GOLD.education, (EducationEntry("MSc", "X", "Y", "N/A", "N/A"),)]),
        )
        pairs.append((pred, GOLD))
    report = evaluate_corpus(pairs)
    d = json.loads(report.to_json())
    assert d["em_definition"] == "field-level"
    for key in ("em", "f1", "bleu", "rouge_l", "rs"):
        assert 0.0 <= d[key] <= 1.0
    assert set(d["per_field"]) == set(FIELDS)
    assert evaluate_corpus(pairs).to_json() == report.to_json()


def test_empty_corpus_is_an_error():
    with pytest.raises(ValueError):
        evaluate_corpus([])


def test_table_layout():
    r = evaluate_corpus([(GOLD, GOLD)])
    table = format_table({"gemma": r, "ensemble": r})
    lines = table.splitlines()
    assert lines[0].split()[-2:] == ["gemma", "ensemble"]
    assert any(line.startswith("EM (field-level)") for line in lines)
    assert any(line.startswith("ROUGE-L experience") for line in lines)
