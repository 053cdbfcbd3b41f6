import json
import random
from fractions import Fraction

import pytest

from resume_ensemble.aggregate import (
    ConfigurationError,
    ConsensusRequest,
    GroundedConsensus,
    NoCandidatesError,
    WeightVector,
    aggregate,
    build_delegate,
    consensus,
    consensus_prompt,
    fallback_consensus,
    weighted_majority_vote,
    weighted_threshold_vote,
)
from resume_ensemble.extractors import ModelPrediction
from resume_ensemble.schema import FIELDS, EducationEntry, ExperienceEntry, ParsedResume, canonical_json

from oracles import majority_oracle
from resumes import sample_resume

PANEL = WeightVector({"phi": 3, "gemma": 2, "llama": 1})
VALUES = ["John", "Jon", "N/A", "Jane", "J."]


# -- weighted majority -------------------------------------------------------

def test_majority_examples():
    winner, tally = weighted_majority_vote([("John", 3), ("Jon", 2), ("John", 1)])
    assert winner == "John" and tally == {"John": 4, "Jon": 2}
    assert weighted_majority_vote([("b@x.com", 2), ("a@x.com", 2)])[0] == "a@x.com"
    assert weighted_majority_vote([("N/A", 3), ("555-1234", 1)])[0] == "N/A"


def test_placeholder_loses_ties():
    assert weighted_majority_vote([("N/A", 3), ("Ann", 2), ("Ann", 1)])[0] == "Ann"
    assert weighted_majority_vote([("N/A", 2), ("zed", 2)])[0] == "zed"


def test_single_weight_breaks_ties_before_lexicographic_order():
    assert weighted_majority_vote([("b", 3), ("a", 2), ("a", 1)])[0] == "b"


def test_majority_rejects_empty_and_nonpositive():
    with pytest.raises(NoCandidatesError):
        weighted_majority_vote([])
    with pytest.raises(ValueError):
        weighted_majority_vote([("a", 0)])


def _random_panel(rng):
    k = rng.randint(1, 3)
    return [(rng.choice(VALUES[: rng.randint(1, 5)]), rng.choice([1, 2, 3, 0.5, 2.5])) for _ in range(k)]


def test_majority_matches_brute_force_oracle():
    rng = random.Random(0)
    for _ in range(1000):
        cands = _random_panel(rng)
        winner, tally = weighted_majority_vote(cands)
        o_winner, o_tally = majority_oracle(cands)
        assert winner == o_winner, cands
        assert tally == pytest.approx(o_tally)


def test_majority_permutation_and_scaling_invariance():
    rng = random.Random(1)
    for _ in range(1000):
        cands = _random_panel(rng)
        winner = weighted_majority_vote(cands)[0]
        shuffled = cands[:]
        rng.shuffle(shuffled)
        assert weighted_majority_vote(shuffled)[0] == winner
        # factors keep every scaled weight exactly representable; with inexact
        # products a float tie could break differently
        c = rng.choice([0.25, 0.5, 2, 3, 7, 1000])
        assert weighted_majority_vote([(v, w * c) for v, w in cands])[0] == winner


# -- weighted threshold ------------------------------------------------------

def test_threshold_strictness_example():
    lists = [(["Py", "Phi+L", "Unan"], 3), (["G+L", "Unan"], 2), (["Phi+L", "G+L", "Unan"], 1)]
    assert weighted_threshold_vote(lists, 3) == ["Unan", "Phi+L"]


def test_threshold_weight3_singleton_excluded_weight4_pair_included():
    assert weighted_threshold_vote([(["x"], 3), ([], 2), ([], 1)]) == []
    assert weighted_threshold_vote([(["x"], 3), ([], 2), (["x"], 1)]) == ["x"]


def test_threshold_single_model_panel():
    assert weighted_threshold_vote([(["a", "b"], 1)], 0.5) == ["a", "b"]


def test_threshold_order_is_support_then_first_appearance():
    lists = [(["c", "a"], 2), (["b", "a", "c"], 2), (["b"], 2)]
    # a=4, b=4, c=4: first appearance order c, a, b
    assert weighted_threshold_vote(lists, 3) == ["c", "a", "b"]


def test_threshold_counts_an_item_once_per_list():
    assert weighted_threshold_vote([(["a", "a"], 2), ([], 2)]) == []


SKILLS = ["Python", "SQL", "Excel", "Go", "Rust", "Java"]


def _random_skill_panel(rng):
    k = rng.randint(1, 4)
    return [(rng.sample(SKILLS, rng.randint(0, 5)), rng.choice([1, 2, 3, 1.5])) for _ in range(k)]


def test_threshold_properties_on_random_panels():
    rng = random.Random(2)
    for _ in range(1000):
        lists = _random_skill_panel(rng)
        total = sum(w for _, w in lists)
        out = weighted_threshold_vote(lists)
        support = {s: sum(w for items, w in lists if s in items) for s in SKILLS}
        assert set(out) == {s for s in SKILLS if support[s] > total / 2}
        # permutation: same set, order only depends on support and first appearance
        shuffled = lists[:]
        rng.shuffle(shuffled)
        assert set(weighted_threshold_vote(shuffled)) == set(out)
        # scaling
        c = rng.choice([0.5, 3, 10])
        assert weighted_threshold_vote([(i, w * c) for i, w in lists]) == out
        # monotone in the threshold
        t1, t2 = sorted(rng.uniform(0, total) for _ in range(2))
        assert set(weighted_threshold_vote(lists, t2)) <= set(weighted_threshold_vote(lists, t1))
        # unanimity
        items = lists[0][0]
        assert weighted_threshold_vote([(items, w) for _, w in lists]) == list(dict.fromkeys(items))


# -- weight vectors ----------------------------------------------------------

def test_weight_vector_validation_and_parsing():
    assert WeightVector.parse("phi=3, gemma=2,llama=1") == PANEL
    assert str(PANEL) == "gemma=2,llama=1,phi=3"
    assert PANEL.total == 6 and PANEL.as_tuple() == (2, 1, 3)
    for bad in ({}, {"a": 0}, {"a": -1}, {"a": float("inf")}):
        with pytest.raises(ConfigurationError):
            WeightVector(bad)
    with pytest.raises(ConfigurationError):
        WeightVector.parse("phi=three")


# -- consensus ---------------------------------------------------------------

def _exp(company, location="Boston, MA", bullets=("Did a thing",)):
    return ExperienceEntry("Engineer", company, location, "2019-01-01", "present", tuple(bullets))


def _request(values, field="experience", text=""):
    return ConsensusRequest(
        field, text, tuple((m, PANEL[m], canonical_json(v)) for m, v in values.items())
    )


def test_consensus_request_needs_conflict():
    v = (_exp("Acme"),)
    with pytest.raises(ValueError):
        _request({"phi": v, "gemma": v})
    with pytest.raises(ValueError):
        ConsensusRequest("skills", "", (("a", 1, "[]"), ("b", 1, '["x"]')))


def test_fallback_takes_heaviest_model_then_smallest_id():
    a, b = (_exp("Acme"),), (_exp("Globex"),)
    assert fallback_consensus(_request({"phi": a, "gemma": b, "llama": b})) == a
    req = ConsensusRequest("experience", "", (("zeta", 2, canonical_json(a)), ("alpha", 2, canonical_json(b))))
    assert fallback_consensus(req) == b


class Broken:
    name = "broken"

    def __init__(self, answer=None, exc=None):
        self.answer, self.exc = answer, exc

    def fuse(self, request):
        if self.exc:
            raise self.exc
        return self.answer


@pytest.mark.parametrize(
    "delegate",
    [
        Broken(answer="not json"),
        Broken(exc=ConnectionError("offline")),
        Broken(answer='{"experience": [{"title": 5}]}'),
        Broken(answer='{"education": [], "skills": []}'),
        Broken(answer='{"experience": "nope"}'),
    ],
)
def test_delegate_failures_fall_back_with_warning(delegate, caplog):
    a, b = (_exp("Acme"),), (_exp("Globex"),)
    with caplog.at_level("WARNING"):
        entries, note = consensus(_request({"phi": a, "gemma": b}), delegate)
    assert entries == a and note.startswith("fallback: ")
    assert "broken" in caplog.text


def test_delegate_answer_is_normalized():
    a, b = (_exp("Acme"),), (_exp("Globex"),)
    answer = json.dumps([{"title": " Engineer ", "company": "Acme", "location": "", "start_date": "Jan 2019",
                          "end_date": "current", "bullets": ["x"]}])
    entries, note = consensus(_request({"phi": a, "gemma": b}), Broken(answer=answer))
    assert note == "delegate: broken"
    assert entries == (ExperienceEntry("Engineer", "Acme", "N/A", "2019-01-01", "present", ("x",)),)


def test_consensus_prompt_contains_document_candidates_and_weights():
    req = _request({"phi": (_exp("Acme"),), "gemma": (_exp("Globex"),)}, text="RESUME BODY")
    prompt = consensus_prompt(req)
    assert "RESUME BODY" in prompt and "Acme" in prompt and "Globex" in prompt and "phi" in prompt
    assert "3" in prompt


def test_grounded_consensus_repairs_merges_and_outliers():
    text = (
        "Engineer at Acme, Boston, MA. Built pipelines. Led migrations.\n"
        "Analyst at Globex, Denver, CO. Wrote reports."
    )
    gold = (
        _exp("Acme", "Boston, MA", ("Built pipelines", "Led migrations")),
        _exp("Globex", "Denver, CO", ("Wrote reports",)),
    )
    merged = (_exp("Acme", "Reykjavik, Iceland", ("Built pipelines and Led migrations",)), gold[1])
    dropped = (gold[0],)
    entries, note = consensus(
        _request({"phi": merged, "gemma": dropped, "llama": gold}, text=text), GroundedConsensus()
    )
    assert note == "delegate: grounded"
    assert entries == gold


def test_grounded_consensus_without_grounding_falls_back():
    a, b = (_exp("Acme"),), (_exp("Globex"),)
    req = ConsensusRequest(
        "experience", "nothing relevant", (("x", 1, canonical_json(a)), ("y", 1, canonical_json(b)))
    )
    entries, note = consensus(req, GroundedConsensus())
    assert note.startswith("fallback") and entries == a


def test_grounded_consensus_keeps_ungrounded_majority_entries():
    a, b = (_exp("Acme"),), (_exp("Globex"),)
    entries, _ = consensus(_request({"phi": a, "gemma": b}, text="nothing relevant"), GroundedConsensus())
    assert entries == a  # phi's 3 of 5 is a weighted majority


def test_grounded_consensus_education():
    text = "BSc Mathematics, State University, 2012 to 2016"
    gold = (EducationEntry("BSc", "State University", "Mathematics", "2012-01-01", "2016-01-01"),)
    wrong = (EducationEntry("BSc", "Lakeside College", "Mathematics", "2012-01-01", "2016-01-01"),)
    entries, _ = consensus(_request({"llama": wrong, "gemma": gold}, "education", text), GroundedConsensus())
    assert entries == gold


def test_build_delegate():
    assert build_delegate(None) is None and build_delegate("fallback") is None
    assert isinstance(build_delegate({"type": "grounded"}), GroundedConsensus)
    assert build_delegate({"type": "http", "model_id": "g", "base_url": "http://x"}).name == "g"
    with pytest.raises(ValueError):
        build_delegate("oracle")


# -- aggregate ---------------------------------------------------------------

def _preds(**resumes):
    return [ModelPrediction(m, r) for m, r in resumes.items()]


def test_john_smith_tie_goes_to_heaviest_single_supporter():
    base = sample_resume()
    preds = _preds(
        phi=base.replace(name="John Smith"),
        gemma=base.replace(name="Jon Smith"),
        llama=base.replace(name="Jon Smith"),
    )
    resume, votes = aggregate(preds, PANEL)
    assert resume.name == "John Smith"
    assert votes[0].tally == {"John Smith": 3, "Jon Smith": 3}
    assert majority_oracle([("John Smith", 3), ("Jon Smith", 2), ("Jon Smith", 1)])[0] == "John Smith"


def test_identical_predictions_pass_through():
    r = sample_resume()
    resume, votes = aggregate(_preds(phi=r, gemma=r, llama=r), PANEL)
    assert resume == r
    assert [v.field for v in votes] == list(FIELDS)
    assert [v.strategy_used for v in votes] == ["majority"] * 4 + ["threshold", "passthrough", "passthrough"]


def test_single_model_panel_returns_its_prediction():
    r = sample_resume()
    assert aggregate(_preds(solo=r), WeightVector({"solo": 1}))[0] == r


def test_all_placeholders_propagate():
    r = sample_resume().replace(phone="N/A")
    assert aggregate(_preds(phi=r, gemma=r, llama=r), PANEL)[0].phone == "N/A"


def test_conflicting_nested_fields_use_fallback_without_delegate():
    r = sample_resume()
    other = r.replace(experience=r.experience[:1])
    resume, votes = aggregate(_preds(phi=other, gemma=r, llama=r), PANEL)
    assert resume.experience == other.experience
    vote = votes[FIELDS.index("experience")]
    assert vote.strategy_used == "consensus" and vote.note == "fallback"


def test_aggregate_errors():
    r = sample_resume()
    with pytest.raises(NoCandidatesError):
        aggregate([], PANEL)
    with pytest.raises(ConfigurationError):
        aggregate(_preds(phi=r, mystery=r), PANEL)
    with pytest.raises(ConfigurationError):
        aggregate([ModelPrediction("phi", r), ModelPrediction("phi", r)], PANEL)


def _random_resume(rng):
    exp_pool = [(), (_exp("Acme"),), (_exp("Globex"),), (_exp("Acme"), _exp("Globex"))]
    edu_pool = [(), (EducationEntry("BSc", "U", "CS", "N/A", "N/A"),)]
    return ParsedResume(
        name=rng.choice(["Ann", "Anne", "N/A"]),
        email=rng.choice(["a@x.com", "b@x.com", "N/A"]),
        phone=rng.choice(["1", "2", "N/A"]),
        department=rng.choice(["IT", "HR"]),
        skills=tuple(rng.sample(SKILLS, rng.randint(0, 4))),
        experience=rng.choice(exp_pool),
        education=rng.choice(edu_pool),
    )


def test_aggregate_properties_on_random_panels():
    rng = random.Random(7)
    ids = ["a", "b", "c"]
    for _ in range(1000):
        k = rng.randint(1, 3)
        weights = WeightVector({m: rng.choice([1, 2, 3]) for m in ids[:k]})
        preds = [ModelPrediction(m, _random_resume(rng)) for m in ids[:k]]
        resume, votes = aggregate(preds, weights)
        assert len(votes) == 7
        shuffled = preds[:]
        rng.shuffle(shuffled)
        assert aggregate(shuffled, weights)[0] == resume
        c = Fraction(rng.choice([1, 2, 5]), rng.choice([1, 3]))
        scaled = WeightVector({m: float(w * c) for m, w in weights.weights.items()})
        scaled_resume, scaled_votes = aggregate(preds, scaled)
        assert scaled_resume == resume
        assert [v.winner for v in scaled_votes] == [v.winner for v in votes]
        for v in votes:
            assert sum(v.tally.values()) <= weights.total + 1e-9 or v.field == "skills"
        unanimous = [ModelPrediction(m, preds[0].prediction) for m in ids[:k]]
        assert aggregate(unanimous, weights)[0] == preds[0].prediction


def test_field_votes_serialize():
    r = sample_resume()
    _, votes = aggregate(_preds(phi=r, gemma=r.replace(name="X")), PANEL)
    payload = json.loads(json.dumps([v.to_dict() for v in votes]))
    assert payload[0]["candidates"][0] == {"model_id": "gemma", "weight": 2, "value": "X"}
