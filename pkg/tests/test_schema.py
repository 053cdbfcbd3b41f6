import json
import random

import pytest

from resume_ensemble.normalize import SkillOntology, normalize_fields
from resume_ensemble.schema import (
    FIELDS,
    ExperienceEntry,
    ParsedResume,
    ResumeDocument,
    ResumeParseError,
    SchemaError,
    parse_resume_json,
    serialize_resume,
    validate,
)

from resumes import random_raw_resume, sample_resume


def test_full_object_parses_to_its_values():
    r = sample_resume()
    assert parse_resume_json(json.dumps(r.to_dict())) == r


def test_missing_fields_are_placeholder_filled():
    r = parse_resume_json('{"name":"A"}')
    assert r.name == "A"
    assert (r.email, r.phone, r.department) == ("N/A", "N/A", "N/A")
    assert r.skills == () and r.experience == () and r.education == ()
    assert validate(r) == []


def test_null_counts_as_missing():
    assert parse_resume_json('{"email": null, "skills": null}') == ParsedResume()


def test_wrong_type_names_the_field():
    with pytest.raises(SchemaError) as err:
        parse_resume_json('{"skills": "Python"}')
    assert err.value.field == "skills"
    with pytest.raises(SchemaError) as err:
        parse_resume_json('{"experience": [{"title": 3}]}')
    assert err.value.field == "experience[0].title"


def test_malformed_json_reports_byte_offset():
    text = '{"name": "Zoë", oops}'
    with pytest.raises(ResumeParseError) as err:
        parse_resume_json(text)
    # "ë" takes two bytes, so the byte offset is one past the character index
    assert err.value.offset == text.index("oops") + 1


def test_unknown_keys_are_ignored_with_warning(caplog):
    with caplog.at_level("WARNING"):
        r = parse_resume_json('{"name": "A", "hobbies": ["chess"]}')
    assert r.name == "A"
    assert "hobbies" in caplog.text


def test_serialization_is_canonical():
    r = sample_resume()
    text = serialize_resume(r)
    assert list(json.loads(text)) == list(FIELDS)
    assert ": " not in text and ", " not in text.replace("Boston, MA", "")
    assert serialize_resume(r.replace()) == text


def test_skill_order_is_preserved():
    r = ParsedResume(skills=("C++", "Rust"))
    assert json.loads(serialize_resume(r))["skills"] == ["C++", "Rust"]


def test_non_ascii_is_written_as_utf8():
    r = ParsedResume(name="Zoë Ångström")
    assert "Zoë Ångström" in serialize_resume(r)


def test_round_trip_on_random_normalized_resumes():
    rng = random.Random(1)
    onto = SkillOntology.default()
    for _ in range(300):
        r = normalize_fields(random_raw_resume(rng), onto)
        assert parse_resume_json(serialize_resume(r)) == r


def test_validate_accepts_valid_resume():
    assert validate(sample_resume()) == []


def test_validate_flags_bad_date():
    bad = ExperienceEntry("T", "C", "L", start_date="Jan 2020")
    problems = validate(ParsedResume(experience=(bad,)))
    assert [(p.field, p.rule) for p in problems] == [("experience[0].start_date", "date_pattern")]


def test_validate_flags_duplicate_skill():
    problems = validate(ParsedResume(skills=("Python", "Python")))
    assert [p.rule for p in problems] == ["duplicate_skill"]


def test_validate_other_rules():
    r = ParsedResume(
        name="  ",
        skills=("",),
        experience=(ExperienceEntry("T", "C", "L", start_date="present", bullets=("",)),),
    )
    rules = sorted(p.rule for p in validate(r))
    assert rules == ["date_pattern", "empty_bullet", "empty_scalar", "empty_skill"]


def test_impossible_calendar_date_is_invalid():
    r = ParsedResume(experience=(ExperienceEntry("T", "C", "L", start_date="2021-02-30"),))
    assert [p.rule for p in validate(r)] == ["date_pattern"]


def test_document_id_must_be_non_empty():
    with pytest.raises(ValueError):
        ResumeDocument("", "text")
    assert ResumeDocument("x", "").raw_text == ""
