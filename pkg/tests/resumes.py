"""Builders for hand-written and random resumes used across the tests."""

from __future__ import annotations

import random

from resume_ensemble.schema import EducationEntry, ExperienceEntry, ParsedResume

RAW_DATES = [
    "2020-01-01", "2020-01", "2019", "Jan 2020", "January 2020", "sept 2018", "03/2017",
    "11-2015", "present", "Current", "N/A", "", "sometime ago", "13/2020", "2021-02-30", " 2018 ",
]
RAW_SKILLS = [
    "Python", "python 3", "Python 3", "  PYTHON  ", "JS", "JavaScript", "javascript", "SQL",
    "Kubernetes", "Excel", "ms excel", "Machine   Learning", "ML", "Docker", "", "  ",
]
RAW_SCALARS = ["Ada Lovelace", "  Ada   Lovelace ", "", "N/A", "n/a", "none", "-", "ada@Example.COM", "555-0100"]
RAW_TEXT = ["Built dashboards", "  led   a team ", "", "Cut costs by 10%", "Shipped v2"]


def sample_resume() -> ParsedResume:
    return ParsedResume(
        name="Ada Lovelace",
        email="ada@example.com",
        phone="+1 555-0100",
        department="Engineering",
        skills=("Python", "SQL", "Docker"),
        experience=(
            ExperienceEntry(
                title="Data Engineer",
                company="Acme Analytics",
                location="Boston, MA",
                start_date="2019-03-01",
                end_date="present",
                bullets=("Built streaming pipelines", "Mentored two analysts"),
            ),
            ExperienceEntry(
                title="Analyst",
                company="Globex",
                location="N/A",
                start_date="2016-06-01",
                end_date="2019-02-01",
                bullets=("Automated weekly reports",),
            ),
        ),
        education=(
            EducationEntry(
                degree="BSc",
                institution="State University",
                field_of_study="Mathematics",
                start_date="2012-09-01",
                end_date="2016-06-01",
            ),
        ),
    )


def random_raw_resume(rng: random.Random) -> ParsedResume:
    """A messy, not-yet-normalized resume (may violate invariants)."""
    def scalar() -> str:
        return rng.choice(RAW_SCALARS)

    experience = tuple(
        ExperienceEntry(
            title=scalar(),
            company=scalar(),
            location=scalar(),
            start_date=rng.choice(RAW_DATES),
            end_date=rng.choice(RAW_DATES),
            bullets=tuple(rng.choice(RAW_TEXT) for _ in range(rng.randint(0, 3))),
        )
        for _ in range(rng.randint(0, 3))
    )
    education = tuple(
        EducationEntry(
            degree=scalar(),
            institution=scalar(),
            field_of_study=scalar(),
            start_date=rng.choice(RAW_DATES),
            end_date=rng.choice(RAW_DATES),
        )
        for _ in range(rng.randint(0, 2))
    )
    return ParsedResume(
        name=scalar(),
        email=scalar(),
        phone=scalar(),
        department=scalar(),
        skills=tuple(rng.choice(RAW_SKILLS) for _ in range(rng.randint(0, 8))),
        experience=experience,
        education=education,
    )
