"""Ensemble resume parsing: run several extractors, normalize, fuse per field."""

from .aggregate import (
    ConfigurationError,
    ConsensusError,
    ConsensusRequest,
    FieldVote,
    GroundedConsensus,
    NoCandidatesError,
    WeightVector,
    aggregate,
    weighted_majority_vote,
    weighted_threshold_vote,
)
from .calibrate import CalibrationResult, grid_search_weights, rs_weight_sweep
from .corpus import Corpus, SplitSpec, generate_synthetic, load_corpus, split_corpus
from .extractors import MockBackend, MockProfile, ModelPrediction, repair_json, run_panel
from .metrics import MetricReport, RSWeights, evaluate_corpus, recruitment_similarity
from .normalize import SkillOntology, normalize_date, normalize_fields
from .pipeline import EnsembleResult, ensemble_parse
from .schema import (
    EducationEntry,
    ExperienceEntry,
    ParsedResume,
    ResumeDocument,
    canonical_json,
    parse_resume_json,
    serialize_resume,
    validate,
)

__version__ = "0.1.0"
