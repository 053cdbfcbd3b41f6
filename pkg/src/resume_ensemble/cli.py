"""Command-line interface: ``resume-ensemble {synth,parse,evaluate,calibrate}``.

Exit codes: 0 success, 1 runtime failure, 2 usage or configuration error.
Every command that uses only mock backends is deterministic for a fixed
``--seed`` (default 0) and independent of ``--parallel``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from .aggregate import ConfigurationError, WeightVector, build_delegate
from .calibrate import CalibrationError, default_grid, grid_search_weights
from .corpus import Corpus, CorpusError, SplitSpec, generate_synthetic, load_corpus, split_corpus, write_corpus, write_metadata
from .extractors import PanelConfig, build_backends, load_panel_config, run_panel
from .metrics import MetricReport, RSWeights, evaluate_corpus, format_table
from .normalize import SkillOntology
from .pipeline import check_weights, ensemble_parse, normalize_panel
from .schema import ParsedResume, SchemaError, resume_from_dict

logger = logging.getLogger("resume_ensemble")

DEFAULT_SEED = 0

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad flags, unreadable or malformed inputs: exit 2."""


def _dump_line(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def _write_lines(path: Path, lines: Sequence[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def _load_json(path: str, what: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {what} {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} {path} is not valid JSON: {exc}") from None


def _ontology(path: str | None) -> SkillOntology:
    if path is None:
        return SkillOntology.default()
    try:
        return SkillOntology.from_dict(_load_json(path, "ontology"))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"ontology {path}: {exc}") from None


def _corpus(path: str, ontology: SkillOntology) -> Corpus:
    try:
        return load_corpus(path, ontology)
    except OSError as exc:
        raise UsageError(f"cannot read corpus {path}: {exc.strerror}") from None
    except CorpusError as exc:
        raise UsageError(str(exc)) from None


def _panel_config(path: str, seed: int) -> PanelConfig:
    _load_json(path, "config")  # surfaces read/JSON errors with a clear message
    try:
        return load_panel_config(path, default_seed=seed)
    except ValueError as exc:
        raise UsageError(f"config {path}: {exc}") from None


def _weights_arg(text: str) -> WeightVector:
    """``phi=3,gemma=2`` or a path to a JSON object of weights."""
    try:
        if Path(text).is_file():
            obj = _load_json(text, "weights file")
            if not isinstance(obj, dict):
                raise UsageError(f"weights file {text} must hold a JSON object")
            return WeightVector({str(k): v for k, v in obj.items()})
        return WeightVector.parse(text)
    except (ConfigurationError, TypeError, ValueError) as exc:
        raise UsageError(f"bad --weights {text!r}: {exc}") from None


# -- synth -------------------------------------------------------------------

def cmd_synth(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    corpus = generate_synthetic(args.n, args.seed)
    out = Path(args.out)
    meta = out.with_suffix(".meta.json")
    try:
        write_corpus(corpus, out)
        write_metadata(corpus, meta)
    except OSError as exc:
        print(f"error: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_RUNTIME
    print(f"wrote {len(corpus)} resumes to {out} (metadata: {meta})", file=sys.stderr)
    return EXIT_OK


# -- parse -------------------------------------------------------------------

def _complete_predictions(corpus: Corpus, config: PanelConfig, ontology: SkillOntology, workers: int):
    """Normalized predictions for the documents every backend extracted.

    Returns (kept (document, gold) pairs, ``{model_id: {document_id: resume}}``).
    """
    backends = build_backends(config, corpus.golds())
    panel = normalize_panel(run_panel(corpus.documents, backends, workers), ontology)
    predictions: dict[str, dict[str, ParsedResume]] = {m: {} for m in config.model_ids}
    kept = []
    for (doc, gold), entry in zip(corpus, panel):
        if len(entry.predictions) == len(config.model_ids):
            kept.append((doc, gold))
            for p in entry.predictions:
                predictions[p.model_id][doc.id] = p.prediction
    if not kept:
        raise CalibrationError("no document was extracted by every backend")
    if len(kept) < len(corpus):
        print(f"calibrating on {len(kept)}/{len(corpus)} documents (others had failures)", file=sys.stderr)
    return kept, predictions


def _calibrated_weights(corpus: Corpus, config: PanelConfig, ontology: SkillOntology, seed: int, workers: int):
    """Extract on the validation split and grid-search the weights."""
    _, validation, _ = split_corpus(corpus, SplitSpec(seed=seed))
    kept, predictions = _complete_predictions(validation, config, ontology, workers)
    result = grid_search_weights(kept, predictions)
    print(f"calibrated weights: {result.best_weights} (validation RS {100 * result.best_rs:.2f}%)", file=sys.stderr)
    return result.best_weights


def cmd_parse(args: argparse.Namespace) -> int:
    ontology = _ontology(args.ontology)
    corpus = _corpus(args.corpus, ontology)
    config = _panel_config(args.config, args.seed)

    if args.weights is None:
        if not config.weights:
            raise UsageError("no weights: pass --weights or put a 'weights' object in the config")
        try:
            weights = WeightVector(dict(config.weights))
        except ConfigurationError as exc:
            raise UsageError(f"config weights: {exc}") from None
    elif args.weights == "calibrate":
        weights = None
    else:
        weights = _weights_arg(args.weights)
    if weights is not None:
        try:
            check_weights(config.model_ids, weights)
        except ConfigurationError as exc:
            raise UsageError(str(exc)) from None

    try:
        delegate = build_delegate(args.consensus if args.consensus else config.consensus)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"consensus: {exc}") from None

    if weights is None:
        weights = _calibrated_weights(corpus, config, ontology, args.seed, args.parallel)

    backends = build_backends(config, corpus.golds())
    results = ensemble_parse(corpus.documents, backends, weights, ontology, delegate, args.parallel)

    out = Path(args.out)
    lines, audit, per_model = [], [], {m: [] for m in config.model_ids}
    for res in results:
        lines.append(
            _dump_line(
                {
                    "id": res.document_id,
                    "resume": res.resume.to_dict() if res.resume is not None else None,
                    "failures": [f.to_dict() for f in res.failures],
                }
            )
        )
        if args.audit:
            audit.append(_dump_line({"id": res.document_id, "votes": [v.to_dict() for v in res.votes]}))
        for p in res.predictions:
            per_model[p.model_id].append(_dump_line({"id": res.document_id, "resume": p.prediction.to_dict()}))

    try:
        _write_lines(out, lines)
        if args.audit:
            _write_lines(Path(args.audit), audit)
        if args.per_model:
            for m, model_lines in per_model.items():
                _write_lines(out.with_name(f"{out.stem}.{m}{out.suffix or '.jsonl'}"), model_lines)
    except OSError as exc:
        print(f"error: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_RUNTIME

    ok = sum(r.resume is not None for r in results)
    failed = len(results) - ok
    print(f"parsed {ok}/{len(results)} documents with weights {weights}; {failed} failed", file=sys.stderr)
    return EXIT_OK if ok else EXIT_RUNTIME


# -- evaluate ----------------------------------------------------------------

def _read_resumes(path: str, ontology: SkillOntology | None = None) -> dict[str, ParsedResume]:
    """Predictions (``resume`` key) or a corpus (``gold`` key), keyed by id.

    A null ``resume`` (every backend failed) scores as an empty resume.
    """
    out: dict[str, ParsedResume] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    with fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                doc_id = obj["id"]
                body = obj["resume"] if "resume" in obj else obj["gold"]
                out[doc_id] = resume_from_dict(body if body is not None else {})
            except (json.JSONDecodeError, KeyError, TypeError, SchemaError) as exc:
                raise UsageError(f"{path}: line {lineno}: {exc}") from None
    return out


def _pred_label(spec: str) -> tuple[str, str]:
    """``label=path`` or just ``path`` (label = file stem)."""
    if "=" in spec and not Path(spec).exists():
        label, path = spec.split("=", 1)
        return label, path
    return Path(spec).stem, spec


def cmd_evaluate(args: argparse.Namespace) -> int:
    rs_weights = None
    if args.rs_weights:
        try:
            rs_weights = RSWeights.from_dict(_load_json(args.rs_weights, "RS weights"))
        except (TypeError, ValueError, AttributeError) as exc:
            raise UsageError(f"RS weights {args.rs_weights}: {exc}") from None

    gold = _read_resumes(args.gold)
    reports: dict[str, MetricReport] = {}
    for spec in args.pred:
        label, path = _pred_label(spec)
        pred = _read_resumes(path)
        missing = sorted(set(gold) - set(pred))
        extra = sorted(set(pred) - set(gold))
        if missing or extra:
            msg = [f"ids in {path} do not match {args.gold}"]
            if missing:
                msg.append(f"missing predictions: {', '.join(missing)}")
            if extra:
                msg.append(f"no gold for: {', '.join(extra)}")
            raise UsageError("; ".join(msg))
        if label in reports:
            label = f"{label}#{len(reports)}"
        reports[label] = evaluate_corpus([(pred[i], gold[i]) for i in gold], rs_weights)

    if args.format == "json":
        if len(reports) == 1:
            print(next(iter(reports.values())).to_json())
        else:
            print(json.dumps({k: v.to_dict() for k, v in reports.items()}, indent=2))
    else:
        print(format_table(reports))
    return EXIT_OK


# -- calibrate ---------------------------------------------------------------

def _grid_arg(path: str) -> list[WeightVector]:
    obj = _load_json(path, "grid")
    if isinstance(obj, dict):
        obj = obj.get("grid")
    if not isinstance(obj, list) or not obj:
        raise UsageError(f"grid {path} must be a non-empty JSON list of weight objects")
    grid = []
    for i, item in enumerate(obj):
        if isinstance(item, dict) and isinstance(item.get("weights"), dict):
            item = item["weights"]
        if not isinstance(item, dict):
            raise UsageError(f"grid {path}: item {i} is not an object of weights")
        try:
            grid.append(WeightVector({str(k): v for k, v in item.items()}))
        except (ConfigurationError, TypeError, ValueError) as exc:
            raise UsageError(f"grid {path}: item {i}: {exc}") from None
    return grid


def cmd_calibrate(args: argparse.Namespace) -> int:
    ontology = _ontology(args.ontology)
    corpus = _corpus(args.corpus, ontology)
    config = _panel_config(args.config, args.seed)
    grid = _grid_arg(args.grid) if args.grid else default_grid(config.model_ids)
    for w in grid:
        if set(w.weights) != set(config.model_ids):
            raise UsageError(f"grid point {w} does not weight exactly the models {sorted(config.model_ids)}")

    if args.split == "validation":
        _, corpus, _ = split_corpus(corpus, SplitSpec(seed=args.seed))

    try:
        kept, predictions = _complete_predictions(corpus, config, ontology, args.parallel)
        result = grid_search_weights(kept, predictions, grid)
    except CalibrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME

    print(result.table())
    print(f"best: {result.best_weights} (RS {100 * result.best_rs:.2f}%, {len(kept)} documents)")
    if args.out:
        try:
            Path(args.out).write_text(json.dumps(result.to_dict(), indent=2) + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return EXIT_RUNTIME
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="resume-ensemble", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress and consensus fallbacks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="generate a synthetic JSONL corpus")
    p.add_argument("--n", type=int, required=True, help="number of resumes")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", required=True, help="output JSONL (metadata goes to <stem>.meta.json)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("parse", help="run the extractor panel and aggregate")
    p.add_argument("--corpus", required=True)
    p.add_argument("--config", required=True, help="backend configuration JSON")
    p.add_argument("--weights", help="'phi=3,gemma=2', a JSON file, or 'calibrate' (default: from config)")
    p.add_argument("--out", required=True, help="aggregated predictions JSONL")
    p.add_argument("--audit", help="write per-document field votes to this JSONL file")
    p.add_argument("--per-model", action="store_true", help="also write <stem>.<model_id>.jsonl per backend")
    p.add_argument("--consensus", help="consensus delegate: fallback or grounded (default: from config)")
    p.add_argument("--ontology", help="skill ontology JSON (default: bundled)")
    p.add_argument("--parallel", type=int, default=1, help="worker threads for extraction")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("evaluate", help="score predictions against gold")
    p.add_argument("--pred", action="append", required=True, help="predictions JSONL, optionally label=path; repeatable")
    p.add_argument("--gold", required=True, help="gold corpus or predictions-format JSONL")
    p.add_argument("--rs-weights", help="JSON object of RS field weights summing to 1")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("calibrate", help="grid-search voting weights by validation RS")
    p.add_argument("--corpus", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--grid", help="JSON list of weight objects (default: {1,2,3} per model)")
    p.add_argument("--out", help="write the CalibrationResult JSON here")
    p.add_argument("--split", choices=("validation", "all"), default="validation",
                   help="calibrate on the seeded validation split or the whole corpus")
    p.add_argument("--ontology", help="skill ontology JSON (default: bundled)")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_calibrate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with exit 2
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.ERROR,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if getattr(args, "parallel", 1) < 1:
        print("error: --parallel must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # anything else is a runtime failure
        logger.debug("runtime failure", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
