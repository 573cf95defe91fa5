"""simile-miner command line: ``extract``, ``detect`` and ``report``.

Exit codes: 0 success, 1 usage or configuration error, 2 fatal data error,
3 every input file failed.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterator, Sequence

from . import frozen as fz
from .corpus import ParseIssue, read_document
from .extractor import extract_candidates
from .lexicon import Lexicon, LexiconError, load_en_lexicon, load_fr_lexicon
from .markers import MarkerDef, builtin_markers, load_marker_file, match_markers
from .report import load_frozen, render_csv, render_text, report_rows

log = logging.getLogger("simile_miner")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_ALL_FAILED = 0, 1, 2, 3
CANDIDATE_KEYS = ("doc_id", "sentence_index", "language", "marker_id", "marker_spans",
                  "flags", "text")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    language: str | None = None
    input: Path | None = None
    out: Path | None = None
    wordnet_index: Path | None = None
    wordnet_data: Path | None = None
    fr_lexicon: Path | None = None
    ref_list: str | None = None
    markers: Path | None = None
    min_count: int = 5
    min_authors: int = 2
    medium_threshold: int = 20
    prominent_threshold: int = 80
    literal_policy: fz.LiteralPolicy = fz.LiteralPolicy.EXCLUDE_SAME
    diagnostics: bool = False
    workers: int = 1
    top: int = 12
    format: str = "text"

    def __post_init__(self):
        if self.language is not None:
            self.language = self.language.upper()
            if self.language not in ("EN", "FR"):
                raise CliError(f"unsupported language {self.language!r}", EXIT_USAGE)
        if self.workers < 1:
            raise CliError("--workers must be positive", EXIT_USAGE)
        try:
            self.detect_config()
        except ValueError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None

    def detect_config(self) -> fz.DetectConfig:
        return fz.DetectConfig(self.min_count, self.min_authors, self.medium_threshold,
                               self.prominent_threshold, self.literal_policy)


# -- extract ---------------------------------------------------------------

@dataclass
class ExtractSummary:
    documents: int = 0
    sentences: int = 0
    markers: int = 0
    candidates: int = 0
    malformed: int = 0
    failed: list[str] = field(default_factory=list)

    def add(self, other: "ExtractSummary") -> None:
        self.documents += other.documents
        self.sentences += other.sentences
        self.markers += other.markers
        self.candidates += other.candidates
        self.malformed += other.malformed
        self.failed.extend(other.failed)

    def line(self) -> str:
        return (f"documents={self.documents} sentences={self.sentences} markers={self.markers} "
                f"candidates={self.candidates} malformed_lines={self.malformed} "
                f"failed_files={len(self.failed)}")


def _markers_for(config: RunConfig) -> list[MarkerDef]:
    if config.markers is not None:
        try:
            return load_marker_file(config.markers, config.language)
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot load marker file: {exc}", EXIT_USAGE) from None
    return builtin_markers(config.language)


def input_files(directory: Path) -> list[Path]:
    if not directory.is_dir():
        raise CliError(f"input directory not found: {directory}", EXIT_USAGE)
    files = sorted(p for p in directory.iterdir() if p.is_file() and not p.name.startswith("."))
    if not files:
        raise CliError("no input documents", EXIT_USAGE)
    return files


def extract_file(path: Path, language: str, markers: list[MarkerDef],
                 diagnostics: bool = False) -> tuple[ExtractSummary, Iterator[str]]:
    """Summary and a lazy stream of output lines for one document.

    The summary fills in as the stream is consumed.
    """
    summary = ExtractSummary()

    def on_issue(issue: ParseIssue) -> None:
        if issue.kind == "malformed":
            summary.malformed += 1
        log.warning("%s:%d: %s", path, issue.line_no, issue.message)

    meta, sentences = read_document(path, language, on_issue)
    if meta.language != language:
        raise ValueError(f"document language {meta.language} does not match --lang")

    def lines() -> Iterator[str]:
        summary.documents += 1
        yield json.dumps({"document": {"doc_id": meta.doc_id, "author": meta.author_id,
                                       "title": meta.title, "language": meta.language,
                                       "year": meta.year}}, ensure_ascii=False)
        for sent in sentences:
            summary.sentences += 1
            matches = match_markers(sent, markers)
            summary.markers += len(matches)
            for cand in extract_candidates(sent, matches, diagnostics):
                summary.candidates += 1
                yield json.dumps(cand.to_record(), ensure_ascii=False)

    return summary, lines()


def _extract_worker(args) -> tuple[ExtractSummary, list[str]]:
    path, language, markers, diagnostics = args
    try:
        summary, lines = extract_file(path, language, markers, diagnostics)
        out = list(lines)
    except (OSError, ValueError) as exc:
        return ExtractSummary(failed=[f"{path}: {exc}"]), []
    return summary, out


def cmd_extract(config: RunConfig, out: IO[str]) -> ExtractSummary:
    if config.language is None:
        raise CliError("--lang is required", EXIT_USAGE)
    if config.input is None:
        raise CliError("--input is required", EXIT_USAGE)
    files = input_files(config.input)
    markers = _markers_for(config)
    total = ExtractSummary()
    if config.workers == 1:
        for path in files:
            try:
                summary, lines = extract_file(path, config.language, markers, config.diagnostics)
                for line in lines:
                    out.write(line + "\n")
            except (OSError, ValueError) as exc:
                log.error("%s: %s", path, exc)
                total.failed.append(f"{path}: {exc}")
                continue
            total.add(summary)
    else:
        jobs = [(p, config.language, markers, config.diagnostics) for p in files]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for summary, lines in pool.map(_extract_worker, jobs):
                for f in summary.failed:
                    log.error("%s", f)
                for line in lines:
                    out.write(line + "\n")
                total.add(summary)
    if len(total.failed) == len(files):
        raise CliError(f"all {len(files)} input files failed", EXIT_ALL_FAILED)
    return total


# -- detect ----------------------------------------------------------------

def load_lexicons(config: RunConfig) -> dict[str, Lexicon]:
    lexicons: dict[str, Lexicon] = {}
    for p in (config.wordnet_index, config.wordnet_data, config.fr_lexicon):
        if p is not None and not Path(p).is_file():
            raise CliError(f"lexicon file not found: {p}", EXIT_DATA)
    try:
        if config.wordnet_index is not None or config.wordnet_data is not None:
            if config.wordnet_index is None or config.wordnet_data is None:
                raise CliError("--wordnet-index and --wordnet-data go together", EXIT_USAGE)
            lexicons["EN"] = load_en_lexicon(config.wordnet_index, config.wordnet_data)
        if config.fr_lexicon is not None:
            lexicons["FR"] = load_fr_lexicon(config.fr_lexicon)
    except LexiconError as exc:
        raise CliError(str(exc), EXIT_DATA) from None
    return lexicons


def load_reference(spec: str | None) -> fz.ReferenceList:
    if spec is None:
        return fz.ReferenceList()
    if spec == "builtin":
        return fz.starter_reference_list()
    if not Path(spec).is_file():
        raise CliError(f"reference list not found: {spec}", EXIT_DATA)
    try:
        return fz.load_reference_list(spec)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DATA) from None


def read_candidates(path: Path, language: str | None = None
                    ) -> Iterator[tuple[dict, str]]:
    """Yield ``(candidate record, author)`` pairs from an extract file."""
    authors: dict[str, str] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read candidates: {exc}", EXIT_DATA) from None
    with fh:
        for line_no, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                raise CliError(f"{path}:{line_no}: not a JSON record", EXIT_DATA) from None
            if not isinstance(rec, dict):
                raise CliError(f"{path}:{line_no}: not a JSON object", EXIT_DATA)
            if "document" in rec:
                doc = rec["document"]
                if not isinstance(doc, dict) or not doc.get("doc_id") or not doc.get("author"):
                    raise CliError(f"{path}:{line_no}: document record needs doc_id and author",
                                   EXIT_DATA)
                authors[doc["doc_id"]] = doc["author"]
                continue
            missing = [k for k in CANDIDATE_KEYS if k not in rec]
            if missing:
                raise CliError(f"{path}:{line_no}: candidate record lacks {', '.join(missing)}",
                               EXIT_DATA)
            if rec["doc_id"] not in authors:
                raise CliError(f"{path}:{line_no}: candidate before its document record",
                               EXIT_DATA)
            if language is not None and rec["language"] != language:
                continue
            yield rec, authors[rec["doc_id"]]


def cmd_detect(config: RunConfig, candidates: Path, out: IO[str]) -> list[fz.FrozenSimile]:
    lexicons = load_lexicons(config)
    ref = load_reference(config.ref_list)
    dconf = config.detect_config()

    def occurrences():
        for rec, author in read_candidates(candidates, config.language):
            try:
                occs = fz.normalize(rec, lexicons.get(rec["language"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise CliError(f"{candidates}: bad candidate record ({exc})", EXIT_DATA) from None
            for occ in occs:
                yield occ, author

    table = fz.aggregate_sharded(occurrences(), config.workers, dconf.max_examples)
    stats = sorted(table.values(), key=lambda s: s.couple)
    result = fz.detect(stats, ref, dconf)
    for f in result:
        out.write(json.dumps(f.to_record(), ensure_ascii=False) + "\n")
    return result


def cmd_report(frozen_file: Path, top_n: int, fmt: str = "text") -> str:
    try:
        rows = report_rows(load_frozen(frozen_file), top_n)
    except OSError as exc:
        raise CliError(f"cannot read frozen-simile file: {exc}", EXIT_DATA) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_DATA) from None
    return render_csv(rows) if fmt == "csv" else render_text(rows)


# -- argument parsing ------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _tiers(text: str) -> tuple[int, int]:
    try:
        med, prom = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected MED,PROM, e.g. 20,80") from None
    return med, prom


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="simile-miner", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ex = sub.add_parser("extract", help="extract simile candidates from vertical files")
    ex.add_argument("--lang", required=True, choices=["en", "fr", "EN", "FR"])
    ex.add_argument("--input", required=True, type=Path, help="directory of vertical files")
    ex.add_argument("--out", type=Path, help="candidate file (default: stdout)")
    ex.add_argument("--markers", type=Path, help="marker override file")
    ex.add_argument("--diagnostics", action="store_true",
                    help="also emit candidates with neither ground nor eventuality")
    ex.add_argument("--workers", type=int, default=1)

    de = sub.add_parser("detect", help="find frozen similes in a candidate file")
    de.add_argument("--input", required=True, type=Path, help="candidate file from extract")
    de.add_argument("--out", type=Path, help="frozen-simile file (default: stdout)")
    de.add_argument("--lang", choices=["en", "fr", "EN", "FR"])
    de.add_argument("--wordnet-index", type=Path)
    de.add_argument("--wordnet-data", type=Path)
    de.add_argument("--fr-lexicon", type=Path)
    de.add_argument("--ref-list", help="reference list file, or 'builtin' for the starter list")
    de.add_argument("--min-count", type=int, default=5)
    de.add_argument("--min-authors", type=int, default=2)
    de.add_argument("--tiers", type=_tiers, default=(20, 80), metavar="MED,PROM")
    de.add_argument("--literal-policy", choices=[p.value for p in fz.LiteralPolicy],
                    default=fz.LiteralPolicy.EXCLUDE_SAME.value)
    de.add_argument("--workers", type=int, default=1)

    rp = sub.add_parser("report", help="render a ranked table of frozen similes")
    rp.add_argument("--input", required=True, type=Path, help="frozen-simile file from detect")
    rp.add_argument("--out", type=Path)
    rp.add_argument("--top", type=int, default=12)
    rp.add_argument("--format", choices=["text", "csv"], default="text")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    kw = dict(language=getattr(args, "lang", None), input=args.input, out=args.out,
              workers=getattr(args, "workers", 1))
    if args.command == "extract":
        kw.update(markers=args.markers, diagnostics=args.diagnostics)
    elif args.command == "detect":
        med, prom = args.tiers
        kw.update(wordnet_index=args.wordnet_index, wordnet_data=args.wordnet_data,
                  fr_lexicon=args.fr_lexicon, ref_list=args.ref_list, min_count=args.min_count,
                  min_authors=args.min_authors, medium_threshold=med, prominent_threshold=prom,
                  literal_policy=fz.LiteralPolicy(args.literal_policy))
    else:
        kw.update(top=args.top, format=args.format)
    return RunConfig(**kw)


def _open_out(path: Path | None):
    if path is None:
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        config = config_from_args(args)
        if args.command == "extract":
            with _open_out(config.out) as out:
                summary = cmd_extract(config, out)
            print(summary.line(), file=sys.stderr)
        elif args.command == "detect":
            with _open_out(config.out) as out:
                result = cmd_detect(config, config.input, out)
            print(f"frozen_similes={len(result)}", file=sys.stderr)
        else:
            text = cmd_report(config.input, config.top, config.format)
            if config.out is not None:
                config.out.write_text(text, encoding="utf-8")
            else:
                sys.stdout.write(text)
    except CliError as exc:
        print(f"simile-miner: {exc}", file=sys.stderr)
        return exc.code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
