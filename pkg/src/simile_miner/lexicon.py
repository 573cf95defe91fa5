"""Noun semantic categories and tenor/vehicle distance verdicts.

English categories are WordNet lexicographer-file numbers read from the
standard ``index.noun`` / ``data.noun`` database files (gzip accepted).
French categories come from a two-column ``lemma<TAB>category`` table using
the animal / humain / non-animé scheme.
"""

from __future__ import annotations

import gzip
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Mapping

UNIQUE_BEGINNER = 3
FR_CATEGORIES = ("animal", "humain", "non-anime")

LEXNAMES = (
    "adj.all", "adj.pert", "adv.all", "noun.Tops", "noun.act", "noun.animal",
    "noun.artifact", "noun.attribute", "noun.body", "noun.cognition",
    "noun.communication", "noun.event", "noun.feeling", "noun.food", "noun.group",
    "noun.location", "noun.motive", "noun.object", "noun.person",
    "noun.phenomenon", "noun.plant", "noun.possession", "noun.process",
    "noun.quantity", "noun.relation", "noun.shape", "noun.state",
    "noun.substance", "noun.time", "verb.body", "verb.change", "verb.cognition",
    "verb.communication", "verb.competition", "verb.consumption", "verb.contact",
    "verb.creation", "verb.emotion", "verb.motion", "verb.perception",
    "verb.possession", "verb.social", "verb.stative", "verb.weather", "adj.ppl",
)


class LexiconError(Exception):
    pass


@dataclass(frozen=True, order=True)
class SemanticCategory:
    language: str
    code: int | str

    def __post_init__(self):
        if self.language == "EN":
            if not isinstance(self.code, int) or not 0 <= self.code < len(LEXNAMES):
                raise ValueError(f"bad WordNet lexicographer file number {self.code!r}")
        elif self.language == "FR":
            if self.code not in FR_CATEGORIES:
                raise ValueError(f"bad French category {self.code!r}")
        else:
            raise ValueError(f"unsupported language {self.language!r}")

    @property
    def name(self) -> str:
        return LEXNAMES[self.code] if self.language == "EN" else str(self.code)

    def __str__(self) -> str:
        return f"{self.code:02d} {self.name}" if self.language == "EN" else str(self.code)


class Verdict(str, Enum):
    DISTINCT = "DISTINCT"
    SAME = "SAME"
    NEEDS_REVIEW = "NEEDS_REVIEW"


class ReviewReason(str, Enum):
    MULTI_CATEGORY = "MULTI_CATEGORY"
    UNIQUE_BEGINNER = "UNIQUE_BEGINNER"
    BOTH_NON_ANIME = "BOTH_NON_ANIME"
    PRONOUN_TENOR = "PRONOUN_TENOR"
    UNKNOWN_LEMMA = "UNKNOWN_LEMMA"


@dataclass(frozen=True)
class DistanceVerdict:
    kind: Verdict
    reason: ReviewReason | None = None

    def __post_init__(self):
        if (self.reason is not None) != (self.kind is Verdict.NEEDS_REVIEW):
            raise ValueError("a review reason goes with NEEDS_REVIEW and only with it")

    @classmethod
    def review(cls, reason: ReviewReason) -> "DistanceVerdict":
        return cls(Verdict.NEEDS_REVIEW, reason)

    def __str__(self) -> str:
        return self.kind.value if self.reason is None else f"{self.kind.value}({self.reason.value})"


class Lexicon(Mapping[str, frozenset[SemanticCategory]]):
    """Read-only lemma -> category-set map.  Missing lemmas map to the empty set."""

    def __init__(self, language: str, entries: Mapping[str, frozenset[SemanticCategory]]):
        self.language = language
        self._entries = dict(entries)

    def __getitem__(self, lemma: str) -> frozenset[SemanticCategory]:
        return self._entries[lemma]

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, lemma: str) -> frozenset[SemanticCategory]:
        key = lemma.strip().lower()
        return self._entries.get(key) or self._entries.get(key.replace(" ", "_"), frozenset())

    def __eq__(self, other) -> bool:
        return (isinstance(other, Lexicon) and self.language == other.language
                and self._entries == other._entries)

    __hash__ = None


def empty_lexicon(language: str) -> Lexicon:
    return Lexicon(language, {})


def _open_text(path: Path):
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, encoding="utf-8")


def _data_lines(path: Path) -> Iterable[tuple[int, str]]:
    try:
        with _open_text(path) as fh:
            for line_no, line in enumerate(fh, 1):
                if line.startswith("  ") or not line.strip():
                    continue  # license header
                yield line_no, line
    except (OSError, UnicodeDecodeError, EOFError) as exc:
        raise LexiconError(f"{path}: {exc}") from exc


def load_en_lexicon(index_file: str | Path, data_file: str | Path) -> Lexicon:
    """Lemma -> lexicographer files of all its noun synsets.

    ``index.noun`` maps lemmas to synset offsets; the second field of each
    ``data.noun`` line is the synset's lexicographer file.
    """
    index_file, data_file = Path(index_file), Path(data_file)
    lexfile: dict[str, int] = {}
    for line_no, line in _data_lines(data_file):
        fields = line.split(" ", 3)
        if len(fields) < 3 or not fields[0].isdigit() or not fields[1].isdigit():
            raise LexiconError(f"{data_file}:{line_no}: not a WordNet data line")
        lexfile[fields[0]] = int(fields[1])
    if not lexfile:
        raise LexiconError(f"{data_file}: no synsets")

    entries: dict[str, set[SemanticCategory]] = {}
    for line_no, line in _data_lines(index_file):
        fields = line.split()
        try:
            lemma, synset_cnt = fields[0], int(fields[2])
            offsets = fields[-synset_cnt:]
        except (IndexError, ValueError):
            raise LexiconError(f"{index_file}:{line_no}: not a WordNet index line") from None
        cats = set()
        for off in offsets:
            if off not in lexfile:
                raise LexiconError(f"{index_file}:{line_no}: offset {off} missing from {data_file}")
            cats.add(SemanticCategory("EN", lexfile[off]))
        entries.setdefault(lemma, set()).update(cats)
        if "_" in lemma:
            entries.setdefault(lemma.replace("_", " "), set()).update(cats)
    return Lexicon("EN", {k: frozenset(v) for k, v in entries.items()})


def _fold_category(text: str) -> str:
    return text.strip().lower().replace("é", "e")


def load_fr_lexicon(table_file: str | Path) -> Lexicon:
    table_file = Path(table_file)
    entries: dict[str, set[SemanticCategory]] = {}
    try:
        with _open_text(table_file) as fh:
            for line_no, line in enumerate(fh, 1):
                line = line.rstrip("\r\n")
                if not line.strip() or line.startswith("#"):
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise LexiconError(f"{table_file}:{line_no}: expected lemma<TAB>category")
                cat = _fold_category(fields[1])
                if cat not in FR_CATEGORIES:
                    raise LexiconError(f"{table_file}:{line_no}: unknown category {fields[1]!r}")
                entries.setdefault(fields[0].strip().lower(), set()).add(SemanticCategory("FR", cat))
    except (OSError, UnicodeDecodeError) as exc:
        raise LexiconError(f"{table_file}: {exc}") from exc
    return Lexicon("FR", {k: frozenset(v) for k, v in entries.items()})


def assess_distance(tenor: str | None, vehicle: str, language: str, lexicon: Lexicon,
                    tenor_is_pronoun: bool = False) -> DistanceVerdict:
    """Compare tenor and vehicle categories.

    Review reasons are checked in the order pronoun tenor, unknown lemma
    (including a missing tenor), several categories, unique beginner, both
    French nouns inanimate.
    """
    if not vehicle:
        raise ValueError("vehicle lemma must be non-empty")
    if tenor_is_pronoun:
        return DistanceVerdict.review(ReviewReason.PRONOUN_TENOR)
    if not tenor:
        return DistanceVerdict.review(ReviewReason.UNKNOWN_LEMMA)
    t_cats, v_cats = lexicon.lookup(tenor), lexicon.lookup(vehicle)
    if not t_cats or not v_cats:
        return DistanceVerdict.review(ReviewReason.UNKNOWN_LEMMA)
    if len(t_cats) > 1 or len(v_cats) > 1:
        return DistanceVerdict.review(ReviewReason.MULTI_CATEGORY)
    (t,), (v,) = t_cats, v_cats
    if language == "EN" and UNIQUE_BEGINNER in (t.code, v.code):
        return DistanceVerdict.review(ReviewReason.UNIQUE_BEGINNER)
    if language == "FR" and t.code == v.code == "non-anime":
        return DistanceVerdict.review(ReviewReason.BOTH_NON_ANIME)
    return DistanceVerdict(Verdict.SAME if t == v else Verdict.DISTINCT)
