"""Frozen-simile detection over ground/eventuality + vehicle couples.

Candidates are reduced to couples such as ``(EN, ADJ, pale, death)``.
Per-couple statistics form a commutative monoid (:func:`merge_stats`), so
shards of a corpus can be aggregated independently and combined in any
order.  A couple is frozen if it is on a reference list or recurs often
enough across different authors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .extractor import DISSIMILE, SimileCandidate
from .lexicon import DistanceVerdict, Lexicon, ReviewReason, Verdict, assess_distance, empty_lexicon

MAX_EXAMPLES = 5
SENTINELS = frozenset({"<unknown>", "@card@", "@ord@"})


class Role(str, Enum):
    ADJ = "ADJ"
    VERB = "VERB"


class Evidence(str, Enum):
    REFERENCE_LIST = "REFERENCE_LIST"
    FREQUENCY = "FREQUENCY"
    BOTH = "BOTH"


class Tier(str, Enum):
    RARE = "RARE"
    MEDIUM = "MEDIUM"
    PROMINENT = "PROMINENT"


class LiteralPolicy(str, Enum):
    EXCLUDE_SAME = "exclude-same"
    KEEP_ALL = "keep-all"


def normalize_lemma(lemma: str) -> str:
    # TreeTagger writes ambiguous lemmas as "a|b"
    return lemma.split("|")[0].strip().lower()


@dataclass(frozen=True, order=True)
class Couple:
    language: str
    role: Role
    left_lemma: str
    vehicle_lemma: str

    def __post_init__(self):
        for lemma in (self.left_lemma, self.vehicle_lemma):
            if not lemma or lemma != lemma.lower() or lemma in SENTINELS:
                raise ValueError(f"invalid couple lemma {lemma!r}")
        if self.language not in ("EN", "FR"):
            raise ValueError(f"unsupported language {self.language!r}")

    @classmethod
    def of(cls, language: str, role: Role | str, left: str, vehicle: str) -> "Couple":
        return cls(language.upper(), Role(role), normalize_lemma(left), normalize_lemma(vehicle))

    @property
    def display(self) -> str:
        return f"{self.left_lemma} + marker + {self.vehicle_lemma}"


@dataclass(frozen=True)
class Occurrence:
    couple: Couple
    verdict: DistanceVerdict
    doc_id: str
    sentence_index: int


@dataclass(frozen=True)
class CoupleStats:
    couple: Couple
    count: int = 0
    authors: frozenset[str] = frozenset()
    verdicts: Mapping[str, int] = field(default_factory=dict)
    examples: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.count < 0 or (self.count > 0 and not self.authors):
            raise ValueError("non-empty stats need a positive count and at least one author")

    @classmethod
    def identity(cls, couple: Couple) -> "CoupleStats":
        return cls(couple)

    @classmethod
    def single(cls, occ: Occurrence, author: str) -> "CoupleStats":
        return cls(occ.couple, 1, frozenset({author}), {occ.verdict.kind.value: 1},
                   ((occ.doc_id, occ.sentence_index),))

    def verdict_count(self, kind: Verdict) -> int:
        return self.verdicts.get(kind.value, 0)

    def to_record(self) -> dict:
        return {
            "language": self.couple.language,
            "role": self.couple.role.value,
            "left_lemma": self.couple.left_lemma,
            "vehicle_lemma": self.couple.vehicle_lemma,
            "count": self.count,
            "authors": sorted(self.authors),
            "verdicts": {k: self.verdicts[k] for k in sorted(self.verdicts)},
            "examples": [list(e) for e in self.examples],
        }


def merge_stats(a: CoupleStats, b: CoupleStats, max_examples: int = MAX_EXAMPLES) -> CoupleStats:
    """Monoid sum of two statistics records for the same couple.

    Examples keep the ``max_examples`` smallest references so the result does
    not depend on merge order.
    """
    if a.couple != b.couple:
        raise ValueError(f"cannot merge stats of {a.couple} and {b.couple}")
    verdicts = Counter(a.verdicts)
    verdicts.update(b.verdicts)
    return CoupleStats(
        a.couple,
        a.count + b.count,
        a.authors | b.authors,
        {k: v for k, v in verdicts.items() if v},
        tuple(sorted(a.examples + b.examples)[:max_examples]),
    )


def merge_tables(a: Mapping[Couple, CoupleStats], b: Mapping[Couple, CoupleStats],
                 max_examples: int = MAX_EXAMPLES) -> dict[Couple, CoupleStats]:
    out = dict(a)
    for couple, stats in b.items():
        out[couple] = merge_stats(out[couple], stats, max_examples) if couple in out else stats
    return out


def _tenor_of(node: Mapping | None) -> tuple[str | None, bool]:
    if not node or "tenor" not in node:
        return None, False
    t = node["tenor"]
    return t["lemma"], t["role"] in ("OBJECT_PRONOUN", "SUBJECT_PRONOUN")


def normalize(candidate: SimileCandidate | Mapping, lexicon: Lexicon | None = None
              ) -> list[Occurrence]:
    """Couples of one candidate, each with the distance verdict of its tenor.

    Accepts a :class:`SimileCandidate` or its record form.  Candidates
    without a vehicle and dissimilative candidates yield nothing.
    """
    rec = candidate.to_record() if isinstance(candidate, SimileCandidate) else candidate
    if "vehicle" not in rec or DISSIMILE in rec.get("flags", ()):
        return []
    lang = rec["language"]
    lexicon = lexicon if lexicon is not None else empty_lexicon(lang)
    vehicle = normalize_lemma(rec["vehicle"]["lemma"])
    out = []
    nodes = [(Role.ADJ, g) for g in rec.get("grounds", ())]
    if "eventuality" in rec:
        nodes.append((Role.VERB, rec["eventuality"]))
    for role, node in nodes:
        tenor, is_pronoun = _tenor_of(node)
        verdict = assess_distance(tenor, vehicle, lang, lexicon, tenor_is_pronoun=is_pronoun)
        out.append(Occurrence(Couple.of(lang, role, node["lemma"], vehicle), verdict,
                              rec["doc_id"], rec["sentence_index"]))
    return out


def aggregate(occurrences: Iterable[tuple[Occurrence, str]],
              max_examples: int = MAX_EXAMPLES) -> dict[Couple, CoupleStats]:
    """Fold ``(occurrence, author)`` pairs into per-couple statistics."""
    table: dict[Couple, CoupleStats] = {}
    for occ, author in occurrences:
        single = CoupleStats.single(occ, author)
        prev = table.get(occ.couple)
        table[occ.couple] = single if prev is None else merge_stats(prev, single, max_examples)
    return table


def aggregate_sharded(occurrences: Iterable[tuple[Occurrence, str]], shards: int,
                      max_examples: int = MAX_EXAMPLES) -> dict[Couple, CoupleStats]:
    """Round-robin the stream over ``shards`` partial tables, then merge them."""
    buckets: list[list[tuple[Occurrence, str]]] = [[] for _ in range(max(1, shards))]
    for i, item in enumerate(occurrences):
        buckets[i % len(buckets)].append(item)
    tables = [aggregate(b, max_examples) for b in buckets]
    return reduce(lambda x, y: merge_tables(x, y, max_examples), tables, {})


@dataclass(frozen=True)
class ReferenceList:
    entries: Mapping[Couple, str] = field(default_factory=dict)

    def __contains__(self, couple: Couple) -> bool:
        return couple in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def source(self, couple: Couple) -> str | None:
        return self.entries.get(couple)

    def with_entry(self, couple: Couple, source: str = "manual") -> "ReferenceList":
        return ReferenceList({**self.entries, couple: source})


def load_reference_list(path: str | Path) -> ReferenceList:
    """Read ``lang<TAB>role<TAB>left<TAB>vehicle<TAB>source`` lines."""
    entries: dict[Couple, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise ValueError(f"{path}:{line_no}: expected 5 tab-separated fields")
            lang, role, left, vehicle, source = fields
            try:
                couple = Couple.of(lang, role.upper(), left, vehicle)
            except ValueError as exc:
                raise ValueError(f"{path}:{line_no}: {exc}") from None
            entries.setdefault(couple, source)
    return ReferenceList(entries)


def starter_reference_list() -> ReferenceList:
    with resources.as_file(resources.files(__package__) / "data" / "reference_starter.tsv") as p:
        return load_reference_list(p)


@dataclass(frozen=True)
class DetectConfig:
    min_count: int = 5
    min_authors: int = 2
    medium_threshold: int = 20
    prominent_threshold: int = 80
    literal_policy: LiteralPolicy = LiteralPolicy.EXCLUDE_SAME
    max_examples: int = MAX_EXAMPLES

    def __post_init__(self):
        if min(self.min_count, self.min_authors, self.medium_threshold,
               self.prominent_threshold, self.max_examples) < 1:
            raise ValueError("thresholds must be positive")
        if self.medium_threshold >= self.prominent_threshold:
            raise ValueError("medium threshold must be below the prominent threshold")


def assign_tier(count: int, medium_threshold: int = 20, prominent_threshold: int = 80) -> Tier:
    if count < 1:
        raise ValueError("tier needs a count of at least 1")
    if count < medium_threshold:
        return Tier.RARE
    if count < prominent_threshold:
        return Tier.MEDIUM
    return Tier.PROMINENT


@dataclass(frozen=True)
class FrozenSimile:
    stats: CoupleStats
    evidence: Evidence
    tier: Tier
    review_fraction: float

    @property
    def couple(self) -> Couple:
        return self.stats.couple

    @property
    def count(self) -> int:
        return self.stats.count

    def to_record(self) -> dict:
        rec = self.stats.to_record()
        rec.update(tier=self.tier.value, evidence=self.evidence.value,
                   review_fraction=round(self.review_fraction, 6))
        return rec

    @classmethod
    def from_record(cls, rec: Mapping) -> "FrozenSimile":
        couple = Couple.of(rec["language"], rec["role"], rec["left_lemma"], rec["vehicle_lemma"])
        stats = CoupleStats(couple, int(rec["count"]), frozenset(rec["authors"]),
                            dict(rec.get("verdicts", {})),
                            tuple((d, int(i)) for d, i in rec.get("examples", ())))
        return cls(stats, Evidence(rec["evidence"]), Tier(rec["tier"]),
                   float(rec.get("review_fraction", 0.0)))


def passes_frequency(stats: CoupleStats, config: DetectConfig) -> bool:
    if stats.count < config.min_count or len(stats.authors) < config.min_authors:
        return False
    if config.literal_policy is LiteralPolicy.EXCLUDE_SAME:
        return stats.verdict_count(Verdict.SAME) < stats.count
    return True


def detect(stats: Iterable[CoupleStats], ref: ReferenceList | None = None,
           config: DetectConfig | None = None) -> list[FrozenSimile]:
    """Frozen similes, most frequent first (ties by couple text)."""
    config = config or DetectConfig()
    ref = ref or ReferenceList()
    out = []
    for s in stats:
        if s.count < 1:
            continue
        listed = s.couple in ref
        frequent = passes_frequency(s, config)
        if not (listed or frequent):
            continue
        evidence = (Evidence.BOTH if listed and frequent
                    else Evidence.REFERENCE_LIST if listed else Evidence.FREQUENCY)
        out.append(FrozenSimile(
            s, evidence,
            assign_tier(s.count, config.medium_threshold, config.prominent_threshold),
            s.verdict_count(Verdict.NEEDS_REVIEW) / s.count,
        ))
    out.sort(key=lambda f: (-f.count, f.couple.display, f.couple))
    return out


@dataclass(frozen=True)
class VariantGroup:
    language: str
    role: Role
    vehicle_lemma: str
    head: FrozenSimile
    members: tuple[FrozenSimile, ...]


def group_variants(frozen: Iterable[FrozenSimile]) -> list[VariantGroup]:
    """Group couples sharing language, role and vehicle; the most frequent
    member (ties: alphabetically first ground/eventuality) heads the group."""
    groups: dict[tuple[str, Role, str], list[FrozenSimile]] = {}
    for f in frozen:
        c = f.couple
        groups.setdefault((c.language, c.role, c.vehicle_lemma), []).append(f)
    out = []
    for (lang, role, vehicle), members in sorted(groups.items()):
        members.sort(key=lambda f: (-f.count, f.couple.left_lemma))
        out.append(VariantGroup(lang, role, vehicle, members[0], tuple(members)))
    return out


__all__ = [
    "Couple", "CoupleStats", "DetectConfig", "Evidence", "FrozenSimile", "LiteralPolicy",
    "Occurrence", "ReferenceList", "ReviewReason", "Role", "Tier", "VariantGroup",
    "aggregate", "aggregate_sharded", "assign_tier", "detect", "group_variants",
    "load_reference_list", "merge_stats", "merge_tables", "normalize", "starter_reference_list",
]
