"""Simile marker inventories and marker matching.

A marker is one or two *parts*; each part is a contiguous run of lexemes.
Two-part markers are discontinuous (``as ... as``, ``plus ... que``).  A
lexeme is a surface form, ``a|b`` alternatives, or ``*`` restricted by a tag
class (``*@comparative`` for the ``-er ... than`` marker).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable

from .corpus import ChunkKind, Sentence
from .tags import norm_form, tagset


class Polarity(str, Enum):
    SIMILE = "SIMILE"
    DISSIMILE = "DISSIMILE"


class Template(str, Enum):
    VERB_MARKER_VEHICLE = "verb+marker+vehicle"
    TENOR_VERB_MARKER_VEHICLE = "tenor+verb+marker+vehicle"
    ADJ_MARKER_VEHICLE = "adj+marker+vehicle"
    TENOR_ADJ_MARKER_VEHICLE = "tenor+adj+marker+vehicle"
    TENOR_VERB_ADJ_MARKER_VEHICLE = "tenor+verb+adj+marker+vehicle"


ADVERBIAL = frozenset({
    Template.VERB_MARKER_VEHICLE,
    Template.TENOR_VERB_MARKER_VEHICLE,
    Template.ADJ_MARKER_VEHICLE,
})
PREPOSITIONAL = frozenset({
    Template.TENOR_ADJ_MARKER_VEHICLE,
    Template.TENOR_VERB_ADJ_MARKER_VEHICLE,
})

# degree words whose second part is the first eligible "than"/"que"
DEGREE_WORDS = frozenset({"more", "less", "plus", "moins", "aussi"})
WILDCARD = "*"


@dataclass(frozen=True)
class MarkerDef:
    id: str
    language: str
    parts: tuple[tuple[str, ...], ...]
    polarity: Polarity = Polarity.SIMILE
    templates: frozenset[Template] = ADVERBIAL
    part_pos_constraints: tuple[str | None, ...] = ()

    def __post_init__(self):
        if not self.parts or any(not p for p in self.parts):
            raise ValueError(f"{self.id}: parts must be non-empty lexeme sequences")
        if len(self.parts) > 2:
            raise ValueError(f"{self.id}: discontinuous markers have exactly 2 parts")
        if self.language not in ("EN", "FR"):
            raise ValueError(f"{self.id}: unsupported language {self.language!r}")
        if not self.part_pos_constraints:
            object.__setattr__(self, "part_pos_constraints", (None,) * len(self.parts))
        elif len(self.part_pos_constraints) != len(self.parts):
            raise ValueError(f"{self.id}: one tag constraint slot per part")

    @property
    def lexeme_count(self) -> int:
        return sum(len(p) for p in self.parts)

    @property
    def discontinuous(self) -> bool:
        return len(self.parts) == 2

    @property
    def binds_first(self) -> bool:
        """Second part is the first eligible occurrence (degree comparatives)
        rather than the nearest unconsumed one (``as ... as``)."""
        first = self.parts[0]
        return len(first) == 1 and (first[0] == WILDCARD or first[0] in DEGREE_WORDS)


@dataclass(frozen=True)
class MarkerMatch:
    definition: MarkerDef
    spans: tuple[tuple[int, int], ...]
    sentence: Sentence

    @property
    def first(self) -> int:
        return self.spans[0][0]

    @property
    def last(self) -> int:
        return self.spans[-1][1]

    def tokens(self) -> list[int]:
        return [i for s, e in self.spans for i in range(s, e + 1)]

    def key(self) -> tuple[str, tuple[tuple[int, int], ...]]:
        return self.definition.id, self.spans


def _def(id_, lang, parts, polarity=Polarity.SIMILE, templates=ADVERBIAL, pos=()):
    return MarkerDef(id_, lang, tuple(tuple(p.split()) for p in parts), polarity,
                     frozenset(templates), tuple(pos))


_EN = (
    _def("en.like", "EN", ["like"]),
    _def("en.unlike", "EN", ["unlike"], Polarity.DISSIMILE),
    _def("en.as", "EN", ["as"]),
    _def("en.as_as", "EN", ["as", "as"]),
    _def("en.more_than", "EN", ["more", "than"]),
    _def("en.less_than", "EN", ["less", "than"]),
    _def("en.er_than", "EN", ["*", "than"], pos=("comparative", None)),
)

_FR = (
    _def("fr.comme", "FR", ["comme"]),
    _def("fr.ainsi_que", "FR", ["ainsi que"]),
    _def("fr.de_meme_que", "FR", ["de même que"]),
    _def("fr.autant_que", "FR", ["autant que"]),
    _def("fr.plus_que", "FR", ["plus", "que"]),
    _def("fr.tel_que", "FR", ["tel|telle|tels|telles que"]),
    _def("fr.moins_que", "FR", ["moins", "que"]),
    _def("fr.aussi_que", "FR", ["aussi", "que"]),
    _def("fr.a_l_image_de", "FR", ["à l' image de"], templates=PREPOSITIONAL),
    _def("fr.a_l_instar_de", "FR", ["à l' instar de"], templates=PREPOSITIONAL),
    _def("fr.a_la_maniere_de", "FR", ["à la manière de"], templates=PREPOSITIONAL),
    _def("fr.a_l_egal_de", "FR", ["à l' égal de"], templates=PREPOSITIONAL),
    _def("fr.a_la_facon_de", "FR", ["à la façon de"], templates=PREPOSITIONAL),
)

_BUILTIN = {"EN": _EN, "FR": _FR}


def builtin_markers(language: str) -> list[MarkerDef]:
    try:
        return list(_BUILTIN[language.upper()])
    except KeyError:
        raise ValueError(f"unsupported language: {language!r}") from None


def load_marker_file(path: str | Path, language: str | None = None) -> list[MarkerDef]:
    """Read ``id<TAB>lang<TAB>part1;part2<TAB>polarity<TAB>templates`` lines.

    A part is space-separated lexemes; ``*@class`` puts a tag-class
    constraint on a wildcard lexeme.  Blank lines and ``#`` comments are
    skipped.  With ``language`` set, only that language's entries are kept.
    """
    defs = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise ValueError(f"{path}:{line_no}: expected 5 fields, got {len(fields)}")
            id_, lang, parts_s, polarity, templates_s = fields
            parts, constraints = [], []
            for part in parts_s.split(";"):
                lexemes, constraint = [], None
                for lex in part.split():
                    if "@" in lex:
                        lex, constraint = lex.split("@", 1)
                    lexemes.append(lex.lower())
                parts.append(tuple(lexemes))
                constraints.append(constraint)
            try:
                templates = frozenset(Template(t.strip().lower())
                                      for t in templates_s.split(",") if t.strip())
                d = MarkerDef(id_, lang.upper(), tuple(parts), Polarity(polarity.upper()),
                              templates, tuple(constraints))
            except ValueError as exc:
                raise ValueError(f"{path}:{line_no}: {exc}") from None
            if language is None or d.language == language.upper():
                defs.append(d)
    return defs


class _View:
    """Per-sentence token features shared by matching and the oracle."""

    def __init__(self, sentence: Sentence):
        ts = tagset(sentence.language)
        self.sentence = sentence
        self.forms = [norm_form(t.surface) for t in sentence.tokens]
        self.tags = [t.pos for t in sentence.tokens]
        self.verbal = [ts.is_verb(t.pos) for t in sentence.tokens]
        self.comparative = [ts.is_comparative(t.pos) for t in sentence.tokens]
        self.n = len(sentence.tokens)
        self.positions: dict[str, list[int]] = {}
        for i, f in enumerate(self.forms):
            self.positions.setdefault(f, []).append(i)

    def lexeme_at(self, i: int, lexeme: str, constraint: str | None) -> bool:
        if self.verbal[i]:
            return False
        if constraint == "comparative" and not self.comparative[i]:
            return False
        if lexeme == WILDCARD:
            return constraint is not None
        return self.forms[i] in lexeme.split("|")

    def part_at(self, start: int, part: tuple[str, ...], constraint: str | None) -> bool:
        if start + len(part) > self.n:
            return False
        return all(self.lexeme_at(start + k, lex, constraint) for k, lex in enumerate(part))

    def occurrences(self, part, constraint) -> list[int]:
        head = part[0]
        if head == WILDCARD:
            starts = range(self.n)
        else:
            starts = sorted(i for alt in head.split("|") for i in self.positions.get(alt, ()))
        return [i for i in starts if self.part_at(i, part, constraint)]

    def second_parts(self, d: MarkerDef, first: int) -> list[int]:
        """Admissible starts of the second part for a first part at ``first``."""
        # "as ... as" needs a filler between its parts; "faster than" does not
        after = first + len(d.parts[0]) + (0 if d.parts[0] == (WILDCARD,) else 1)
        eligible = []
        for j in self.occurrences(d.parts[1], d.part_pos_constraints[1]):
            if j < after:
                continue
            if d.binds_first and self._in_earlier_nc(j, first):
                continue
            eligible.append(j)
        if d.binds_first:
            return eligible[:1]
        return eligible

    def _in_earlier_nc(self, j: int, first: int) -> bool:
        return any(c.kind is ChunkKind.NC and c.start < first and j in c
                   for c in self.sentence.chunks)


def _spans(d: MarkerDef, starts: Iterable[int]) -> tuple[tuple[int, int], ...]:
    return tuple((s, s + len(p) - 1) for s, p in zip(starts, d.parts))


def match_markers(sentence: Sentence, defs: list[MarkerDef]) -> list[MarkerMatch]:
    """All non-overlapping marker occurrences in ``sentence``.

    Definitions with more lexemes win; among equals the left-most first part
    wins, then definition order.  A discontinuous marker binds its first part
    to the nearest admissible unconsumed second part.
    """
    for d in defs:
        if d.language != sentence.language:
            raise ValueError(f"marker {d.id} ({d.language}) applied to a "
                             f"{sentence.language} sentence")
    view = _View(sentence)
    consumed = [False] * view.n
    found: list[MarkerMatch] = []

    by_count: dict[int, list[tuple[int, MarkerDef]]] = {}
    for order, d in enumerate(defs):
        by_count.setdefault(d.lexeme_count, []).append((order, d))

    for count in sorted(by_count, reverse=True):
        starts = []
        for order, d in by_count[count]:
            for i in view.occurrences(d.parts[0], d.part_pos_constraints[0]):
                starts.append((i, order, d))
        starts.sort(key=lambda x: (x[0], x[1]))
        for i, _, d in starts:
            first = range(i, i + len(d.parts[0]))
            if any(consumed[k] for k in first):
                continue
            if not d.discontinuous:
                spans = _spans(d, [i])
            else:
                spans = None
                for j in view.second_parts(d, i):
                    if not any(consumed[k] for k in range(j, j + len(d.parts[1]))):
                        spans = _spans(d, [i, j])
                        break
                if spans is None:
                    continue
            for s, e in spans:
                for k in range(s, e + 1):
                    consumed[k] = True
            found.append(MarkerMatch(d, spans, sentence))
    found.sort(key=lambda m: (m.first, m.definition.id))
    return found
