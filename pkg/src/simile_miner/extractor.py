"""Constituent extraction for simile candidates.

Given a marker occurrence, find the vehicle (head noun of the noun chunk
after the marker), adjectival grounds (the adjective run before it), the
eventuality (head of the nearest verb chunk) and, for each ground and the
eventuality, every tenor that a positional rule licenses.  Nothing is
disambiguated here: a sentence that supports both an adjectival and a verbal
reading keeps both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .corpus import Chunk, ChunkKind, Sentence
from .markers import MarkerMatch, Polarity
from .tags import TagSet, norm_form, tagset

COPULAS = {
    "EN": frozenset({"be", "seem", "look", "appear", "grow", "become", "turn"}),
    "FR": frozenset({"être", "sembler", "paraître", "devenir", "rester", "demeurer"}),
}
CLAUSE_STOPS = frozenset({":", ";"})

DISSIMILE = "DISSIMILE"
NO_VEHICLE = "NO_VEHICLE"
NO_ANCHOR = "NO_ANCHOR"


class TenorRole(str, Enum):
    MODIFIED_NOUN = "MODIFIED_NOUN"
    POSTPOSED_OBJECT = "POSTPOSED_OBJECT"
    PREPOSED_OBJECT = "PREPOSED_OBJECT"
    OBJECT_PRONOUN = "OBJECT_PRONOUN"
    SUBJECT_PRONOUN = "SUBJECT_PRONOUN"
    SUBJECT_NOUN = "SUBJECT_NOUN"

    @property
    def is_pronoun(self) -> bool:
        return self in (TenorRole.OBJECT_PRONOUN, TenorRole.SUBJECT_PRONOUN)


@dataclass(frozen=True)
class Constituent:
    index: int
    lemma: str


@dataclass(frozen=True)
class Tenor:
    index: int
    lemma: str
    role: TenorRole


@dataclass(frozen=True)
class Ground:
    index: int
    lemma: str
    tenor: Tenor | None = None


@dataclass(frozen=True)
class Eventuality:
    index: int
    lemma: str
    tenors: tuple[Tenor, ...] = ()

    @property
    def tenor(self) -> Tenor | None:
        """The first tenor in rule order; the one used for distance checks."""
        return self.tenors[0] if self.tenors else None


@dataclass(frozen=True)
class SimileCandidate:
    marker: MarkerMatch
    vehicle: Constituent | None
    grounds: tuple[Ground, ...] = ()
    eventuality: Eventuality | None = None
    flags: frozenset[str] = field(default_factory=frozenset)

    @property
    def sentence(self) -> Sentence:
        return self.marker.sentence

    def to_record(self) -> dict:
        s = self.sentence
        rec: dict = {
            "doc_id": s.meta.doc_id,
            "sentence_index": s.sentence_index,
            "language": s.language,
            "marker_id": self.marker.definition.id,
            "marker_spans": [list(span) for span in self.marker.spans],
        }
        if self.vehicle is not None:
            rec["vehicle"] = {"index": self.vehicle.index, "lemma": self.vehicle.lemma}
        if self.grounds:
            rec["grounds"] = [_with_tenor({"index": g.index, "lemma": g.lemma}, g.tenor)
                              for g in self.grounds]
        if self.eventuality is not None:
            ev = self.eventuality
            rec["eventuality"] = _with_tenor({"index": ev.index, "lemma": ev.lemma}, ev.tenor)
        rec["flags"] = sorted(self.flags)
        rec["text"] = s.text
        return rec


def _with_tenor(d: dict, tenor: Tenor | None) -> dict:
    if tenor is not None:
        d["tenor"] = {"index": tenor.index, "lemma": tenor.lemma, "role": tenor.role.value}
    return d


class _Analysis:
    """Positional helpers over one sentence."""

    def __init__(self, sentence: Sentence):
        self.s = sentence
        self.ts: TagSet = tagset(sentence.language)
        self.toks = sentence.tokens
        self.n = len(sentence.tokens)
        self.copulas = COPULAS[sentence.language]

    def form(self, i: int) -> str:
        return norm_form(self.toks[i].surface) if 0 <= i < self.n else ""

    def tag(self, i: int) -> str:
        return self.toks[i].pos

    def vc(self, i: int) -> Chunk | None:
        return self.s.chunk_at(i, ChunkKind.VC)

    def nc(self, i: int) -> Chunk | None:
        return self.s.chunk_at(i, ChunkKind.NC)

    def is_verb(self, i: int) -> bool:
        return self.ts.is_verb(self.tag(i))

    def is_punct(self, i: int) -> bool:
        return self.ts.is_punct(self.tag(i), self.toks[i].surface)

    def is_ground_word(self, i: int) -> bool:
        t = self.tag(i)
        if self.ts.is_adjective(t):
            return True
        return self.ts.is_participle(t) and self.vc(i) is None

    def head(self, chunk: Chunk | None, common_only: bool = False) -> int | None:
        if chunk is None:
            return None
        for i in range(chunk.end, chunk.start - 1, -1):
            t = self.tag(i)
            if self.ts.is_common_noun(t) or (not common_only and self.ts.is_proper_noun(t)):
                return i
        return None

    def verb_head(self, vc: Chunk) -> int | None:
        for i in range(vc.end, vc.start - 1, -1):
            if self.is_verb(i):
                return i
        return None

    def first_verb(self, vc: Chunk) -> int | None:
        for i in range(vc.start, vc.end + 1):
            if self.is_verb(i):
                return i
        return None

    def is_finite_vc(self, vc: Chunk | None) -> bool:
        return vc is not None and any(self.ts.is_finite(self.tag(i))
                                      for i in range(vc.start, vc.end + 1))

    def behind_preposition(self, nc: Chunk) -> bool:
        if self.s.enclosing(nc, ChunkKind.PC) is not None:
            return True
        j = nc.start - 1
        return j >= 0 and self.ts.is_preposition(self.tag(j), self.toks[j].surface)

    def is_separator(self, i: int) -> bool:
        t, f = self.tag(i), self.toks[i].surface
        return (self.is_punct(i) or self.ts.is_relative(t) or self.ts.is_subject_pronoun(t, f)
                or self.ts.is_coord(t, f) or self.ts.is_subord(t, f))

    def is_subject_pronoun(self, i: int) -> bool:
        if not 0 <= i < self.n:
            return False
        t, f = self.tag(i), self.toks[i].surface
        if self.ts.is_subject_pronoun(t, f):
            return True
        if self.ts.is_demonstrative(t, f):
            # a determiner heading its own chunk, not "this" in "this girl"
            nc = self.nc(i)
            return nc is None or nc.end == i
        return False

    def nearest_vc_left(self, k: int) -> Chunk | None:
        while k >= 0:
            if self.form(k) in CLAUSE_STOPS:
                return None
            vc = self.vc(k)
            if vc is not None and self.verb_head(vc) is not None:
                return vc
            k -= 1
        return None

    def nearest_finite_vc_left(self, k: int) -> Chunk | None:
        while k >= 0:
            vc = self.nearest_vc_left(k)
            if vc is None or self.is_finite_vc(vc):
                return vc
            k = vc.start - 1
        return None

    def followed_by_finite(self, nc: Chunk) -> bool:
        j = nc.end + 1
        if self.form(j) == ",":
            m = j + 1
            while m < self.n and self.form(m) != ",":
                if self.is_verb(m):
                    return False
                m += 1
            if m >= self.n:
                return False
            j = m + 1
        return j < self.n and self.is_finite_vc(self.s.chunk_starting(j, ChunkKind.VC))


def _vehicle(a: _Analysis, match: MarkerMatch) -> tuple[Constituent | None, Chunk | None]:
    j = match.last + 1
    nc = None
    if a.form(j) == ",":
        app = a.s.chunk_starting(j + 1, ChunkKind.NC)
        if app is not None and a.form(app.end + 1) == ",":
            nc = a.s.chunk_starting(app.end + 2, ChunkKind.NC)
            if a.head(nc, common_only=True) is None:
                nc = None
    if nc is None:
        nc = a.s.chunk_starting(j, ChunkKind.NC)
    h = a.head(nc)
    if nc is None or h is None or not a.ts.is_common_noun(a.tag(h)):
        return None, None
    # a finite verb right after the noun chunk makes it a clause subject
    k = nc.end + 1
    while k < a.n:
        if a.ts.is_finite(a.tag(k)):
            return None, None
        if a.is_separator(k):
            break
        pc = a.s.chunk_starting(k, ChunkKind.PC)
        if pc is not None:
            k = pc.end + 1
            continue
        if a.ts.is_adverb(a.tag(k)):
            k += 1
            continue
        break
    return Constituent(h, a.toks[h].lemma), nc


def find_vehicle(match: MarkerMatch) -> Constituent | None:
    return _vehicle(_Analysis(match.sentence), match)[0]


def _scan_grounds(a: _Analysis, match: MarkerMatch) -> list[int]:
    if match.definition.discontinuous:
        k = match.spans[1][0] - 1
        boundary = match.spans[0][1]
    else:
        k = match.first - 1
        boundary = -1
    found: list[int] = []
    pending = False
    broke = False
    while k > boundary:
        t, f = a.tag(k), a.toks[k].surface
        if a.is_ground_word(k):
            found.append(k)
            pending = False
        elif found and not pending and (a.form(k) == "," or a.ts.is_coord(t, f)):
            pending = True
        elif a.ts.is_adverb(t):
            pass
        else:
            broke = True
            break
        k -= 1
    if not broke and match.definition.discontinuous:
        s, e = match.spans[0]
        if s == e and a.ts.is_adjective(a.tag(s)):
            found.append(s)
    return sorted(found)


def find_grounds(match: MarkerMatch) -> list[Constituent]:
    a = _Analysis(match.sentence)
    return [Constituent(i, a.toks[i].lemma) for i in _scan_grounds(a, match)]


def _left_edge(match: MarkerMatch, grounds: list[int]) -> int:
    return min([match.first, *grounds])


def _eventuality_vc(a: _Analysis, match: MarkerMatch, grounds: list[int],
                    vehicle_nc: Chunk | None) -> Chunk | None:
    left = _left_edge(match, grounds)
    if a.form(left - 1) == "," and vehicle_nc is not None and a.form(vehicle_nc.end + 1) == ",":
        vc = a.s.chunk_starting(vehicle_nc.end + 2, ChunkKind.VC)
        if vc is not None and a.verb_head(vc) is not None:
            return vc
    return a.nearest_vc_left(left - 1)


def _ev_from_vc(a: _Analysis, vc: Chunk | None, grounds: list[int]) -> Constituent | None:
    if vc is None:
        return None
    h = a.verb_head(vc)
    lemma = a.toks[h].lemma
    if grounds and norm_form(lemma) in a.copulas:
        return None
    return Constituent(h, lemma)


def find_eventuality(match: MarkerMatch, grounds: list[Constituent] | None = None
                     ) -> Constituent | None:
    a = _Analysis(match.sentence)
    idx = [g.index for g in grounds] if grounds is not None else _scan_grounds(a, match)
    vehicle_nc = _vehicle(a, match)[1]
    return _ev_from_vc(a, _eventuality_vc(a, match, idx, vehicle_nc), idx)


def _subject(a: _Analysis, vc: Chunk | None, exclude: set[int]) -> Tenor | None:
    if vc is None:
        return None
    f = vc if a.is_finite_vc(vc) else a.nearest_finite_vc_left(vc.start - 1)
    if f is None:
        return None
    for i in (f.start - 1, f.end + 1):
        if i not in exclude and a.is_subject_pronoun(i):
            return Tenor(i, a.toks[i].lemma, TenorRole.SUBJECT_PRONOUN)
    k = f.start - 1
    while k >= 0:
        if a.form(k) in CLAUSE_STOPS:
            return None
        nc = a.s.chunk_ending(k, ChunkKind.NC)
        if nc is not None:
            h = a.head(nc)
            if (h is not None and h not in exclude and not a.behind_preposition(nc)
                    and a.followed_by_finite(nc)):
                return Tenor(h, a.toks[h].lemma, TenorRole.SUBJECT_NOUN)
        k -= 1
    return None


def _ground_tenor(a: _Analysis, match: MarkerMatch, g: int, run: list[int],
                  vehicle_nc: Chunk | None) -> Tenor | None:
    exclude = set(range(vehicle_nc.start, vehicle_nc.end + 1)) if vehicle_nc else set()
    nc = a.nc(g)
    if nc is not None:
        h = a.head(nc, common_only=True)
        if h is not None and h != g:
            return Tenor(h, a.toks[h].lemma, TenorRole.MODIFIED_NOUN)
    left = _left_edge(match, run) - 1
    k = left - 1 if a.form(left) == "," else left
    if k >= 0:
        h = a.head(a.s.chunk_ending(k, ChunkKind.NC), common_only=True)
        if h is not None:
            return Tenor(h, a.toks[h].lemma, TenorRole.MODIFIED_NOUN)
    if all(a.is_punct(i) for i in range(0, left + 1)) and vehicle_nc is not None:
        if a.form(vehicle_nc.end + 1) == ",":
            h = a.head(a.s.chunk_starting(vehicle_nc.end + 2, ChunkKind.NC), common_only=True)
            if h is not None:
                return Tenor(h, a.toks[h].lemma, TenorRole.MODIFIED_NOUN)
    return _subject(a, a.nearest_vc_left(left), exclude)


def _eventuality_tenors(a: _Analysis, match: MarkerMatch, vc: Chunk,
                        vehicle_nc: Chunk | None) -> tuple[Tenor, ...]:
    marker_tokens = set(match.tokens())
    vehicle_tokens = set(range(vehicle_nc.start, vehicle_nc.end + 1)) if vehicle_nc else set()
    out: list[Tenor] = []

    # postposed direct object
    k = vc.end + 1
    while k < a.n and k not in marker_tokens:
        pc = a.s.chunk_starting(k, ChunkKind.PC)
        if pc is not None:
            if marker_tokens & set(range(pc.start, pc.end + 1)):
                break
            k = pc.end + 1
            continue
        if a.ts.is_adverb(a.tag(k)):
            k += 1
            continue
        nc = a.s.chunk_starting(k, ChunkKind.NC)
        if nc is not None and k not in vehicle_tokens:
            h = a.head(nc, common_only=True)
            if h is not None:
                out.append(Tenor(h, a.toks[h].lemma, TenorRole.POSTPOSED_OBJECT))
        break

    # preposed direct object: NOUN that/which/que SUBJECT VERB
    j = vc.start - 1
    unit_start = None
    if a.is_subject_pronoun(j):
        unit_start = j
    elif j >= 0:
        subj_nc = a.s.chunk_ending(j, ChunkKind.NC)
        if a.head(subj_nc) is not None:
            unit_start = subj_nc.start
    if unit_start is not None and a.form(unit_start - 1) in a.ts.relativizers:
        h = a.head(a.s.chunk_ending(unit_start - 2, ChunkKind.NC), common_only=True)
        if h is not None:
            out.append(Tenor(h, a.toks[h].lemma, TenorRole.PREPOSED_OBJECT))

    # objective personal pronoun right before the verb
    fv = a.first_verb(vc)
    p = fv - 1 if fv is not None else -1
    if p >= 0 and a.ts.is_object_pronoun(a.tag(p), a.toks[p].surface):
        ok = True
        if a.ts.is_subject_pronoun(a.tag(p), a.toks[p].surface):
            # "vous", "it": object only when a subject precedes it
            ok = a.is_subject_pronoun(p - 1) or a.head(a.s.chunk_ending(p - 1, ChunkKind.NC)) is not None
        if ok:
            out.append(Tenor(p, a.toks[p].lemma, TenorRole.OBJECT_PRONOUN))

    taken = {t.index for t in out} | vehicle_tokens
    subj = _subject(a, vc, taken)
    if subj is not None:
        out.append(subj)
    return tuple(out)


def resolve_tenors(match: MarkerMatch, grounds: list[Constituent],
                   eventuality: Constituent | None) -> tuple[tuple[Ground, ...], Eventuality | None]:
    """Attach tenors to already-computed grounds and eventuality."""
    a = _Analysis(match.sentence)
    vehicle_nc = _vehicle(a, match)[1]
    run = [g.index for g in grounds]
    gs = tuple(Ground(g.index, g.lemma, _ground_tenor(a, match, g.index, run, vehicle_nc))
               for g in grounds)
    ev = None
    if eventuality is not None:
        vc = a.vc(eventuality.index)
        tenors = _eventuality_tenors(a, match, vc, vehicle_nc) if vc is not None else ()
        ev = Eventuality(eventuality.index, eventuality.lemma, tenors)
    return gs, ev


def analyse(match: MarkerMatch) -> SimileCandidate:
    """Build the full candidate for one marker occurrence."""
    a = _Analysis(match.sentence)
    vehicle, vehicle_nc = _vehicle(a, match)
    run = _scan_grounds(a, match)
    grounds = [Constituent(i, a.toks[i].lemma) for i in run]
    ev = _ev_from_vc(a, _eventuality_vc(a, match, run, vehicle_nc), run)
    gs, eventuality = resolve_tenors(match, grounds, ev)
    flags = set()
    if match.definition.polarity is Polarity.DISSIMILE:
        flags.add(DISSIMILE)
    if vehicle is None:
        flags.add(NO_VEHICLE)
    if not gs and eventuality is None:
        flags.add(NO_ANCHOR)
    return SimileCandidate(match, vehicle, gs, eventuality, frozenset(flags))


def extract_candidates(sentence: Sentence, matches: list[MarkerMatch],
                       diagnostics: bool = False) -> list[SimileCandidate]:
    """One candidate per marker match, in marker order.

    Matches with neither a ground nor an eventuality are kept only in
    diagnostics mode (flagged ``NO_ANCHOR``).
    """
    out = []
    for m in sorted(matches, key=lambda m: m.spans):
        if m.sentence is not sentence and m.sentence != sentence:
            raise ValueError("marker match belongs to another sentence")
        c = analyse(m)
        if NO_ANCHOR in c.flags and not diagnostics:
            continue
        out.append(c)
    return out
