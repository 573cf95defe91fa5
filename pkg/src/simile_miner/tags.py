"""Word-class tests over TreeTagger tagsets.

The rule modules never look at raw tag strings; they ask a :class:`TagSet`
whether a token is a common noun, a finite verb, a relative pronoun and so
on.  English uses the TreeTagger/Penn inventory (``NN``, ``VVZ``, ``PP``...),
French the TreeTagger French inventory (``NOM``, ``VER:pres``, ``PRO:PER``...).
"""

from __future__ import annotations

from dataclasses import dataclass, field

ELISIONS = {"qu'": "que", "d'": "de"}


def norm_form(text: str) -> str:
    """Lowercase a surface form and normalize typographic apostrophes and elisions."""
    form = text.lower().replace("’", "'")
    return ELISIONS.get(form, form)


@dataclass(frozen=True)
class TagSet:
    language: str
    common_nouns: frozenset[str]
    proper_nouns: frozenset[str]
    adjectives: frozenset[str]
    participles: frozenset[str]
    comparatives: frozenset[str]
    adverbs: frozenset[str]
    finite_verbs: frozenset[str]
    verb_prefixes: tuple[str, ...]
    extra_verbs: frozenset[str]
    prepositions: frozenset[str]
    relative_tags: frozenset[str]
    personal_tags: frozenset[str]
    demonstrative_tags: frozenset[str]
    conj_tags: frozenset[str]
    punct_tags: frozenset[str]
    coord_lemmas: frozenset[str]
    subord_lemmas: frozenset[str]
    subject_pronouns: frozenset[str]
    object_pronouns: frozenset[str]
    demonstratives: frozenset[str] = field(default_factory=frozenset)
    relativizers: frozenset[str] = field(default_factory=frozenset)

    def is_common_noun(self, tag: str) -> bool:
        return tag in self.common_nouns

    def is_proper_noun(self, tag: str) -> bool:
        return tag in self.proper_nouns

    def is_noun(self, tag: str) -> bool:
        return tag in self.common_nouns or tag in self.proper_nouns

    def is_adjective(self, tag: str) -> bool:
        return tag in self.adjectives

    def is_participle(self, tag: str) -> bool:
        return tag in self.participles

    def is_comparative(self, tag: str) -> bool:
        return tag in self.comparatives

    def is_adverb(self, tag: str) -> bool:
        return tag in self.adverbs

    def is_verb(self, tag: str) -> bool:
        return tag.startswith(self.verb_prefixes) or tag in self.extra_verbs

    def is_finite(self, tag: str) -> bool:
        return tag in self.finite_verbs

    def is_punct(self, tag: str, form: str) -> bool:
        return tag in self.punct_tags or (bool(form) and not any(c.isalnum() for c in form))

    def is_preposition(self, tag: str, form: str) -> bool:
        return tag in self.prepositions and norm_form(form) not in self.subord_lemmas

    def is_relative(self, tag: str) -> bool:
        return tag in self.relative_tags

    def is_coord(self, tag: str, form: str) -> bool:
        return tag in self.conj_tags and norm_form(form) in self.coord_lemmas

    def is_subord(self, tag: str, form: str) -> bool:
        f = norm_form(form)
        if tag in self.conj_tags:
            return f not in self.coord_lemmas
        return f in self.subord_lemmas and (tag in self.prepositions or tag in self.relative_tags
                                            or tag in self.adverbs)

    def is_personal(self, tag: str) -> bool:
        return tag in self.personal_tags

    def is_subject_pronoun(self, tag: str, form: str) -> bool:
        return tag in self.personal_tags and norm_form(form) in self.subject_pronouns

    def is_object_pronoun(self, tag: str, form: str) -> bool:
        return tag in self.personal_tags and norm_form(form) in self.object_pronouns

    def is_demonstrative(self, tag: str, form: str) -> bool:
        if tag in self.demonstrative_tags:
            return not self.demonstratives or norm_form(form) in self.demonstratives
        return False


EN = TagSet(
    language="EN",
    common_nouns=frozenset({"NN", "NNS"}),
    proper_nouns=frozenset({"NP", "NPS", "NNP", "NNPS"}),
    adjectives=frozenset({"JJ", "JJR", "JJS"}),
    participles=frozenset({"VVN", "VVG"}),
    comparatives=frozenset({"JJR", "RBR"}),
    adverbs=frozenset({"RB", "RBR", "RBS", "WRB"}),
    finite_verbs=frozenset({
        "VBD", "VBZ", "VBP", "VDD", "VDZ", "VDP", "VHD", "VHZ", "VHP",
        "VVD", "VVZ", "VVP", "MD",
    }),
    verb_prefixes=("VB", "VD", "VH", "VV"),
    extra_verbs=frozenset({"MD"}),
    prepositions=frozenset({"IN", "IN/that"}),
    relative_tags=frozenset({"WDT", "WP", "WP$"}),
    personal_tags=frozenset({"PP", "PRP"}),
    demonstrative_tags=frozenset({"DT"}),
    conj_tags=frozenset({"CC"}),
    punct_tags=frozenset({"SENT", ",", ":", "(", ")", "``", "''", "\"", "#", "$"}),
    coord_lemmas=frozenset({"and", "or", "but", "nor", "yet"}),
    subord_lemmas=frozenset({
        "because", "although", "though", "while", "whilst", "when", "whenever",
        "if", "unless", "whereas", "since", "until", "till", "before", "after",
        "that", "where", "lest",
    }),
    subject_pronouns=frozenset({"i", "you", "he", "she", "it", "we", "they"}),
    object_pronouns=frozenset({"me", "you", "him", "her", "it", "us", "them"}),
    demonstratives=frozenset({"this", "that", "these", "those"}),
    relativizers=frozenset({"that", "which"}),
)

FR = TagSet(
    language="FR",
    common_nouns=frozenset({"NOM"}),
    proper_nouns=frozenset({"NAM"}),
    adjectives=frozenset({"ADJ"}),
    participles=frozenset({"VER:pper", "VER:ppre"}),
    comparatives=frozenset(),
    adverbs=frozenset({"ADV"}),
    finite_verbs=frozenset({
        "VER:pres", "VER:impf", "VER:simp", "VER:futu", "VER:cond",
        "VER:subp", "VER:subi",
    }),
    verb_prefixes=("VER",),
    extra_verbs=frozenset(),
    prepositions=frozenset({"PRP", "PRP:det"}),
    relative_tags=frozenset({"PRO:REL"}),
    personal_tags=frozenset({"PRO:PER"}),
    demonstrative_tags=frozenset({"PRO:DEM"}),
    conj_tags=frozenset({"KON"}),
    punct_tags=frozenset({"SENT", "PUN", "PUN:cit"}),
    coord_lemmas=frozenset({"et", "ou", "mais", "ni", "car", "or", "donc"}),
    subord_lemmas=frozenset({"que", "quand", "lorsque", "si", "puisque", "quoique"}),
    subject_pronouns=frozenset({
        "je", "j'", "tu", "il", "elle", "on", "nous", "vous", "ils", "elles",
    }),
    object_pronouns=frozenset({
        "me", "m'", "te", "t'", "le", "la", "l'", "les", "nous", "vous", "se", "s'",
        "lui", "leur",
    }),
    relativizers=frozenset({"que"}),
)

TAGSETS = {"EN": EN, "FR": FR}


def tagset(language: str) -> TagSet:
    try:
        return TAGSETS[language.upper()]
    except KeyError:
        raise ValueError(f"unsupported language: {language!r}") from None
