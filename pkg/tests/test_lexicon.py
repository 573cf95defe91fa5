import gzip

import pytest
from hypothesis import given, strategies as st

from simile_miner.lexicon import (DistanceVerdict, Lexicon, LexiconError, ReviewReason,
                                  SemanticCategory, Verdict, assess_distance, load_en_lexicon,
                                  load_fr_lexicon)

from conftest import DATA


def codes(lex, lemma):
    return sorted(c.code for c in lex.lookup(lemma))


def test_wordnet_person_file(en_lexicon):
    assert codes(en_lexicon, "cousin") == [18]
    assert codes(en_lexicon, "child") == [18]
    assert SemanticCategory("EN", 18).name == "noun.person"
    assert assess_distance("cousin", "child", "EN", en_lexicon) == DistanceVerdict(Verdict.SAME)


def test_wordnet_multiword_and_case(en_lexicon):
    assert en_lexicon.lookup("Ice Cream") == en_lexicon.lookup("ice_cream") != frozenset()


def test_wordnet_verdicts(en_lexicon):
    assert assess_distance("death", "snow", "EN", en_lexicon).reason is ReviewReason.MULTI_CATEGORY
    assert assess_distance("girl", "lily", "EN", en_lexicon).kind in (Verdict.DISTINCT,
                                                                     Verdict.NEEDS_REVIEW)
    assert assess_distance("he", "lion", "EN", en_lexicon, tenor_is_pronoun=True).reason \
        is ReviewReason.PRONOUN_TENOR
    assert assess_distance("xyzzy", "lion", "EN", en_lexicon).reason is ReviewReason.UNKNOWN_LEMMA
    assert assess_distance(None, "lion", "EN", en_lexicon).reason is ReviewReason.UNKNOWN_LEMMA


def test_unique_beginner_and_distinct():
    lex = Lexicon("EN", {"entity": frozenset({SemanticCategory("EN", 3)}),
                         "girl": frozenset({SemanticCategory("EN", 18)}),
                         "lily": frozenset({SemanticCategory("EN", 20)})})
    assert assess_distance("entity", "girl", "EN", lex).reason is ReviewReason.UNIQUE_BEGINNER
    assert assess_distance("girl", "lily", "EN", lex) == DistanceVerdict(Verdict.DISTINCT)


def test_french_fixture(fr_lexicon):
    assert codes(fr_lexicon, "voix") == codes(fr_lexicon, "souffle") == ["non-anime"]
    assert assess_distance("voix", "souffle", "FR", fr_lexicon) == \
        DistanceVerdict.review(ReviewReason.BOTH_NON_ANIME)
    assert assess_distance("chien", "lion", "FR", fr_lexicon).reason is ReviewReason.MULTI_CATEGORY
    assert assess_distance("enfant", "ange", "FR", fr_lexicon) == DistanceVerdict(Verdict.SAME)
    assert assess_distance("lion", "ange", "FR", fr_lexicon) == DistanceVerdict(Verdict.DISTINCT)


def test_category_validation():
    for bad in [("EN", 45), ("EN", "18"), ("FR", "plante"), ("DE", 1)]:
        with pytest.raises(ValueError):
            SemanticCategory(*bad)
    with pytest.raises(ValueError):
        DistanceVerdict(Verdict.SAME, ReviewReason.UNKNOWN_LEMMA)


def test_garbled_wordnet_names_file(tmp_path):
    data = tmp_path / "data.noun"
    data.write_text("  license line\nnot a data line\n")
    index = tmp_path / "index.noun"
    index.write_text("")
    with pytest.raises(LexiconError, match="data.noun:2"):
        load_en_lexicon(index, data)


def test_index_offset_must_exist(tmp_path):
    data = tmp_path / "data.noun"
    data.write_text("00001740 03 n 01 entity 0 000 | that which exists\n")
    index = tmp_path / "index.noun.gz"
    with gzip.open(index, "wt") as fh:
        fh.write("entity n 1 1 @ 1 0 00001740\nghost n 1 0 1 0 99999999\n")
    with pytest.raises(LexiconError, match="99999999"):
        load_en_lexicon(index, data)


def test_bad_french_category_names_line(tmp_path):
    p = tmp_path / "fr.tsv"
    p.write_text("voix\tnon-animé\nrose\tplante\n", encoding="utf-8")
    with pytest.raises(LexiconError, match="fr.tsv:2"):
        load_fr_lexicon(p)


LEMMAS = ["voix", "souffle", "chien", "lion", "enfant", "ange", "mort", "inconnu"]


@given(st.sampled_from(LEMMAS), st.sampled_from(LEMMAS))
def test_distance_is_symmetric_and_total(a, b):
    lex = load_fr_lexicon(DATA / "fr_lexicon.tsv")
    v1 = assess_distance(a, b, "FR", lex)
    v2 = assess_distance(b, a, "FR", lex)
    assert v1 == v2
    assert v1.kind in Verdict
