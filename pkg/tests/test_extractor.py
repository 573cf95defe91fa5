import random

from hypothesis import given, settings, strategies as st

from simile_miner.extractor import (DISSIMILE, NO_ANCHOR, NO_VEHICLE, TenorRole, analyse,
                                    extract_candidates, find_eventuality, find_grounds,
                                    find_vehicle)
from simile_miner.markers import builtin_markers, match_markers
from simile_miner.tags import tagset

from conftest import sentence
from generators import random_sentence
from gold import gold_comparison


def first_match(spec, lang="EN"):
    s = sentence(spec, lang, strict=False)
    return match_markers(s, builtin_markers(lang))[0]


def test_gold_fixture_matches_annotation():
    checked, problems = gold_comparison()
    assert checked >= 25
    assert not problems, "\n".join(problems)


def test_worked_example_operations():
    m = first_match("[NC a/DT spark/NN ] [VC was/VBD/be kindled/VVN/kindle ] that/WDT "
                    "[VC wanted/VVD/want ] [NC but/CC opportunity/NN ] [VC to/TO blaze/VV ] "
                    "[PC into/IN [NC a/DT flame/NN ] ] ,/, pure/JJ and/CC bright/JJ as/IN "
                    "[NC the/DT shrine/NN ] [PC on/IN [NC which/WDT ] ] [NC it/PP ] "
                    "[VC burned/VVD/burn ] ./SENT")
    assert find_vehicle(m).lemma == "shrine"
    assert [g.lemma for g in find_grounds(m)] == ["pure", "bright"]
    assert find_eventuality(m).lemma == "blaze"


def test_appositive_vehicle():
    # a comma-delimited noun chunk between marker and vehicle is skipped
    m = first_match("[NC He/PP ] [VC fought/VVD/fight ] like/IN ,/, [NC my/PP$ friend/NN ] ,/, "
                    "[NC a/DT lion/NN ] ./SENT")
    assert find_vehicle(m).lemma == "lion"
    # an apposition after the vehicle is not
    m = first_match("[NC He/PP ] [VC fought/VVD/fight ] like/IN [NC a/DT lion/NN ] ,/, "
                    "[NC the/DT king/NN ] [PC of/IN [NC beasts/NNS/beast ] ] ./SENT")
    assert find_vehicle(m).lemma == "lion"


def test_proper_noun_is_not_a_vehicle():
    m = first_match("[NC He/PP ] [VC fought/VVD/fight ] like/IN [NC Achilles/NP ] ./SENT")
    c = analyse(m)
    assert c.vehicle is None and NO_VEHICLE in c.flags


def test_copula_suppressed_only_with_ground():
    m = first_match("[NC She/PP ] [VC was/VBD/be ] like/IN [NC a/DT ghost/NN ] ./SENT")
    assert find_eventuality(m).lemma == "be"
    m = first_match("[NC She/PP ] [VC was/VBD/be ] pale/JJ like/IN [NC a/DT ghost/NN ] ./SENT")
    assert find_eventuality(m) is None


def test_auxiliary_participle_vc_yields_participle():
    m = first_match("[NC He/PP ] [VC had/VHD/have fought/VVN/fight ] like/IN "
                    "[NC a/DT lion/NN ] ./SENT")
    assert find_eventuality(m).lemma == "fight"


def test_colon_blocks_eventuality():
    m = first_match("[NC He/PP ] [VC stood/VVD/stand ] :/: like/IN [NC a/DT statue/NN ] ./SENT")
    assert find_eventuality(m) is None


def test_diagnostics_mode_keeps_unanchored():
    s = sentence("[NC A/DT man/NN ] [PC like/IN [NC a/DT lion/NN ] ] ./SENT")
    ms = match_markers(s, builtin_markers("EN"))
    assert extract_candidates(s, ms) == []
    (c,) = extract_candidates(s, ms, diagnostics=True)
    assert NO_ANCHOR in c.flags and c.vehicle.lemma == "lion"


def test_dissimile_flag_and_record():
    s = sentence("[NC He/PP ] [VC behaved/VVD/behave ] unlike/IN [NC a/DT gentleman/NN ] ./SENT")
    (c,) = extract_candidates(s, match_markers(s, builtin_markers("EN")))
    rec = c.to_record()
    assert DISSIMILE in rec["flags"]
    assert rec["marker_spans"] == [[2, 2]] and "grounds" not in rec
    assert rec["eventuality"]["tenor"] == {"index": 0, "lemma": "he", "role": "SUBJECT_PRONOUN"}
    assert rec["text"] == "He behaved unlike a gentleman ."


def test_object_pronoun_needs_a_subject_when_ambiguous():
    m = first_match("[NC Vous/PRO:PER/vous ] [VC regardez/VER:pres/regarder ] comme/KON "
                    "[NC un/DET:ART chien/NOM ] ./SENT", "FR")
    roles = [t.role for t in analyse(m).eventuality.tenors]
    assert TenorRole.OBJECT_PRONOUN not in roles and TenorRole.SUBJECT_PRONOUN in roles


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from(["EN", "FR"]))
def test_candidate_invariants(seed, lang):
    s = random_sentence(random.Random(seed), lang)
    ts = tagset(lang)
    matches = match_markers(s, builtin_markers(lang))
    cands = extract_candidates(s, matches, diagnostics=True)
    assert len(cands) == len(matches)
    assert cands == extract_candidates(s, matches, diagnostics=True)
    for c in cands:
        m = c.marker
        if c.vehicle is not None:
            assert c.vehicle.index > m.last
            assert ts.is_common_noun(s.tokens[c.vehicle.index].pos)
        else:
            assert NO_VEHICLE in c.flags
        for g in c.grounds:
            pos = s.tokens[g.index].pos
            assert ts.is_adjective(pos) or ts.is_participle(pos)
            assert g.index not in m.tokens() or m.definition.parts[0] == ("*",)
        if c.eventuality is not None:
            assert ts.is_verb(s.tokens[c.eventuality.index].pos)
            lo, hi = sorted((c.eventuality.index, m.first))
            between = {t.surface for t in s.tokens[lo:hi]}
            assert not between & {":", ";"}
        if not c.grounds and c.eventuality is None:
            assert NO_ANCHOR in c.flags
        for t in [g.tenor for g in c.grounds] + list(c.eventuality.tenors if c.eventuality else ()):
            if t is not None:
                assert 0 <= t.index < len(s) and t.index not in m.tokens()
