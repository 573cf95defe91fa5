"""Compare extraction on the gold fixture with the hand annotation."""

from __future__ import annotations

import json

from simile_miner.corpus import read_document
from simile_miner.extractor import extract_candidates
from simile_miner.markers import builtin_markers, match_markers

from conftest import DATA

GOLD_FILES = ("gold-en", "gold-fr")


def summarize(candidate) -> dict:
    """Lemma-level view of a candidate, in the gold file's shape."""
    ev = candidate.eventuality
    return {
        "marker": candidate.marker.definition.id,
        "vehicle": candidate.vehicle.lemma if candidate.vehicle else None,
        "grounds": [[g.lemma, g.tenor.lemma if g.tenor else None,
                     g.tenor.role.value if g.tenor else None] for g in candidate.grounds],
        "eventuality": None if ev is None else [ev.lemma, [[t.lemma, t.role.value]
                                                          for t in ev.tenors]],
        "flags": sorted(candidate.flags),
    }


def gold_comparison() -> tuple[int, list[str]]:
    """Number of sentences checked and a list of mismatch descriptions."""
    gold = json.loads((DATA / "gold.json").read_text(encoding="utf-8"))
    checked, problems = 0, []
    for name in GOLD_FILES:
        meta, sents = read_document(DATA / f"{name}.vrt", on_issue=lambda issue: None)
        defs = builtin_markers(meta.language)
        expected = gold[name]
        seen = set()
        for s in sents:
            key = str(s.sentence_index)
            seen.add(key)
            got = [summarize(c) for c in extract_candidates(s, match_markers(s, defs))]
            checked += 1
            if key not in expected:
                problems.append(f"{name}#{key}: no gold entry")
            elif got != expected[key]:
                problems.append(f"{name}#{key}: {s.text}\n  got  {got}\n  gold {expected[key]}")
        missing = set(expected) - seen
        if missing:
            problems.append(f"{name}: gold sentences not in fixture: {sorted(missing)}")
    return checked, problems
