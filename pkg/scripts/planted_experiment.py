#!/usr/bin/env python3
"""Detection of a planted couple as the number of plantings varies.

For each planting count the corpus goes through extract and detect, once
with an empty reference list and once with the planted couple listed.
"""

import argparse
import io
import json
import tempfile
from pathlib import Path

from simile_miner import cli
from simile_miner.synthetic import planted_corpus


def detect(cands: Path, ref: str | None, min_count: int) -> dict:
    cfg = cli.RunConfig(language="EN", ref_list=ref, min_count=min_count)
    buf = io.StringIO()
    cli.cmd_detect(cfg, cands, buf)
    for line in buf.getvalue().splitlines():
        r = json.loads(line)
        if (r["role"], r["left_lemma"], r["vehicle_lemma"]) == ("ADJ", "pale", "death"):
            return r
    return {}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-plantings", type=int, default=8)
    ap.add_argument("--min-count", type=int, default=5)
    args = ap.parse_args()
    print("plantings  count  no-list         listed")
    with tempfile.TemporaryDirectory() as tmp:
        ref = Path(tmp) / "ref.tsv"
        ref.write_text("EN\tADJ\tpale\tdeath\tplanted\n", encoding="utf-8")
        for k in range(1, args.max_plantings + 1):
            work = Path(tmp) / f"p{k}"
            corpus = planted_corpus(work / "corpus", plantings=k, seed=k)
            cands = work / "cands.jsonl"
            with open(cands, "w", encoding="utf-8") as out:
                cli.cmd_extract(cli.RunConfig(language="EN", input=corpus.directory), out)
            bare = detect(cands, None, args.min_count)
            listed = detect(cands, str(ref), args.min_count)
            print(f"{k:9d}  {listed.get('count', 0):5d}  {bare.get('evidence', '-'):14s}  "
                  f"{listed.get('evidence', '-')}")


if __name__ == "__main__":
    main()
