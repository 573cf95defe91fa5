#!/usr/bin/env python3
"""Write a synthetic English vertical corpus (planted or large)."""

import argparse
from pathlib import Path

from simile_miner.synthetic import large_corpus, planted_corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("out", type=Path)
    ap.add_argument("--kind", choices=["planted", "large"], default="planted")
    ap.add_argument("--sentences", type=int, default=500, help="planted corpus size")
    ap.add_argument("--plantings", type=int, default=6)
    ap.add_argument("--tokens", type=int, default=1_000_000, help="large corpus size")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if args.kind == "planted":
        c = planted_corpus(args.out, n_sentences=args.sentences, plantings=args.plantings,
                           seed=args.seed)
        print(f"{len(c.files)} files, {c.plantings} plantings over {len(c.authors)} authors")
    else:
        files = large_corpus(args.out, n_tokens=args.tokens, seed=args.seed)
        print(f"{len(files)} files in {args.out}")


if __name__ == "__main__":
    main()
