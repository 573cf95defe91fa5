#!/usr/bin/env python3
"""Time and memory of extraction on a large synthetic corpus."""

import argparse
import tempfile
import time
import tracemalloc
from pathlib import Path

from simile_miner import cli
from simile_miner.synthetic import large_corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tokens", type=int, default=1_000_000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--trace", action="store_true", help="report the tracemalloc peak (slower)")
    args = ap.parse_args()
    with tempfile.TemporaryDirectory() as tmp:
        corpus = Path(tmp) / "corpus"
        large_corpus(corpus, n_tokens=args.tokens)
        if args.trace:
            tracemalloc.start()
        t0 = time.perf_counter()
        with open(Path(tmp) / "cands.jsonl", "w", encoding="utf-8") as out:
            summary = cli.cmd_extract(
                cli.RunConfig(language="EN", input=corpus, workers=args.workers), out)
        elapsed = time.perf_counter() - t0
        print(summary.line())
        print(f"{args.tokens / elapsed:,.0f} tokens/s ({elapsed:.1f} s)")
        if args.trace:
            print(f"peak traced memory {tracemalloc.get_traced_memory()[1] / 1024:.0f} KiB")


if __name__ == "__main__":
    main()
