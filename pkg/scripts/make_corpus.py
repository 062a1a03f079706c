"""Write a synthetic corpus of reflexive 3-polytopes in PALP format.

See lgmirror.corpus for how the polytopes are produced. The corpus is not the
Kreuzer-Skarke census; use it to stress-test batch runs.

    python scripts/make_corpus.py --limit 4319 --shuffle-coords --out corpus.palp
"""

import argparse

from lgmirror.config import CorpusConfig
from lgmirror.corpus import build_corpus
from lgmirror.io import emit_palp


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bridge", type=int, default=2,
                    help="max consecutive non-reflexive steps in the descent")
    ap.add_argument("--shuffle-coords", action="store_true",
                    help="apply a random unimodular map to each emitted polytope")
    ap.add_argument("--out", required=True)
    args = ap.parse_args()
    cfg = CorpusConfig(args.limit, args.bridge, args.seed, args.shuffle_coords)

    def report(n, q):
        if n % 500 == 0:
            print(f"  {n} reflexive, queue {q}", flush=True)

    blocks = build_corpus(cfg, progress=report)
    with open(args.out, "w") as fh:
        fh.write(emit_palp(blocks))
    print(f"wrote {len(blocks)} reflexive polytopes to {args.out}")


if __name__ == "__main__":
    main()
