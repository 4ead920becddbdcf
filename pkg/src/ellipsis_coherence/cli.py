"""``judge``: score a corpus of discourse items against gold judgments.

Exit status is 0 when every verdict matches its gold mark, 1 when some do
not, and 2 when an input file cannot be read or is malformed.
"""
from __future__ import annotations

import argparse
import sys

from .coherence import KnowledgeBase
from .errors import EllipsisError, InputError
from .grammar import Lexicon
from .harness import data_path, explain, load_corpus, run_corpus


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="judge", description=__doc__.splitlines()[0])
    p.add_argument("--corpus", default=str(data_path("corpus.jsonl")),
                   help="JSONL discourse items (default: bundled corpus)")
    p.add_argument("--lexicon", default=str(data_path("lexicon.tsv")),
                   help="lexicon TSV (default: bundled lexicon)")
    p.add_argument("--kb", default=str(data_path("kb.txt")),
                   help="knowledge base (default: bundled KB)")
    p.add_argument("--format", choices=("text", "records"), default="text")
    p.add_argument("--explain", metavar="ID",
                   help="print the derivation trace for one item and exit")
    p.add_argument("--relation", metavar="NAME",
                   help="judge only under this coherence relation")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.explain:
            items = {i.id: i for i in load_corpus(args.corpus)}
            if args.explain not in items:
                raise InputError(f"no item {args.explain!r} in {args.corpus}")
            lexicon, kb = Lexicon.load(args.lexicon), KnowledgeBase.load(args.kb)
            sys.stdout.write(explain(items[args.explain], lexicon, kb))
            return 0
        report = run_corpus(args.corpus, args.lexicon, args.kb, args.relation)
    except (InputError, EllipsisError) as exc:
        print(f"judge: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(report.render(args.format))
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
