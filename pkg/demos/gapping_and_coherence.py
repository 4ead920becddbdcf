"""Gapping survives only where the clauses share a common topic.

Run:  python3 demos/gapping_and_coherence.py
"""
import itertools

from ellipsis_coherence import KnowledgeBase, Lexicon, RELATIONS, derive, judge_link, parse_tree
from ellipsis_coherence.harness import data_path
from ellipsis_coherence.lamcore import to_text

lexicon = Lexicon.load(data_path("lexicon.tsv"))
kb = KnowledgeBase.load(data_path("kb.txt"))
counter = itertools.count(1)


def clause(text):
    return derive(parse_tree(text, lexicon, counter), lexicon, counter)


source = clause("(S (NP Bill) (VP (V became) (AP upset)))")
gapped = clause("(S[gapped] (NP Hillary) (AP angry))")
full = clause("(S (NP Hillary) (VP (V became) (AP angry)))")

# The gapped clause has no meaning of its own until its syntax is rebuilt.
print("gapped clause LF:", gapped.lf)

for target, label in [(gapped, "Hillary angry"), (full, "Hillary became angry")]:
    for name in ("Parallel", "Result"):
        v = judge_link(source, target, RELATIONS[name], kb, lexicon)
        lf = to_text(v.lf) if v.lf is not None else "-"
        print(f"Bill became upset, and {label:<22} {name:<9} {v.outcome:<13}"
              f"{v.reason:<24} {lf}")

# Under Parallel the copy happens; the trace shows the fronted source.
v = judge_link(source, gapped, RELATIONS["Parallel"], kb, lexicon)
print("\n".join("  " + step for step in v.trace))
