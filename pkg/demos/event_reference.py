"""*do it* is anaphoric but leaves no gap, so it behaves the same under
every coherence relation, and it cannot pick up a state.

Run:  python3 demos/event_reference.py
"""
from ellipsis_coherence import KnowledgeBase, Lexicon, load_corpus, judge_item
from ellipsis_coherence.harness import data_path, explain
from ellipsis_coherence.syntree import read_bracketed

lexicon = Lexicon.load(data_path("lexicon.tsv"))
kb = KnowledgeBase.load(data_path("kb.txt"))
items = {i.id: i for i in load_corpus(data_path("corpus.jsonl"))}

print(explain(items["non-ell1"], lexicon, kb))

# "Bill dislikes George and Hillary does (# it) too": the pronoun needs an event.
for j in judge_item(items["no2"], lexicon, kb):
    target = " ".join(read_bracketed(items["no2"].clauses[j.target]).words())
    print(f"{target:<20} {j.verdict.outcome:<13} {j.verdict.reason}")
