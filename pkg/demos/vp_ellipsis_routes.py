"""Two ways to resolve an elided VP, and when each one is used.

Under a Common Topic relation the source VP is copied into the empty node,
so voice mismatches and nominalized sources fail.  Under a Coherent
Situation relation the elided property is solved for from the source
meaning alone.

Run:  python3 demos/vp_ellipsis_routes.py
"""
import itertools

from ellipsis_coherence import EllipsisError, KnowledgeBase, Lexicon, derive, parse_tree
from ellipsis_coherence.ellipsis import resolve_vpe_semantic, resolve_vpe_syntactic
from ellipsis_coherence.harness import data_path
from ellipsis_coherence.lamcore import to_text

lexicon = Lexicon.load(data_path("lexicon.tsv"))
kb = KnowledgeBase.load(data_path("kb.txt"))

cases = [
    ("The decision was reversed by the FBI, and the ICC did.",
     "(S (NP the-decision) (VP (AUX was) (VP[voice=passive] (V reversed) "
     "(PP (P by) (NP the-FBI)))))",
     "(S (NP the-ICC) (VP[elided] (AUX did)))", "reverse"),
    ("This letter was meant to provoke a response from Clinton, and so he did.",
     "(S (NP this-letter) (VP (V was-meant-to) (VP (V provoke) (NP a-response) "
     "(PP (P from) (NP Clinton)))))",
     "(S (NP[ref=clinton] he) (VP[elided] (AUX did)))", "respond"),
    ("Bill became upset, and Hillary did too.",
     "(S (NP Bill) (VP (V became) (AP upset)))",
     "(S (NP Hillary) (VP[elided] (AUX did)))", None),
]

for text, src_text, tgt_text, intended in cases:
    counter = itertools.count(1)
    src = derive(parse_tree(src_text, lexicon, counter), lexicon, counter)
    tgt = derive(parse_tree(tgt_text, lexicon, counter), lexicon, counter)
    print(text)
    try:
        r = resolve_vpe_syntactic(src, tgt, lexicon=lexicon, intended=intended)
        print("  copy VP  :", to_text(r.lf))
    except EllipsisError as exc:
        print(f"  copy VP  : fails ({exc.reason}: {exc})")
    r = resolve_vpe_semantic(src, tgt, kb, intended=intended, lexicon=lexicon)
    print("  solve P  :", to_text(r.lf), *(f"[{n}]" for n in r.notes))
