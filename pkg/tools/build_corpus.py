"""Regenerate src/ellipsis_coherence/data/corpus.jsonl.

Run from the repository root: python3 tools/build_corpus.py
"""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src/ellipsis_coherence/data/corpus.jsonl"

BILL_UPSET = "(S (NP Bill) (VP (V became) (AP upset)))"
HILLARY_ANGRY_FULL = "(S (NP Hillary) (VP (V became) (AP angry)))"
HILLARY_ANGRY_GAP = "(S[gapped] (NP Hillary) (AP angry))"
FBI_REVERSED = ("(S (NP the-decision) (VP (AUX was) (VP[voice=passive] (V reversed) "
                "(PP (P by) (NP the-FBI)))))")
LETTER_PROVOKED = ("(S (NP this-letter) (VP (V provoked) (NP a-response) "
                   "(PP (P from) (NP Bush))))")
CLINTON_INTRODUCED = ("(S (NP Clinton) (VP (AUX was) (VP[voice=passive] (V introduced) "
                      "(PP (P by) (NP John)))))")


def link(src, dst, conj, gold, reading=None, intended=None):
    out = {"from": src, "to": dst, "conj": conj}
    if reading:
        out["reading"] = reading
    if intended:
        out["intended"] = intended
    out["gold"] = gold
    return out


ITEMS = [
    {"id": "gap1", "text": "Bill became upset, and Hillary angry. / ... and Hillary became angry.",
     "clauses": [BILL_UPSET, HILLARY_ANGRY_GAP, HILLARY_ANGRY_FULL],
     "links": [link(0, 1, "and", {"Parallel": "ok", "Result": "#"}),
               link(0, 2, "and", {"Parallel": "ok", "Result": "ok"})]},
    {"id": "sym-assym-gap",
     "text": "Symmetric context: Hillary became/0 angry. Causal context: Hillary became/#0 angry.",
     "clauses": [BILL_UPSET, HILLARY_ANGRY_FULL, HILLARY_ANGRY_GAP],
     "links": [link(0, 1, "and", {"Parallel": "ok"}, reading="symmetric"),
               link(0, 2, "and", {"Parallel": "ok"}, reading="symmetric"),
               link(0, 1, "and (as a result)", {"Result": "ok"}),
               link(0, 2, "and (as a result)", {"Result": "#"})]},
    {"id": "foo3", "text": "Bill became upset, and Hillary did too.",
     "clauses": [BILL_UPSET, "(S (NP Hillary) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "and", {"Parallel": "ok"}, reading="Parallel")]},
    {"id": "ell1", "text": "# The decision was reversed by the FBI, and the ICC did too.",
     "clauses": [FBI_REVERSED, "(S (NP the-ICC) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "and", {"Parallel": "#"}, reading="Parallel", intended="reverse")]},
    {"id": "ell2",
     "text": "In March, four fireworks manufacturers asked that the decision be reversed, "
             "and on Monday the ICC did.",
     "clauses": ["(S (NP four-fireworks-manufacturers) (VP (V asked-that) (S (NP the-decision) "
                 "(VP (AUX be) (VP[voice=passive] (V reversed))))))",
                 "(S (NP the-ICC) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "and", {"Result": "ok"}, reading="Result", intended="reverse")]},
    {"id": "ell3", "text": "# This letter provoked a response from Bush, and Clinton did too.",
     "clauses": [LETTER_PROVOKED, "(S (NP Clinton) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "and", {"Parallel": "#"}, reading="Parallel", intended="respond")]},
    {"id": "ell4",
     "text": "This letter was meant to provoke a response from Clinton, and so he did.",
     "clauses": ["(S (NP this-letter) (VP (V was-meant-to) (VP (V provoke) (NP a-response) "
                 "(PP (P from) (NP Clinton)))))",
                 "(S (NP[ref=clinton] he) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "and", {"Result": "ok"}, reading="Result", intended="respond")]},
    {"id": "non-ell1", "text": "The decision was reversed by the FBI, and the ICC did it too.",
     "clauses": [FBI_REVERSED, "(S (NP the-ICC) (VP (V did) (NP it)))"],
     "links": [link(0, 1, "and", {"Parallel": "ok", "Result": "ok"}, intended="reverse")]},
    {"id": "no1",
     "text": "George was going to the golf course and Bill was 0/(# it)/(# that)/(# so) too.",
     "clauses": ["(S (NP George) (VP (AUX was) (VP (V going-to) (NP the-golf-course))))",
                 "(S (NP Bill) (VP[elided] (AUX was)))",
                 "(S (NP Bill) (VP (AUX was) (NP it)))",
                 "(S (NP Bill) (VP (AUX was) (NP that)))",
                 "(S (NP Bill) (VP (AUX was) (NP so)))"],
     "links": [link(0, k, "and", {"Parallel": "ok" if k == 1 else "#"}, reading="Parallel")
               for k in range(1, 5)]},
    {"id": "no2",
     "text": "Bill dislikes George and Hillary does 0/(# it)/(# that)/(# so) too.",
     "clauses": ["(S (NP Bill) (VP (V dislikes) (NP George)))",
                 "(S (NP Hillary) (VP[elided] (AUX does)))",
                 "(S (NP Hillary) (VP (V does) (NP it)))",
                 "(S (NP Hillary) (VP (V does) (NP that)))",
                 "(S (NP Hillary) (VP (V does) (NP so)))"],
     "links": [link(0, k, "and", {"Parallel": "ok" if k == 1 else "#"}, reading="Parallel")
               for k in range(1, 5)]},
    {"id": "othergap1",
     "text": "# Bill became upset, {because / even though / despite the fact that} Hillary angry.",
     "clauses": [BILL_UPSET, HILLARY_ANGRY_GAP],
     "links": [link(0, 1, "because", {"Explanation": "#"}),
               link(0, 1, "even though", {"DenialOfPreventer": "#"}),
               link(0, 1, "despite the fact that", {"DenialOfPreventer": "#"})]},
    {"id": "strip1",
     "text": "Bill became upset, {and also / but not / # and (as a result) / # because / "
             "# even though / # despite the fact that} Hillary.",
     "clauses": [BILL_UPSET, "(S[stripped] (NP Hillary))", "(S[stripped,neg] (NP Hillary))"],
     "links": [link(0, 1, "and also", {"Parallel": "ok"}),
               link(0, 2, "but not", {"Contrast": "ok"}),
               link(0, 1, "and (as a result)", {"Result": "#"}),
               link(0, 1, "because", {"Explanation": "#"}),
               link(0, 1, "even though", {"DenialOfPreventer": "#"}),
               link(0, 1, "despite the fact that", {"DenialOfPreventer": "#"})]},
    {"id": "ct-a",
     "text": "John organized rallies for Clinton, and Fred distributed pamphlets for him.",
     "clauses": ["(S (NP John) (VP (V organized-rallies) (PP (P for) (NP Clinton))))",
                 "(S (NP Fred) (VP (V distributed-pamphlets) (PP (P for) (NP[ref=clinton] him))))"],
     "links": [link(0, 1, "and", {"Parallel": "ok"}, reading="Parallel")]},
    {"id": "ct-b", "text": "John supported Clinton, but Mary supported Bush.",
     "clauses": ["(S (NP John) (VP (V supported) (NP Clinton)))",
                 "(S (NP Mary) (VP (V supported) (NP Bush)))"],
     "links": [link(0, 1, "but", {"Contrast": "ok"}, reading="Contrast")]},
    {"id": "ct-c",
     "text": "Young aspiring politicians usually support their party's presidential candidate. "
             "For instance, John campaigned hard for Clinton in 1992.",
     "clauses": ["(S (NP young-aspiring-politicians) (VP (V support) (NP their-partys-candidate)))",
                 "(S (NP John) (VP (V campaigned-hard) (PP (P for) (NP Clinton))))"],
     "links": [link(0, 1, "for instance", {"Exemplification": "ok"})]},
    {"id": "ct-d",
     "text": "A young aspiring politician was arrested in Texas today. "
             "John Smith, 34, was nabbed in a Houston law firm.",
     "clauses": ["(S (NP a-young-aspiring-politician) (VP (AUX was) (VP[voice=passive] (V arrested))))",
                 "(S (NP John-Smith) (VP (AUX was) (VP[voice=passive] (V nabbed))))"],
     "links": [link(0, 1, "in other words", {"Elaboration": "ok"})]},
    {"id": "cs-a", "text": "Bill is a politician, and therefore he's dishonest.",
     "clauses": ["(S (NP Bill) (VP (AUX is) (AP a-politician)))",
                 "(S (NP[ref=bill] he) (VP (AUX is) (AP dishonest)))"],
     "links": [link(0, 1, "and therefore", {"Result": "ok"})]},
    {"id": "cs-b", "text": "Bill is dishonest because he's a politician.",
     "clauses": ["(S (NP Bill) (VP (AUX is) (AP dishonest)))",
                 "(S (NP[ref=bill] he) (VP (AUX is) (AP a-politician)))"],
     "links": [link(0, 1, "because", {"Explanation": "ok"})]},
    {"id": "cs-c", "text": "Bill is a politician, but he's honest.",
     "clauses": ["(S (NP Bill) (VP (AUX is) (AP a-politician)))",
                 "(S (NP[ref=bill] he) (VP (AUX is) (AP honest)))"],
     "links": [link(0, 1, "but", {"ViolatedExpectation": "ok"}, reading="ViolatedExpectation")]},
    {"id": "cs-d", "text": "Bill is honest, even though he's a politician.",
     "clauses": ["(S (NP Bill) (VP (AUX is) (AP honest)))",
                 "(S (NP[ref=bill] he) (VP (AUX is) (AP a-politician)))"],
     "links": [link(0, 1, "even though", {"DenialOfPreventer": "ok"})]},
    {"id": "k1", "text": "?? Clinton was introduced by John, but Mary didn't.",
     "clauses": [CLINTON_INTRODUCED, "(S (NP Mary) (VP[elided] (AUX didn't)))"],
     "links": [link(0, 1, "but", {"Contrast": "??"}, reading="Contrast", intended="introduce")]},
    {"id": "k2", "text": "?? This letter provoked a response from Bush, but Clinton didn't.",
     "clauses": [LETTER_PROVOKED, "(S (NP Clinton) (VP[elided] (AUX didn't)))"],
     "links": [link(0, 1, "but", {"Contrast": "??"}, reading="Contrast", intended="respond")]},
    {"id": "k3",
     "text": "Clinton was to have been introduced by someone, but obviously nobody did.",
     "clauses": ["(S (NP Clinton) (VP (AUX was-to-have-been) (VP[voice=passive] (V introduced) "
                 "(PP (P by) (NP someone)))))",
                 "(S (NP nobody) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "but", {"ViolatedExpectation": "ok"}, reading="ViolatedExpectation",
                    intended="introduce")]},
    {"id": "k4", "text": "This letter deserves a response, but before you do, ...",
     "clauses": ["(S (NP this-letter) (VP (V deserves) (NP a-response)))",
                 "(S (NP you) (VP[elided] (AUX do)))"],
     "links": [link(0, 1, "but", {"ViolatedExpectation": "ok"}, reading="ViolatedExpectation",
                    intended="respond")]},
    {"id": "sag",
     "text": "John supports Clinton, and Mary 0 Bush, {although she doesn't know why she does "
             "/ ?? and Fred does too}.",
     "clauses": ["(S (NP John) (VP (V supports) (NP Clinton)))",
                 "(S[gapped] (NP Mary) (NP Bush))",
                 "(S (NP[ref=mary] she) (VP (AUX doesn't) (VP (V know-why) "
                 "(S (NP[ref=mary] she) (VP[elided] (AUX does))))))",
                 "(S (NP Fred) (VP[elided] (AUX does)))"],
     "links": [link(0, 1, "and", {"Parallel": "ok"}, reading="Parallel"),
               link(1, 2, "although", {"DenialOfPreventer": "ok"}),
               link(1, 3, "and", {"Parallel": "??"}, reading="Parallel")]},
    {"id": "complex-ex",
     "text": "Clinton was introduced by John because Mary had refused to, "
             "and {Gore was / # Fred did} too.",
     "clauses": ["(S (NP Clinton) (VP (AUX was) (VP (VP[voice=passive] (V introduced) "
                 "(PP (P by) (NP John))) (PP (P because) (S (NP Mary) "
                 "(VP (AUX had) (VP (V refused))))))))",
                 "(S (NP Gore) (VP[elided] (AUX was)))",
                 "(S (NP Fred) (VP[elided] (AUX did)))"],
     "links": [link(0, 1, "and", {"Parallel": "ok"}, reading="Parallel", intended="introduce"),
               link(0, 2, "and", {"Parallel": "#"}, reading="Parallel", intended="introduce")]},
]

if __name__ == "__main__":
    OUT.write_text("".join(json.dumps(item, ensure_ascii=False) + "\n" for item in ITEMS),
                   encoding="utf-8")
    print(f"wrote {len(ITEMS)} items to {OUT}")
