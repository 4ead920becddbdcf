import itertools
import random

import pytest

from ellipsis_coherence.errors import (AmbiguousRemnant, FormMismatch, NoMatch,
                                       RemnantMismatch, TreeSyntaxError, UnsuitableAntecedent)
from ellipsis_coherence.grammar import derive, parse_tree
from ellipsis_coherence.instrument import recording
from ellipsis_coherence.lamcore import (abstract_over, alpha_eq, apply_terms,
                                        beta_normalize, to_text)
from ellipsis_coherence.syntree import (SynNode, align_parallel, copy_embedded_sentence,
                                        copy_vp, empty_node, front_parallel, read_bracketed,
                                        to_bracketed, unbound_traces, unfront)

import gen

BILL = "(S (NP Bill) (VP (V became) (AP upset)))"


def words(pairs):
    return [(" ".join(a.words()), " ".join(b.words())) for a, b in pairs]


def test_read_and_print_round_trip():
    for text in [BILL, "(S[gapped] (NP Hillary) (AP angry))", "(S[stripped] (NP Hillary))",
                 "(S (NP the-ICC) (VP (AUX did) (VP[elided])))",
                 "(VP[voice=passive] (V reversed) (PP (P by) (NP the-FBI)))"]:
        assert to_bracketed(read_bracketed(text)) == text


def test_elided_shorthand_expands():
    t = read_bracketed("(VP[elided] (AUX did))")
    assert [c.cat for c in t.children] == ["AUX", "VP"]
    assert t.children[1].empty and not t.empty


@pytest.mark.parametrize("text,offset", [("(S (NP Bill)", 12), ("(Q x)", 1),
                                         ("(NP a b)", 4), ("(S) x", 4)])
def test_malformed_trees_report_offsets(text, offset):
    with pytest.raises(TreeSyntaxError) as err:
        read_bracketed(text)
    assert err.value.position == offset
    assert f"at offset {offset}" in str(err.value)


def test_empty_nodes_have_no_content():
    n = empty_node("NP", trace=3)
    assert n.empty and not n.children and n.word is None and n.trace == 3


def test_features_are_immutable_and_sorted():
    n = SynNode("VP", {"voice": "passive", "anaphor": "2"})
    assert n.features == (("anaphor", "2"), ("voice", "passive"))
    assert n.with_features(voice=None).voice is None
    assert n.voice == "passive"


def test_front_parallel_figure_shape(lexicon):
    tree = parse_tree(BILL, lexicon)
    fronted = front_parallel(tree, ["NP", "AP"], itertools.count(1))
    assert fronted.has("fronted")
    assert [c.cat for c in fronted.children] == ["NP", "AP", "S"]
    inner = fronted.children[-1]
    assert [n.trace for _, n in inner.walk() if n.trace is not None] == [1, 2]
    assert alpha_eq(derive(fronted, lexicon).lf, derive(tree, lexicon).lf)
    assert unfront(fronted).words() == tree.words()


def test_front_parallel_edge_cases(lexicon):
    tree = parse_tree(BILL, lexicon)
    assert front_parallel(tree, []) is tree
    with pytest.raises(NoMatch):
        front_parallel(tree, ["PP"])
    two = parse_tree("(S (NP John) (VP (V supports) (NP Clinton)))", lexicon)
    with pytest.raises(AmbiguousRemnant):
        front_parallel(two, ["NP"], strict=True)
    left = front_parallel(two, ["NP"])
    assert left.children[0].words() == ["John"]


def test_copy_embedded_sentence(lexicon):
    src = front_parallel(parse_tree(BILL, lexicon), ["NP", "AP"], itertools.count(1))
    tgt = parse_tree("(S[gapped] (NP Hillary) (AP angry))", lexicon)
    rebuilt = copy_embedded_sentence(src, tgt, itertools.count(10))
    assert to_text(derive(rebuilt, lexicon).lf) == "become angry hillary"
    strip_src = front_parallel(parse_tree(BILL, lexicon), ["NP"], itertools.count(1))
    strip = copy_embedded_sentence(strip_src, parse_tree("(S[stripped] (NP Hillary))", lexicon))
    assert to_text(derive(strip, lexicon).lf) == "become upset hillary"
    bad = read_bracketed("(S[gapped] (NP Hillary) (PP (P for) (NP Bush)))")
    with pytest.raises(RemnantMismatch):
        copy_embedded_sentence(src, bad)


def test_copy_vp_examples(lexicon):
    passive = read_bracketed("(VP (AUX was) (VP[voice=passive] (V reversed) "
                             "(PP (P by) (NP the-FBI))))")
    did = read_bracketed("(AUX did)")
    with pytest.raises(FormMismatch):
        copy_vp(passive, did, lexicon)
    copied = copy_vp(read_bracketed("(VP (V became) (AP upset))"), did, lexicon)
    assert copied.words() == ["become", "upset"]
    assert copied.children[0].vform == "base"
    gapped_vp = read_bracketed("(VP (V supports) (NP[elided,trace=6]))")
    with pytest.raises(UnsuitableAntecedent):
        copy_vp(gapped_vp, read_bracketed("(AUX does)"), lexicon)


def test_copy_vp_same_auxiliary_copies_complement(lexicon):
    vp = read_bracketed("(VP (AUX was) (VP (V going-to) (NP the-golf-course)))")
    assert copy_vp(vp, read_bracketed("(AUX was)"), lexicon).words() == \
        ["going-to", "the-golf-course"]
    with pytest.raises(FormMismatch):
        copy_vp(vp, read_bracketed("(AUX did)"), lexicon)


def test_copy_vp_keeps_bound_traces():
    vp = read_bracketed("(VP (V supports) (NP[elided,trace=1]))")
    assert unbound_traces(vp) == {1}
    wrapped = read_bracketed("(S[fronted] (NP[binds=1] Bush) (S (NP Mary) "
                             "(VP (V supports) (NP[elided,trace=1]))))")
    assert unbound_traces(wrapped) == set()


def test_align_parallel_examples(lexicon):
    a = parse_tree("(S (NP John) (VP (V supports) (NP Clinton)))", lexicon)
    b = parse_tree("(S (NP Mary) (VP (V supports) (NP Bush)))", lexicon)
    assert words(align_parallel(a, b)) == [("John", "Mary"), ("supports", "supports"),
                                           ("Clinton", "Bush")]
    assert words(align_parallel(a, a)) == [(w, w) for w in ["John", "supports", "Clinton"]]
    src = parse_tree(BILL, lexicon)
    rebuilt = copy_embedded_sentence(front_parallel(src, ["NP", "AP"], itertools.count(1)),
                                     parse_tree("(S[gapped] (NP Hillary) (AP angry))", lexicon),
                                     itertools.count(5))
    assert words(align_parallel(src, rebuilt)) == [("Bill", "Hillary"), ("became", "became"),
                                                   ("upset", "angry")]


def _random_clause(rng, lexicon):
    subj = rng.choice(gen.PEOPLE)
    shape = rng.randrange(3)
    if shape == 0:
        return parse_tree(f"(S (NP {subj}) (VP (V became) (AP {rng.choice(gen.ADJECTIVES)})))",
                          lexicon), ["NP", "AP"]
    if shape == 1:
        verb, _ = rng.choice(gen.TRANSITIVE)
        return parse_tree(f"(S (NP {subj}) (VP (V {verb}) (NP {rng.choice(gen.ENTITY_OBJECTS)})))",
                          lexicon), ["NP", "NP"]
    return parse_tree(f"(S (NP {subj}) (VP (V organized-rallies) (PP (P for) (NP Clinton))))",
                      lexicon), ["NP", "PP"]


def test_fronting_preserves_semantics(lexicon):
    rng = random.Random(7)
    for _ in range(200):
        tree, cats = _random_clause(rng, lexicon)
        cats = cats[:rng.randint(1, len(cats))]
        fronted = front_parallel(tree, cats, itertools.count(1))
        d = derive(fronted, lexicon)
        assert d.closed and alpha_eq(d.lf, derive(tree, lexicon).lf)


def test_reconstruction_matches_abstraction_oracle(lexicon):
    """Copy-and-derive equals applying the abstracted source LF to the remnants."""
    rng = random.Random(11)
    for _ in range(200):
        tree, cats = _random_clause(rng, lexicon)
        fronted = front_parallel(tree, cats, itertools.count(1))
        binders = fronted.children[:-1]
        rem_text = []
        for b in binders:
            if b.cat == "NP":
                rem_text.append(f"(NP {rng.choice(gen.PEOPLE + gen.ENTITY_OBJECTS)})")
            elif b.cat == "AP":
                rem_text.append(f"(AP {rng.choice(gen.ADJECTIVES)})")
            else:
                rem_text.append(f"(PP (P for) (NP {rng.choice(gen.PEOPLE)}))")
        target = parse_tree(f"(S[gapped] {' '.join(rem_text)})", lexicon)
        rebuilt = copy_embedded_sentence(fronted, target, itertools.count(50))
        got = derive(rebuilt, lexicon).lf
        src_pivots = [derive_sem(b, lexicon) for b in binders]
        tgt_sems = [derive_sem(r, lexicon) for r in target.children]
        expected = beta_normalize(apply_terms(abstract_over(derive(tree, lexicon).lf,
                                                            src_pivots[::-1]), tgt_sems))
        if len(set(src_pivots)) == len(src_pivots):
            assert alpha_eq(got, expected), (to_text(got), to_text(expected))


def derive_sem(node, lexicon):
    from ellipsis_coherence.grammar import constituent_sem
    return constituent_sem(node, lexicon)


def test_align_parallel_is_symmetric(lexicon):
    rng = random.Random(3)
    for _ in range(100):
        a, _ = _random_clause(rng, lexicon)
        b, _ = _random_clause(rng, lexicon)
        ab = [(x, y) for x, y in align_parallel(a, b)]
        ba = [(y, x) for x, y in align_parallel(b, a)]
        assert ab == ba


def test_transforms_are_recorded(lexicon):
    with recording() as log:
        front_parallel(parse_tree(BILL, lexicon), ["NP"])
    assert [op for op, _ in log] == ["front_parallel"]


def test_recorder_sees_the_active_family(lexicon):
    from ellipsis_coherence.instrument import inference_family
    with recording() as log:
        with inference_family("CoherentSituation"):
            front_parallel(parse_tree(BILL, lexicon), ["NP"])
    assert log == [("front_parallel", "CoherentSituation")]
