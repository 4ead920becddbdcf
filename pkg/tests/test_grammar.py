import pytest

from ellipsis_coherence.errors import InputError, TreeSyntaxError, TypeClash, UnknownWord
from ellipsis_coherence.grammar import (FormProfile, Lexicon, classify_form, derive,
                                        head_constant, parse_tree)
from ellipsis_coherence.lamcore import Arrow, E, T, alpha_eq, is_normal, to_text
from ellipsis_coherence.syntree import read_bracketed

BILL = "(S (NP Bill) (VP (V became) (AP upset)))"


def lf(text, lexicon):
    return to_text(derive(parse_tree(text, lexicon), lexicon).lf)


def test_parse_tree_resolves_lexical_features(lexicon):
    tree = parse_tree(BILL, lexicon)
    vp = tree.children[1]
    assert vp.voice == "active"
    assert vp.children[0].vform == "fin"
    assert vp.children[0].sem.name == "become"


def test_elided_vp_gets_anaphor_marker(lexicon):
    tree = parse_tree("(S (NP the-ICC) (VP[elided] (AUX did)))", lexicon)
    site = tree.children[1].children[1]
    assert site.empty and site.anaphor is not None


def test_parse_errors(lexicon):
    with pytest.raises(TreeSyntaxError) as err:
        parse_tree("(S (NP Bill", lexicon)
    assert err.value.position == 11
    with pytest.raises(UnknownWord) as err:
        parse_tree("(S (NP Zelda) (VP (V became) (AP upset)))", lexicon)
    assert err.value.word == "Zelda"
    with pytest.raises(UnknownWord):
        parse_tree("(S (NP[ref=zelda] she) (VP (V became) (AP upset)))", lexicon)


def test_derive_examples(lexicon):
    assert lf(BILL, lexicon) == "become upset bill"
    d = derive(parse_tree("(S (NP Hillary) (VP[elided] (AUX did)))", lexicon), lexicon)
    assert not d.closed
    [a] = d.anaphors()
    assert a.type == Arrow(E, T)
    assert to_text(d.lf) == f"{a.var.name} hillary"
    gapped = derive(parse_tree("(S[gapped] (NP Hillary) (AP angry))", lexicon), lexicon)
    assert gapped.lf is None and gapped.profile.kind == "Gapping"


def test_passive_and_active_agree(lexicon):
    passive = lf("(S (NP the-decision) (VP (AUX was) (VP[voice=passive] (V reversed) "
                 "(PP (P by) (NP the-FBI)))))", lexicon)
    active = lf("(S (NP the-FBI) (VP (V reversed) (NP the-decision)))", lexicon)
    assert passive == active == "reverse decision fbi"
    agentless = lf("(S (NP the-decision) (VP (AUX was) (VP[voice=passive] (V reversed))))",
                   lexicon)
    assert agentless == "reverse decision someone"


def test_composition_rules(lexicon):
    assert lf("(S (NP Bill) (VP (AUX didn't) (VP (V support) (NP Clinton))))", lexicon) \
        == "not (support clinton bill)"
    assert lf("(S (NP this-letter) (VP (V was-meant-to) (VP (V provoke) (NP a-response) "
              "(PP (P from) (NP Clinton)))))", lexicon) \
        == "meant (provoke a_response clinton) this_letter"
    assert lf("(S (NP Mary) (VP (AUX had) (VP (V refused))))", lexicon) == "refuse mary"
    assert lf("(S (NP[ref=bill] he) (VP (AUX is) (AP dishonest)))", lexicon) == "dishonest bill"
    assert lf("(S[neg] (NP Bill) (VP (V became) (AP upset)))", lexicon) \
        == "not (become upset bill)"


def test_event_pronoun_needs_main_verb_do(lexicon):
    d = derive(parse_tree("(S (NP the-ICC) (VP (V did) (NP it)))", lexicon), lexicon)
    assert d.profile.kind == "EventRef" and len(d.anaphors()) == 1
    for pron in ("it", "that", "so"):
        with pytest.raises(TypeClash):
            derive(parse_tree(f"(S (NP Bill) (VP (AUX was) (NP {pron})))", lexicon), lexicon)


def test_type_clash_names_node(lexicon):
    with pytest.raises(TypeClash) as err:
        derive(parse_tree("(S (NP Bill) (VP (V supports) (AP upset)))", lexicon), lexicon)
    assert "supports" in str(err.value)


@pytest.mark.parametrize("text,kind,empty,anaphoric", [
    ("(S (NP the-ICC) (VP (V did) (NP it)))", "EventRef", False, True),
    ("(S (NP the-ICC) (VP[elided] (AUX did)))", "VPE", True, True),
    ("(S[gapped] (NP Hillary) (AP angry))", "Gapping", True, False),
    ("(S[stripped] (NP Hillary))", "Stripping", True, False),
    (BILL, "Full", False, False),
])
def test_classify_form(text, kind, empty, anaphoric):
    p = classify_form(read_bracketed(text))
    assert (p.kind, p.empty_in_syntax, p.anaphoric_in_semantics) == (kind, empty, anaphoric)


def test_table_of_forms_is_exhaustive():
    combos = {(FormProfile.of(k).empty_in_syntax, FormProfile.of(k).anaphoric_in_semantics): k
              for k in ("Full", "VPE", "EventRef", "Gapping")}
    assert len(combos) == 4
    assert combos[(False, False)] == "Full"


def test_full_clauses_in_corpus_are_closed(lexicon, corpus):
    for item in corpus:
        for text in item.clauses:
            tree = parse_tree(text, lexicon)
            if classify_form(tree).kind != "Full":
                continue
            if any(w in ("it", "that", "so") for w in tree.words()):
                with pytest.raises(TypeClash):   # "was it": pronoun outside do
                    derive(tree, lexicon)
                continue
            d = derive(tree, lexicon)
            assert d.closed and not d.pending and is_normal(d.lf)
            again = derive(parse_tree(text, lexicon), lexicon)
            assert alpha_eq(d.lf, again.lf)


def test_head_constant(lexicon):
    vp = parse_tree("(VP (AUX was) (VP[voice=passive] (V reversed)))", lexicon)
    assert head_constant(vp, lexicon) == "reverse"


def test_lexicon_file_errors():
    with pytest.raises(InputError):
        Lexicon.from_text("Bill\tNP\te\tbill\t-\n")
    with pytest.raises(InputError):
        Lexicon.from_text("Bill\tNP\te\tbill\t-\t-\nBill\tNP\te\tbill\t-\t-\n")
    with pytest.raises(InputError):
        Lexicon.from_text("a\tNP\te\tx\t-\t-\nb\tAP\te->t\tx\t-\t-\n")
    with pytest.raises(InputError):
        Lexicon.load("/nonexistent/lexicon.tsv")


def test_lexicon_lemmas_and_statives(lexicon):
    assert lexicon.lemma("became", "V") == "become"
    assert lexicon.lemma("didn't", "AUX") == "do"
    assert lexicon.is_stative("dislike") and not lexicon.is_stative("reverse")
