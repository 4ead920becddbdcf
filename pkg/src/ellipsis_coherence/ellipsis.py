"""The four resolution routes.

Gapping and stripping are recovered only by copying syntax.  VP-ellipsis has
a syntactic route (copy the source VP into the empty node) and a semantic
route (solve for the anaphoric property).  Event reference is always
resolved semantically.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (NoSolution, NoSourceSyntax, NoVPAntecedent, TypeMismatch)
from .grammar import (PROPERTY, Derivation, FormProfile, Lexicon,
                      constituent_sem, derive, head_constant)
from .lamcore import (Abs, App, Const, E, T, Term, Var, alpha_eq,
                      beta_normalize, free_vars, fresh_var, head_and_args,
                      is_closed, solve_anaphor, substitute, to_text)
from .syntree import (SynNode, copy_embedded_sentence, copy_vp, embedded_clause,
                      front_parallel, is_gapped, unfront)

SYNTACTIC = "SyntacticCopy"
SEMANTIC = "SemanticAnaphora"


@dataclass(frozen=True)
class ResolutionResult:
    lf: Term
    route: str
    tree: SynNode | None = None
    notes: tuple = ()

    def as_derivation(self, target: Derivation) -> Derivation:
        """The target clause after resolution, for chaining to later links."""
        tree = self.tree if self.tree is not None else target.tree
        return Derivation(tree, self.lf, (), FormProfile.of("Full"))


def _require(target: Derivation, *kinds):
    if target.profile is None or target.profile.kind not in kinds:
        kind = target.profile.kind if target.profile else None
        raise ValueError(f"target is {kind}, expected one of {kinds}")


# -- gapping ------------------------------------------------------------

def resolve_gapping(source: Derivation, target: Derivation, pivots=None, *,
                    lexicon: Lexicon, counter=None) -> ResolutionResult:
    """Front the source over the constituents parallel to the remnants, copy
    its embedded sentence into the target, and derive the result.

    ``pivots`` lists the categories to front; by default the categories of
    the target's remnants.
    """
    _require(target, "Gapping", "Stripping")
    if source.tree is None or source.lf is None or is_gapped(source.tree):
        raise NoSourceSyntax("gapping needs a source clause with overt syntax")
    counter = counter if counter is not None else itertools.count(500)
    if pivots is None:
        pivots = [r.cat for r in target.tree.children]
    fronted = front_parallel(unfront(source.tree), pivots, counter)
    rebuilt = copy_embedded_sentence(fronted, target.tree, counter)
    d = derive(rebuilt, lexicon, counter)
    return ResolutionResult(d.lf, SYNTACTIC, rebuilt,
                            (f"fronted {'/'.join(pivots)} in source",
                             f"reconstructed {rebuilt}"))


# -- VP-ellipsis --------------------------------------------------------

def _elided_site(tree: SynNode):
    """Path of the empty VP and the auxiliary stranded beside it."""
    for path, node in tree.walk():
        if node.cat == "VP" and node.empty and node.trace is None:
            parent = tree.at(path[:-1])
            aux = next((c for c in parent.children if c.cat == "AUX"), None)
            return path, node, aux
    raise ValueError("no elided VP in target")


def _source_vp(source: Derivation, lexicon, intended):
    vps = [n for _, n in embedded_clause(source.tree).walk()
           if n.cat == "VP" and not n.empty]
    if not vps:
        raise NoVPAntecedent("source clause has no VP")
    if intended is None:
        return vps[0]
    for vp in vps:
        if head_constant(vp, lexicon) == intended:
            return vp
    raise NoVPAntecedent(f"no VP headed by {intended!r} in the source")


def resolve_vpe_syntactic(source: Derivation, target: Derivation, *,
                          lexicon: Lexicon, intended: str | None = None,
                          counter=None) -> ResolutionResult:
    """Copy the source VP into the empty VP node and derive the target.

    ``intended`` names the head predicate of the elided VP when the reading
    is fixed (``reverse`` for *[reverse the decision]*).
    """
    _require(target, "VPE")
    if source.tree is None:
        raise NoSourceSyntax("no source syntax to copy from")
    if is_gapped(source.tree):
        raise NoSourceSyntax("source is a gapped clause that was never reconstructed")
    src_vp = _source_vp(source, lexicon, intended)
    path, site, aux = _elided_site(target.tree)
    copied = copy_vp(src_vp, aux, lexicon)
    grafted = target.tree.replace_at(path, copied)
    d = derive(grafted, lexicon, counter)
    if not d.closed:
        raise NoSolution(f"copied VP leaves {to_text(d.lf)} open")
    vp_sem = constituent_sem(copied, lexicon)
    notes = (f"copied VP {' '.join(copied.words())!r}",
             f"anaphor v{site.anaphor} := {to_text(vp_sem)}")
    return ResolutionResult(d.lf, SYNTACTIC, grafted, notes)


def _events(lf: Term):
    """Saturated event subterms ``p(..)(agent)``, outermost first."""
    stack = [lf]
    while stack:
        t = stack.pop(0)
        if isinstance(t, App):
            head, args = head_and_args(t)
            if (t.type == T and isinstance(head, Const) and head.name != "not"
                    and args and args[-1].type == E and is_closed(t)):
                yield t, head, args[-1]
            stack.extend([t.fn, t.arg])
        elif isinstance(t, Abs):
            stack.append(t.body)


def _nominal_events(lf: Term, kb):
    """Events obtained by reading a nominalization as its verb."""
    stack = [lf]
    while stack:
        t = stack.pop(0)
        head, args = head_and_args(t)
        verb = kb.nominal(head.name) if isinstance(head, Const) else None
        if verb is not None and len(args) <= 1:
            pred = Const(verb, PROPERTY)
            if args and args[0].type == E:
                yield App(pred, args[0]), pred, args[0]
            else:
                yield None, pred, None
            continue
        if isinstance(t, App):
            stack.extend([t.fn, t.arg])
        elif isinstance(t, Abs):
            stack.append(t.body)


def _pick(candidates, intended):
    for event, head, agent in candidates:
        if intended is None or head.name == intended:
            return event, head, agent
    return None


def _event_property(anaphor: Var, event, agent, head) -> Term:
    if event is None:
        v = fresh_var(E)
        return Abs(v, App(head, v))
    try:
        return solve_anaphor(anaphor, [agent], event)
    except TypeMismatch as exc:
        raise NoSolution(str(exc)) from exc


def _discharge(target: Derivation, anaphor: Var, prop: Term) -> Term:
    lf = beta_normalize(substitute(target.lf, anaphor, prop))
    if free_vars(lf):
        raise NoSolution(f"{to_text(lf)} still has pending assumptions")
    return lf


def _source_lf(source: Derivation) -> Term:
    if source.lf is None or not is_closed(source.lf):
        raise NoSolution("source clause has no closed sentence-level meaning")
    return source.lf


def _subject_sem(source: Derivation, lexicon):
    clause = embedded_clause(source.tree) if source.tree is not None else None
    subj = next((c for c in clause.children if c.cat == "NP"), None) if clause else None
    if subj is None:
        return None
    sem = constituent_sem(subj, lexicon)
    return sem if isinstance(sem, Const) and sem.type == E else None


def resolve_vpe_semantic(source: Derivation, target: Derivation, kb, *,
                         intended: str | None = None,
                         lexicon: Lexicon | None = None) -> ResolutionResult:
    """Discharge the elided VP's anaphoric property from the source meaning.

    Under auxiliary *do* the property is found by solving ``P(agent) = event``
    over an event in the source; nominalizations are read as events only
    when no verbal event fits.  Under other auxiliaries (*be*, *have*) the
    property is the source clause's own predicate: ``P(subject) = source``.
    The target tree is left untouched.
    """
    _require(target, "VPE")
    lf = _source_lf(source)
    anaphor = target.anaphors()[0].var
    _, _, aux = _elided_site(target.tree)
    if lexicon is not None and aux is not None and lexicon.lemma(aux.word, "AUX") != "do":
        subject = _subject_sem(source, lexicon)
        if subject is None or subject not in set(_constants(lf)):
            raise NoSolution(f"no subject to abstract from {to_text(lf)}")
        if intended is not None and intended not in {c.name for c in _constants(lf)}:
            raise NoSolution(f"no event {intended} in {to_text(lf)}")
        prop = _event_property(anaphor, lf, subject, None)
        return ResolutionResult(_discharge(target, anaphor, prop), SEMANTIC, None,
                                (f"{anaphor.name} := {to_text(prop)}",))
    picked = _pick(_events(lf), intended)
    note = None
    if picked is None:
        picked = _pick(_nominal_events(lf, kb), intended)
        if picked is not None:
            note = f"coerced nominal to {picked[1].name}"
    if picked is None:
        raise NoSolution(f"no event{' ' + intended if intended else ''} in {to_text(lf)}")
    event, head, agent = picked
    prop = _event_property(anaphor, event, agent, head)
    notes = tuple(filter(None, [note, f"{anaphor.name} := {to_text(prop)}"]))
    return ResolutionResult(_discharge(target, anaphor, prop), SEMANTIC, None, notes)


def _constants(t: Term):
    if isinstance(t, Const):
        yield t
    elif isinstance(t, App):
        yield from _constants(t.fn)
        yield from _constants(t.arg)
    elif isinstance(t, Abs):
        yield from _constants(t.body)


def resolve_event_ref(source: Derivation, target: Derivation, *,
                      lexicon: Lexicon, intended: str | None = None) -> ResolutionResult:
    """Bind the event pronoun of *do it* to a non-stative source event."""
    _require(target, "EventRef")
    lf = _source_lf(source)
    anaphor = target.anaphors()[0].var
    picked = _pick(_events(lf), intended)
    if picked is None:
        raise NoSolution(f"no event in {to_text(lf)} for the pronoun")
    event, head, agent = picked
    if lexicon.is_stative(head.name):
        raise NoSolution(f"{head.name} denotes a state, not an event")
    prop = _event_property(anaphor, event, agent, head)
    return ResolutionResult(_discharge(target, anaphor, prop), SEMANTIC, None,
                            (f"{anaphor.name} := {to_text(prop)}",))


def routes_agree(a: ResolutionResult, b: ResolutionResult) -> bool:
    return alpha_eq(a.lf, b.lf)
