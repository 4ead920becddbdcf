"""Closed lexicon, tree ingestion, compositional derivation and form
classification.

Lexicon records are tab-separated::

    word  category  semtype  constant  lemma  features

``semtype``/``constant`` are ``-`` for semantically vacuous words; the
constant column may also hold a lambda term in printed syntax.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import InputError, TypeClash, TypeMismatch, UnknownWord
from .lamcore import (Abs, App, Arrow, Assumption, Const, E, T, Term, Var,
                      beta_normalize, free_vars, fresh_var, parse_term, parse_type, to_text)
from .syntree import SynNode, head_verb_path, is_fronted, is_gapped, read_bracketed

NEG = Const("not", Arrow(T, T))
SOMEONE = Const("someone", E)
PROPERTY = Arrow(E, T)
# surface forms recognised before lexical lookup
EVENT_PRONOUNS = (["it"], ["that"], ["so"])


@dataclass(frozen=True)
class LexEntry:
    word: str
    category: str
    semtype: object
    sem: Term | None
    lemma: str
    features: tuple = ()

    def has(self, flag):
        return any(k == flag for k, _ in self.features)


class Lexicon:
    def __init__(self, entries):
        self._entries = {}
        self._by_constant = {}
        for e in entries:
            key = (e.word, e.category)
            if key in self._entries:
                raise InputError(f"duplicate lexicon entry {e.word}/{e.category}")
            self._entries[key] = e
            if isinstance(e.sem, Const):
                self._by_constant.setdefault(e.sem.name, e)

    @classmethod
    def load(cls, path) -> "Lexicon":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read lexicon {path}: {exc.strerror}") from exc
        return cls.from_text(text)

    @classmethod
    def from_text(cls, text: str) -> "Lexicon":
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            cols = line.split("\t")
            if len(cols) != 6:
                raise InputError(f"lexicon line {lineno}: expected 6 columns")
            rows.append((lineno, [c.strip() for c in cols]))
        # constants first, so lambda-valued entries can mention them
        signature = {NEG.name: NEG.type, SOMEONE.name: SOMEONE.type}
        for lineno, (word, cat, ty, const, lemma, feats) in rows:
            if ty != "-" and const != "-" and "\\" not in const and " " not in const:
                sty = parse_type(ty)
                if signature.get(const, sty) != sty:
                    raise InputError(f"lexicon line {lineno}: {const} retyped")
                signature[const] = sty
        entries = []
        for lineno, (word, cat, ty, const, lemma, feats) in rows:
            sty = None if ty == "-" else parse_type(ty)
            sem = None
            if const != "-":
                if sty is None:
                    raise InputError(f"lexicon line {lineno}: constant without type")
                lambda_valued = "\\" in const or " " in const
                sem = parse_term(const, signature) if lambda_valued else Const(const, sty)
                if sem.type != sty:
                    raise InputError(f"lexicon line {lineno}: term type {sem.type} != {sty}")
            fs = []
            if feats != "-":
                for part in feats.split(","):
                    k, _, v = part.partition("=")
                    fs.append((k.strip(), v.strip()))
            entries.append(LexEntry(word, cat, sty, sem,
                                    word if lemma == "-" else lemma, tuple(fs)))
        lex = cls(entries)
        lex.signature = signature
        return lex

    def entry(self, word, category) -> LexEntry:
        try:
            return self._entries[(word, category)]
        except KeyError:
            raise UnknownWord(word, category) from None

    def lemma(self, word, category) -> str:
        return self.entry(word, category).lemma

    def by_constant(self, name) -> LexEntry | None:
        return self._by_constant.get(name)

    def is_stative(self, constant_name) -> bool:
        e = self.by_constant(constant_name)
        return e is not None and e.has("stative")

    def words(self):
        return sorted(self._entries)


@dataclass(frozen=True)
class FormProfile:
    kind: str  # Full | Gapping | Stripping | VPE | EventRef
    empty_in_syntax: bool
    anaphoric_in_semantics: bool

    @classmethod
    def of(cls, kind):
        empty, anaphoric = _FEATURES[kind]
        return cls(kind, empty, anaphoric)


_FEATURES = {
    "Full": (False, False),
    "Gapping": (True, False),
    "Stripping": (True, False),
    "VPE": (True, True),
    "EventRef": (False, True),
}


@dataclass(frozen=True)
class Derivation:
    tree: SynNode
    lf: Term | None
    pending: tuple = ()
    profile: FormProfile = field(default=None, compare=False)

    @property
    def closed(self) -> bool:
        return self.lf is not None and not free_vars(self.lf)

    def anaphors(self):
        return [a for a in self.pending if a.flavor == "anaphor"]


# -- ingestion ----------------------------------------------------------

def _is_event_pronoun(node, lexicon):
    if node.cat != "NP":
        return False
    if not node.is_leaf and len(node.children) == 1:
        node = node.children[0]
    return node.is_leaf and lexicon.entry(node.word, node.cat).has("event-pronoun")


def parse_tree(text: str, lexicon: Lexicon, counter=None) -> SynNode:
    """Read a bracketed tree and resolve it against the lexicon.

    Leaves get their lexical semantics and verb form, overt VPs default to
    active voice, and elided VPs / event pronouns receive anaphor markers.
    """
    counter = counter if counter is not None else itertools.count(1)
    return _resolve(read_bracketed(text), lexicon, counter)


def _resolve(node, lexicon, counter):
    if node.is_leaf:
        e = lexicon.entry(node.word, node.cat)
        vform = dict(e.features).get("vform")
        if vform and node.vform is None:
            node = node.with_features(vform=vform)
        node = replace(node, sem=e.sem)
    elif node.empty:
        if node.cat == "VP" and node.trace is None and node.anaphor is None:
            node = node.with_features(anaphor=next(counter))
        return node
    else:
        node = node.with_children(_resolve(c, lexicon, counter) for c in node.children)
    if node.cat == "VP" and node.voice is None:
        node = node.with_features(voice="active")
    if node.cat == "NP":
        ref = node.feature("ref")
        if ref is not None and lexicon.signature.get(ref) != E:
            raise UnknownWord(ref, "entity")
        if _is_event_pronoun(node, lexicon) and node.anaphor is None:
            node = node.with_features(anaphor=next(counter))
    return node


# -- derivation ---------------------------------------------------------

def _combine(a: Term, b: Term, node) -> Term:
    ta, tb = a.type, b.type
    if isinstance(ta, Arrow) and ta.arg == tb:
        return App(a, b)
    if isinstance(tb, Arrow) and tb.arg == ta:
        return App(b, a)
    x = Var("v0", E)
    if ta == Arrow(T, T) and tb == PROPERTY:
        return _lam(x, lambda v: App(a, App(b, v)), a, b)
    if tb == Arrow(T, T) and ta == PROPERTY:
        return _lam(x, lambda v: App(b, App(a, v)), a, b)
    if ta == Arrow(T, PROPERTY) and tb == PROPERTY:
        # control: the subject also fills the complement's subject slot
        return _lam(x, lambda v: App(App(a, App(b, v)), v), a, b)
    raise TypeClash(f"cannot combine {to_text(a)} : {ta} with "
                    f"{to_text(b)} : {tb} in {node}")


def _lam(x, build, *avoid):
    v = fresh_var(x.type, *avoid)
    return Abs(v, build(v))


class _Deriver:
    def __init__(self, lexicon, counter):
        self.lexicon = lexicon
        self.counter = counter
        self.pending = []
        self.trace_types = {}

    def sem(self, node):
        if node.empty:
            return self.empty(node)
        if node.cat == "NP" and node.feature("ref") is not None:
            return Const(node.feature("ref"), E)
        if node.cat == "NP" and _is_event_pronoun(node, self.lexicon):
            aid = node.anaphor if node.anaphor is not None else next(self.counter)
            v = Var(f"v{aid}", PROPERTY)
            self.pending.append(Assumption(aid, "anaphor", v))
            return v
        if node.is_leaf:
            return self.lexicon.entry(node.word, node.cat).sem
        if node.cat == "S" and is_fronted(node):
            return self.fronted(node)
        if node.cat == "VP":
            self.check_event_pronoun(node)
            if node.voice == "passive" and any(c.cat == "V" for c in node.children):
                return self.passive(node)
        sems = [s for s in (self.sem(c) for c in node.children) if s is not None]
        if not sems:
            return None
        out = sems[0]
        for s in sems[1:]:
            out = _combine(out, s, node)
        out = beta_normalize(out)
        if node.cat == "S" and node.has("neg"):
            out = App(NEG, out)
        return out

    def empty(self, node):
        if node.trace is not None:
            ty = self.trace_types.get(node.trace, PROPERTY if node.cat in ("AP", "VP") else E)
            v = Var(f"v{node.trace}", ty)
            self.pending.append(Assumption(node.trace, "trace", v))
            return v
        aid = node.anaphor if node.anaphor is not None else next(self.counter)
        v = Var(f"v{aid}", PROPERTY)
        self.pending.append(Assumption(aid, "anaphor", v))
        return v

    def check_event_pronoun(self, vp):
        for c in vp.children:
            if c.cat == "NP" and _is_event_pronoun(c, self.lexicon):
                verbs = [v for v in vp.children if v.cat == "V"]
                if not verbs or self.lexicon.lemma(verbs[0].word, "V") != "do":
                    raise TypeClash(
                        f"event pronoun {c.words()[0]!r} needs main verb do in {vp}")

    def passive(self, vp):
        verb = None
        agent = None
        comps = []
        for c in vp.children:
            if c.cat == "V" and verb is None:
                verb = self.sem(c)
            elif (c.cat == "PP" and c.children and c.children[0].cat == "P"
                  and self.lexicon.lemma(c.children[0].word, "P") == "by"):
                agent = self.sem(c)
            else:
                s = self.sem(c)
                if s is not None:
                    comps.append(s)
        if agent is None:
            agent = SOMEONE
        x = Var("v0", E)
        try:
            return beta_normalize(_lam(x, lambda v: _apply_all(verb, [v, *comps, agent]),
                                       verb, agent, *comps))
        except TypeMismatch as exc:
            raise TypeClash(f"passive VP does not compose: {vp}") from exc

    def fronted(self, node):
        binders = node.children[:-1]
        bsems = []
        for b in binders:
            s = self.sem(b)
            bsems.append(s)
            self.trace_types[b.binds] = s.type
        inner = self.sem(node.children[-1])
        for b, s in zip(binders, bsems):
            v = Var(f"v{b.binds}", s.type)
            inner = App(Abs(v, inner), s)
            self.pending = [a for a in self.pending
                            if not (a.flavor == "trace" and a.id == b.binds)]
        out = beta_normalize(inner)
        if node.has("neg"):
            out = App(NEG, out)
        return out


def _apply_all(fn, args):
    for a in args:
        fn = App(fn, a)
    return fn


def derive(tree: SynNode, lexicon: Lexicon, counter=None) -> Derivation:
    """Compose the sentence meaning bottom-up by typed application.

    Gapped and stripped clauses get no sentence-level meaning.
    """
    profile = classify_form(tree)
    if is_gapped(tree):
        return Derivation(tree, None, (), profile)
    d = _Deriver(lexicon, counter if counter is not None else itertools.count(1000))
    try:
        lf = d.sem(tree)
    except TypeMismatch as exc:
        raise TypeClash(f"{exc} in {tree}") from exc
    if lf is None or lf.type != T:
        raise TypeClash(f"clause does not denote a proposition: {tree}")
    return Derivation(tree, lf, tuple(d.pending), profile)


def constituent_sem(node: SynNode, lexicon: Lexicon) -> Term | None:
    """Meaning of a single constituent (free variables for its traces)."""
    return _Deriver(lexicon, itertools.count(1000)).sem(node)


def head_constant(vp: SynNode, lexicon: Lexicon) -> str | None:
    """Name of the constant contributed by the verb heading ``vp``."""
    path = head_verb_path(vp)
    if path is None:
        return None
    verb = vp.at(path)
    sem = lexicon.entry(verb.word, verb.cat).sem
    return sem.name if isinstance(sem, Const) else None


def classify_form(tree: SynNode) -> FormProfile:
    if is_gapped(tree):
        return FormProfile.of("Stripping" if tree.has("stripped") else "Gapping")
    for _, node in tree.walk():
        if node.cat == "VP" and node.empty and node.trace is None:
            return FormProfile.of("VPE")
    for _, node in tree.walk():
        if node.cat == "VP" and any(c.cat == "V" for c in node.children):
            if any(c.cat == "NP" and not c.empty
                   and (c.anaphor is not None or c.words() in EVENT_PRONOUNS)
                   for c in node.children):
                return FormProfile.of("EventRef")
    return FormProfile.of("Full")
