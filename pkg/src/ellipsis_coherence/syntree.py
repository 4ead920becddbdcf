"""Labeled syntax trees, the bracketed text format, and the structural
transforms used for reconstruction: fronting of parallel constituents,
copying an embedded sentence into a gapped clause, and VP copying."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .errors import (AmbiguousRemnant, FormMismatch, NoMatch, RemnantMismatch,
                     TreeSyntaxError, UnsuitableAntecedent)
from .instrument import note_reconstruction
from .lamcore import Term

CATEGORIES = frozenset(["S", "NP", "VP", "V", "AUX", "AP", "PP", "P", "N", "DET"])
ARGUMENT_CATEGORIES = ("NP", "AP", "PP")
INT_FEATURES = ("trace", "anaphor", "binds")


@dataclass(frozen=True)
class SynNode:
    cat: str
    features: tuple = ()
    children: tuple = ()
    word: str | None = None
    sem: Term | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.cat not in CATEGORIES:
            raise ValueError(f"unknown category {self.cat!r}")
        feats = self.features
        if isinstance(feats, dict):
            feats = feats.items()
        object.__setattr__(self, "features",
                           tuple(sorted((str(k), str(v)) for k, v in feats)))
        object.__setattr__(self, "children", tuple(self.children))
        if self.empty and (self.children or self.word is not None):
            raise ValueError("an empty node has no children and no word")
        if (self.trace is not None
                and not (self.empty and self.cat in ("NP", "AP", "VP", "PP"))):
            raise ValueError("trace markers belong on empty NP/AP/VP/PP nodes")

    # -- features -------------------------------------------------------
    def feature(self, key, default=None):
        for k, v in self.features:
            if k == key:
                return v
        return default

    def has(self, flag) -> bool:
        return any(k == flag for k, _ in self.features)

    def _int(self, key):
        value = self.feature(key)
        return None if value is None else int(value)

    @property
    def empty(self) -> bool:
        return self.has("elided")

    @property
    def trace(self):
        return self._int("trace")

    @property
    def anaphor(self):
        return self._int("anaphor")

    @property
    def binds(self):
        return self._int("binds")

    @property
    def voice(self):
        return self.feature("voice")

    @property
    def vform(self):
        return self.feature("vform")

    @property
    def is_leaf(self) -> bool:
        return self.word is not None

    def with_features(self, **changes) -> "SynNode":
        """Set (value) or drop (None) features; flags take ``""``."""
        feats = dict(self.features)
        for k, v in changes.items():
            if v is None:
                feats.pop(k, None)
            else:
                feats[k] = str(v)
        return replace(self, features=tuple(feats.items()))

    def with_children(self, children) -> "SynNode":
        return replace(self, children=tuple(children))

    # -- traversal ------------------------------------------------------
    def walk(self, path=()) -> Iterator[tuple[tuple, "SynNode"]]:
        """Pre-order ``(path, node)`` pairs."""
        yield path, self
        for i, child in enumerate(self.children):
            yield from child.walk(path + (i,))

    def at(self, path) -> "SynNode":
        node = self
        for i in path:
            node = node.children[i]
        return node

    def replace_at(self, path, new) -> "SynNode":
        if not path:
            return new
        i, rest = path[0], path[1:]
        kids = list(self.children)
        kids[i] = kids[i].replace_at(rest, new)
        return self.with_children(kids)

    def words(self) -> list[str]:
        if self.word is not None:
            return [self.word]
        return [w for c in self.children for w in c.words()]

    def __str__(self):
        return to_bracketed(self)


def empty_node(cat, **features) -> SynNode:
    return SynNode(cat, dict(elided="", **features))


# -- bracketed text -----------------------------------------------------

def _feature_text(node):
    if not node.features:
        return ""
    parts = [k if v == "" else f"{k}={v}" for k, v in node.features]
    return "[" + ",".join(parts) + "]"


def to_bracketed(node: SynNode) -> str:
    head = node.cat + _feature_text(node)
    if node.word is not None:
        return f"({head} {node.word})"
    if not node.children:
        return f"({head})"
    return f"({head} " + " ".join(to_bracketed(c) for c in node.children) + ")"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")
_HEAD = re.compile(r"^([A-Z]+)(?:\[([^\]]*)\])?$")


def read_bracketed(text: str) -> SynNode:
    """Read one tree.  ``(VP[elided] (AUX did))`` is accepted as shorthand
    for ``(VP (AUX did) (VP[elided]))``."""
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        tokens.append((m.lastindex, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    if text[pos:].strip():
        raise TreeSyntaxError("unexpected character", pos)

    i = 0

    def node():
        nonlocal i
        if i >= len(tokens):
            raise TreeSyntaxError("unbalanced bracket", len(text))
        kind, value, at = tokens[i]
        if kind != 1:
            raise TreeSyntaxError(f"expected '(' but found {value!r}", at)
        i += 1
        if i >= len(tokens) or tokens[i][0] != 3:
            raise TreeSyntaxError("missing category", at + 1)
        _, head, head_at = tokens[i]
        i += 1
        m = _HEAD.match(head)
        if not m or m.group(1) not in CATEGORIES:
            raise TreeSyntaxError(f"bad category {head!r}", head_at)
        feats = {}
        for part in filter(None, (m.group(2) or "").split(",")):
            k, _, v = part.partition("=")
            feats[k.strip()] = v.strip()
        kids, words = [], []
        while True:
            if i >= len(tokens):
                raise TreeSyntaxError("unbalanced bracket", len(text))
            kind, value, at = tokens[i]
            if kind == 2:
                i += 1
                break
            if kind == 1:
                kids.append(node())
            else:
                words.append((value, at))
                i += 1
        if words and (kids or len(words) > 1):
            raise TreeSyntaxError("a terminal node holds exactly one word",
                                  words[0][1])
        cat = m.group(1)
        if "elided" in feats and kids:
            # shorthand: auxiliary inside an elided VP
            feats.pop("elided")
            return SynNode(cat, feats, kids + [empty_node(cat)])
        word = words[0][0] if words else None
        return SynNode(cat, feats, kids, word)

    tree = node()
    if i != len(tokens):
        raise TreeSyntaxError("trailing input", tokens[i][2])
    return tree


# -- clause structure ---------------------------------------------------

def is_fronted(tree: SynNode) -> bool:
    return tree.cat == "S" and tree.has("fronted")


def is_gapped(tree: SynNode) -> bool:
    return tree.cat == "S" and (tree.has("gapped") or tree.has("stripped"))


def embedded_clause(tree: SynNode) -> SynNode:
    """The clause proper: the embedded S of a fronted tree, else the tree."""
    return tree.children[-1] if is_fronted(tree) else tree


def unfront(tree: SynNode) -> SynNode:
    """Put fronted constituents back at their trace sites."""
    if not is_fronted(tree):
        return tree
    binders = {b.binds: b.with_features(binds=None) for b in tree.children[:-1]}
    inner = tree.children[-1]
    for path, node in list(inner.walk()):
        if node.trace in binders:
            inner = inner.replace_at(path, binders[node.trace])
    feats = dict(tree.features)
    feats.pop("fronted")
    return inner.with_features(**{k: v for k, v in feats.items()})


def _argument_paths(tree: SynNode):
    """Linear-order paths to constituents eligible for fronting."""
    out = []

    def vp(node, path):
        for i, c in enumerate(node.children):
            p = path + (i,)
            if c.cat == "VP" and not c.empty:
                vp(c, p)
            elif c.cat in ARGUMENT_CATEGORIES and not c.empty:
                out.append(p)

    for i, c in enumerate(tree.children):
        if c.cat in ARGUMENT_CATEGORIES and not c.empty:
            out.append((i,))
        elif c.cat == "VP":
            vp(c, (i,))
    return out


def front_parallel(tree: SynNode, remnant_categories: Sequence[str],
                   counter=None, strict: bool = False) -> SynNode:
    """Adjoin the constituents parallel to the remnants at the clause front,
    leaving trace-marked empty nodes behind.

    Ties go to the leftmost unused constituent unless ``strict``.
    """
    if not remnant_categories:
        return tree
    note_reconstruction("front_parallel")
    counter = counter if counter is not None else itertools.count(1)
    eligible = _argument_paths(tree)
    used = []
    for cat in remnant_categories:
        cands = [p for p in eligible if tree.at(p).cat == cat and p not in used]
        if not cands:
            raise NoMatch(f"no {cat} constituent to front in {tree}")
        if strict and len(cands) > 1:
            raise AmbiguousRemnant(f"{len(cands)} {cat} constituents match")
        used.append(cands[0])
    inner = tree.with_features(fronted=None)
    binders = []
    for path in used:
        tid = next(counter)
        original = tree.at(path)
        binders.append(original.with_features(binds=tid))
        inner = inner.replace_at(path, empty_node(original.cat, trace=tid))
    outer = [(k, v) for k, v in tree.features] + [("fronted", "")]
    return SynNode("S", outer, binders + [inner])


def copy_embedded_sentence(fronted_source: SynNode, gapped_target: SynNode,
                           counter=None) -> SynNode:
    """Rebuild a gapped/stripped clause around a copy of the source's
    embedded sentence, with fresh traces bound by the target remnants."""
    if not is_fronted(fronted_source):
        raise ValueError("source has not been fronted")
    if not is_gapped(gapped_target):
        raise ValueError("target is not a gapped or stripped clause")
    note_reconstruction("copy_embedded_sentence")
    counter = counter if counter is not None else itertools.count(1)
    binders = fronted_source.children[:-1]
    inner = fronted_source.children[-1]
    remnants = gapped_target.children
    src_cats = [b.cat for b in binders]
    tgt_cats = [r.cat for r in remnants]
    if src_cats != tgt_cats:
        raise RemnantMismatch(f"remnants {tgt_cats} do not match fronted {src_cats}")
    renumber = {b.binds: next(counter) for b in binders}
    for path, node in list(inner.walk()):
        if node.trace in renumber:
            inner = inner.replace_at(path, node.with_features(trace=renumber[node.trace]))
    new_remnants = [r.with_features(binds=renumber[b.binds])
                    for r, b in zip(remnants, binders)]
    feats = dict(gapped_target.features)
    feats.pop("gapped", None)
    feats.pop("stripped", None)
    feats["fronted"] = ""
    return SynNode("S", feats, new_remnants + [inner])


def unbound_traces(node: SynNode) -> set[int]:
    traces = {n.trace for _, n in node.walk() if n.trace is not None}
    bound = {n.binds for _, n in node.walk() if n.binds is not None}
    return traces - bound


def head_verb_path(vp: SynNode):
    """Path (relative to ``vp``) of the V heading a VP, following VP
    complements and VP-adjunction; None if the VP has no verb."""
    for i, c in enumerate(vp.children):
        if c.cat == "V":
            return (i,)
    for i, c in enumerate(vp.children):
        if c.cat == "VP" and not c.empty:
            sub = head_verb_path(c)
            if sub is not None:
                return (i,) + sub
    return None


def _aux_complement(vp: SynNode):
    aux = next((c for c in vp.children if c.cat == "AUX"), None)
    comp = next((c for c in vp.children if c.cat == "VP" and not c.empty), None)
    return aux, comp


def _is_passive(vp: SynNode) -> bool:
    if vp.voice == "passive":
        return True
    _, comp = _aux_complement(vp)
    return comp is not None and _is_passive(comp)


def copy_vp(source_vp: SynNode, target_aux: SynNode, lexicon) -> SynNode:
    """Copy a source VP for grafting at an empty VP under ``target_aux``.

    Under auxiliary *do* the head verb is lemmatized to its base form; under
    other auxiliaries the source must carry the same auxiliary and its
    complement VP is copied.
    """
    note_reconstruction("copy_vp")
    if source_vp.cat != "VP" or source_vp.empty:
        raise ValueError("copy_vp needs an overt VP")
    loose = unbound_traces(source_vp)
    if loose:
        raise UnsuitableAntecedent(
            f"VP contains trace(s) {sorted(loose)} bound outside it")
    aux_lemma = lexicon.lemma(target_aux.word, "AUX")
    src_aux, comp = _aux_complement(source_vp)
    if src_aux is not None and comp is not None:
        if lexicon.lemma(src_aux.word, "AUX") == aux_lemma:
            return comp
        kind = "voice" if _is_passive(source_vp) else "form"
        raise FormMismatch(
            f"{kind} mismatch: {' '.join(source_vp.words())!r} under {target_aux.word!r}")
    if aux_lemma != "do" or _is_passive(source_vp):
        kind = "voice" if _is_passive(source_vp) else "form"
        raise FormMismatch(
            f"{kind} mismatch: {' '.join(source_vp.words())!r} under {target_aux.word!r}")
    path = head_verb_path(source_vp)
    if path is None:
        raise FormMismatch(f"no verb to lemmatize in {source_vp}")
    verb = source_vp.at(path)
    base = verb.with_features(vform="base")
    base = replace(base, word=lexicon.lemma(verb.word, "V"))
    return source_vp.replace_at(path, base)


# -- alignment ----------------------------------------------------------

def clause_roles(tree: SynNode) -> list[tuple[str, SynNode]]:
    """Structural roles of a clause's constituents, outermost first.

    Traces are replaced by the constituents that bind them, so a fronted or
    reconstructed clause exposes the same roles as its unfronted version.
    """
    if is_gapped(tree):
        return [(f"remnant{i}", c) for i, c in enumerate(tree.children)]
    binders = {}
    if is_fronted(tree):
        binders = {c.binds: c for c in tree.children[:-1]}
    clause = embedded_clause(tree)
    roles = []
    comps = itertools.count()

    def resolve(node):
        if node.trace is not None and node.trace in binders:
            return binders[node.trace]
        return node

    def vp(node):
        for c in node.children:
            if c.cat == "AUX":
                continue
            if c.cat == "V":
                roles.append(("head", c))
            elif c.cat == "VP" and c.empty:
                roles.append(("vp", c))
            elif c.cat == "VP":
                vp(c)
            else:
                roles.append((f"comp{next(comps)}", resolve(c)))

    subject_seen = False
    for c in clause.children:
        if c.cat == "VP":
            vp(c)
        elif c.cat == "NP" and not subject_seen:
            roles.append(("subj", resolve(c)))
            subject_seen = True
        else:
            roles.append((f"comp{next(comps)}", resolve(c)))
    return roles


@dataclass(frozen=True)
class Alignment:
    pairs: tuple
    unpaired_source: tuple = ()
    unpaired_target: tuple = ()

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def align_parallel(source: SynNode, target: SynNode) -> Alignment:
    """Pair constituents filling the same role with the same category."""
    src = clause_roles(source)
    tgt = dict((role, node) for role, node in clause_roles(target))
    pairs, used = [], set()
    lone_src = []
    for role, node in src:
        other = tgt.get(role)
        if other is not None and other.cat == node.cat and role not in used:
            pairs.append((node, other))
            used.add(role)
        else:
            lone_src.append(node)
    lone_tgt = [n for r, n in clause_roles(target) if r not in used]
    return Alignment(tuple(pairs), tuple(lone_src), tuple(lone_tgt))
