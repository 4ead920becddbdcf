"""Coherence relations and the two kinds of discourse inference.

Common Topic inference compares parallel entities and predicates of two
clauses.  Coherent Situation inference abduces a plausible implication
between the clauses' whole-sentence meanings, by bounded search over
``plausible`` edges of the knowledge base.

Knowledge-base records, one per line::

    prop <q> <entity> [neg]      isa <p> <parent>      plausible <p> <q>
    antonym <p> <q>              member <b> <a>        subset <b> <a>
    same <a> <b>                 nominal <noun> <verb>

A predicate in ``plausible`` may carry a leading ``~`` for its negation.
Predicates name a head constant optionally followed by the heads of its
arguments, joined with dots (``become.upset``).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FamilyError, InputError, MissingSemantics, UnknownConjunction
from .lamcore import Const, Term, alpha_eq, head_and_args
from .syntree import align_parallel

COMMON_TOPIC = "CommonTopic"
COHERENT_SITUATION = "CoherentSituation"


@dataclass(frozen=True)
class CoherenceRelation:
    name: str
    family: str
    schema: str

    def __str__(self):
        return self.name


RELATIONS = {r.name: r for r in [
    CoherenceRelation("Parallel", COMMON_TOPIC, "p0=p1; a~b"),
    CoherenceRelation("Contrast", COMMON_TOPIC, "p0=~p1; a~b | p0=p1; a!~b"),
    CoherenceRelation("Exemplification", COMMON_TOPIC, "p0=p1; b in a"),
    CoherenceRelation("Elaboration", COMMON_TOPIC, "p0=p1; a=b"),
    CoherenceRelation("Result", COHERENT_SITUATION, "A->B"),
    CoherenceRelation("Explanation", COHERENT_SITUATION, "B->A"),
    CoherenceRelation("ViolatedExpectation", COHERENT_SITUATION, "A->~B"),
    CoherenceRelation("DenialOfPreventer", COHERENT_SITUATION, "B->~A"),
]}

_CONJUNCTIONS = {
    "and": ["Parallel", "Result"],
    "and also": ["Parallel"],
    "and (as a result)": ["Result"],
    "therefore": ["Result"],
    "and therefore": ["Result"],
    "but": ["Contrast", "ViolatedExpectation"],
    "but not": ["Contrast"],
    "because": ["Explanation"],
    "even though": ["DenialOfPreventer"],
    "despite": ["DenialOfPreventer"],
    "despite the fact that": ["DenialOfPreventer"],
    "although": ["DenialOfPreventer"],
    "for example": ["Exemplification"],
    "for instance": ["Exemplification"],
    "in other words": ["Elaboration"],
}

_READINGS = {"symmetric": COMMON_TOPIC, "asymmetric": COHERENT_SITUATION}


def candidate_relations(conjunction: str, reading: str | None = None) -> list[CoherenceRelation]:
    """Relations a conjunction can signal.

    ``reading`` is ``symmetric``/``asymmetric`` (keeping the Common Topic or
    Coherent Situation candidates) or the name of one candidate relation.
    """
    key = " ".join(conjunction.lower().split())
    if key not in _CONJUNCTIONS:
        raise UnknownConjunction(f"unknown conjunction {conjunction!r}")
    rels = [RELATIONS[n] for n in _CONJUNCTIONS[key]]
    if reading is None:
        return rels
    if reading in _READINGS:
        picked = [r for r in rels if r.family == _READINGS[reading]]
    else:
        picked = [r for r in rels if r.name == reading]
    if not picked:
        raise UnknownConjunction(f"{conjunction!r} has no {reading} reading")
    return picked


# -- knowledge base -----------------------------------------------------

@dataclass
class KnowledgeBase:
    props: dict = field(default_factory=dict)       # entity -> {q: polarity}
    isa: dict = field(default_factory=dict)         # p -> set of parents
    plausible: set = field(default_factory=set)     # ((p, pol), (q, pol))
    antonyms: set = field(default_factory=set)      # frozenset pairs
    members: set = field(default_factory=set)       # (b, a)
    subsets: set = field(default_factory=set)       # (b, a)
    identities: set = field(default_factory=set)    # frozenset pairs
    nominals: dict = field(default_factory=dict)    # noun -> verb

    @classmethod
    def load(cls, path) -> "KnowledgeBase":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read knowledge base {path}: {exc.strerror}") from exc
        return cls.from_text(text)

    @classmethod
    def from_text(cls, text: str) -> "KnowledgeBase":
        kb = cls()
        for lineno, line in enumerate(text.splitlines(), 1):
            parts = line.split("#", 1)[0].split()
            if not parts:
                continue
            kind, args = parts[0], parts[1:]
            try:
                kb._add(kind, args)
            except (ValueError, KeyError) as exc:
                raise InputError(f"knowledge base line {lineno}: {exc}") from exc
        kb._check_acyclic()
        return kb

    def _add(self, kind, args):
        if kind == "prop":
            if len(args) not in (2, 3) or (len(args) == 3 and args[2] != "neg"):
                raise ValueError("prop <q> <entity> [neg]")
            self.props.setdefault(args[1], {})[args[0]] = len(args) == 2
            return
        if len(args) != 2:
            raise ValueError(f"{kind} takes two arguments")
        a, b = args
        if kind == "isa":
            self.isa.setdefault(a, set()).add(b)
        elif kind == "plausible":
            self.plausible.add((_literal(a), _literal(b)))
        elif kind == "antonym":
            self.antonyms.add(frozenset([a, b]))
        elif kind == "member":
            self.members.add((a, b))
        elif kind == "subset":
            self.subsets.add((a, b))
        elif kind == "same":
            self.identities.add(frozenset([a, b]))
        elif kind == "nominal":
            self.nominals[a] = b
        else:
            raise ValueError(f"unknown record {kind!r}")

    def _check_acyclic(self):
        state = {}

        def visit(p):
            if state.get(p) == 1:
                raise InputError(f"isa cycle through {p}")
            if state.get(p) == 2:
                return
            state[p] = 1
            for q in self.isa.get(p, ()):
                visit(q)
            state[p] = 2

        for p in list(self.isa):
            visit(p)

    def holds(self, q, entity):
        return self.props.get(entity, {}).get(q)

    def nominal(self, noun):
        return self.nominals.get(noun)

    def antonymous(self, p, q) -> bool:
        return frozenset([p, q]) in self.antonyms and p != q

    def antonyms_of(self, p):
        return sorted(x for pair in self.antonyms if p in pair for x in pair if x != p)

    def same(self, a, b) -> bool:
        return a == b or frozenset([a, b]) in self.identities

    def entities(self):
        return sorted(self.props)


def _literal(token):
    return (token[1:], False) if token.startswith("~") else (token, True)


# -- similarity and generalization --------------------------------------

def similar(a, b, kb: KnowledgeBase) -> bool:
    """Some property q holds of both (declared facts only)."""
    pa, pb = kb.props.get(a, {}), kb.props.get(b, {})
    return any(pa[q] and pb.get(q) for q in pa)


def dissimilar(a, b, kb: KnowledgeBase) -> bool:
    """Some property q holds of ``a`` and is declared false of ``b``."""
    pa, pb = kb.props.get(a, {}), kb.props.get(b, {})
    return any(pa[q] and pb.get(q) is False for q in pa)


def _ancestors(p, kb, depth):
    out = {p: 0}
    frontier = [p]
    for d in range(1, depth + 1):
        frontier = [q for x in frontier for q in sorted(kb.isa.get(x, ()))]
        for q in frontier:
            out.setdefault(q, d)
    return out


def generalize(p0, p1, kb: KnowledgeBase, depth: int = 3):
    """Least common subsumer of two predicates in the isa graph."""
    if p0 == p1:
        return p0
    a0, a1 = _ancestors(p0, kb, depth), _ancestors(p1, kb, depth)
    common = set(a0) & set(a1)
    if not common:
        return None
    return min(common, key=lambda q: (a0[q] + a1[q], max(a0[q], a1[q]), q))


# -- clause meanings ----------------------------------------------------

def _strip_negation(lf):
    positive = True
    while True:
        head, args = head_and_args(lf)
        if isinstance(head, Const) and head.name == "not" and len(args) == 1:
            lf = args[0]
            positive = not positive
        else:
            return lf, positive


def _name(term):
    head, _ = head_and_args(term)
    return head.name if isinstance(head, Const) else "?"


def decompose(lf: Term):
    """``(head name, argument terms, polarity)`` of a sentence meaning."""
    core, positive = _strip_negation(lf)
    head, args = head_and_args(core)
    return (head.name if isinstance(head, Const) else None), args, positive


def predicate_keys(lf: Term):
    """Dotted predicate names for ``lf``, least to most specific, and its
    polarity."""
    core, positive = _strip_negation(lf)
    head, args = head_and_args(core)
    keys = [_name(head)]
    for a in args:
        keys.append(keys[-1] + "." + _name(a))
    return keys, positive


# -- Common Topic -------------------------------------------------------

@dataclass(frozen=True)
class CTResult:
    satisfied: bool
    pairs: tuple = ()
    predicates: tuple = ()
    verdicts: tuple = ()
    reason: str = ""
    alignment: object = None


def _similar_terms(a, b, kb):
    if isinstance(a, Const) and isinstance(b, Const):
        return similar(a.name, b.name, kb)
    if alpha_eq(a, b):
        return True
    ha, aa = head_and_args(a)
    hb, ab = head_and_args(b)
    return (isinstance(ha, Const) and ha == hb and len(aa) == len(ab) and aa
            and all(_similar_terms(x, y, kb) for x, y in zip(aa, ab)))


def _dissimilar_terms(a, b, kb):
    if not (isinstance(a, Const) and isinstance(b, Const)):
        return False
    return dissimilar(a.name, b.name, kb) or dissimilar(b.name, a.name, kb)


def _included(b, a, kb):
    if not (isinstance(a, Const) and isinstance(b, Const)):
        return False
    return (b.name, a.name) in kb.members or (b.name, a.name) in kb.subsets


def _identical(a, b, kb):
    if isinstance(a, Const) and isinstance(b, Const):
        return kb.same(a.name, b.name)
    return alpha_eq(a, b)


def _need_semantics(*ds):
    for d in ds:
        if d is None or d.lf is None:
            raise MissingSemantics("clause has no sentence-level semantics")


def check_common_topic(rel: CoherenceRelation, source, target, kb: KnowledgeBase) -> CTResult:
    """Check a Common Topic relation between two fully reconstructed clauses.

    Parallel constituents are aligned in the syntax; the predicates and
    arguments compared are read off the aligned sentence meanings.
    """
    if rel.family != COMMON_TOPIC:
        raise FamilyError(f"{rel.name} is not a Common Topic relation")
    _need_semantics(source, target)
    alignment = None
    if source.tree is not None and target.tree is not None:
        alignment = align_parallel(source.tree, target.tree)
    p0, args0, pos0 = decompose(source.lf)
    p1, args1, pos1 = decompose(target.lf)
    if p0 is None or p1 is None or len(args0) != len(args1):
        return CTResult(False, reason="clauses have no parallel predicate-argument structure",
                        alignment=alignment)
    pairs = tuple(zip(args0, args1))
    general = generalize(p0, p1, kb)
    same_pred = general is not None and pos0 == pos1
    opposed = ((general is not None and pos0 != pos1)
               or (kb.antonymous(p0, p1) and pos0 == pos1))
    sims = [_similar_terms(a, b, kb) for a, b in pairs]
    preds = (p0 if pos0 else "~" + p0, p1 if pos1 else "~" + p1, general)

    if rel.name == "Parallel":
        ok, verdicts = same_pred and all(sims), sims
        why = "predicates differ" if not same_pred else "arguments not similar"
    elif rel.name == "Contrast":
        dis = [_dissimilar_terms(a, b, kb) for a, b in pairs]
        ok = (opposed and all(sims)) or (same_pred and any(dis))
        verdicts = dis
        why = "neither opposed predicates nor dissimilar arguments"
    elif rel.name == "Exemplification":
        verdicts = [_included(b, a, kb) for a, b in pairs]
        ok = same_pred and all(verdicts)
        why = "predicates differ" if not same_pred else "not an instance"
    else:
        verdicts = [_identical(a, b, kb) for a, b in pairs]
        ok = same_pred and all(verdicts)
        why = "predicates differ" if not same_pred else "arguments not identical"
    return CTResult(ok, pairs, preds, tuple(verdicts), "" if ok else why, alignment)


# -- Coherent Situation -------------------------------------------------

@dataclass(frozen=True)
class CSResult:
    satisfied: bool
    presupposition: str = ""
    chain: tuple = ()   # plausible edges ((p, polarity), (q, polarity))
    reason: str = ""

    def chain_text(self):
        return ", ".join(f"{_lit_text(a)} => {_lit_text(b)}" for a, b in self.chain)


_SCHEMAS = {
    "Result": ("A", "B", True),
    "Explanation": ("B", "A", True),
    "ViolatedExpectation": ("A", "B", False),
    "DenialOfPreventer": ("B", "A", False),
}


def _lit_text(lit):
    return lit[0] if lit[1] else "~" + lit[0]


def abduce(start_keys, start_pol, goal_keys, goal_pol, kb, depth=2):
    """Shortest chain of 1..depth plausible edges from the start literal to
    the goal literal, or None.  Antonyms convert between ``p`` and ``~q``."""
    goal = set(goal_keys)

    def reaches_goal(lit):
        p, pol = lit
        if p in goal and pol == goal_pol:
            return True
        return pol != goal_pol and any(kb.antonymous(p, g) for g in goal)

    starts = [(k, start_pol) for k in start_keys]
    starts += [(a, not start_pol) for k in start_keys for a in kb.antonyms_of(k)]
    edges = sorted(kb.plausible)
    queue = deque((s, ()) for s in starts)
    seen = set(starts)
    while queue:
        lit, chain = queue.popleft()
        if len(chain) >= depth:
            continue
        for src, dst in edges:
            if src != lit:
                continue
            step = chain + ((src, dst),)
            if reaches_goal(dst):
                return step
            if dst not in seen:
                seen.add(dst)
                queue.append((dst, step))
    return None


def check_coherent_situation(rel: CoherenceRelation, source_lf, target_lf,
                             kb: KnowledgeBase, depth: int = 2) -> CSResult:
    """Abduce the relation's presupposed implication between the two
    sentence meanings.  Only whole-sentence meanings are consulted."""
    if rel.family != COHERENT_SITUATION:
        raise FamilyError(f"{rel.name} is not a Coherent Situation relation")
    if source_lf is None or target_lf is None:
        raise MissingSemantics("clause has no sentence-level semantics")
    lfs = {"A": source_lf, "B": target_lf}
    frm, to, positive = _SCHEMAS[rel.name]
    k_from, pol_from = predicate_keys(lfs[frm])
    k_to, pol_to = predicate_keys(lfs[to])
    if not positive:
        pol_to = not pol_to
    text = f"{frm} -> {'' if positive else '~'}{to}"
    chain = abduce(k_from, pol_from, k_to, pol_to, kb, depth)
    if chain is None:
        return CSResult(False, text, (), f"cannot abduce {text}")
    return CSResult(True, text, chain, "")
