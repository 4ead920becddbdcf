"""Judging discourse items.

The controller encodes the central gate: empty constituents are rebuilt
only while establishing a Common Topic relation.  Under Coherent Situation
relations nothing is copied, so a gapped clause has no meaning to offer and
an elided VP is resolved from the source meaning alone.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .coherence import (COHERENT_SITUATION, COMMON_TOPIC, RELATIONS,
                        CoherenceRelation, KnowledgeBase, candidate_relations,
                        check_coherent_situation, check_common_topic)
from .ellipsis import (resolve_event_ref, resolve_gapping, resolve_vpe_semantic,
                       resolve_vpe_syntactic)
from .errors import EllipsisError, InputError, TreeSyntaxError, UnknownWord
from .grammar import Derivation, Lexicon, derive, parse_tree
from .instrument import inference_family
from .lamcore import to_text

FELICITOUS = "Felicitous"
INFELICITOUS = "Infelicitous"
NO_SENTENTIAL_SEMANTICS = "NoSententialSemantics"
GOLD_MARKS = {"ok": True, "#": False, "??": False}


def data_path(name: str) -> Path:
    """Path of a file shipped in the package's data directory."""
    return Path(str(resources.files("ellipsis_coherence") / "data" / name))


@dataclass(frozen=True)
class Link:
    source: int
    target: int
    conj: str
    reading: str | None = None
    intended: str | None = None
    gold: dict = field(default_factory=dict, compare=False)

    def relations(self):
        return candidate_relations(self.conj, self.reading)


@dataclass(frozen=True)
class DiscourseItem:
    id: str
    clauses: tuple
    links: tuple
    text: str = ""

    @classmethod
    def from_record(cls, rec: dict) -> "DiscourseItem":
        try:
            item_id = rec["id"]
            clauses = tuple(rec["clauses"])
            links = tuple(
                Link(l["from"], l["to"], l["conj"], l.get("reading"),
                     l.get("intended"), dict(l.get("gold", {})))
                for l in rec["links"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"item {rec.get('id', '?')}: missing field {exc}") from exc
        item = cls(item_id, clauses, links, rec.get("text", ""))
        item.validate()
        return item

    def validate(self):
        for k, link in enumerate(self.links):
            if not (0 <= link.source < link.target < len(self.clauses)):
                raise InputError(f"item {self.id} link {k}: bad clause indices")
            try:
                rels = link.relations()
            except EllipsisError as exc:
                raise InputError(f"item {self.id} link {k}: {exc}") from exc
            for rel in rels:
                if link.gold.get(rel.name) not in GOLD_MARKS:
                    raise InputError(
                        f"item {self.id} link {k}: no gold mark for {rel.name}")


def load_corpus(path) -> list[DiscourseItem]:
    """One JSON object per line; blank lines and ``//`` comments skipped."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputError(f"cannot read corpus {path}: {exc.strerror}") from exc
    items = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.lstrip().startswith("//"):
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"corpus line {lineno}: {exc.msg}") from exc
        items.append(DiscourseItem.from_record(rec))
    ids = [i.id for i in items]
    if len(set(ids)) != len(ids):
        raise InputError("duplicate item ids in corpus")
    return items


# -- judging ------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    relation: str
    family: str
    outcome: str
    reason: str = ""
    detail: str = ""
    lf: object = None
    route: str | None = None
    trace: tuple = ()
    resolved: Derivation | None = field(default=None, compare=False, repr=False)

    @property
    def felicitous(self) -> bool:
        return self.outcome == FELICITOUS


def _fail(rel, reason, detail="", lf=None, route=None, trace=()):
    return Verdict(rel.name, rel.family, INFELICITOUS, reason, detail, lf, route, tuple(trace))


def judge_link(source: Derivation, target: Derivation, rel: CoherenceRelation,
               kb: KnowledgeBase, lexicon: Lexicon, intended: str | None = None,
               counter=None) -> Verdict:
    """Judge one source/target pair under one coherence relation."""
    counter = counter if counter is not None else itertools.count(900)
    kind = target.profile.kind
    trace = [f"target form {kind}", f"relation {rel.name} ({rel.family})"]
    with inference_family(rel.family):
        try:
            if rel.family == COMMON_TOPIC:
                return _judge_common_topic(source, target, rel, kb, lexicon,
                                           intended, counter, kind, trace)
            return _judge_coherent_situation(source, target, rel, kb, lexicon,
                                             intended, kind, trace)
        except EllipsisError as exc:
            return _fail(rel, exc.reason, str(exc), trace=trace)


def _judge_common_topic(source, target, rel, kb, lexicon, intended, counter, kind, trace):
    result = None
    if kind in ("Gapping", "Stripping"):
        result = resolve_gapping(source, target, lexicon=lexicon, counter=counter)
    elif kind == "VPE":
        result = resolve_vpe_syntactic(source, target, lexicon=lexicon,
                                       intended=intended, counter=counter)
    elif kind == "EventRef":
        result = resolve_event_ref(source, target, lexicon=lexicon, intended=intended)
    resolved = result.as_derivation(target) if result else target
    route = result.route if result else None
    if result:
        trace.extend(result.notes)
    ct = check_common_topic(rel, source, resolved, kb)
    if ct.alignment is not None:
        trace.append("aligned " + ", ".join(
            f"{' '.join(a.words()) or a.cat}/{' '.join(b.words()) or b.cat}"
            for a, b in ct.alignment))
    trace.append(f"predicates {ct.predicates}")
    if not ct.satisfied:
        return _fail(rel, "ConstraintViolated", ct.reason, resolved.lf, route, trace)
    return Verdict(rel.name, rel.family, FELICITOUS, "", "", resolved.lf, route,
                   tuple(trace), resolved)


def _judge_coherent_situation(source, target, rel, kb, lexicon, intended, kind, trace):
    if kind in ("Gapping", "Stripping"):
        trace.append("no reconstruction under Coherent Situation inference")
        return _fail(rel, NO_SENTENTIAL_SEMANTICS,
                     "gapped clause has no sentence-level semantics", trace=trace)
    result = None
    if kind == "VPE":
        result = resolve_vpe_semantic(source, target, kb, intended=intended,
                                      lexicon=lexicon)
    elif kind == "EventRef":
        result = resolve_event_ref(source, target, lexicon=lexicon, intended=intended)
    resolved = result.as_derivation(target) if result else target
    route = result.route if result else None
    if result:
        trace.extend(result.notes)
    cs = check_coherent_situation(rel, source.lf, resolved.lf, kb)
    trace.append(f"abduce {cs.presupposition}: {cs.chain_text() or 'none'}")
    if not cs.satisfied:
        return _fail(rel, "ConstraintViolated", cs.reason, resolved.lf, route, trace)
    return Verdict(rel.name, rel.family, FELICITOUS, "", "", resolved.lf, route,
                   tuple(trace), resolved)


@dataclass(frozen=True)
class LinkJudgment:
    item: str
    link: int
    source: int
    target: int
    conj: str
    verdict: Verdict
    gold: str

    @property
    def match(self) -> bool:
        return GOLD_MARKS[self.gold] == self.verdict.felicitous


def _prepare(item, lexicon, counter):
    derivations, errors = [], []
    for k, text in enumerate(item.clauses):
        try:
            tree = parse_tree(text, lexicon, counter)
        except (TreeSyntaxError, UnknownWord) as exc:
            raise InputError(f"item {item.id} clause {k}: {exc}") from exc
        try:
            derivations.append(derive(tree, lexicon, counter))
            errors.append(None)
        except EllipsisError as exc:
            derivations.append(None)
            errors.append(exc)
    return derivations, errors


def judge_item(item: DiscourseItem, lexicon: Lexicon, kb: KnowledgeBase,
               relation: str | None = None) -> list[LinkJudgment]:
    """Judge every link of an item under each of its candidate relations.

    A later link whose source was the target of an earlier, felicitous link
    sees the resolved clause (including any reconstructed syntax).
    """
    counter = itertools.count(1)
    raw, errors = _prepare(item, lexicon, counter)
    current = list(raw)
    out = []
    for k, link in enumerate(item.links):
        rels = [r for r in link.relations() if relation is None or r.name == relation]
        chosen = None
        for rel in rels:
            source, target = current[link.source], raw[link.target]
            if target is None or source is None:
                bad = errors[link.target] or errors[link.source]
                verdict = _fail(rel, bad.reason, str(bad))
            else:
                verdict = judge_link(source, target, rel, kb, lexicon,
                                     link.intended, counter)
            if verdict.felicitous and chosen is None:
                chosen = verdict.resolved
            out.append(LinkJudgment(item.id, k, link.source, link.target,
                                    link.conj, verdict, link.gold[rel.name]))
        if chosen is not None:
            current[link.target] = chosen
    return out


# -- reporting ----------------------------------------------------------

@dataclass
class Report:
    judgments: list

    @property
    def mismatches(self):
        return [j for j in self.judgments if not j.match]

    @property
    def accuracy(self) -> float:
        if not self.judgments:
            return 1.0
        return 1 - len(self.mismatches) / len(self.judgments)

    @property
    def exit_code(self) -> int:
        return 1 if self.mismatches else 0

    def records(self):
        for j in self.judgments:
            v = j.verdict
            yield {
                "item": j.item, "link": j.link, "from": j.source, "to": j.target,
                "conj": j.conj, "relation": v.relation, "family": v.family,
                "verdict": v.outcome, "reason": v.reason or None,
                "lf": to_text(v.lf) if v.lf is not None else None,
                "route": v.route, "gold": j.gold, "match": j.match,
            }

    def render(self, fmt: str = "text") -> str:
        if fmt == "records":
            lines = [json.dumps(r, sort_keys=True) for r in self.records()]
        else:
            lines = []
            for r in self.records():
                verdict = r["verdict"] + (f"({r['reason']})" if r["reason"] else "")
                lines.append("\t".join([
                    r["item"], f"{r['from']}->{r['to']}", r["relation"], verdict,
                    r["lf"] or "-", f"gold={r['gold']}",
                    "ok" if r["match"] else "MISMATCH"]))
            n = len(self.judgments)
            lines.append(f"# agreement {n - len(self.mismatches)}/{n} "
                         f"({100 * self.accuracy:.1f}%)")
        return "\n".join(lines) + "\n"


def run_corpus(corpus_path, lexicon_path, kb_path, relation: str | None = None) -> Report:
    if relation is not None and relation not in RELATIONS:
        raise InputError(f"unknown relation {relation!r}")
    lexicon = Lexicon.load(lexicon_path)
    kb = KnowledgeBase.load(kb_path)
    items = load_corpus(corpus_path)
    judgments = []
    for item in items:
        judgments.extend(judge_item(item, lexicon, kb, relation))
    return Report(judgments)


def explain(item: DiscourseItem, lexicon: Lexicon, kb: KnowledgeBase) -> str:
    """Human-readable derivation trace for one item."""
    counter = itertools.count(1)
    derivations, errors = _prepare(item, lexicon, counter)
    lines = [f"item {item.id}: {item.text}".rstrip()]
    for k, (d, err) in enumerate(zip(derivations, errors)):
        if d is None:
            lines.append(f"  clause {k}: {err.reason}: {err}")
            continue
        lf = to_text(d.lf) if d.lf is not None else "(no sentence-level semantics)"
        lines.append(f"  clause {k} [{d.profile.kind}] {d.tree}")
        lines.append(f"    lf: {lf}")
    for j in judge_item(item, lexicon, kb):
        v = j.verdict
        lines.append(f"  link {j.source}->{j.target} '{j.conj}' {v.relation}: "
                     f"{v.outcome}{'(' + v.reason + ')' if v.reason else ''}"
                     f" gold={j.gold}")
        for step in v.trace:
            lines.append(f"    - {step}")
        if v.detail:
            lines.append(f"    - {v.detail}")
    return "\n".join(lines) + "\n"
