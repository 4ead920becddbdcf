"""Ellipsis resolution gated by discourse coherence.

Gapping and stripping are rebuilt from the syntax of a parallel clause,
VP-ellipsis can be resolved from syntax or from meaning, and event reference
(*do it*) is purely semantic.  Which of these are available depends on the
coherence relation linking the clauses.
"""
from .coherence import KnowledgeBase, RELATIONS, candidate_relations
from .errors import EllipsisError, InputError
from .grammar import Lexicon, derive, parse_tree
from .harness import DiscourseItem, Verdict, judge_item, judge_link, load_corpus, run_corpus

__all__ = [
    "DiscourseItem", "EllipsisError", "InputError", "KnowledgeBase", "Lexicon",
    "RELATIONS", "Verdict", "candidate_relations", "derive", "judge_item",
    "judge_link", "load_corpus", "parse_tree", "run_corpus",
]
