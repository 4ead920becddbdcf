"""Simply-typed lambda terms.

Terms are immutable.  Constants are lowercase identifiers, variables are
``v<N>``.  The printed form uses juxtaposition for application and
``\\v0:e.body`` for abstraction; binder annotations keep parsing total.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import TermSyntaxError, TypeMismatch

__all__ = [
    "SemType", "Base", "Arrow", "E", "T", "V", "parse_type",
    "Term", "Const", "Var", "App", "Abs", "Assumption",
    "free_vars", "is_closed", "substitute", "beta_normalize", "is_normal",
    "alpha_eq", "abstract_over", "apply_terms", "apply_pivots",
    "solve_anaphor", "head_and_args", "fresh_var", "to_text", "parse_term",
]


# -- types --------------------------------------------------------------

class SemType:
    __slots__ = ()

    def __str__(self):
        return _type_text(self)


@dataclass(frozen=True)
class Base(SemType):
    name: str

    def __post_init__(self):
        if self.name not in ("e", "t", "v"):
            raise ValueError(f"unknown base type {self.name!r}")

    __str__ = SemType.__str__


@dataclass(frozen=True)
class Arrow(SemType):
    arg: SemType
    res: SemType

    __str__ = SemType.__str__


E, T, V = Base("e"), Base("t"), Base("v")


def _type_text(ty):
    if isinstance(ty, Base):
        return ty.name
    left = _type_text(ty.arg)
    if isinstance(ty.arg, Arrow):
        left = f"({left})"
    return f"{left}->{_type_text(ty.res)}"


_TYPE_TOKEN = re.compile(r"\s*(->|\(|\)|[etv])")


def parse_type(text: str) -> SemType:
    """Parse ``(e->t)->e->t``-style type text; arrows associate right."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TYPE_TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"bad type {text!r}", pos)
        tokens.append(m.group(1))
        pos = m.end()

    def arrow(i):
        left, i = atom(i)
        if i < len(tokens) and tokens[i] == "->":
            right, i = arrow(i + 1)
            return Arrow(left, right), i
        return left, i

    def atom(i):
        if i >= len(tokens):
            raise TermSyntaxError(f"truncated type {text!r}", len(text))
        if tokens[i] == "(":
            ty, i = arrow(i + 1)
            if i >= len(tokens) or tokens[i] != ")":
                raise TermSyntaxError(f"unbalanced type {text!r}", len(text))
            return ty, i + 1
        if tokens[i] in ("e", "t", "v"):
            return Base(tokens[i]), i + 1
        raise TermSyntaxError(f"unexpected {tokens[i]!r} in type", i)

    ty, i = arrow(0)
    if i != len(tokens):
        raise TermSyntaxError(f"trailing input in type {text!r}", i)
    return ty


# -- terms --------------------------------------------------------------

class Term:
    __slots__ = ()
    type: SemType

    def __call__(self, *args: "Term") -> "Term":
        return apply_terms(self, args)

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Const(Term):
    name: str
    type: SemType

    __str__ = Term.__str__


@dataclass(frozen=True)
class Var(Term):
    name: str
    type: SemType

    __str__ = Term.__str__

    @property
    def index(self) -> int:
        return int(self.name[1:])


@dataclass(frozen=True)
class App(Term):
    fn: Term
    arg: Term
    type: SemType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        fty = self.fn.type
        if not isinstance(fty, Arrow) or fty.arg != self.arg.type:
            raise TypeMismatch(
                f"cannot apply {to_text(self.fn)} : {fty} "
                f"to {to_text(self.arg)} : {self.arg.type}")
        object.__setattr__(self, "type", fty.res)

    __str__ = Term.__str__


@dataclass(frozen=True)
class Abs(Term):
    var: Var
    body: Term
    type: SemType = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "type", Arrow(self.var.type, self.body.type))

    __str__ = Term.__str__


@dataclass(frozen=True)
class Assumption:
    """A pending trace or anaphor; discharging it substitutes for ``var``."""

    id: int
    flavor: str  # "trace" | "anaphor"
    var: Var

    @property
    def type(self) -> SemType:
        return self.var.type


# -- basic operations ---------------------------------------------------

def free_vars(term: Term) -> frozenset:
    if isinstance(term, Var):
        return frozenset([term])
    if isinstance(term, Const):
        return frozenset()
    if isinstance(term, App):
        return free_vars(term.fn) | free_vars(term.arg)
    return free_vars(term.body) - {term.var}


def is_closed(term: Term) -> bool:
    return not free_vars(term)


def _var_indices(term: Term):
    if isinstance(term, Var):
        yield term.index
    elif isinstance(term, App):
        yield from _var_indices(term.fn)
        yield from _var_indices(term.arg)
    elif isinstance(term, Abs):
        yield term.var.index
        yield from _var_indices(term.body)


def fresh_var(ty: SemType, *avoid: Term) -> Var:
    """A variable whose name occurs nowhere (free or bound) in ``avoid``."""
    top = max((i for t in avoid for i in _var_indices(t)), default=-1)
    return Var(f"v{top + 1}", ty)


def substitute(term: Term, var: Var, value: Term) -> Term:
    """Capture-avoiding ``term[var := value]``."""
    if var.type != value.type:
        raise TypeMismatch(f"substituting {value.type} for {var} : {var.type}")
    return _subst(term, var, value, free_vars(value))


def _subst(term, var, value, value_fv):
    if isinstance(term, Var):
        return value if term == var else term
    if isinstance(term, Const):
        return term
    if isinstance(term, App):
        return App(_subst(term.fn, var, value, value_fv),
                   _subst(term.arg, var, value, value_fv))
    if term.var == var:
        return term
    body = term.body
    binder = term.var
    if binder in value_fv and var in free_vars(body):
        new = fresh_var(binder.type, body, value, var)
        body = _subst(body, binder, new, frozenset([new]))
        binder = new
    return Abs(binder, _subst(body, var, value, value_fv))


def beta_normalize(term: Term) -> Term:
    """Normal-order reduction to beta-normal form (terminates: simply typed)."""
    if isinstance(term, (Var, Const)):
        return term
    if isinstance(term, Abs):
        return Abs(term.var, beta_normalize(term.body))
    fn = beta_normalize(term.fn)
    if isinstance(fn, Abs):
        return beta_normalize(substitute(fn.body, fn.var, term.arg))
    return App(fn, beta_normalize(term.arg))


def is_normal(term: Term) -> bool:
    if isinstance(term, App):
        return (not isinstance(term.fn, Abs)
                and is_normal(term.fn) and is_normal(term.arg))
    if isinstance(term, Abs):
        return is_normal(term.body)
    return True


def alpha_eq(t1: Term, t2: Term) -> bool:
    return _alpha(t1, t2, {}, {}, 0)


def _alpha(a, b, env_a, env_b, depth):
    if isinstance(a, Var) and isinstance(b, Var):
        da, db = env_a.get(a), env_b.get(b)
        if da is None and db is None:
            return a == b
        return da == db
    if isinstance(a, Const) and isinstance(b, Const):
        return a == b
    if isinstance(a, App) and isinstance(b, App):
        return (_alpha(a.fn, b.fn, env_a, env_b, depth)
                and _alpha(a.arg, b.arg, env_a, env_b, depth))
    if isinstance(a, Abs) and isinstance(b, Abs):
        if a.var.type != b.var.type:
            return False
        return _alpha(a.body, b.body, {**env_a, a.var: depth},
                      {**env_b, b.var: depth}, depth + 1)
    return False


def apply_terms(fn: Term, args: Iterable[Term]) -> Term:
    for arg in args:
        fn = App(fn, arg)
    return fn


def head_and_args(term: Term):
    """Split ``f a1 ... an`` into ``(f, [a1, ..., an])``."""
    args = []
    while isinstance(term, App):
        args.append(term.arg)
        term = term.fn
    return term, args[::-1]


def _replace(term, pivot, var):
    if alpha_eq(term, pivot):
        return var
    if isinstance(term, App):
        return App(_replace(term.fn, pivot, var), _replace(term.arg, pivot, var))
    if isinstance(term, Abs):
        return Abs(term.var, _replace(term.body, pivot, var))
    return term


def abstract_over(term: Term, pivots: Sequence[Term]) -> Term:
    """Build ``\\v_n. ... \\v_1. term[pivot_i := v_i]``.

    Every occurrence of each pivot is abstracted; a pivot that does not
    occur yields a vacuous binder.  ``apply_pivots`` undoes this.
    """
    pivots = list(pivots)
    for p in pivots:
        if not is_closed(p):
            raise ValueError(f"pivot {to_text(p)} is not closed")
    body = term
    binders = []
    for p in pivots:
        v = fresh_var(p.type, term, *pivots, *binders)
        body = _replace(body, p, v)
        binders.append(v)
    for v in binders:
        body = Abs(v, body)
    return body


def apply_pivots(abstraction: Term, pivots: Sequence[Term]) -> Term:
    """Apply an ``abstract_over`` result to its pivots (outermost binder first)."""
    return apply_terms(abstraction, reversed(list(pivots)))


def solve_anaphor(anaphor: Var, args: Sequence[Term], rhs: Term) -> Term:
    """Solve ``anaphor(args...) = rhs`` for a closed ``anaphor``.

    All occurrences of each argument are abstracted, so exactly one
    solution is returned.
    """
    if not is_closed(rhs):
        raise TypeMismatch(f"right-hand side {to_text(rhs)} is open")
    if any(not is_closed(a) for a in args):
        raise TypeMismatch("anaphor arguments must be closed")
    solution = abstract_over(rhs, list(reversed(list(args))))
    if solution.type != anaphor.type:
        raise TypeMismatch(
            f"solution {to_text(solution)} : {solution.type} does not fit "
            f"{anaphor.name} : {anaphor.type}")
    return solution


# -- concrete syntax ----------------------------------------------------

def to_text(term: Term) -> str:
    if isinstance(term, (Var, Const)):
        return term.name
    if isinstance(term, Abs):
        return f"\\{term.var.name}:{term.var.type}.{to_text(term.body)}"
    head, args = head_and_args(term)
    parts = [f"({to_text(head)})" if isinstance(head, Abs) else to_text(head)]
    for a in args:
        text = to_text(a)
        parts.append(f"({text})" if isinstance(a, (App, Abs)) else text)
    return " ".join(parts)


_TERM_TOKEN = re.compile(r"\s*(?:(\\)|(\()|(\))|(\.)|(:)|(v\d+)\b|([a-z][a-z0-9_]*))")


def parse_term(text: str, signature: Mapping[str, SemType],
               free: Mapping[str, SemType] | None = None) -> Term:
    """Parse the printed syntax back into a term.

    ``signature`` types the constants; ``free`` types any free variables.
    """
    free = dict(free or {})
    pos = 0

    def peek():
        m = _TERM_TOKEN.match(text, pos)
        return m

    def skip_ws():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(kind):
        nonlocal pos
        m = peek()
        if not m or m.lastindex != kind:
            raise TermSyntaxError("unexpected input", pos)
        pos = m.end()
        return m.group(kind)

    def read_type():
        nonlocal pos
        skip_ws()
        end = text.find(".", pos)
        if end < 0:
            raise TermSyntaxError("binder type without '.'", pos)
        ty = parse_type(text[pos:end])
        pos = end
        return ty

    def term(env):
        m = peek()
        if m and m.lastindex == 1:
            return lam(env)
        return application(env)

    def lam(env):
        expect(1)
        name = expect(6)
        expect(5)
        v = Var(name, read_type())
        expect(4)
        return Abs(v, term({**env, name: v}))

    def application(env):
        fn = atom(env)
        while True:
            m = peek()
            if not m or m.lastindex in (3, 4, 5):
                return fn
            if m.lastindex == 1:
                return App(fn, lam(env))
            fn = App(fn, atom(env))

    def atom(env):
        nonlocal pos
        m = peek()
        if not m:
            raise TermSyntaxError("expected a term", pos)
        kind = m.lastindex
        start = m.start(kind)
        pos = m.end()
        if kind == 2:
            inner = term(env)
            expect(3)
            return inner
        if kind == 6:
            name = m.group(6)
            if name in env:
                return env[name]
            if name in free:
                return Var(name, free[name])
            raise TermSyntaxError(f"untyped free variable {name}", start)
        if kind == 7:
            name = m.group(7)
            if name not in signature:
                raise TermSyntaxError(f"unknown constant {name}", start)
            return Const(name, signature[name])
        raise TermSyntaxError("unexpected token", start)

    result = term({})
    skip_ws()
    if pos != len(text):
        raise TermSyntaxError("trailing input", pos)
    return result
