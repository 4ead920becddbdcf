"""Random generators: typed lambda terms and synthetic discourse items."""
from __future__ import annotations

import random

from ellipsis_coherence.coherence import candidate_relations

from ellipsis_coherence.lamcore import (Abs, App, Arrow, Const, E, T, Var,
                                        beta_normalize, free_vars, parse_type)

SIGNATURE = {
    "a": "e", "b": "e", "c": "e",
    "p": "t",
    "f": "e->t", "g": "e->t",
    "r": "e->e->t",
    "h": "(e->t)->e->t",
    "n": "t->t",
    "k": "e->e",
    "q": "t->e->t",
}
SIG = {k: parse_type(v) for k, v in SIGNATURE.items()}
CONSTS = [Const(k, v) for k, v in sorted(SIG.items())]


def _returning(ty, pool):
    """Pool members whose type ends (after some arguments) in ``ty``."""
    out = []
    for x in pool:
        args, t = [], x.type
        while True:
            if t == ty and args:
                out.append((x, args))
                break
            if not isinstance(t, Arrow):
                break
            args.append(t.arg)
            t = t.res
    return out


def term(rng: random.Random, ty=T, depth=4, env=(), redexes=True):
    """A well-typed term of type ``ty`` over the test signature."""
    pool = CONSTS + list(env)
    atoms = [x for x in pool if x.type == ty]
    if isinstance(ty, Arrow) and (depth <= 0 or rng.random() < 0.4):
        v = Var(f"v{len(env) + 20}", ty.arg)
        return Abs(v, term(rng, ty.res, depth - 1, env + (v,), redexes))
    if depth <= 0 or (atoms and rng.random() < 0.3):
        if atoms:
            return rng.choice(atoms)
        if isinstance(ty, Arrow):
            v = Var(f"v{len(env) + 20}", ty.arg)
            return Abs(v, term(rng, ty.res, 0, env + (v,), redexes))
    if redexes and rng.random() < 0.15:
        arg_ty = rng.choice([E, T, parse_type("e->t")])
        v = Var(f"v{len(env) + 20}", arg_ty)
        body = term(rng, ty, depth - 1, env + (v,), redexes)
        return App(Abs(v, body), term(rng, arg_ty, depth - 1, env, redexes))
    fns = _returning(ty, pool)
    if not fns:
        return rng.choice(atoms) if atoms else term(rng, ty, 0, env, redexes)
    fn, args = rng.choice(fns)
    out = fn
    for a in args:
        out = App(out, term(rng, a, depth - 1, env, redexes))
    return out


def closed_normal_sentence(rng: random.Random, depth=4):
    while True:
        t = beta_normalize(term(rng, T, depth))
        if not free_vars(t):
            return t


def closed_subterms(t):
    out = []

    def walk(x, bound):
        if not (free_vars(x) & bound):
            out.append(x)
        if isinstance(x, App):
            walk(x.fn, bound)
            walk(x.arg, bound)
        elif isinstance(x, Abs):
            walk(x.body, bound | {x.var})

    walk(t, frozenset())
    return out


# -- synthetic discourse ------------------------------------------------

PEOPLE = ["Bill", "Hillary", "John", "Mary", "Fred", "George", "Gore"]
ENTITY_OBJECTS = ["Clinton", "Bush", "the-decision", "this-letter", "the-golf-course"]
TRANSITIVE = [("supports", "does"), ("supported", "did"), ("reversed", "did"),
              ("introduced", "did"), ("arrested", "did"), ("nabbed", "did")]
PASSIVE = ["reversed", "introduced", "arrested", "nabbed"]
ADJECTIVES = ["upset", "angry", "honest", "dishonest", "a-politician"]


def vpe_pair(rng: random.Random):
    """Source clause and a VP-ellipsis target whose syntactic route succeeds."""
    subj, other = rng.sample(PEOPLE, 2)
    kind = rng.randrange(4)
    if kind == 0:
        verb, aux = rng.choice(TRANSITIVE)
        src = f"(S (NP {subj}) (VP (V {verb}) (NP {rng.choice(ENTITY_OBJECTS)})))"
    elif kind == 1:
        src = f"(S (NP {subj}) (VP (V became) (AP {rng.choice(ADJECTIVES)})))"
        aux = "did"
    elif kind == 2:
        obj = rng.choice(ENTITY_OBJECTS)
        agent = rng.choice(PEOPLE + ["the-FBI", "the-ICC"])
        src = (f"(S (NP {obj}) (VP (AUX was) (VP[voice=passive] (V {rng.choice(PASSIVE)}) "
               f"(PP (P by) (NP {agent})))))")
        aux = "was"
        other = rng.choice([o for o in ENTITY_OBJECTS if o != obj])
    else:
        src = f"(S (NP {subj}) (VP (AUX was) (VP (V going-to) (NP the-golf-course))))"
        aux = "was"
    if rng.random() < 0.3 and aux == "did":
        aux = "didn't"
    tgt = f"(S (NP {other}) (VP[elided] (AUX {aux})))"
    return src, tgt


def cs_item(rng: random.Random, index: int):
    """A corpus record linking two clauses under a Coherent Situation
    conjunction; the target is gapped, stripped, elided, or full."""
    subj, other = rng.sample(PEOPLE, 2)
    adj, adj2 = rng.sample(ADJECTIVES, 2)
    src = f"(S (NP {subj}) (VP (V became) (AP {adj})))"
    form = rng.randrange(5)
    if form == 0:
        tgt = f"(S[gapped] (NP {other}) (AP {adj2}))"
    elif form == 1:
        tgt = f"(S[stripped] (NP {other}))"
    elif form == 2:
        tgt = f"(S (NP {other}) (VP[elided] (AUX did)))"
    elif form == 3:
        tgt = f"(S (NP {other}) (VP (V did) (NP it)))"
    else:
        tgt = f"(S (NP {other}) (VP (V became) (AP {adj2})))"
    conj = rng.choice(["and (as a result)", "therefore", "because", "even though",
                       "despite", "although"])
    # gold marks are placeholders; these items exercise the gate, not the judgments
    gold = {r.name: "#" for r in candidate_relations(conj)}
    return {"id": f"cs-synth-{index}", "clauses": [src, tgt],
            "links": [{"from": 0, "to": 1, "conj": conj, "gold": gold}]}
