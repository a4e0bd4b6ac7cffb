"""Definition-level brute-force evaluator.

A deliberately naive transcription used as an independent check on the
main evaluator.  It shares only plumbing with the rest of the package
(parsing, substitution, model lookup) and takes none of the shortcuts the
main path relies on:

* truth-determination is checked against *every* alternative state of
  affairs compatible with what the chosen atoms reveal, not by row
  constancy;
* t-relevance enumerates every proper subset of atoms, not co-singletons;
* the existential dual uses a literal ``Not`` around the matrix.
"""

from __future__ import annotations

import itertools

from ..model import Interpretation
from ..syntax import (
    And,
    Atom,
    Exists,
    Flavor,
    ForAll,
    Iff,
    Implies,
    Not,
    Or,
    PrenexSentence,
    Var,
    substitute_many,
)
from ..verdict import Verdict


def _atoms(f, out=None):
    out = {} if out is None else out
    if isinstance(f, Atom):
        out.setdefault(f, None)
    elif isinstance(f, (Not, ForAll, Exists)):
        _atoms(f.body, out)
    else:
        _atoms(f.left, out)
        _atoms(f.right, out)
    return list(out)


def _value(f, row):
    if isinstance(f, Atom):
        return row[f]
    if isinstance(f, Not):
        return not _value(f.body, row)
    a, b = _value(f.left, row), _value(f.right, row)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    if isinstance(f, Iff):
        return a == b
    raise TypeError(f)


def _ground_truth(m, a):
    return tuple(t.name for t in a.args) in m.extension(a.pred)


def _subsets(items):
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)


# -- propositional ---------------------------------------------------------


def prop_determining(f, subset, stuck=None):
    stuck = stuck or {}
    all_atoms = _atoms(f)
    subset = [a for a in all_atoms if a in set(subset)]
    groups = {}
    for row in itertools.product((False, True), repeat=len(all_atoms)):
        val = dict(zip(all_atoms, row))
        key = tuple(val[a] for a in subset)
        if any(a in stuck and val[a] != stuck[a] for a in subset):
            continue
        groups.setdefault(key, set()).add(_value(f, val))
    return all(len(v) == 1 for v in groups.values())


def prop_redundant(f, stuck=None):
    all_atoms = _atoms(f)
    out = []
    for p in all_atoms:
        rest = [a for a in all_atoms if a != p]
        if any(prop_determining(f, s, stuck) for s in _subsets(rest)):
            out.append(p)
    return out


def prop_relevant(f, stuck=None):
    return not prop_redundant(f, stuck)


# -- one variable ----------------------------------------------------------


def _one_var_outcomes(matrix, var, subset, m, mode):
    """Truth values the one-variable sentence can take across every state of
    affairs compatible with what ``subset`` reveals about ``m``."""
    all_atoms = _atoms(matrix)
    views = [a for a in all_atoms if any(isinstance(t, Var) and t.name == var for t in a.args)]
    grounds = [a for a in all_atoms if a not in views]
    known = set(subset) if mode == "interp" else set()

    forced_view = {}
    for v in views:
        if v not in known:
            continue
        ext = m.extension(v.pred)
        vals = {tuple(c if isinstance(t, Var) and t.name == var else t.name for t in v.args) in ext
                for c in m.universe}
        # Neither empty nor universal: it could still be either, so nothing is forced.
        if vals == {False}:
            forced_view[v] = False
        elif vals == {True}:
            forced_view[v] = True

    ground_choices = [(_ground_truth(m, g),) if g in known else (False, True) for g in grounds]
    kinds = [r for r in itertools.product((False, True), repeat=len(views))
             if all(r[i] == forced_view[v] for i, v in enumerate(views) if v in forced_view)]

    outcomes = {(Flavor.UNIVERSAL): set(), (Flavor.EXISTENTIAL): set()}
    for gvals in itertools.product(*ground_choices):
        for inhabited in _subsets(kinds):
            if not inhabited:
                continue
            vals = []
            for r in inhabited:
                row = dict(zip(views, r))
                row.update(zip(grounds, gvals))
                vals.append(_value(matrix, row))
            outcomes[Flavor.UNIVERSAL].add(all(vals))
            outcomes[Flavor.EXISTENTIAL].add(any(vals))
    return outcomes


def one_var_determining(flavor, matrix, var, subset, m, mode="interp"):
    return len(_one_var_outcomes(matrix, var, subset, m, mode)[flavor]) == 1


def one_var_relevant(flavor, matrix, var, m, mode="interp"):
    all_atoms = _atoms(matrix)
    for s in _subsets(all_atoms):
        if len(s) < len(all_atoms) and one_var_determining(flavor, matrix, var, s, m, mode):
            return False
    return True


# -- prenex sentences ------------------------------------------------------


def _universal(prefix):
    return all(f is Flavor.UNIVERSAL for f, _ in prefix)


def _existential(prefix):
    return all(f is Flavor.EXISTENTIAL for f, _ in prefix)


def relevant(prefix, matrix, env, m, mode="interp"):
    prefix = tuple(prefix)
    if len(prefix) == 1:
        flavor, var = prefix[0]
        return one_var_relevant(flavor, substitute_many(matrix, env), var, m, mode)
    if _universal(prefix):
        names = [v for _, v in prefix]
        for tup in itertools.product(m.universe, repeat=len(names)):
            good = True
            for i, (flavor, var) in enumerate(prefix):
                pinned = {**env, **{n: c for j, (n, c) in enumerate(zip(names, tup)) if j != i}}
                if not relevant(((flavor, var),), matrix, pinned, m, mode):
                    good = False
                    break
            if good:
                return True
        return False
    if _existential(prefix):
        dual = tuple((Flavor.UNIVERSAL, v) for _, v in prefix)
        return relevant(dual, Not(matrix), env, m, mode)
    (_, var), rest = prefix[0], prefix[1:]
    return any(relevant(rest, matrix, {**env, var: c}, m, mode) for c in m.universe)


def _classical(prefix, matrix, env, m):
    if not prefix:
        row = {a: _ground_truth(m, a) for a in _atoms(substitute_many(matrix, env))}
        return _value(substitute_many(matrix, env), row)
    (flavor, var), rest = prefix[0], prefix[1:]
    vals = (_classical(rest, matrix, {**env, var: c}, m) for c in m.universe)
    return all(vals) if flavor is Flavor.UNIVERSAL else any(vals)


def satisfied(prefix, matrix, env, m, mode="interp"):
    prefix = tuple(prefix)
    if len(prefix) <= 1:
        return _classical(prefix, matrix, env, m)
    (flavor, var), rest = prefix[0], prefix[1:]
    good = [c for c in m.universe if relevant(rest, matrix, {**env, var: c}, m, mode)]
    results = [satisfied(rest, matrix, {**env, var: c}, m, mode) for c in good]
    if flavor is Flavor.UNIVERSAL:
        return bool(results) and all(results)
    return any(results)


def true(s: PrenexSentence, m: Interpretation, mode="interp"):
    sat = satisfied(s.prefix, s.matrix, {}, m, mode)
    if _universal(s.prefix):
        return sat and relevant(s.prefix, s.matrix, {}, m, mode)
    return sat


def negation(s: PrenexSentence) -> PrenexSentence:
    return PrenexSentence(tuple((f.dual(), v) for f, v in s.prefix), Not(s.matrix))


def verdict(s: PrenexSentence, m: Interpretation, mode="interp") -> Verdict:
    if true(s, m, mode):
        return Verdict.TRUE
    if true(negation(s), m, mode):
        return Verdict.FALSE
    return Verdict.GAP


def monadic_verdict(s: PrenexSentence, m: Interpretation, mode="interp") -> Verdict:
    """Single-quantifier rule: satisfied and t-relevant; false iff the negation is true."""

    def is_true(t):
        (flavor, var), = t.prefix
        return _classical(t.prefix, t.matrix, {}, m) and one_var_relevant(flavor, t.matrix, var, m, mode)

    if is_true(s):
        return Verdict.TRUE
    if is_true(negation(s)):
        return Verdict.FALSE
    return Verdict.GAP
