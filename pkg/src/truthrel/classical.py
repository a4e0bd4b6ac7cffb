"""Classical (two-valued) evaluation over finite interpretations.

Knows nothing about relevance.  ``eval_classical_bruteforce`` is a second,
independent route used to cross-check ``eval_classical``.
"""

from __future__ import annotations

from functools import reduce
from typing import Mapping

from .errors import FreeVariableError
from .model import Interpretation, predicate_truth
from .syntax import (
    And,
    Atom,
    Const,
    Exists,
    ForAll,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    atoms,
    children,
    free_variables,
    substitute,
)


def eval_classical(f: Formula, m: Interpretation, env: Mapping[str, str] | None = None) -> bool:
    """Tarskian truth of ``f`` in ``m`` with free variables bound by ``env``."""
    env = dict(env or {})
    unbound = free_variables(f) - env.keys()
    if unbound:
        raise FreeVariableError(f"unbound variable(s) {', '.join(sorted(unbound))} in {f}")
    return _eval(f, m, env)


def _eval(f: Formula, m: Interpretation, env: dict) -> bool:
    if isinstance(f, Atom):
        args = tuple(env[t.name] if isinstance(t, Var) else t.name for t in f.args)
        return predicate_truth(m, Atom(f.pred, tuple(Const(a) for a in args)))
    if isinstance(f, Not):
        return not _eval(f.body, m, env)
    if isinstance(f, And):
        return _eval(f.left, m, env) and _eval(f.right, m, env)
    if isinstance(f, Or):
        return _eval(f.left, m, env) or _eval(f.right, m, env)
    if isinstance(f, Implies):
        return not _eval(f.left, m, env) or _eval(f.right, m, env)
    if isinstance(f, Iff):
        return _eval(f.left, m, env) == _eval(f.right, m, env)
    if isinstance(f, ForAll):
        return all(_eval(f.body, m, {**env, f.var: c}) for c in m.universe)
    if isinstance(f, Exists):
        return any(_eval(f.body, m, {**env, f.var: c}) for c in m.universe)
    raise TypeError(f"unknown formula node {f!r}")


def expand_quantifiers(f: Formula, universe) -> Formula:
    """Replace every quantifier by a finite conjunction or disjunction."""
    if isinstance(f, ForAll):
        parts = [expand_quantifiers(substitute(f.body, f.var, c), universe) for c in universe]
        return reduce(And, parts)
    if isinstance(f, Exists):
        parts = [expand_quantifiers(substitute(f.body, f.var, c), universe) for c in universe]
        return reduce(Or, parts)
    if isinstance(f, Atom):
        return f
    kids = [expand_quantifiers(c, universe) for c in children(f)]
    if isinstance(f, Not):
        return Not(kids[0])
    return type(f)(*kids)


def _table_value(f: Formula, row: Mapping[Atom, bool]) -> bool:
    if isinstance(f, Atom):
        return row[f]
    if isinstance(f, Not):
        return not _table_value(f.body, row)
    left, right = _table_value(f.left, row), _table_value(f.right, row)
    if isinstance(f, And):
        return left and right
    if isinstance(f, Or):
        return left or right
    if isinstance(f, Implies):
        return not left or right
    return left == right


def eval_classical_bruteforce(f: Formula, m: Interpretation) -> bool:
    """Expand quantifiers over the universe, then read the ground formula's
    value off its truth-table row for the atom values of ``m``."""
    unbound = free_variables(f)
    if unbound:
        raise FreeVariableError(f"unbound variable(s) {', '.join(sorted(unbound))} in {f}")
    g = expand_quantifiers(f, m.universe)
    row = {a: predicate_truth(m, a) for a in atoms(g)}
    return _table_value(g, row)
