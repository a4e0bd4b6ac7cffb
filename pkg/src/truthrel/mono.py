"""One-variable semantics: predicate views, their empty/universal/mixed
status, truth-determination under an interpretation and under any
interpretation, and the monadic three-valued verdict.

A one-variable formula ``(Qx)M`` is analysed through the truth table of
``M`` over its atoms.  Atoms that mention ``x`` are *views* (unary
predicates of ``x``); variable-free atoms are *grounds*.  A set ``S`` of
atoms determines the sentence under ``m`` iff ``M`` is constant on every
row that respects the pins contributed by members of ``S``: an empty view
is pinned to 0, a universal view to 1, a ground atom to its value in ``m``.
Mixed views pin nothing, because a predicate that is neither empty nor
universal is treated as if it could be either.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable

from .classical import eval_classical
from .errors import UndeclaredPredicateError
from .prop import constant_on
from .syntax import Atom, Flavor, Formula, PrenexSentence, Var, atom_tuple, atoms, prenex_negate
from .model import Interpretation, predicate_truth
from .verdict import Verdict


class Status(enum.Enum):
    EMPTY = "empty"
    UNIVERSAL = "universal"
    MIXED = "mixed"


class Mode(enum.Enum):
    INTERP = "interp"
    ANY = "any"


def _mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(mode)


def extract_views(matrix: Formula, var: str) -> tuple[list[Atom], list[Atom]]:
    views, grounds = _split_atoms(matrix, var)
    return list(views), list(grounds)


@lru_cache(maxsize=1 << 16)
def _split_atoms(matrix: Formula, var: str) -> tuple[tuple, tuple]:
    views, grounds = [], []
    for a in atoms(matrix):
        names = {t.name for t in a.args if isinstance(t, Var)}
        if not names:
            grounds.append(a)
        elif names == {var}:
            views.append(a)
        else:
            other = sorted(names - {var})
            raise ValueError(f"atom {a} mentions variable {other[0]}, expected only {var}")
    return tuple(views), tuple(grounds)


def view_status(m: Interpretation, view: Atom, var: str) -> Status:
    if len(view.args) != m.arity(view.pred):
        raise UndeclaredPredicateError(
            f"{view.pred} has arity {m.arity(view.pred)} in the model, {len(view.args)} in the formula"
        )
    ext = m.extension(view.pred)
    values = set()
    for c in m.universe:
        values.add(tuple(c if isinstance(t, Var) and t.name == var else t.name for t in view.args) in ext)
        if len(values) == 2:
            return Status.MIXED
    if values == {False}:
        return Status.EMPTY
    if values == {True}:
        return Status.UNIVERSAL
    return Status.MIXED


def pins_for(subset: Iterable[Atom], var: str, m: Interpretation | None) -> dict[Atom, bool]:
    """Row constraints contributed by the members of ``subset``."""
    pins = {}
    if m is None:
        return pins
    for a in subset:
        if a.is_ground:
            pins[a] = predicate_truth(m, a)
            continue
        status = view_status(m, a, var)
        if status is Status.EMPTY:
            pins[a] = False
        elif status is Status.UNIVERSAL:
            pins[a] = True
    return pins


def is_td_under_interpretation(
    flavor: Flavor, matrix: Formula, var: str, subset: Iterable[Atom], m: Interpretation
) -> bool:
    # One constancy check serves both flavors: over a nonempty universe the
    # quantified value is fixed iff the matrix is constant on allowed rows.
    extract_views(matrix, var)
    return constant_on(matrix, atoms(matrix), pins_for(subset, var, m))


def determining_cosingleton(matrix: Formula, var: str, m: Interpretation | None) -> list[Atom] | None:
    """First co-singleton (all atoms but one) that is truth-determining, if any."""
    atom_list = atom_tuple(matrix)
    _split_atoms(matrix, var)
    all_pins = pins_for(atom_list, var, m)
    for drop in atom_list:
        pins = {a: v for a, v in all_pins.items() if a != drop}
        if constant_on(matrix, atom_list, pins):
            return [a for a in atom_list if a != drop]
    return None


def is_t_relevant_1var(flavor: Flavor, matrix: Formula, var: str, m: Interpretation) -> bool:
    """No proper subset of the atoms is truth-determining under ``m``."""
    return determining_cosingleton(matrix, var, m) is None


def is_t_relevant_any(flavor: Flavor, matrix: Formula, var: str) -> bool:
    """Relevance under any interpretation: the matrix is not constant."""
    extract_views(matrix, var)
    return not constant_on(matrix, atoms(matrix), {})


def relevant_1var(flavor: Flavor, matrix: Formula, var: str, m: Interpretation, mode=Mode.INTERP) -> bool:
    if _mode(mode) is Mode.ANY:
        return is_t_relevant_any(flavor, matrix, var)
    return is_t_relevant_1var(flavor, matrix, var, m)


def _true_monadic(s: PrenexSentence, m: Interpretation, mode: Mode) -> bool:
    (flavor, var), = s.prefix
    if not eval_classical(s.to_formula(), m):
        return False
    return relevant_1var(flavor, s.matrix, var, m, mode)


def evaluate_monadic(s: PrenexSentence, m: Interpretation, mode=Mode.INTERP) -> Verdict:
    """TRUE iff satisfied and t-relevant; FALSE iff the negation is TRUE."""
    if len(s.prefix) != 1:
        raise ValueError(f"monadic evaluation needs exactly one quantifier: {s}")
    mode = _mode(mode)
    if _true_monadic(s, m, mode):
        return Verdict.TRUE
    if _true_monadic(prenex_negate(s), m, mode):
        return Verdict.FALSE
    return Verdict.GAP
