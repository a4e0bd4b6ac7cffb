"""Truth-determining atom sets, t-redundancy and t-relevance for
quantifier-free formulas, optionally with stuck (precondition) values.

The row-constraint kernel :func:`constant_on` is shared with
:mod:`truthrel.mono`.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import TooManyAtomsError
from .syntax import And, Atom, Formula, Iff, Implies, Not, Or, atoms, is_quantifier_free

MAX_ATOMS = 20

StuckMap = Mapping[Atom, bool]


def boolean_value(f: Formula, valuation: Mapping[Atom, bool]) -> bool:
    """Classical value of a quantifier-free formula under an atom valuation."""
    if isinstance(f, Atom):
        return valuation[f]
    if isinstance(f, Not):
        return not boolean_value(f.body, valuation)
    if isinstance(f, And):
        return boolean_value(f.left, valuation) and boolean_value(f.right, valuation)
    if isinstance(f, Or):
        return boolean_value(f.left, valuation) or boolean_value(f.right, valuation)
    if isinstance(f, Implies):
        return (not boolean_value(f.left, valuation)) or boolean_value(f.right, valuation)
    if isinstance(f, Iff):
        return boolean_value(f.left, valuation) == boolean_value(f.right, valuation)
    raise ValueError(f"not quantifier-free: {f}")


def _check_size(atom_list: Sequence[Atom]) -> None:
    if len(atom_list) > MAX_ATOMS:
        raise TooManyAtomsError(f"{len(atom_list)} atoms exceeds the limit of {MAX_ATOMS}")


def truth_table(f: Formula) -> list[tuple[tuple[bool, ...], bool]]:
    """Rows over ``atoms(f)`` in lexicographic order (0 before 1, first atom slowest)."""
    if not is_quantifier_free(f):
        raise ValueError(f"truth_table needs a quantifier-free formula: {f}")
    atom_list = atoms(f)
    _check_size(atom_list)
    rows = []
    for row in itertools.product((False, True), repeat=len(atom_list)):
        rows.append((row, boolean_value(f, dict(zip(atom_list, row)))))
    return rows


@lru_cache(maxsize=65536)
def compiled_table(f: Formula, atom_order: tuple) -> tuple[int, int, dict]:
    """Truth table of ``f`` packed into bitmasks.

    Returns ``(full, true_rows, column)`` where bit ``r`` stands for row ``r``
    of :func:`truth_table` order and ``column[a]`` masks the rows with atom
    ``a`` true.
    """
    _check_size(atom_order)
    k = len(atom_order)
    true_rows = 0
    for r, row in enumerate(itertools.product((False, True), repeat=k)):
        if boolean_value(f, dict(zip(atom_order, row))):
            true_rows |= 1 << r
    column = {}
    for i, a in enumerate(atom_order):
        shift = k - 1 - i
        column[a] = sum(1 << r for r in range(2**k) if r >> shift & 1)
    return (1 << 2**k) - 1, true_rows, column


def constant_on(f: Formula, atom_list: Sequence[Atom], pins: Mapping[Atom, bool]) -> bool:
    """True iff ``f`` takes one value on every row that agrees with ``pins``."""
    full, true_rows, column = compiled_table(f, tuple(atom_list))
    allowed = full
    for a, v in pins.items():
        allowed &= column[a] if v else full & ~column[a]
    return not (allowed & true_rows) or not (allowed & ~true_rows & full)


def is_truth_determining(f: Formula, subset: Iterable[Atom], stuck: StuckMap | None = None) -> bool:
    """Does fixing ``subset`` fix the value of ``f``?

    Each permitted assignment to ``subset`` must leave ``f`` constant.  Stuck
    values restrict only the members of ``subset``; atoms outside it range
    over both values even when stuck.
    """
    stuck = stuck or {}
    subset = list(dict.fromkeys(subset))
    atom_list = atoms(f)
    _check_size(atom_list)
    choices = [(stuck[a],) if a in stuck else (False, True) for a in subset]
    for values in itertools.product(*choices):
        if not constant_on(f, atom_list, dict(zip(subset, values))):
            return False
    return True


def truth_determining_sets(f: Formula, stuck: StuckMap | None = None) -> list[frozenset[Atom]]:
    """All minimal truth-determining sets, smallest first."""
    atom_list = atoms(f)
    _check_size(atom_list)
    minimal: list[frozenset[Atom]] = []
    for size in range(len(atom_list) + 1):
        for combo in itertools.combinations(atom_list, size):
            s = frozenset(combo)
            if any(m <= s for m in minimal):
                continue
            if is_truth_determining(f, combo, stuck):
                minimal.append(s)
    return minimal


def t_redundant_atoms(f: Formula, stuck: StuckMap | None = None) -> list[Atom]:
    """Atoms left out of some truth-determining set (in atom order).

    By monotonicity ``p`` is redundant iff ``atoms(f) - {p}`` is determining.
    """
    atom_list = atoms(f)
    return [p for p in atom_list if is_truth_determining(f, [a for a in atom_list if a != p], stuck)]


def is_t_relevant_prop(f: Formula, stuck: StuckMap | None = None) -> bool:
    return not t_redundant_atoms(f, stuck)


def format_atom_set(s: Iterable[Atom], order: Sequence[Atom] | None = None) -> str:
    items = list(s)
    if order is not None:
        pos = {a: i for i, a in enumerate(order)}
        items.sort(key=lambda a: pos.get(a, len(pos)))
    return "{" + ",".join(str(a) for a in items) + "}"
