"""Finite interpretations, the ``.mdl`` text format and model enumeration."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import EmptyUniverseError, ModelFormatError, UndeclaredPredicateError
from .syntax import NAME_RE, PRED_RE, Atom, Const

_PRED_LINE = re.compile(r"pred\s+([A-Z][A-Za-z0-9_]*)\s*/\s*(\d+)\s*:(.*)\Z")
_TUPLE_RE = re.compile(r"\(([^()]*)\)|([^\s()]+)")


@dataclass(frozen=True)
class Signature:
    predicates: tuple  # ((name, arity), ...)

    def __post_init__(self):
        names = [n for n, _ in self.predicates]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate predicate in signature {names}")

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse ``"F/2,G/2"``."""
        preds = []
        for item in filter(None, (s.strip() for s in text.split(","))):
            name, _, arity = item.partition("/")
            if not PRED_RE.match(name) or not arity.isdigit():
                raise ModelFormatError(f"bad signature entry {item!r}")
            preds.append((name, int(arity)))
        return cls(tuple(preds))

    def __str__(self):
        return ",".join(f"{n}/{k}" for n, k in self.predicates)


@dataclass(frozen=True)
class Interpretation:
    """Nonempty finite universe plus closed-world predicate extensions.

    ``predicates`` holds ``(name, arity, extension)`` triples in declaration
    order; every tuple outside an extension is false.
    """

    universe: tuple
    predicates: tuple
    _index: Mapping = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not self.universe:
            raise EmptyUniverseError("universe must be nonempty")
        if len(set(self.universe)) != len(self.universe):
            raise ModelFormatError(f"repeated universe element in {self.universe}")
        index = {}
        members = set(self.universe)
        for name, arity, ext in self.predicates:
            if name in index:
                raise ModelFormatError(f"predicate {name} declared twice")
            for tup in ext:
                if len(tup) != arity:
                    raise ModelFormatError(f"tuple {tup} does not match {name}/{arity}")
                unknown = [c for c in tup if c not in members]
                if unknown:
                    raise ModelFormatError(f"unknown constant {unknown[0]!r} in {name}")
            index[name] = (arity, ext)
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(cls, universe: Sequence[str], extensions: Mapping[str, Iterable]) -> "Interpretation":
        """Build from ``{"F/2": [("a", "b")], "G/1": ["a"]}``-style mappings."""
        preds = []
        for key, tuples in extensions.items():
            name, _, arity = key.partition("/")
            arity = int(arity)
            ext = frozenset((t,) if isinstance(t, str) else tuple(t) for t in tuples)
            preds.append((name, arity, ext))
        return cls(tuple(universe), tuple(preds))

    @property
    def signature(self) -> Signature:
        return Signature(tuple((n, k) for n, k, _ in self.predicates))

    def arity(self, pred: str) -> int:
        try:
            return self._index[pred][0]
        except KeyError:
            raise UndeclaredPredicateError(f"predicate {pred} is not declared in the model") from None

    def extension(self, pred: str) -> frozenset:
        try:
            return self._index[pred][1]
        except KeyError:
            raise UndeclaredPredicateError(f"predicate {pred} is not declared in the model") from None

    def holds(self, pred: str, args: tuple) -> bool:
        return args in self.extension(pred)

    def reorder(self, universe: Sequence[str]) -> "Interpretation":
        """Same model with a different universe enumeration order."""
        if sorted(universe) != sorted(self.universe):
            raise ValueError("reorder needs a permutation of the universe")
        return Interpretation(tuple(universe), self.predicates)


def predicate_truth(m: Interpretation, atom: Atom) -> bool:
    """Truth value of a ground atom in ``m``."""
    arity = m.arity(atom.pred)
    if arity != len(atom.args):
        raise UndeclaredPredicateError(
            f"{atom.pred} has arity {arity} in the model, {len(atom.args)} in the formula"
        )
    if not atom.is_ground:
        raise ValueError(f"atom {atom} is not ground")
    return m.holds(atom.pred, tuple(t.name for t in atom.args))


def check_formula_against(m: Interpretation, preds: Mapping[str, int]) -> None:
    """Raise unless every predicate in ``preds`` is declared with that arity."""
    for name, arity in preds.items():
        if m.arity(name) != arity:
            raise UndeclaredPredicateError(
                f"{name} has arity {m.arity(name)} in the model, {arity} in the formula"
            )


# -- text format -----------------------------------------------------------


def parse_model(text: str) -> Interpretation:
    """Parse the line-oriented model format::

        universe: a b c
        pred J/1:
        pred S/1: a b
        pred F/2: (a,b) (b,c)
    """
    universe = None
    preds = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("universe:"):
            if universe is not None:
                raise ModelFormatError(f"line {lineno}: universe declared twice")
            universe = line[len("universe:"):].split()
            for name in universe:
                if not NAME_RE.match(name):
                    raise ModelFormatError(f"line {lineno}: bad element name {name!r}")
            if not universe:
                raise EmptyUniverseError(f"line {lineno}: universe must be nonempty")
            continue
        m = _PRED_LINE.match(line)
        if m is None:
            raise ModelFormatError(f"line {lineno}: cannot parse {raw.strip()!r}")
        name, arity, rest = m.group(1), int(m.group(2)), m.group(3)
        if any(p[0] == name for p in preds):
            raise ModelFormatError(f"line {lineno}: predicate {name} declared twice")
        tuples = []
        for tm in _TUPLE_RE.finditer(rest):
            if tm.group(1) is not None:
                inner = tm.group(1).strip()
                tup = tuple(s.strip() for s in inner.split(",")) if inner else ()
            else:
                tup = (tm.group(2),)
            if len(tup) != arity:
                raise ModelFormatError(
                    f"line {lineno}: tuple {tm.group()} does not match {name}/{arity}"
                )
            tuples.append(tup)
        preds.append((name, arity, frozenset(tuples), lineno))
    if universe is None:
        raise EmptyUniverseError("no universe declared")
    members = set(universe)
    for name, _, ext, lineno in preds:
        for tup in ext:
            for c in tup:
                if c not in members:
                    raise ModelFormatError(f"line {lineno}: unknown constant {c!r} in {name}")
    return Interpretation(tuple(universe), tuple(p[:3] for p in preds))


def _sort_key(m: Interpretation):
    pos = {c: i for i, c in enumerate(m.universe)}
    return lambda tup: tuple(pos[c] for c in tup)


def format_model(m: Interpretation) -> str:
    key = _sort_key(m)
    lines = ["universe: " + " ".join(m.universe)]
    for name, arity, ext in m.predicates:
        items = []
        for tup in sorted(ext, key=key):
            items.append(tup[0] if arity == 1 else "(" + ",".join(tup) + ")")
        lines.append(f"pred {name}/{arity}:" + "".join(" " + s for s in items))
    return "\n".join(lines) + "\n"


# -- enumeration -----------------------------------------------------------


def canonical_universe(n: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(1, n + 1))


def count_models(sig: Signature, universe_size: int) -> int:
    total = 1
    for _, k in sig.predicates:
        total *= 2 ** (universe_size**k)
    return total


def enumerate_models(sig: Signature, universe_size: int) -> Iterator[Interpretation]:
    """Yield every interpretation of ``sig`` over ``e1..en``.

    Order is deterministic: the last predicate varies fastest, and each
    extension runs through bitmasks over ``itertools.product`` tuple order.
    """
    if universe_size < 1:
        raise EmptyUniverseError("universe size must be at least 1")
    universe = canonical_universe(universe_size)
    slots = []
    for name, k in sig.predicates:
        tuples = list(itertools.product(universe, repeat=k))
        exts = []
        for mask in range(2 ** len(tuples)):
            exts.append(frozenset(t for i, t in enumerate(tuples) if mask >> i & 1))
        slots.append([(name, k, e) for e in exts])
    for combo in itertools.product(*slots):
        yield Interpretation(universe, combo)


def ground(pred: str, *names: str) -> Atom:
    return Atom(pred, tuple(Const(n) for n in names))
