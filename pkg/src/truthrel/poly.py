"""Three-valued evaluation of prenex sentences over finite interpretations.

T-relevance is computed by peeling the prefix from the outside:

* one quantifier: one-variable relevance (:mod:`truthrel.mono`);
* an all-universal prefix: some single tuple ``d1..dn`` makes every
  coordinate formula ``(xi)M[xj := dj, j != i]`` relevant;
* an all-existential prefix: the all-universal dual over ``~M``;
* any other prefix: some instance of the outermost variable leaves a
  relevant remainder.

Satisfaction quantifies only over *t-relevant instances* of the outermost
variable, and a universal needs at least one of them.  A sentence with an
all-universal prefix is true iff satisfied and relevant; any other sentence
is true iff satisfied.  A sentence is false iff its prenex negation is true.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping

from . import mono
from .classical import eval_classical
from .errors import FreeVariableError
from .model import Interpretation, check_formula_against
from .prop import format_atom_set
from .syntax import (
    Flavor,
    Formula,
    PrenexSentence,
    Var,
    atom_tuple,
    constants_of,
    free_variables,
    negate_matrix,
    predicates,
    prenex_negate,
    print_formula,
    quantify,
    substitute_many,
)
from .verdict import Verdict

RELEVANCE_BASE = "relevance.one-variable"
RELEVANCE_UNIVERSAL = "relevance.universal-block"
RELEVANCE_EXISTENTIAL = "relevance.existential-block"
RELEVANCE_OUTER = "relevance.outer"
SAT_CLASSICAL = "satisfaction.classical"
SAT_UNIVERSAL = "satisfaction.universal"
SAT_EXISTENTIAL = "satisfaction.existential"
TRUTH_UNIVERSAL = "truth.universal"
TRUTH_OTHER = "truth.other"
VERDICT = "verdict"

# One-variable relevance depends only on the matrix, on which atoms coincide
# once the outer variables are instantiated, and on each atom's pin.  Keyed on
# that shape, results are shared across environments and models.
_SHAPES: dict = {}
_HOLE = object()


@dataclass
class Trace:
    rule: str
    formula: str
    result: object = None
    instances: tuple | None = None
    witness: tuple | None = None
    note: str | None = None
    children: list = field(default_factory=list)

    def lines(self, depth: int = 0) -> list[str]:
        parts = [self.rule, self.formula]
        if self.instances is not None:
            parts.append(f"[instances: {' '.join(self.instances) or 'none'}]")
        if self.witness is not None:
            parts.append("[witness: " + " ".join(f"{v}={c}" for v, c in self.witness) + "]")
        if self.note:
            parts.append(f"({self.note})")
        if self.result is not None:
            parts.append(f"=> {_fmt_result(self.result)}")
        out = ["  " * depth + " ".join(parts)]
        for child in self.children:
            out.extend(child.lines(depth + 1))
        return out

    def __str__(self):
        return "\n".join(self.lines())

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


def _fmt_result(r) -> str:
    if isinstance(r, bool):
        return "yes" if r else "no"
    return str(r)


def trailing_block(prefix) -> tuple[tuple, tuple]:
    """Split ``prefix`` into (outer, maximal same-flavor suffix)."""
    prefix = tuple(prefix)
    if not prefix:
        raise ValueError("empty prefix")
    flavor = prefix[-1][0]
    i = len(prefix)
    while i > 0 and prefix[i - 1][0] is flavor:
        i -= 1
    return prefix[:i], prefix[i:]


def _homogeneous(prefix, flavor) -> bool:
    return all(f is flavor for f, _ in prefix)


class ModelEvaluator:
    """Evaluates many sentences against one model, sharing the memo of
    one-variable relevance results."""

    def __init__(self, m: Interpretation, mode=mono.Mode.INTERP, record: bool = False):
        self.m = m
        self.mode = mono._mode(mode)
        self.record = record
        self._base: dict = {}
        self._rel: dict = {}
        self._pins: dict = {}
        self._sat: dict = {}

    def text(self, prefix, matrix, env) -> str:
        return print_formula(quantify(prefix, substitute_many(matrix, env)))

    def node(self, rule, prefix, matrix, env, **kw):
        if not self.record:
            return None
        return Trace(rule, self.text(prefix, matrix, env), **kw)

    # -- relevance --------------------------------------------------------

    def base(self, flavor, var, matrix, env):
        key = (matrix, var, frozenset(env.items()))
        hit = self._base.get(key)
        if hit is None:
            shape = None
            if self.mode is mono.Mode.INTERP and not self.record:
                shape = self._shape(var, matrix, env)
                ok = _SHAPES.get(shape)
                if ok is not None:
                    hit = self._base[key] = (ok, None)
                    return hit
            inst = substitute_many(matrix, env)
            if self.mode is mono.Mode.ANY:
                hit = (mono.is_t_relevant_any(flavor, inst, var), None)
            else:
                cos = mono.determining_cosingleton(inst, var, self.m)
                hit = (cos is None, cos)
                if shape is not None:
                    _SHAPES[shape] = hit[0]
            self._base[key] = hit
        return hit

    def _shape(self, var, matrix, env):
        """Hashable description of the instantiated matrix that fixes its
        one-variable relevance, or None when it cannot be built cheaply."""
        classes, pins, first = [], [], {}
        for a in atom_tuple(matrix):
            args = []
            for t in a.args:
                if isinstance(t, Var):
                    if t.name == var:
                        args.append(_HOLE)
                    elif t.name in env:
                        args.append(env[t.name])
                    else:
                        return None
                else:
                    args.append(t.name)
            inst = (a.pred, tuple(args))
            pin = self._pins.get(inst, _HOLE)
            if pin is _HOLE:
                pin = self._pins[inst] = self._view_pin(*inst)
                if pin is _HOLE:
                    return None
            classes.append(first.setdefault(inst, len(first)))
            pins.append(pin)
        return matrix, tuple(classes), tuple(pins)

    def _view_pin(self, pred, args):
        index = self.m._index.get(pred)
        if index is None or index[0] != len(args):
            return _HOLE
        ext = index[1]
        if _HOLE not in args:
            return args in ext
        values = {tuple(c if t is _HOLE else t for t in args) in ext for c in self.m.universe}
        return values.pop() if len(values) == 1 else None

    def relevant(self, prefix, matrix, env):
        prefix = tuple(prefix)
        if self.record:
            return self._relevant(prefix, matrix, env)
        # A homogeneous block is t-relevant regardless of variable order.
        order = tuple(sorted(prefix, key=lambda q: q[1])) if len({f for f, _ in prefix}) == 1 else prefix
        key = (order, matrix, frozenset(env.items()))
        hit = self._rel.get(key)
        if hit is None:
            hit = self._rel[key] = self._relevant(prefix, matrix, env)
        return hit

    def _relevant(self, prefix, matrix, env):
        if len(prefix) == 1:
            (flavor, var), = prefix
            ok, cos = self.base(flavor, var, matrix, env)
            note = None
            if not ok:
                note = "matrix constant" if cos is None else "determining set " + format_atom_set(cos)
            return ok, self.node(RELEVANCE_BASE, prefix, matrix, env, result=ok, note=note)
        if _homogeneous(prefix, Flavor.UNIVERSAL):
            return self.universal_block(prefix, matrix, env)
        if _homogeneous(prefix, Flavor.EXISTENTIAL):
            dual = tuple((Flavor.UNIVERSAL, v) for _, v in prefix)
            ok, sub = self.relevant(dual, negate_matrix(matrix), env)
            t = self.node(RELEVANCE_EXISTENTIAL, prefix, matrix, env, result=ok)
            if t is not None:
                t.children.append(sub)
            return ok, t
        (flavor, var), rest = prefix[0], prefix[1:]
        if not self.record:
            ok = any(self.relevant(rest, matrix, {**env, var: c})[0] for c in self.m.universe)
            return ok, None
        found, subs = [], []
        for c in self.m.universe:
            ok, sub = self.relevant(rest, matrix, {**env, var: c})
            if ok:
                found.append(c)
                subs.append(sub)
        t = self.node(RELEVANCE_OUTER, prefix, matrix, env, result=bool(found), instances=tuple(found))
        t.children.extend(subs)
        return bool(found), t

    def universal_block(self, prefix, matrix, env):
        names = [v for _, v in prefix]
        for tup in itertools.product(self.m.universe, repeat=len(names)):
            point = dict(zip(names, tup))
            if all(self._direction_ok(prefix, i, matrix, env, point) for i in range(len(names))):
                t = self.node(RELEVANCE_UNIVERSAL, prefix, matrix, env, result=True, witness=tuple(point.items()))
                if t is not None:
                    for i in range(len(names)):
                        t.children.append(self._direction(prefix, i, matrix, env, point)[1])
                return True, t
        return False, self.node(
            RELEVANCE_UNIVERSAL, prefix, matrix, env, result=False, note="no witness tuple"
        )

    def _direction(self, prefix, i, matrix, env, point):
        flavor, var = prefix[i]
        others = {v: c for v, c in point.items() if v != var}
        return self.relevant(((flavor, var),), matrix, {**env, **others})

    def _direction_ok(self, prefix, i, matrix, env, point) -> bool:
        flavor, var = prefix[i]
        others = {v: c for v, c in point.items() if v != var}
        return self.base(flavor, var, matrix, {**env, **others})[0]

    def instances(self, prefix, matrix, env) -> list[str]:
        (_, var), rest = prefix[0], prefix[1:]
        return [c for c in self.m.universe if self.relevant(rest, matrix, {**env, var: c})[0]]

    # -- satisfaction -----------------------------------------------------

    def satisfied(self, prefix, matrix, env):
        prefix = tuple(prefix)
        if len(prefix) <= 1:
            key = (prefix, matrix, frozenset(env.items()))
            ok = self._sat.get(key)
            if ok is None:
                ok = self._sat[key] = eval_classical(quantify(prefix, matrix), self.m, env)
            return ok, self.node(SAT_CLASSICAL, prefix, matrix, env, result=ok)
        (flavor, var), rest = prefix[0], prefix[1:]
        found = self.instances(prefix, matrix, env)
        subs = []
        if flavor is Flavor.UNIVERSAL:
            rule = SAT_UNIVERSAL
            ok = bool(found)
            for c in found:
                sub_ok, sub = self.satisfied(rest, matrix, {**env, var: c})
                subs.append(sub)
                if not sub_ok:
                    ok = False
                    break
        else:
            rule = SAT_EXISTENTIAL
            ok = False
            for c in found:
                sub_ok, sub = self.satisfied(rest, matrix, {**env, var: c})
                subs.append(sub)
                if sub_ok:
                    ok = True
                    break
        t = self.node(rule, prefix, matrix, env, result=ok, instances=tuple(found))
        if t is not None:
            t.children.extend(subs)
            if flavor is Flavor.UNIVERSAL and not found:
                t.note = "no t-relevant instance"
        return ok, t

    # -- truth ------------------------------------------------------------

    def true(self, s: PrenexSentence):
        sat, sat_t = self.satisfied(s.prefix, s.matrix, {})
        if _homogeneous(s.prefix, Flavor.UNIVERSAL):
            rel, rel_t = self.relevant(s.prefix, s.matrix, {})
            ok = sat and rel
            t = self.node(TRUTH_UNIVERSAL, s.prefix, s.matrix, {}, result=ok)
            if t is not None:
                t.children.extend([sat_t, rel_t])
            return ok, t
        t = self.node(TRUTH_OTHER, s.prefix, s.matrix, {}, result=sat)
        if t is not None:
            t.children.append(sat_t)
        return sat, t

    def evaluate(self, s: PrenexSentence, trace: bool = False):
        """Return ``(verdict, trace)``; the caller has validated ``s``."""
        if trace != self.record:
            self.record = trace
            try:
                return self.evaluate(s, trace)
            finally:
                self.record = not trace
        ok, t = self.true(s)
        children = [t]
        if ok:
            verdict = Verdict.TRUE
        else:
            neg_ok, neg_t = self.true(prenex_negate(s))
            children.append(neg_t)
            verdict = Verdict.FALSE if neg_ok else Verdict.GAP
        root = None
        if self.record:
            root = Trace(VERDICT, str(s), result=verdict, children=children)
        return verdict, root


def _check(s: PrenexSentence, m: Interpretation) -> None:
    f = s.to_formula()
    free = free_variables(f)
    if free:
        raise FreeVariableError(f"free variable(s) {', '.join(sorted(free))} in {f}")
    unknown = constants_of(f) - set(m.universe)
    if unknown:
        raise FreeVariableError(f"{', '.join(sorted(unknown))} is neither bound nor a universe element")
    check_formula_against(m, predicates(f))


def is_t_relevant(prefix, matrix: Formula, env: Mapping[str, str], m: Interpretation, mode=mono.Mode.INTERP) -> bool:
    return ModelEvaluator(m, mode).relevant(tuple(prefix), matrix, dict(env))[0]


def relevance_trace(s: PrenexSentence, m: Interpretation, mode=mono.Mode.INTERP) -> tuple[bool, Trace]:
    _check(s, m)
    return ModelEvaluator(m, mode, record=True).relevant(s.prefix, s.matrix, {})


def t_relevant_instances(q, rest_prefix, matrix: Formula, env: Mapping[str, str], m: Interpretation, mode=mono.Mode.INTERP) -> list[str]:
    """Constants ``c`` (universe order) whose instance of ``q`` leaves a relevant remainder."""
    prefix = (tuple(q),) + tuple(rest_prefix)
    return ModelEvaluator(m, mode).instances(prefix, matrix, dict(env))


def is_satisfied(prefix, matrix: Formula, env: Mapping[str, str], m: Interpretation, mode=mono.Mode.INTERP) -> bool:
    return ModelEvaluator(m, mode).satisfied(tuple(prefix), matrix, dict(env))[0]


def is_true(s: PrenexSentence, m: Interpretation, mode=mono.Mode.INTERP) -> bool:
    _check(s, m)
    return ModelEvaluator(m, mode).true(s)[0]


def evaluate(s: PrenexSentence, m: Interpretation, mode=mono.Mode.INTERP, trace: bool = False):
    """Return ``(verdict, trace)``; ``trace`` is None unless requested."""
    if not s.prefix:
        raise ValueError("evaluate needs at least one quantifier")
    _check(s, m)
    return ModelEvaluator(m, mode).evaluate(s, trace)


def verdict(s: PrenexSentence, m: Interpretation, mode=mono.Mode.INTERP) -> Verdict:
    return evaluate(s, m, mode)[0]


def explain_relevance(s: PrenexSentence, m: Interpretation, mode=mono.Mode.INTERP) -> tuple[bool, list[str]]:
    """Relevance verdict plus human-readable justification lines."""
    ok, t = relevance_trace(s, m, mode)
    lines = []
    if ok:
        witnesses = [n.witness for n in t.walk() if n.witness]
        if witnesses:
            lines.append("witness: " + " ".join(f"{v}={c}" for v, c in witnesses[0]))
        elif t.instances:
            lines.append(f"t-relevant instances: {' '.join(t.instances)}")
        return True, lines
    block = t
    while block.rule == RELEVANCE_EXISTENTIAL and block.children:
        block = block.children[0]
    if block.note:
        lines.append(block.note)
    elif block.rule == RELEVANCE_OUTER:
        lines.append(f"no t-relevant instance of {s.prefix[0][1]}")
    if block.rule == RELEVANCE_UNIVERSAL:
        ev = ModelEvaluator(m, mode)
        names = [v for _, v in s.prefix]
        matrix = s.matrix if _homogeneous(s.prefix, Flavor.UNIVERSAL) else negate_matrix(s.matrix)
        for i, var in enumerate(names):
            others = [v for v in names if v != var]
            hits = []
            for tup in itertools.product(m.universe, repeat=len(others)):
                if ev.base(Flavor.UNIVERSAL, var, matrix, dict(zip(others, tup)))[0]:
                    hits.append(",".join(f"{v}={c}" for v, c in zip(others, tup)))
            lines.append(f"({var})-formulas t-relevant at: {' '.join(hits) or 'none'}")
            if not hits:
                # in a two-variable block, varying the first variable traces a column
                label = ("column", "row")[i] if len(names) == 2 else f"line along {var}"
                lines.append(f"no witness {label}: no t-relevant ({var})-formula")
    return False, lines
