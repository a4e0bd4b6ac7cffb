"""Worked-example corpus.

Each fixture model comes with the conditions its scenario is described by
(which instance formulas are t-relevant, satisfied, and so on).  The
conditions are checked before any verdict is trusted, so a model that does
not realize its scenario fails loudly instead of producing a lucky verdict.

Sentences may carry leading negations (``~(Ex)...``); their verdict is the
mirror of the unnegated sentence's.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import mono, poly
from ..classical import eval_classical
from ..model import Interpretation, parse_model
from ..syntax import Not, parse_formula, to_prenex_sentence
from ..verdict import Verdict

S2 = "s2"  # single-quantifier rule: satisfied and t-relevant
S3 = "s3"  # prenex-prefix rule

MODELS_TEXT = {
    "CHILDREN": """
        # Alex, Betty and Cindy; Alex and Betty asleep; John has no children
        universe: a b c
        pred J/1:
        pred S/1: a b
    """,
    "U1": """
        # F F F F F F F F F F F . . G G G G G G G G G
        universe: f1 f2 f3 f4 f5 f6 f7 f8 f9 f10 f11 n1 n2 g1 g2 g3 g4 g5 g6 g7 g8 g9
        pred F/1: f1 f2 f3 f4 f5 f6 f7 f8 f9 f10 f11
        pred G/1: g1 g2 g3 g4 g5 g6 g7 g8 g9
    """,
    "E1": """
        # F F F F F F F F F F * * G G G G G G G G G
        universe: f1 f2 f3 f4 f5 f6 f7 f8 f9 f10 s1 s2 g1 g2 g3 g4 g5 g6 g7 g8 g9
        pred F/1: f1 f2 f3 f4 f5 f6 f7 f8 f9 f10 s1 s2
        pred G/1: s1 s2 g1 g2 g3 g4 g5 g6 g7 g8 g9
    """,
    "U1B": """
        # F F F F F, plus one object outside F so that F is neither empty nor universal
        universe: f1 f2 f3 f4 f5 n1
        pred F/1: f1 f2 f3 f4 f5
        pred G/1:
    """,
    "U1B_DRAWN": """
        # F F F F F exactly as drawn: F universal, G empty
        universe: f1 f2 f3 f4 f5
        pred F/1: f1 f2 f3 f4 f5
        pred G/1:
    """,
    "EX2": """
        universe: e1 e2 e3 e4
        pred F/2: (e1,e1) (e1,e2)
        pred G/2: (e1,e3) (e1,e4)
    """,
    "EX3": """
        universe: e1 e2
        pred F/2: (e1,e1)
        pred G/2: (e1,e1)
    """,
    "EX4": """
        universe: e1 e2
        pred F/2: (e1,e1)
        pred G/2: (e1,e2)
    """,
    "EX4B": """
        universe: e1 e2
        pred F/2: (e1,e1) (e2,e1)
        pred G/2: (e1,e1) (e2,e1)
    """,
    "EX5": """
        universe: e1 e2
        pred F/2: (e1,e1)
        pred G/2:
    """,
    "EX6": """
        universe: e1 e2
        pred F/2: (e1,e1) (e1,e2)
        pred G/2: (e1,e1) (e1,e2)
    """,
    "EX6B": """
        universe: e1 e2
        pred F/2: (e1,e1) (e1,e2)
        pred G/2: (e2,e1) (e1,e2)
    """,
    "EX7": """
        universe: e1 e2
        pred F/2: (e1,e1)
        pred G/2: (e2,e2)
    """,
    "EX8": """
        # F(x,y,z) iff an even number of e2 among x,y,z; G is the complement
        universe: e1 e2
        pred F/3: (e1,e1,e1) (e1,e2,e2) (e2,e1,e2) (e2,e2,e1)
        pred G/3: (e2,e1,e1) (e1,e2,e1) (e1,e1,e2) (e2,e2,e2)
    """,
    "EX9": """
        # for every y, z the object x = e1 is in both F and G
        universe: e1 e2
        pred F/3: (e1,e1,e1) (e1,e1,e2) (e1,e2,e1) (e1,e2,e2)
        pred G/3: (e1,e1,e1) (e1,e1,e2) (e1,e2,e1) (e1,e2,e2)
    """,
    "EX10": """
        # z = e1, e3: one overlap cell; z = e2, e4: overlap-free gap-shaped slices
        universe: e1 e2 e3 e4
        pred F/3: (e1,e1,e1) (e2,e1,e1) (e2,e1,e2) (e3,e2,e3) (e4,e3,e1) (e4,e3,e2)
        pred G/3: (e1,e1,e1) (e2,e1,e3) (e2,e1,e4) (e3,e2,e3) (e4,e3,e3) (e4,e3,e4)
    """,
    "EX11": """
        # z = e1: F and G form a checkerboard; z = e2: both empty
        universe: e1 e2
        pred F/3: (e1,e1,e1) (e1,e2,e2)
        pred G/3: (e1,e1,e2) (e1,e2,e1)
    """,
    "EX12": """
        # the overlap-free row sits at x = e1 for z = e1 and at x = e2 for z = e2
        universe: e1 e2
        pred F/3: (e1,e1,e1) (e1,e2,e1) (e2,e2,e1) (e2,e1,e1)
        pred G/3: (e1,e1,e2) (e1,e2,e1) (e2,e2,e2) (e2,e1,e1)
    """,
}


def model(name: str) -> Interpretation:
    return parse_model(MODELS_TEXT[name])


def model_names() -> list[str]:
    return list(MODELS_TEXT)


@dataclass(frozen=True)
class Condition:
    """A scenario fact: ``kind`` of ``text`` in the model equals ``expected``.

    Kinds: ``relevant`` and ``satisfied`` (prenex relevance and satisfaction),
    ``classical`` (two-valued truth) and ``verdict`` (prenex-rule verdict).
    """

    description: str
    kind: str
    text: str
    expected: object


@dataclass(frozen=True)
class Fixture:
    id: str
    model: str
    sentence: str
    expected: dict  # rule (S2/S3) -> Verdict
    citation: str
    mode: str = "interp"


def sentence_of(text: str, m: Interpretation):
    """Parse ``text`` and return (negation count, prenex sentence)."""
    f = parse_formula(text, m.universe)
    flips = 0
    while isinstance(f, Not):
        flips += 1
        f = f.body
    return flips, to_prenex_sentence(f)


def verdict_of(text: str, m: Interpretation, rule: str = S3, mode: str = "interp") -> Verdict:
    flips, s = sentence_of(text, m)
    if rule == S2:
        v = mono.evaluate_monadic(s, m, mode)
    else:
        v = poly.evaluate(s, m, mode)[0]
    for _ in range(flips):
        v = v.mirror()
    return v


def check_condition(c: Condition, m: Interpretation):
    """Return the observed value for ``c``."""
    if c.kind == "classical":
        return eval_classical(parse_formula(c.text, m.universe), m)
    if c.kind == "verdict":
        return verdict_of(c.text, m)
    _, s = sentence_of(c.text, m)
    if c.kind == "relevant":
        return poly.is_t_relevant(s.prefix, s.matrix, {}, m)
    if c.kind == "satisfied":
        return poly.is_satisfied(s.prefix, s.matrix, {}, m)
    raise ValueError(f"unknown condition kind {c.kind!r}")


def _rows(template: str, universe, expected, kind="relevant", description=""):
    return [Condition(description, kind, template.format(c=c), expected) for c in universe]


def _conditions() -> dict[str, list[Condition]]:
    two = ("e1", "e2")
    four = ("e1", "e2", "e3", "e4")
    return {
        "CHILDREN": [
            Condition("John has no children", "classical", "~(Ex)J(x)", True),
            Condition("Alex is asleep", "classical", "S(a)", True),
            Condition("Cindy is not asleep", "classical", "~S(c)", True),
        ],
        "U1": [
            Condition("some objects in F", "classical", "(Ex)F(x)", True),
            Condition("some objects in G", "classical", "(Ex)G(x)", True),
            Condition("some objects in neither", "classical", "(Ex)(~F(x) & ~G(x))", True),
            Condition("no object in both", "classical", "~(Ex)(F(x) & G(x))", True),
        ],
        "E1": [
            Condition("F and G overlap", "classical", "(Ex)(F(x) & G(x))", True),
            Condition("F is not universal", "classical", "(Ex)~F(x)", True),
            Condition("G is not universal", "classical", "(Ex)~G(x)", True),
        ],
        "U1B": [
            Condition("G is empty", "classical", "~(Ex)G(x)", True),
            Condition("F is not empty", "classical", "(Ex)F(x)", True),
            Condition("F is not universal", "classical", "(Ex)~F(x)", True),
        ],
        "U1B_DRAWN": [
            Condition("G is empty", "classical", "~(Ex)G(x)", True),
            Condition("every object is in F", "classical", "(x)F(x)", True),
        ],
        "EX2": [
            Condition("row e1 gives a t-relevant (y)-formula", "relevant", "(y)(F(e1,y) -> ~G(e1,y))", True),
            *_rows("(x)(F(x,{c}) -> ~G(x,{c}))", four, False,
                   description="no column gives a t-relevant (x)-formula"),
            Condition("the t-relevant row is satisfied", "satisfied", "(y)(F(e1,y) -> ~G(e1,y))", True),
        ],
        "EX3": [
            Condition("an overlap exists", "classical", "(Ex)(Ey)(F(x,y) & G(x,y))", True),
            Condition("row e1 is t-relevant", "relevant", "(Ey)(F(e1,y) & G(e1,y))", True),
            Condition("row e1 is satisfied", "satisfied", "(Ey)(F(e1,y) & G(e1,y))", True),
        ],
        "EX4": [
            Condition("row e1 is t-relevant", "relevant", "(y)(F(e1,y) -> ~G(e1,y))", True),
            Condition("row e1 is satisfied", "satisfied", "(y)(F(e1,y) -> ~G(e1,y))", True),
        ],
        "EX4B": [
            *_rows("(Ey)(F({c},y) & G({c},y))", two, True, description="every row is t-relevant"),
            *_rows("(Ey)(F({c},y) & G({c},y))", two, True, kind="satisfied",
                   description="every t-relevant row is satisfied"),
        ],
        "EX5": _rows("(y)(F({c},y) -> ~G({c},y))", two, False,
                     description="no t-relevant (y)-formula"),
        "EX6": [
            *_rows("(Ex)(F(x,{c}) & G(x,{c}))", two, True, description="columns are t-relevant"),
            *_rows("(Ex)(F(x,{c}) & G(x,{c}))", two, True, kind="satisfied",
                   description="every t-relevant column is satisfied"),
        ],
        "EX6B": [
            *_rows("(x)(F(x,{c}) -> ~G(x,{c}))", two, True, description="columns are t-relevant"),
            Condition("column e1 is satisfied", "satisfied", "(x)(F(x,e1) -> ~G(x,e1))", True),
        ],
        "EX7": _rows("(Ex)(F(x,{c}) & G(x,{c}))", two, False,
                     description="no column gives a t-relevant (Ex)-formula"),
        "EX8": [
            Condition("at z = e1, (x)(Fxbc -> ~Gxbc) is t-relevant for b = e1", "relevant",
                      "(x)(F(x,e1,e1) -> ~G(x,e1,e1))", True),
            Condition("at z = e1, (y)(Fayc -> ~Gayc) is t-relevant for a = e1", "relevant",
                      "(y)(F(e1,y,e1) -> ~G(e1,y,e1))", True),
            Condition("at z = e1, (x)(y)(...) is t-relevant", "relevant",
                      "(x)(y)(F(x,y,e1) -> ~G(x,y,e1))", True),
            *_rows("(x)(y)(F(x,y,{c}) -> ~G(x,y,{c}))", two, True, kind="satisfied",
                   description="every t-relevant z-slice is satisfied"),
            Condition("(z)(Fabz -> ~Gabz) is t-relevant", "relevant",
                      "(z)(F(e1,e1,z) -> ~G(e1,e1,z))", True),
        ],
        "EX9": [
            *[Condition("for every y, z some x is in both F and G", "satisfied",
                        f"(Ex)(F(x,{b},{c}) & G(x,{b},{c}))", True) for b in two for c in two],
            *[Condition("every (Ex)(Fxbc & Gxbc) is t-relevant", "relevant",
                        f"(Ex)(F(x,{b},{c}) & G(x,{b},{c}))", True) for b in two for c in two],
            Condition("the universal quantifiers commute", "verdict",
                      "(y)(z)(Ex)(F(x,y,z) & G(x,y,z))", Verdict.TRUE),
        ],
        "EX10": [
            Condition("slice z = e1 is t-relevant", "relevant", "(Ex)(Ey)(F(e1,x,y) & G(e1,x,y))", True),
            Condition("slice z = e1 is satisfied", "satisfied", "(Ex)(Ey)(F(e1,x,y) & G(e1,x,y))", True),
            Condition("slice z = e2 is not t-relevant", "relevant", "(Ex)(Ey)(F(e2,x,y) & G(e2,x,y))", False),
            Condition("slice z = e2 is a gap", "verdict", "(x)(y)(F(e2,x,y) -> ~G(e2,x,y))", Verdict.GAP),
            Condition("slice z = e2 has no overlap", "classical", "~(Ex)(Ey)(F(e2,x,y) & G(e2,x,y))", True),
            Condition("slice z = e3 is t-relevant", "relevant", "(Ex)(Ey)(F(e3,x,y) & G(e3,x,y))", True),
            Condition("slice z = e4 is not t-relevant", "relevant", "(Ex)(Ey)(F(e4,x,y) & G(e4,x,y))", False),
        ],
        "EX11": [
            Condition("slice z = e1 is t-relevant", "relevant", "(x)(y)(F(e1,x,y) -> ~G(e1,x,y))", True),
            Condition("slice z = e1 is satisfied", "satisfied", "(x)(y)(F(e1,x,y) -> ~G(e1,x,y))", True),
        ],
        "EX12": [
            Condition("z = e1: the row x = e1 is t-relevant", "relevant", "(y)(F(e1,e1,y) -> ~G(e1,e1,y))", True),
            Condition("z = e1: the row x = e1 is satisfied", "satisfied", "(y)(F(e1,e1,y) -> ~G(e1,e1,y))", True),
            Condition("z = e2: the row x = e2 is t-relevant", "relevant", "(y)(F(e2,e2,y) -> ~G(e2,e2,y))", True),
            Condition("z = e2: the row x = e2 is satisfied", "satisfied", "(y)(F(e2,e2,y) -> ~G(e2,e2,y))", True),
            Condition("z = e2: the row x = e1 is not satisfied", "satisfied", "(y)(F(e2,e1,y) -> ~G(e2,e1,y))", False),
            *_rows("(Ex)(y)(F({c},x,y) -> ~G({c},x,y))", two, True, kind="satisfied",
                   description="every z-slice has a satisfied row"),
        ],
    }


CONDITIONS = _conditions()

_BOTH = (S2, S3)


def _fx(id, model, sentence, verdict, citation, rules=_BOTH, mode="interp"):
    return Fixture(id, model, sentence, {r: verdict for r in rules}, citation, mode)


def fixtures() -> list[Fixture]:
    return [
        _fx("CHILDREN", "CHILDREN", "(x)(J(x) -> S(x))", Verdict.GAP,
            "J is stuck at 0, so S is t-redundant"),
        _fx("CHILDREN-ANY", "CHILDREN", "(x)((J(x) & ~J(x)) -> S(x))", Verdict.GAP,
            "constant matrix: neither true nor false", mode="any"),
        _fx("U1-a", "U1", "(x)~(F(x) & G(x))", Verdict.TRUE, "no overlap between F and G"),
        _fx("U1-b", "U1", "(x)(~F(x) | ~G(x))", Verdict.TRUE, "no overlap between F and G"),
        _fx("U1-c", "U1", "(x)(F(x) -> ~G(x))", Verdict.TRUE, "no overlap between F and G"),
        _fx("U1-d", "U1", "~(Ex)(F(x) & G(x))", Verdict.TRUE, "no overlap between F and G"),
        _fx("E1", "E1", "(Ex)(F(x) & G(x))", Verdict.TRUE, "F and G overlap"),
        _fx("E1-neg", "E1", "(x)(F(x) -> ~G(x))", Verdict.FALSE, "negation of a true sentence"),
        _fx("U1B-a", "U1B", "(x)~(F(x) & G(x))", Verdict.GAP, "satisfied but not t-relevant"),
        _fx("U1B-b", "U1B", "(x)(~F(x) | ~G(x))", Verdict.GAP, "none of the no-overlap sentences is true"),
        _fx("U1B-c", "U1B", "(x)(F(x) -> ~G(x))", Verdict.GAP, "none of the no-overlap sentences is true"),
        _fx("U1B-neg", "U1B", "(Ex)(F(x) & G(x))", Verdict.GAP, "the negation is not false"),
        _fx("U1B-or", "U1B", "(Ex)(F(x) | G(x))", Verdict.TRUE, "F alone does not determine it; true"),
        Fixture("U1B-DRAWN-or", "U1B_DRAWN", "(Ex)(F(x) | G(x))", {S2: Verdict.GAP, S3: Verdict.TRUE},
                "with F universal the single-quantifier and prefix rules part ways"),
        _fx("EX2", "EX2", "(x)(y)(F(x,y) -> ~G(x,y))", Verdict.GAP, "satisfied but not t-relevant", (S3,)),
        _fx("EX2-neg", "EX2", "(Ex)(Ey)(F(x,y) & G(x,y))", Verdict.GAP, "the negation is a gap too", (S3,)),
        _fx("EX3", "EX3", "(Ex)(Ey)(F(x,y) & G(x,y))", Verdict.TRUE, "one t-relevant satisfied row", (S3,)),
        _fx("EX3-neg", "EX3", "(x)(y)(F(x,y) -> ~G(x,y))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX4", "EX4", "(Ex)(y)(F(x,y) -> ~G(x,y))", Verdict.TRUE, "a t-relevant row is satisfied", (S3,)),
        _fx("EX4-neg", "EX4", "(x)(Ey)(F(x,y) & G(x,y))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX4B", "EX4B", "(Ex)(y)(F(x,y) -> ~G(x,y))", Verdict.FALSE, "the negation is true", (S3,)),
        _fx("EX4B-neg", "EX4B", "(x)(Ey)(F(x,y) & G(x,y))", Verdict.TRUE, "all t-relevant rows satisfied", (S3,)),
        _fx("EX5", "EX5", "(Ex)(y)(F(x,y) -> ~G(x,y))", Verdict.GAP, "no t-relevant row", (S3,)),
        _fx("EX5-neg", "EX5", "(x)(Ey)(F(x,y) & G(x,y))", Verdict.GAP, "no t-relevant row", (S3,)),
        _fx("EX6", "EX6", "(y)(Ex)(F(x,y) & G(x,y))", Verdict.TRUE, "all t-relevant columns satisfied", (S3,)),
        _fx("EX6-neg", "EX6", "(Ey)(x)(F(x,y) -> ~G(x,y))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX6B", "EX6B", "(y)(Ex)(F(x,y) & G(x,y))", Verdict.FALSE, "the negation is true", (S3,)),
        _fx("EX6B-neg", "EX6B", "(Ey)(x)(F(x,y) -> ~G(x,y))", Verdict.TRUE, "a t-relevant column is satisfied", (S3,)),
        _fx("EX7", "EX7", "(y)(Ex)(F(x,y) & G(x,y))", Verdict.GAP, "no t-relevant column", (S3,)),
        _fx("EX7-neg", "EX7", "(Ey)(x)(F(x,y) -> ~G(x,y))", Verdict.GAP, "the negation is not false", (S3,)),
        _fx("EX8", "EX8", "(z)(x)(y)(F(x,y,z) -> ~G(x,y,z))", Verdict.TRUE, "satisfied and t-relevant", (S3,)),
        _fx("EX8-neg", "EX8", "(Ez)(Ex)(Ey)(F(x,y,z) & G(x,y,z))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX9", "EX9", "(z)(y)(Ex)(F(x,y,z) & G(x,y,z))", Verdict.TRUE, "true because satisfied", (S3,)),
        _fx("EX9-neg", "EX9", "(Ez)(Ey)(x)(F(x,y,z) -> ~G(x,y,z))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX10", "EX10", "(z)(Ex)(Ey)(F(z,x,y) & G(z,x,y))", Verdict.TRUE, "gap-shaped slices do not count", (S3,)),
        _fx("EX10-neg", "EX10", "(Ez)(x)(y)(F(z,x,y) -> ~G(z,x,y))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX11", "EX11", "(Ez)(x)(y)(F(z,x,y) -> ~G(z,x,y))", Verdict.TRUE, "a t-relevant slice is satisfied", (S3,)),
        _fx("EX11-neg", "EX11", "(z)(Ex)(Ey)(F(z,x,y) & G(z,x,y))", Verdict.FALSE, "negation of a true sentence", (S3,)),
        _fx("EX12", "EX12", "(z)(Ex)(y)(F(z,x,y) -> ~G(z,x,y))", Verdict.TRUE, "every slice has a satisfied row", (S3,)),
        _fx("EX12-neg", "EX12", "(Ez)(x)(Ey)(F(z,x,y) & G(z,x,y))", Verdict.FALSE, "negation of a true sentence", (S3,)),
    ]


@dataclass
class FixtureResult:
    fixture: Fixture
    rule: str
    expected: Verdict
    actual: Verdict | None
    failed_conditions: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed_conditions and self.actual is self.expected


def failed_conditions(model_name: str) -> list[tuple[Condition, object]]:
    m = model(model_name)
    bad = []
    for c in CONDITIONS.get(model_name, []):
        got = check_condition(c, m)
        if got != c.expected:
            bad.append((c, got))
    return bad


def run_fixture(fx: Fixture) -> list[FixtureResult]:
    """Check the model's conditions, then the verdict under each rule."""
    bad = failed_conditions(fx.model)
    m = model(fx.model)
    out = []
    for rule, expected in fx.expected.items():
        actual = None if bad else verdict_of(fx.sentence, m, rule, fx.mode)
        out.append(FixtureResult(fx, rule, expected, actual, bad))
    return out
