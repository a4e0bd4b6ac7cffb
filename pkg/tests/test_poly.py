import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from truthrel.errors import FreeVariableError, UndeclaredPredicateError
from truthrel.harness.census import POLY_CATALOG, block_permutations
from truthrel.harness.fixtures import model
from truthrel.model import Interpretation, Signature, enumerate_models
from truthrel.poly import (
    RELEVANCE_UNIVERSAL,
    evaluate,
    explain_relevance,
    is_satisfied,
    is_t_relevant,
    t_relevant_instances,
    trailing_block,
)
from truthrel.syntax import Flavor, parse_sentence, prenex_negate
from truthrel.verdict import Verdict

A, E = Flavor.UNIVERSAL, Flavor.EXISTENTIAL

ALL_NO_OVERLAP = "(x)(y)(F(x,y) -> ~G(x,y))"
SOME_OVERLAP = "(Ex)(Ey)(F(x,y) & G(x,y))"
ROW_CLEAR = "(Ex)(y)(F(x,y) -> ~G(x,y))"
EVERY_ROW_OVERLAPS = "(x)(Ey)(F(x,y) & G(x,y))"
EVERY_COLUMN_OVERLAPS = "(y)(Ex)(F(x,y) & G(x,y))"
COLUMN_CLEAR = "(Ey)(x)(F(x,y) -> ~G(x,y))"


def verdict(text, m):
    return evaluate(parse_sentence(text), m)[0]


def test_trailing_block():
    assert trailing_block(((A, "x"), (A, "y"))) == ((), ((A, "x"), (A, "y")))
    assert trailing_block(((E, "x"), (A, "y"))) == (((E, "x"),), ((A, "y"),))
    assert trailing_block(((A, "z"), (A, "y"), (E, "x"))) == (((A, "z"), (A, "y")), ((E, "x"),))


class TestRelevance:
    def test_no_witness_column(self):
        s = parse_sentence(ALL_NO_OVERLAP)
        assert not is_t_relevant(s.prefix, s.matrix, {}, model("EX2"))

    def test_existential_dual(self):
        s = parse_sentence(SOME_OVERLAP)
        assert not is_t_relevant(s.prefix, s.matrix, {}, model("EX2"))

    def test_outer_instance(self):
        s = parse_sentence(EVERY_ROW_OVERLAPS)
        assert is_t_relevant(s.prefix, s.matrix, {}, model("EX4B"))

    def test_instances(self):
        s = parse_sentence(ALL_NO_OVERLAP)
        assert t_relevant_instances(s.prefix[0], s.prefix[1:], s.matrix, {}, model("EX2")) == ["e1"]
        s = parse_sentence(EVERY_COLUMN_OVERLAPS)
        assert t_relevant_instances(s.prefix[0], s.prefix[1:], s.matrix, {}, model("EX7")) == []
        assert t_relevant_instances(s.prefix[0], s.prefix[1:], s.matrix, {}, model("EX6")) == ["e1", "e2"]


class TestSatisfaction:
    def test_relevant_row_is_clear(self):
        s = parse_sentence(ALL_NO_OVERLAP)
        assert is_satisfied(s.prefix, s.matrix, {}, model("EX2"))

    def test_universal_needs_an_instance(self):
        s = parse_sentence(EVERY_COLUMN_OVERLAPS)
        assert not is_satisfied(s.prefix, s.matrix, {}, model("EX7"))

    def test_existential_outer(self):
        s = parse_sentence(ROW_CLEAR)
        assert is_satisfied(s.prefix, s.matrix, {}, model("EX4"))


@pytest.mark.parametrize(
    "name, text, expected",
    [
        ("EX2", ALL_NO_OVERLAP, Verdict.GAP),
        ("EX2", SOME_OVERLAP, Verdict.GAP),
        ("EX3", SOME_OVERLAP, Verdict.TRUE),
        ("EX3", ALL_NO_OVERLAP, Verdict.FALSE),
        ("EX4", ROW_CLEAR, Verdict.TRUE),
        ("EX4B", ROW_CLEAR, Verdict.FALSE),
        ("EX5", ROW_CLEAR, Verdict.GAP),
        ("EX6", EVERY_COLUMN_OVERLAPS, Verdict.TRUE),
        ("EX6B", EVERY_COLUMN_OVERLAPS, Verdict.FALSE),
        ("EX7", EVERY_COLUMN_OVERLAPS, Verdict.GAP),
        ("EX6B", COLUMN_CLEAR, Verdict.TRUE),
        ("EX4B", EVERY_ROW_OVERLAPS, Verdict.TRUE),
    ],
)
def test_verdicts(name, text, expected):
    assert verdict(text, model(name)) is expected


def test_trace_carries_witness_and_rule_ids():
    v, t = evaluate(parse_sentence(SOME_OVERLAP), model("EX3"), trace=True)
    assert v is Verdict.TRUE
    text = str(t)
    assert text.splitlines()[0].startswith("verdict ")
    assert "satisfaction.existential" in text and "[instances: e1]" in text

    v, t = evaluate(parse_sentence(ALL_NO_OVERLAP), model("EX3"), trace=True)
    assert v is Verdict.FALSE
    assert any(n.rule == RELEVANCE_UNIVERSAL and n.witness for n in t.walk())


def test_trace_does_not_change_verdict():
    for name in ("EX2", "EX4", "EX6B", "EX7"):
        for text in POLY_CATALOG:
            s = parse_sentence(text)
            assert evaluate(s, model(name), trace=True)[0] is evaluate(s, model(name))[0]


def test_explain_relevance():
    ok, lines = explain_relevance(parse_sentence(ALL_NO_OVERLAP), model("EX2"))
    assert not ok
    assert "no witness column: no t-relevant (x)-formula" in lines
    ok, lines = explain_relevance(parse_sentence("(x)(y)(F(x,y) -> ~G(x,y))"), model("EX3"))
    assert ok and lines[0].startswith("witness: x=")


def test_errors():
    m = model("EX3")
    with pytest.raises(UndeclaredPredicateError):
        evaluate(parse_sentence("(x)H(x)"), m)
    with pytest.raises(FreeVariableError):
        evaluate(parse_sentence("(x)F(x,q)", constants=["q"]), m)
    with pytest.raises(UndeclaredPredicateError):
        evaluate(parse_sentence("(x)F(x)"), m)


def test_constants_in_sentences():
    m = model("EX4")
    s = parse_sentence("(y)(F(e1,y) -> ~G(e1,y))", m.universe)
    assert evaluate(s, m)[0] is Verdict.TRUE


@st.composite
def models_and_orders(draw):
    n = draw(st.integers(1, 3))
    models = list(enumerate_models(Signature.parse("F/2,G/2"), n)) if n < 3 else None
    if models is None:
        universe = ("e1", "e2", "e3")
        pairs = [(a, b) for a in universe for b in universe]
        F = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=5))
        G = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=5))
        m = Interpretation.build(universe, {"F/2": F, "G/2": G})
    else:
        m = draw(st.sampled_from(models))
    order = draw(st.permutations(m.universe))
    return m, order


@settings(max_examples=150, deadline=None)
@given(models_and_orders())
def test_verdicts_ignore_universe_order(pair):
    m, order = pair
    r = m.reorder(order)
    for text in POLY_CATALOG:
        s = parse_sentence(text)
        assert evaluate(s, m)[0] is evaluate(s, r)[0]


@settings(max_examples=100, deadline=None)
@given(models_and_orders())
def test_negation_mirror_and_commutation_on_size_three(pair):
    m, _ = pair
    for text in POLY_CATALOG:
        s = parse_sentence(text)
        v = evaluate(s, m)[0]
        assert evaluate(prenex_negate(s), m)[0] is v.mirror()
        for t in block_permutations(s):
            assert evaluate(t, m)[0] is v


def test_block_order_can_matter_outside_the_catalog():
    # Satisfaction peels the outermost variable first, so the relevant rows
    # and the relevant columns of a block can disagree.
    m = Interpretation.build(("e1", "e2"), {"F/2": [], "G/2": [("e1", "e1"), ("e1", "e2")]})
    assert verdict("(Ex)(Ey)(F(x,y) | G(x,y))", m) is Verdict.FALSE
    assert verdict("(Ey)(Ex)(F(x,y) | G(x,y))", m) is Verdict.TRUE
