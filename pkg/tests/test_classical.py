import random

import pytest

from truthrel.classical import eval_classical, eval_classical_bruteforce, expand_quantifiers
from truthrel.errors import FreeVariableError, UndeclaredPredicateError
from truthrel.harness.census import MONADIC_CATALOG, POLY_CATALOG
from truthrel.harness.fixtures import model
from truthrel.model import Interpretation, Signature, enumerate_models, parse_model
from truthrel.syntax import (
    And,
    Atom,
    Exists,
    ForAll,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    parse_formula,
    parse_sentence,
    prenex_negate,
    print_formula,
)


def test_children_conditional_holds_classically():
    assert eval_classical(parse_formula("(x)(J(x) -> S(x))"), model("CHILDREN"))


def test_u1b_no_overlap_holds():
    assert eval_classical(parse_formula("(x)~(F(x) & G(x))"), model("U1B"))


def test_disjoint_predicates_do_not_overlap():
    assert not eval_classical(parse_formula("(Ex)(F(x) & G(x))"), model("U1"))


def test_env_binds_free_variables():
    m = model("CHILDREN")
    assert eval_classical(parse_formula("S(x)"), m, {"x": "a"})
    with pytest.raises(FreeVariableError):
        eval_classical(parse_formula("S(x)"), m)


def test_undeclared_predicate():
    with pytest.raises(UndeclaredPredicateError):
        eval_classical(parse_formula("(x)H(x)"), model("CHILDREN"))


def test_bruteforce_expansion():
    m = parse_model("universe: a b\npred F/1: a\n")
    f = parse_formula("(x)F(x)")
    assert print_formula(expand_quantifiers(f, m.universe)) == "F(a) & F(b)"
    assert eval_classical_bruteforce(f, m) is False
    g = parse_formula("(Ex)(Ey)(F(x,y) & G(x,y))")
    assert eval_classical_bruteforce(g, model("EX3")) is True


def _catalog_sigs():
    return [("F/2,G/2", POLY_CATALOG), ("F/1,G/1", MONADIC_CATALOG)]


@pytest.mark.parametrize("sig, catalog", _catalog_sigs())
def test_bruteforce_agrees_exhaustively(sig, catalog):
    sentences = [parse_formula(t) for t in catalog]
    for n in (1, 2):
        for m in enumerate_models(Signature.parse(sig), n):
            for f in sentences:
                assert eval_classical(f, m) == eval_classical_bruteforce(f, m)


@pytest.mark.parametrize("sig, catalog", _catalog_sigs())
def test_negation_flips_classical_value(sig, catalog):
    for m in enumerate_models(Signature.parse(sig), 2):
        for t in catalog:
            s = parse_sentence(t)
            assert eval_classical(prenex_negate(s).to_formula(), m) != eval_classical(s.to_formula(), m)


def _random_closed(rng, depth, bound):
    if depth == 0 or rng.random() < 0.25:
        if bound and rng.random() < 0.7:
            v = rng.choice(bound)
            return Atom(rng.choice("FG"), (Var(v),)) if rng.random() < 0.5 else Atom("R", (Var(v), Var(rng.choice(bound))))
        return Atom("P", ())
    k = rng.randrange(6)
    if k == 0:
        return Not(_random_closed(rng, depth - 1, bound))
    if k == 1:
        v = rng.choice("xyz")
        q = ForAll if rng.random() < 0.5 else Exists
        return q(v, _random_closed(rng, depth - 1, bound + [v]))
    op = (And, Or, Implies, Iff)[k - 2]
    return op(_random_closed(rng, depth - 1, bound), _random_closed(rng, depth - 1, bound))


def _random_model(rng):
    n = rng.randint(1, 3)
    u = [f"e{i}" for i in range(1, n + 1)]
    pick = lambda items: [t for t in items if rng.random() < 0.5]
    pairs = [(a, b) for a in u for b in u]
    return Interpretation.build(u, {"F/1": pick(u), "G/1": pick(u), "R/2": pick(pairs), "P/0": pick([()])})


def test_bruteforce_agrees_on_random_pairs():
    rng = random.Random(20261016)
    for _ in range(1000):
        f, m = _random_closed(rng, 5, []), _random_model(rng)
        assert eval_classical(f, m) == eval_classical_bruteforce(f, m), print_formula(f)
