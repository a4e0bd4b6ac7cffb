import pytest

from truthrel.errors import CapExceededError
from truthrel.harness import oracle
from truthrel.harness.census import (
    MONADIC_CATALOG,
    POLY_CATALOG,
    TRIADIC_CATALOG,
    block_permutations,
    builtin_catalog,
    census,
    check_properties,
    property_tsv,
)
from truthrel.harness.fixtures import CONDITIONS, failed_conditions, fixtures, model_names, run_fixture
from truthrel.model import Signature, enumerate_models
from truthrel.syntax import parse_sentence
from truthrel.verdict import Verdict

MONADIC = Signature.parse("F/1,G/1")


@pytest.mark.parametrize("name", sorted(CONDITIONS))
def test_reconstructed_models_meet_their_conditions(name):
    assert failed_conditions(name) == []


@pytest.mark.parametrize("fx", fixtures(), ids=lambda fx: fx.id)
def test_fixture(fx):
    for r in run_fixture(fx):
        assert r.ok, f"{fx.id} [{r.rule}] expected {r.expected}, got {r.actual}; {fx.citation}"


def test_every_model_is_exercised():
    used = {fx.model for fx in fixtures()}
    assert used == set(model_names())


def test_builtin_catalog_follows_signature():
    assert builtin_catalog(Signature.parse("F/2,G/2")) == list(POLY_CATALOG)
    assert builtin_catalog(Signature.parse("F/3,G/3")) == list(TRIADIC_CATALOG)
    assert builtin_catalog(MONADIC) == list(MONADIC_CATALOG)
    assert builtin_catalog(Signature.parse("F/1")) == [t for t in MONADIC_CATALOG if "G" not in t]


def test_census_counts_single_sentence():
    report = census(["(x)(F(x) -> ~G(x))"], MONADIC, 1)
    (row,) = report.rows
    assert (row.models, row.true, row.false, row.gap) == (4, 0, 1, 3)


def test_census_counts_match_oracle():
    sig = Signature.parse("F/2,G/2")
    report = census(POLY_CATALOG, sig, 2)
    for row, text in zip(report.rows, POLY_CATALOG):
        s = parse_sentence(text)
        counts = {v: 0 for v in Verdict}
        for m in enumerate_models(sig, 2):
            counts[oracle.verdict(s, m)] += 1
        assert (row.true, row.false, row.gap) == (counts[Verdict.TRUE], counts[Verdict.FALSE], counts[Verdict.GAP])
        assert row.models == 256


def test_census_ignores_worker_count():
    one = census(MONADIC_CATALOG, MONADIC, 3, workers=1).tsv()
    assert census(MONADIC_CATALOG, MONADIC, 3, workers=3).tsv() == one
    assert census(MONADIC_CATALOG, MONADIC, 3, workers=1).tsv() == one


def test_census_cap():
    with pytest.raises(CapExceededError):
        census(MONADIC_CATALOG, MONADIC, 4)
    with pytest.raises(CapExceededError):
        check_properties(MONADIC, 4, MONADIC_CATALOG)


def test_monadic_rule_divergences_are_reported():
    report = census(MONADIC_CATALOG, MONADIC, 2)
    assert report.divergences
    assert all(d.s2 is Verdict.GAP and d.s3 is Verdict.TRUE for d in report.divergences)
    assert any(d.sentence == "(Ex)(F(x) | G(x))" for d in report.divergences)
    assert "DIVERGENCE\tmonadic-rule\t(Ex)(F(x) | G(x))" in report.tsv()


def test_block_permutations():
    s = parse_sentence("(x)(y)(Ez)(F(x,y,z) & G(x,y,z))")
    assert [str(t) for t in block_permutations(s)] == ["(y)(x)(Ez)(F(x,y,z) & G(x,y,z))"]
    assert list(block_permutations(parse_sentence("(x)(Ey)(F(x,y) & G(x,y))"))) == []
    assert len(list(block_permutations(parse_sentence(TRIADIC_CATALOG[0])))) == 5


def test_properties_on_monadic_domain():
    results = {r.property: r for r in check_properties(MONADIC, 2, MONADIC_CATALOG)}
    for name in ("exclusivity", "mirror", "relevance-duality", "block-commutation", "oracle-agreement",
                 "prop-monotonicity", "mono-monotonicity"):
        assert results[name].result == "PASS", results[name].line()
    assert results["existential-relevance-note"].result == "DIVERGENCE"
    assert results["monadic-rule-agreement"].result == "DIVERGENCE"
    assert not any(r.failed for r in results.values())


def test_property_report_format():
    results = check_properties(MONADIC, 1, MONADIC_CATALOG, names=["mirror", "existential-relevance-note"])
    lines = property_tsv(results).splitlines()
    assert lines[0] == "property\tdomain\tresult\tcounterexample"
    assert lines[1].split("\t")[:3] == ["mirror", "F/1,G/1 sizes 1-1 x 12 sentences", "PASS"]
    assert "[documented:" in lines[2]


def test_unknown_property():
    with pytest.raises(ValueError):
        check_properties(MONADIC, 1, MONADIC_CATALOG, names=["nonsense"])
