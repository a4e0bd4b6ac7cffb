"""Exhaustive small-model census and property suites.

Every catalog sentence is evaluated on every model of a signature over
``e1..en``: under the prenex rules, under the single-quantifier rule where it
applies, and classically.  Property checks run over the same domain.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .. import mono
from ..classical import eval_classical
from ..errors import CapExceededError, FreeVariableError
from ..model import Interpretation, Signature, check_formula_against, count_models, enumerate_models
from ..poly import ModelEvaluator
from ..prop import is_truth_determining
from ..syntax import (
    Flavor,
    PrenexSentence,
    atoms,
    free_variables,
    parse_formula,
    parse_sentence,
    predicates,
    prenex_negate,
)
from ..verdict import Verdict
from . import oracle

CAP = 3

POLY_CATALOG = (
    "(x)(y)(F(x,y) -> ~G(x,y))",
    "(Ex)(Ey)(F(x,y) & G(x,y))",
    "(Ex)(y)(F(x,y) -> ~G(x,y))",
    "(x)(Ey)(F(x,y) & G(x,y))",
    "(y)(Ex)(F(x,y) & G(x,y))",
    "(Ey)(x)(F(x,y) -> ~G(x,y))",
)

MONADIC_CATALOG = (
    "(x)(F(x) -> ~G(x))",
    "(x)~(F(x) & G(x))",
    "(x)(~F(x) | ~G(x))",
    "(Ex)(F(x) & G(x))",
    "(Ex)(F(x) | G(x))",
    "(x)(F(x) | G(x))",
    "(Ex)(F(x) & ~G(x))",
    "(x)(F(x) <-> G(x))",
    "(Ex)F(x)",
    "(x)F(x)",
    "(Ex)~F(x)",
    "(x)(F(x) | ~F(x))",
)

TRIADIC_CATALOG = (
    "(x)(y)(z)(F(x,y,z) -> ~G(x,y,z))",
    "(z)(y)(Ex)(F(x,y,z) & G(x,y,z))",
    "(z)(Ex)(Ey)(F(z,x,y) & G(z,x,y))",
)

ALL_CATALOGS = POLY_CATALOG + MONADIC_CATALOG + TRIADIC_CATALOG

PROPOSITIONAL_SAMPLES = (
    "P | ~P | Q",
    "P -> (Q -> P)",
    "~P | Q",
    "P & Q",
    "(P -> Q) & (Q -> R)",
    "(P <-> Q) | (R & ~P)",
    "~(P & (Q | R)) <-> S",
)

# Violations of these are analyzed gaps between claims and definitions.
# They are reported as DIVERGENCE lines and never fail the run.
DOCUMENTED = {
    "classical-soundness": "satisfaction quantifies only over t-relevant instances, so mixed prefixes can be TRUE while classically false",
    "existential-relevance-note": "a satisfied existential need not be t-relevant (F universal makes (Ex)(F(x)|G(x)) satisfied with {F(x)} determining)",
    "monadic-rule-agreement": "single existentials: satisfied-and-relevant versus satisfied alone",
}

PROPERTIES = (
    "exclusivity",
    "mirror",
    "classical-soundness",
    "relevance-duality",
    "block-commutation",
    "oracle-agreement",
    "prop-monotonicity",
    "mono-monotonicity",
    "existential-relevance-note",
    "monadic-rule-agreement",
)


def builtin_catalog(sig: Signature) -> list[str]:
    """Built-in sentences whose predicates all belong to ``sig``."""
    declared = dict(sig.predicates)
    out = []
    for text in ALL_CATALOGS:
        used = predicates(parse_formula(text))
        if all(declared.get(p) == k for p, k in used.items()):
            out.append(text)
    return out


def _check_size(size: int, cap: int) -> None:
    if size > cap:
        raise CapExceededError(f"universe size {size} exceeds the cap of {cap}")


def _sentences(catalog, sig: Signature) -> list[PrenexSentence]:
    out = []
    for text in catalog:
        s = parse_sentence(text)
        free = free_variables(s.to_formula())
        if free:
            raise FreeVariableError(f"free variable(s) {', '.join(sorted(free))} in {text}")
        check_formula_against(_probe_model(sig), predicates(s.matrix))
        out.append(s)
    return out


def _probe_model(sig: Signature) -> Interpretation:
    return next(enumerate_models(sig, 1))


def inline_model(m: Interpretation) -> str:
    parts = ["universe: " + " ".join(m.universe)]
    for name, arity, ext in m.predicates:
        items = sorted(t[0] if arity == 1 else "(" + ",".join(t) + ")" for t in ext)
        parts.append(f"{name}/{arity}: " + (" ".join(items) or "-"))
    return "; ".join(parts)


# -- census ----------------------------------------------------------------


@dataclass
class SentenceCounts:
    sentence: str
    models: int = 0
    true: int = 0
    false: int = 0
    gap: int = 0
    divergences: int = 0
    gap_classical_true: int = 0
    gap_classical_false: int = 0


@dataclass(frozen=True)
class Divergence:
    """The single-quantifier rule and the prenex rule disagree on one model."""

    index: int
    model: str
    sentence: str
    s2: Verdict
    s3: Verdict
    classical: bool

    def line(self) -> str:
        return (f"DIVERGENCE\tmonadic-rule\t{self.sentence}\t{self.model}\t"
                f"s2={self.s2} s3={self.s3} classical={'TRUE' if self.classical else 'FALSE'}")


@dataclass
class CensusReport:
    signature: Signature
    size: int
    rows: list
    divergences: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    def tsv(self) -> str:
        out = [f"# signature {self.signature} universe {self.size} models {self.rows[0].models if self.rows else 0}",
               "sentence\tmodels\ttrue\tfalse\tgap\tdivergences"]
        for r in self.rows:
            out.append(f"{r.sentence}\t{r.models}\t{r.true}\t{r.false}\t{r.gap}\t{r.divergences}")
        out.append("# gap split: sentence\tclassically-true\tclassically-false")
        for r in self.rows:
            out.append(f"# {r.sentence}\t{r.gap_classical_true}\t{r.gap_classical_false}")
        out.extend(d.line() for d in self.divergences)
        return "\n".join(out)


def _census_chunk(args):
    catalog, sig_text, size, start, stop, mode = args
    sig = Signature.parse(sig_text)
    sentences = [parse_sentence(t) for t in catalog]
    out = []
    for index, m in enumerate(itertools.islice(enumerate_models(sig, size), start, stop), start):
        ev = ModelEvaluator(m, mode)
        rows = []
        for s in sentences:
            s3 = ev.evaluate(s)[0]
            s2 = mono.evaluate_monadic(s, m, mode) if len(s.prefix) == 1 else None
            rows.append((s3, s2, eval_classical(s.to_formula(), m)))
        out.append((index, inline_model(m) if any(r[1] not in (None, r[0]) for r in rows) else "", rows))
    return out


def _chunks(total: int, workers: int):
    step = max(1, -(-total // workers))
    return [(i, min(i + step, total)) for i in range(0, total, step)]


def census(catalog, sig: Signature, size: int, cap: int = CAP, workers: int = 1, mode="interp") -> CensusReport:
    """Tabulate verdicts of every catalog sentence on every model of ``sig``
    over a universe of ``size`` objects.

    Results are independent of ``workers``: chunks cover fixed model-index
    ranges and are merged in index order.
    """
    _check_size(size, cap)
    sentences = _sentences(catalog, sig)
    texts = [str(s) for s in sentences]
    total = count_models(sig, size)
    jobs = [(tuple(catalog), str(sig), size, a, b, str(mono._mode(mode).value)) for a, b in _chunks(total, workers)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_census_chunk, jobs))
    else:
        parts = [_census_chunk(j) for j in jobs]

    rows = [SentenceCounts(t) for t in texts]
    divergences = []
    for part in parts:
        for index, model_text, results in part:
            for r, text, (s3, s2, cl) in zip(rows, texts, results):
                r.models += 1
                if s3 is Verdict.TRUE:
                    r.true += 1
                elif s3 is Verdict.FALSE:
                    r.false += 1
                else:
                    r.gap += 1
                    if cl:
                        r.gap_classical_true += 1
                    else:
                        r.gap_classical_false += 1
                if s2 is not None and s2 is not s3:
                    r.divergences += 1
                    divergences.append(Divergence(index, model_text, text, s2, s3, cl))
    return CensusReport(sig, size, rows, divergences)


# -- properties ------------------------------------------------------------


@dataclass
class PropertyResult:
    property: str
    domain: str
    checked: int = 0
    violations: int = 0
    counterexample: str = ""

    @property
    def documented(self) -> bool:
        return self.property in DOCUMENTED

    @property
    def result(self) -> str:
        if not self.violations:
            return "PASS"
        return "DIVERGENCE" if self.documented else "FAIL"

    @property
    def failed(self) -> bool:
        return self.result == "FAIL"

    def note(self, example: str) -> None:
        self.violations += 1
        if not self.counterexample:
            self.counterexample = example

    def line(self) -> str:
        ce = self.counterexample
        if self.result == "DIVERGENCE":
            ce = f"{ce} [documented: {DOCUMENTED[self.property]}]"
        return f"{self.property}\t{self.domain}\t{self.result}\t{ce}"


def property_tsv(results) -> str:
    return "\n".join(["property\tdomain\tresult\tcounterexample"] + [r.line() for r in results])


def block_permutations(s: PrenexSentence):
    """Every reordering of ``s`` that permutes variables inside maximal
    same-flavor runs of its prefix, the identity excluded."""
    runs = [list(g) for _, g in itertools.groupby(s.prefix, key=lambda q: q[0])]
    for combo in itertools.product(*(itertools.permutations(r) for r in runs)):
        prefix = tuple(q for run in combo for q in run)
        if prefix != s.prefix:
            yield PrenexSentence(prefix, s.matrix)


def _subset_pairs(items):
    subsets = [frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r)]
    for a in subsets:
        for b in subsets:
            if a < b:
                yield a, b


def _prop_monotonicity(res: PropertyResult, formulas) -> None:
    for f in formulas:
        atom_list = atoms(f)
        stucks = [{}] + [{a: v} for a in atom_list for v in (False, True)]
        for stuck in stucks:
            known = {}
            for a, b in _subset_pairs(atom_list):
                res.checked += 1
                if a not in known:
                    known[a] = is_truth_determining(f, a, stuck)
                if known[a] and not is_truth_determining(f, b, stuck):
                    res.note(f"{f} stuck={stuck}: {sorted(map(str, a))} determining, {sorted(map(str, b))} not")


def check_properties(sig: Signature, size: int, catalog, names=None, cap: int = CAP,
                     modes=("interp", "any")) -> list[PropertyResult]:
    """Run the named property suites over every model of ``sig`` with universe
    sizes ``1..size`` and every catalog sentence; ``names=None`` runs all."""
    _check_size(size, cap)
    names = list(PROPERTIES) if names is None or names == "all" else list(names)
    unknown = set(names) - set(PROPERTIES)
    if unknown:
        raise ValueError(f"unknown properties: {', '.join(sorted(unknown))}")
    sentences = _sentences(catalog, sig)
    domain = f"{sig} sizes 1-{size} x {len(sentences)} sentences"
    results = {n: PropertyResult(n, domain) for n in names}
    if "prop-monotonicity" in results:
        r = results["prop-monotonicity"]
        r.domain = f"{len(PROPOSITIONAL_SAMPLES)} samples + catalog matrices"
        formulas = [parse_formula(t) for t in PROPOSITIONAL_SAMPLES] + [s.matrix for s in sentences]
        _prop_monotonicity(r, formulas)

    negs = [prenex_negate(s) for s in sentences]
    perms = [list(block_permutations(s)) for s in sentences]
    for n in range(1, size + 1):
        for m in enumerate_models(sig, n):
            where = inline_model(m)
            for mode in modes if "oracle-agreement" in results else modes[:1]:
                _check_model(results, m, mode, sentences, negs, perms, where, primary=mode == modes[0])
    return [results[n] for n in names]


def _check_model(results, m, mode, sentences, negs, perms, where, primary):
    ev = ModelEvaluator(m, mode)
    get = results.get
    for s, neg, variants in zip(sentences, negs, perms):
        v = ev.evaluate(s)[0]
        at = f"{s} on {where}"
        if (r := get("oracle-agreement")) is not None:
            r.checked += 1
            want = oracle.verdict(s, m, mode)
            if want is not v:
                r.note(f"{at} mode={mode}: evaluator {v}, oracle {want}")
            if len(s.prefix) == 1:
                got, want = mono.evaluate_monadic(s, m, mode), oracle.monadic_verdict(s, m, mode)
                if got is not want:
                    r.note(f"{at} mode={mode}: single-quantifier rule {got}, oracle {want}")
        if not primary:
            continue
        if (r := get("exclusivity")) is not None:
            r.checked += 1
            if ev.true(s)[0] and ev.true(neg)[0]:
                r.note(f"{at}: both it and its negation are TRUE")
        if (r := get("mirror")) is not None:
            r.checked += 1
            vn = ev.evaluate(neg)[0]
            if vn is not v.mirror():
                r.note(f"{at}: {v}, negation {vn}")
        if (r := get("classical-soundness")) is not None:
            r.checked += 1
            cl = eval_classical(s.to_formula(), m)
            if (v is Verdict.TRUE and not cl) or (v is Verdict.FALSE and cl):
                r.note(f"{at}: {v} but classically {'TRUE' if cl else 'FALSE'}")
        if (r := get("relevance-duality")) is not None:
            r.checked += 1
            a = ev.relevant(s.prefix, s.matrix, {})[0]
            b = ev.relevant(neg.prefix, neg.matrix, {})[0]
            if a != b:
                r.note(f"{at}: t-relevant {a}, negation t-relevant {b}")
        if (r := get("block-commutation")) is not None:
            for t in variants:
                r.checked += 1
                vt = ev.evaluate(t)[0]
                if vt is not v:
                    r.note(f"{at}: {v}, but {t} is {vt}")
        if (r := get("existential-relevance-note")) is not None and all(
                f is Flavor.EXISTENTIAL for f, _ in s.prefix):
            r.checked += 1
            if ev.satisfied(s.prefix, s.matrix, {})[0] and not ev.relevant(s.prefix, s.matrix, {})[0]:
                r.note(f"{at}: satisfied but not t-relevant")
        if (r := get("monadic-rule-agreement")) is not None and len(s.prefix) == 1:
            r.checked += 1
            s2 = mono.evaluate_monadic(s, m, ev.mode)
            if s2 is not v:
                r.note(f"{at}: single-quantifier rule {s2}, prenex rule {v}")
        if (r := get("mono-monotonicity")) is not None and len(s.prefix) == 1:
            (flavor, var), = s.prefix
            known = {}
            for a, b in _subset_pairs(atoms(s.matrix)):
                r.checked += 1
                if a not in known:
                    known[a] = mono.is_td_under_interpretation(flavor, s.matrix, var, a, m)
                if known[a] and not mono.is_td_under_interpretation(flavor, s.matrix, var, b, m):
                    r.note(f"{at}: {sorted(map(str, a))} determining, {sorted(map(str, b))} not")
