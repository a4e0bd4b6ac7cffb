"""Command-line interface: ``truthrel <command> ...``.

Exit status: 0 success (a GAP verdict included), 2 parse or format error,
3 semantic error, 4 property-suite failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import mono, poly
from .classical import eval_classical
from .errors import FreeVariableError, ModelFormatError, ParseError, TruthRelError
from .harness import census as census_mod
from .harness import fixtures
from .model import Interpretation, Signature, check_formula_against, parse_model
from .prop import format_atom_set, is_t_relevant_prop, t_redundant_atoms, truth_determining_sets
from .syntax import (
    atoms,
    constants_of,
    free_variables,
    is_quantifier_free,
    parse_formula,
    predicates,
    to_prenex_sentence,
)

FIXTURE_PREFIX = "fixture:"


def load_model(spec: str) -> Interpretation:
    if spec.startswith(FIXTURE_PREFIX):
        name = spec[len(FIXTURE_PREFIX):].upper()
        if name not in fixtures.MODELS_TEXT:
            raise ModelFormatError(f"unknown fixture model {name}; known: {', '.join(fixtures.model_names())}")
        return fixtures.model(name)
    try:
        text = Path(spec).read_text()
    except OSError as e:
        raise ModelFormatError(f"cannot read model file {spec}: {e.strerror}") from e
    return parse_model(text)


def _sentence(text: str, m: Interpretation):
    s = to_prenex_sentence(parse_formula(text, m.universe))
    if not s.prefix:
        raise TruthRelError("the sentence needs at least one quantifier")
    return s


def cmd_eval(args) -> int:
    m = load_model(args.model)
    s = _sentence(args.formula, m)
    if args.semantics == "s2":
        if len(s.prefix) != 1:
            raise TruthRelError("--semantics s2 applies to single-quantifier sentences only")
        poly._check(s, m)
        print(mono.evaluate_monadic(s, m, args.mode))
        return 0
    verdict, trace = poly.evaluate(s, m, args.mode, trace=args.trace)
    print(verdict)
    if trace is not None:
        print(trace)
    return 0


def _parse_stuck(text: str | None):
    stuck = {}
    for item in filter(None, (t.strip() for t in (text or "").split(","))):
        name, sep, value = item.partition("=")
        if not sep or value not in ("0", "1"):
            raise ParseError(f"bad stuck value {item!r}; expected NAME=0 or NAME=1")
        stuck[parse_formula(name)] = value == "1"
    return stuck


def cmd_tdsets(args) -> int:
    f = parse_formula(args.formula)
    if not is_quantifier_free(f):
        raise ParseError("tdsets needs a quantifier-free formula")
    stuck = _parse_stuck(args.stuck)
    order = atoms(f)
    unknown = [a for a in stuck if a not in order]
    if unknown:
        raise TruthRelError(f"stuck atom {unknown[0]} does not occur in the formula")
    for s in truth_determining_sets(f, stuck):
        print(format_atom_set(s, order))
    print("redundant:" + "".join(f" {a}" for a in t_redundant_atoms(f, stuck)))
    print("t-relevant: " + ("yes" if is_t_relevant_prop(f, stuck) else "no"))
    return 0


def cmd_relevant(args) -> int:
    m = load_model(args.model)
    s = _sentence(args.formula, m)
    ok, lines = poly.explain_relevance(s, m, args.mode)
    print("RELEVANT" if ok else "IRRELEVANT")
    for line in lines:
        print(line)
    return 0


def cmd_classical(args) -> int:
    m = load_model(args.model)
    f = parse_formula(args.formula, m.universe)
    free = free_variables(f)
    if free:
        raise FreeVariableError(f"free variable(s) {', '.join(sorted(free))}")
    unknown = constants_of(f) - set(m.universe)
    if unknown:
        raise FreeVariableError(f"{', '.join(sorted(unknown))} is neither bound nor a universe element")
    check_formula_against(m, predicates(f))
    print("TRUE" if eval_classical(f, m) else "FALSE")
    return 0


def _catalog(spec: str, sig: Signature) -> list[str]:
    if spec == "builtin":
        return census_mod.builtin_catalog(sig)
    try:
        lines = Path(spec).read_text().splitlines()
    except OSError as e:
        raise TruthRelError(f"cannot read catalog {spec}: {e.strerror}") from e
    return [ln.strip() for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]


def cmd_census(args) -> int:
    sig = Signature.parse(args.signature)
    if args.max_universe > args.cap:
        raise census_mod.CapExceededError(f"universe size {args.max_universe} exceeds the cap of {args.cap}")
    catalog = _catalog(args.catalog, sig)
    for n in range(1, args.max_universe + 1):
        report = census_mod.census(catalog, sig, n, cap=args.cap, workers=args.workers, mode=args.mode)
        print(report.tsv())
    if not args.check_properties:
        return 0
    names = None if args.check_properties == "all" else [p.strip() for p in args.check_properties.split(",")]
    try:
        results = census_mod.check_properties(sig, args.max_universe, catalog, names, cap=args.cap)
    except ValueError as e:
        raise TruthRelError(str(e)) from e
    print(census_mod.property_tsv(results))
    return 4 if any(r.failed for r in results) else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="truthrel", description="Truth-relevant semantics for finite models.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_model(sp):
        sp.add_argument("--model", required=True, help="model file, or fixture:NAME for a built-in model")
        sp.add_argument("--formula", required=True)
        sp.add_argument("--mode", choices=["interp", "any"], default="interp")

    e = sub.add_parser("eval", help="print TRUE, FALSE or GAP for a prenex sentence")
    with_model(e)
    e.add_argument("--semantics", choices=["s3", "s2"], default="s3",
                   help="s3: prenex-prefix rules; s2: single-quantifier rule")
    e.add_argument("--trace", action="store_true", help="append the rule tree")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("tdsets", help="minimal truth-determining sets of a propositional formula")
    t.add_argument("--formula", required=True)
    t.add_argument("--stuck", help="comma-separated ATOM=0|1 preconditions")
    t.set_defaults(func=cmd_tdsets)

    r = sub.add_parser("relevant", help="t-relevance of a prenex sentence, with explanation")
    with_model(r)
    r.set_defaults(func=cmd_relevant)

    c = sub.add_parser("classical", help="two-valued truth of a closed formula")
    c.add_argument("--model", required=True)
    c.add_argument("--formula", required=True)
    c.set_defaults(func=cmd_classical)

    n = sub.add_parser("census", help="exhaustive census over small models")
    n.add_argument("--signature", default="F/2,G/2")
    n.add_argument("--max-universe", type=int, default=2)
    n.add_argument("--catalog", default="builtin", help="'builtin' or a file with one sentence per line")
    n.add_argument("--check-properties", default="", help="'all' or a comma-separated list")
    n.add_argument("--mode", choices=["interp", "any"], default="interp")
    n.add_argument("--workers", type=int, default=1)
    n.add_argument("--cap", type=int, default=census_mod.CAP, help=argparse.SUPPRESS)
    n.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TruthRelError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
