"""Formula syntax: AST, parser, printer, substitution and prenex prefixes.

Surface syntax::

    ~A   A & B   A | B   A -> B   A <-> B   (x)A   (Ex)A   F(x,a)   P

Binding is lexical: a lowercase name bound by an enclosing binder is a
variable.  An unbound lowercase name is a constant when it is listed in the
``constants`` argument of :func:`parse_formula`, and a free variable
otherwise.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import ArityError, FreeVariableError, NotPrenexError, ParseError

NAME_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
PRED_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


Term = Union[Var, Const]


class Formula:
    """Base class of all formula nodes."""

    __slots__ = ()

    def __str__(self):
        return print_formula(self)


@dataclass(frozen=True, repr=False)
class Atom(Formula):
    pred: str
    args: tuple = ()

    def __repr__(self):
        return f"Atom({print_formula(self)!r})"

    @property
    def is_ground(self):
        return all(isinstance(t, Const) for t in self.args)


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (ForAll, Exists)


def _cached_hash(self):
    # Formulas are hashed repeatedly as memo keys; deep rehashing dominates otherwise.
    h = self.__dict__.get("_hash")
    if h is None:
        h = hash((type(self).__name__,) + tuple(getattr(self, n) for n in self.__dataclass_fields__))
        object.__setattr__(self, "_hash", h)
    return h


for _cls in (Atom, Not, And, Or, Implies, Iff, ForAll, Exists):
    _cls.__hash__ = _cached_hash


def atom(pred: str, *args: str) -> Atom:
    """Build an atom whose arguments are all variables (test convenience)."""
    return Atom(pred, tuple(Var(a) for a in args))


# -- lexer -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<iff><->)
  | (?P<imp>->)
  | (?P<not>~)
  | (?P<and>&)
  | (?P<or>\|)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<comma>,)
  | (?P<lower>[a-z][a-z0-9_]*)
  | (?P<upper>[A-Z][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_SPELLING = {"lp": "'('", "rp": "')'", "comma": "','", "lower": "a name", "upper": "a predicate"}

_EXISTS_NAME = re.compile(r"E([a-z][a-z0-9_]*)\Z")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("eof", "", len(text)))
    return tokens


# -- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, constants: frozenset[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.constants = constants
        self.bound: list[str] = []
        self.arities: dict[str, int] = {}

    def peek(self, k=0) -> _Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self, kind=None) -> _Token:
        tok = self.peek()
        if kind is not None and tok.kind != kind:
            found = tok.text or "end of input"
            raise ParseError(f"expected {_SPELLING.get(kind, kind)}, found {found!r}", tok.pos)
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek().kind != "eof":
            tok = self.peek()
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return f

    def iff(self):
        f = self.imp()
        while self.peek().kind == "iff":
            self.take()
            f = Iff(f, self.imp())
        return f

    def imp(self):
        f = self.or_()
        if self.peek().kind == "imp":
            self.take()
            return Implies(f, self.imp())
        return f

    def or_(self):
        f = self.and_()
        while self.peek().kind == "or":
            self.take()
            f = Or(f, self.and_())
        return f

    def and_(self):
        f = self.unary()
        while self.peek().kind == "and":
            self.take()
            f = And(f, self.unary())
        return f

    def binder(self):
        """Return (quantifier class, variable) if a binder starts here."""
        if self.peek().kind != "lp":
            return None
        t1, t2, t3 = self.peek(1), self.peek(2), self.peek(3)
        if t1.kind == "lower" and t2.kind == "rp":
            return ForAll, t1.text, 3
        if t1.kind == "upper" and t2.kind == "rp":
            m = _EXISTS_NAME.match(t1.text)
            if m:
                return Exists, m.group(1), 3
        if t1.kind == "upper" and t1.text == "E" and t2.kind == "lower" and t3.kind == "rp":
            return Exists, t2.text, 4
        return None

    def unary(self):
        tok = self.peek()
        if tok.kind == "not":
            self.take()
            return Not(self.unary())
        b = self.binder()
        if b is not None:
            cls, var, width = b
            self.i += width
            self.bound.append(var)
            try:
                body = self.unary()
            finally:
                self.bound.pop()
            return cls(var, body)
        if tok.kind == "upper":
            return self.atom()
        if tok.kind == "lp":
            self.take()
            f = self.iff()
            self.take("rp")
            return f
        found = tok.text or "end of input"
        raise ParseError(f"expected a formula, found {found!r}", tok.pos)

    def atom(self):
        tok = self.take("upper")
        args = []
        if self.peek().kind == "lp":
            self.take()
            args.append(self.term())
            while self.peek().kind == "comma":
                self.take()
                args.append(self.term())
            self.take("rp")
        known = self.arities.setdefault(tok.text, len(args))
        if known != len(args):
            raise ArityError(
                f"predicate {tok.text} used with arity {len(args)} and {known}", tok.pos
            )
        return Atom(tok.text, tuple(args))

    def term(self):
        tok = self.take("lower")
        if tok.text in self.bound or tok.text not in self.constants:
            return Var(tok.text)
        return Const(tok.text)


def parse_formula(text: str, constants: Iterable[str] = ()) -> Formula:
    """Parse ``text`` into a :class:`Formula`.

    ``(x)`` is a universal binder and ``(Ex)`` an existential one.  A binder
    scopes over the smallest following unary formula, so matrices with
    binary connectives must be parenthesized: ``(x)(F(x) -> G(x))``.
    """
    return _Parser(text, frozenset(constants)).parse()


# -- printer ---------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_OPS = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_UNARY = 5


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), _UNARY)


def print_formula(f: Formula) -> str:
    """Render ``f`` with the fewest parentheses that parse back to ``f``."""
    if isinstance(f, Atom):
        if not f.args:
            return f.pred
        return f"{f.pred}({','.join(t.name for t in f.args)})"
    if isinstance(f, Not):
        return "~" + _wrap(f.body, _UNARY)
    if isinstance(f, ForAll):
        return f"({f.var})" + _wrap(f.body, _UNARY)
    if isinstance(f, Exists):
        return f"(E{f.var})" + _wrap(f.body, _UNARY)
    p = _PREC[type(f)]
    # Nested implications are always bracketed even though the parser
    # associates them to the right; the other connectives associate left.
    lmin, rmin = (p + 1, p + 1) if isinstance(f, Implies) else (p, p + 1)
    return f"{_wrap(f.left, lmin)} {_OPS[type(f)]} {_wrap(f.right, rmin)}"


def _wrap(f: Formula, min_prec: int) -> str:
    s = print_formula(f)
    return s if _prec(f) >= min_prec else f"({s})"


# -- traversal -------------------------------------------------------------


def children(f: Formula) -> tuple:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, (Not, ForAll, Exists)):
        return (f.body,)
    return (f.left, f.right)


def atoms(f: Formula) -> list[Atom]:
    """Distinct atoms of ``f`` in first-occurrence order."""
    return list(atom_tuple(f))


@lru_cache(maxsize=1 << 16)
def atom_tuple(f: Formula) -> tuple[Atom, ...]:
    seen: dict[Atom, None] = {}

    def walk(g):
        if isinstance(g, Atom):
            seen.setdefault(g, None)
        else:
            for c in children(g):
                walk(c)

    walk(f)
    return tuple(seen)


def predicates(f: Formula) -> dict[str, int]:
    return {a.pred: len(a.args) for a in atoms(f)}


def free_variables(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {t.name for t in f.args if isinstance(t, Var)}
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    out: set[str] = set()
    for c in children(f):
        out |= free_variables(c)
    return out


def constants_of(f: Formula) -> set[str]:
    return {t.name for a in atoms(f) for t in a.args if isinstance(t, Const)}


def is_quantifier_free(f: Formula) -> bool:
    if isinstance(f, QUANTIFIERS):
        return False
    return all(is_quantifier_free(c) for c in children(f))


def _rebuild(f: Formula, kids: Sequence[Formula]) -> Formula:
    if isinstance(f, Not):
        return Not(kids[0])
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, kids[0])
    return type(f)(kids[0], kids[1])


def substitute(f: Formula, var: str, c: str) -> Formula:
    """Replace free occurrences of variable ``var`` by the constant ``c``."""
    return substitute_many(f, {var: c})


def substitute_many(f: Formula, env: Mapping[str, str]) -> Formula:
    if not env:
        return f
    if isinstance(f, Atom):
        if not any(isinstance(t, Var) and t.name in env for t in f.args):
            return f
        return Atom(
            f.pred,
            tuple(Const(env[t.name]) if isinstance(t, Var) and t.name in env else t for t in f.args),
        )
    if isinstance(f, QUANTIFIERS) and f.var in env:
        inner = {k: v for k, v in env.items() if k != f.var}
        return type(f)(f.var, substitute_many(f.body, inner))
    return _rebuild(f, [substitute_many(c, env) for c in children(f)])


# -- prenex sentences ------------------------------------------------------


class Flavor(enum.Enum):
    UNIVERSAL = "A"
    EXISTENTIAL = "E"

    def dual(self) -> "Flavor":
        return Flavor.EXISTENTIAL if self is Flavor.UNIVERSAL else Flavor.UNIVERSAL

    def binder(self, var: str) -> str:
        return f"({var})" if self is Flavor.UNIVERSAL else f"(E{var})"


Prefix = tuple  # tuple[tuple[Flavor, str], ...]


@dataclass(frozen=True)
class PrenexSentence:
    prefix: tuple
    matrix: Formula

    def __post_init__(self):
        names = [v for _, v in self.prefix]
        if len(set(names)) != len(names):
            raise NotPrenexError(f"repeated prefix variable in {names}")
        if not is_quantifier_free(self.matrix):
            raise NotPrenexError("matrix contains a quantifier")

    def __str__(self):
        return print_formula(self.to_formula())

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(v for _, v in self.prefix)

    def to_formula(self) -> Formula:
        return quantify(self.prefix, self.matrix)


def quantify(prefix: Iterable, matrix: Formula) -> Formula:
    f = matrix
    for flavor, var in reversed(tuple(prefix)):
        f = ForAll(var, f) if flavor is Flavor.UNIVERSAL else Exists(var, f)
    return f


def _has_quantifier(f: Formula) -> bool:
    return not is_quantifier_free(f)


def to_prenex_sentence(f: Formula) -> PrenexSentence:
    """Split a closed prenex formula into prefix and matrix, verbatim."""
    prefix = []
    body = f
    while isinstance(body, QUANTIFIERS):
        flavor = Flavor.UNIVERSAL if isinstance(body, ForAll) else Flavor.EXISTENTIAL
        prefix.append((flavor, body.var))
        body = body.body
    if _has_quantifier(body):
        raise NotPrenexError(f"not in prenex form: {print_formula(f)}")
    if len({v for _, v in prefix}) != len(prefix):
        raise NotPrenexError(f"prefix rebinds a variable: {print_formula(f)}")
    free = free_variables(f)
    if free:
        raise FreeVariableError(f"free variable(s) {', '.join(sorted(free))} in {print_formula(f)}")
    return PrenexSentence(tuple(prefix), body)


def negate_matrix(m: Formula) -> Formula:
    return m.body if isinstance(m, Not) else Not(m)


def prenex_negate(s: PrenexSentence) -> PrenexSentence:
    """Dualize every quantifier and negate the matrix."""
    prefix = tuple((flavor.dual(), var) for flavor, var in s.prefix)
    return PrenexSentence(prefix, negate_matrix(s.matrix))


def parse_sentence(text: str, constants: Iterable[str] = ()) -> PrenexSentence:
    return to_prenex_sentence(parse_formula(text, constants))


def iter_subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    for c in children(f):
        yield from iter_subformulas(c)
