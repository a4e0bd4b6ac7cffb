"""Truth-relevant three-valued semantics for propositional and prenex
first-order logic over finite interpretations."""

from .classical import eval_classical, eval_classical_bruteforce
from .errors import (
    ArityError,
    CapExceededError,
    EmptyUniverseError,
    FreeVariableError,
    ModelFormatError,
    NotPrenexError,
    ParseError,
    TruthRelError,
    UndeclaredPredicateError,
)
from .model import Interpretation, Signature, enumerate_models, format_model, parse_model, predicate_truth
from .mono import Mode, Status, evaluate_monadic
from .poly import Trace, evaluate, is_satisfied, is_t_relevant, t_relevant_instances, trailing_block
from .syntax import (
    PrenexSentence,
    parse_formula,
    parse_sentence,
    prenex_negate,
    print_formula,
    substitute,
    to_prenex_sentence,
)
from .verdict import Verdict

__version__ = "0.1.0"
