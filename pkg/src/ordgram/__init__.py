"""Order types of lexicographically ordered context-free languages."""
from .errors import (BoundViolation, BudgetExceeded, GrammarError, LeftRecursionDetected,
                     NotAnOrdinalGrammar, NotWellOrdered, OrdgramError, OrdinalDomainError,
                     OrdinalOverflow, ParseError, PrefixViolation, ShapeViolation)
from .grammar import Grammar, load_grammar, make_grammar, parse_grammar
from .normalize import FiniteLanguage, to_normal_form
from .ordinal import OMEGA, ONE, ZERO, Ordinal, nat, parse_text, to_text
from .solver import SolverConfig, isomorphic, order_type_of_grammar, solve
from .words import Alphabet, UPWord

__all__ = [
    "Alphabet", "BoundViolation", "BudgetExceeded", "FiniteLanguage", "Grammar", "GrammarError",
    "LeftRecursionDetected", "NotAnOrdinalGrammar", "NotWellOrdered", "OMEGA", "ONE",
    "Ordinal", "OrdinalDomainError", "OrdinalOverflow", "OrdgramError", "ParseError",
    "PrefixViolation", "ShapeViolation", "SolverConfig", "UPWord", "ZERO", "isomorphic",
    "load_grammar", "make_grammar", "nat", "order_type_of_grammar", "parse_grammar",
    "parse_text", "solve", "to_normal_form", "to_text",
]
