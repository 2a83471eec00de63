from .word import (
    BraidWord,
    Generator,
    compose,
    conjugate,
    connect_sum,
    destabilize,
    exponent_sum,
    free_reduce,
    inverse,
    prepare_destabilization,
    random_word,
    rotate,
    stabilize,
    weighted_stabilize,
)
from .permutation import Permutation, closure_component_count, permutation_of
from .garside import GarsideForm, garside_form, normal_form, words_equal
from .text import format_word, parse_word

__all__ = [
    "BraidWord",
    "Generator",
    "GarsideForm",
    "Permutation",
    "closure_component_count",
    "compose",
    "conjugate",
    "connect_sum",
    "destabilize",
    "exponent_sum",
    "format_word",
    "free_reduce",
    "garside_form",
    "inverse",
    "normal_form",
    "parse_word",
    "permutation_of",
    "prepare_destabilization",
    "random_word",
    "rotate",
    "stabilize",
    "weighted_stabilize",
    "words_equal",
]
