from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..braid.permutation import closure_component_count
from ..braid.word import BraidWord, exponent_sum
from ..errors import NonExactDivision, NotAKnot
from .burau import burau_reduced
from .laurent import ONE, LaurentMatrix, LaurentPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class AlexanderReport:
    polynomial: LaurentPoly
    # False when (1 - t^n) did not divide and the raw determinant is reported
    scaled: bool
    components: int


def _closure_determinant(a: BraidWord) -> LaurentPoly:
    b = burau_reduced(a)
    return (LaurentMatrix.identity(b.rows) - b).determinant()


def alexander_of_closure(a: BraidWord) -> LaurentPoly:
    if a.strands == 1:
        return ONE
    n = a.strands
    det = _closure_determinant(a)
    numerator = det * (ONE - LaurentPoly.t())
    denominator = ONE - LaurentPoly.monomial(1, n)
    try:
        return numerator.exact_divide(denominator).normalize_units()
    except NonExactDivision as exc:
        raise NonExactDivision(
            f"det(I - B) * (1 - t) not divisible by 1 - t^{n} for {a}", determinant=det
        ) from exc


def alexander_report(a: BraidWord) -> AlexanderReport:
    components = closure_component_count(a)
    try:
        return AlexanderReport(alexander_of_closure(a), True, components)
    except NonExactDivision as exc:
        logger.warning("unscaled Alexander determinant reported for %s", a)
        raw = exc.determinant if isinstance(exc.determinant, LaurentPoly) else _closure_determinant(a)
        return AlexanderReport(raw.normalize_units(), False, components)


def self_linking(a: BraidWord) -> int:
    if closure_component_count(a) != 1:
        raise NotAKnot(f"closure of {a} has {closure_component_count(a)} components")
    return exponent_sum(a) - a.strands


def determinant_at(a: BraidWord, value: Union[int, Fraction] = -1) -> Union[int, Fraction]:
    """|Delta(value)|; at -1 this is the knot determinant."""
    return abs(alexander_report(a).polynomial.evaluate(value))
