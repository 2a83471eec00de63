from .laurent import LaurentMatrix, LaurentPoly, format_poly, parse_poly, poly_arith
from .burau import burau_reduced, generator_matrix
from .alexander import AlexanderReport, alexander_of_closure, alexander_report, determinant_at, self_linking
from .oracles import IInvariantOracle, OracleEngine, OracleResult, build_oracles

__all__ = [
    "AlexanderReport",
    "IInvariantOracle",
    "LaurentMatrix",
    "LaurentPoly",
    "OracleEngine",
    "OracleResult",
    "alexander_of_closure",
    "alexander_report",
    "build_oracles",
    "burau_reduced",
    "determinant_at",
    "format_poly",
    "generator_matrix",
    "parse_poly",
    "poly_arith",
    "self_linking",
]
