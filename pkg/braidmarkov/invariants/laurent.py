from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from ..errors import BraidMarkovError, NonExactDivision

Number = Union[int, Fraction]

T = sp.Symbol("t")


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """Element of Z[t, t^-1]; terms are (exponent, nonzero coefficient) sorted by exponent."""

    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, coefficients: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in coefficients.items() if c != 0)))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.from_map({0: c})

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "LaurentPoly":
        return cls.from_map({exponent: coefficient})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls.monomial(1, 1)

    @classmethod
    def from_poly(cls, poly: sp.Poly, shift: int = 0) -> "LaurentPoly":
        """t^shift * poly for a sympy polynomial in t over ZZ."""
        return cls.from_map({e + shift: int(c) for (e,), c in poly.terms()})

    def to_poly(self) -> Tuple[sp.Poly, int]:
        """(P, k) with self = t^k * P, P in Z[t] and P(0) != 0 unless self is zero."""
        lo = self.min_exponent()
        if self.is_zero():
            return sp.Poly(0, T, domain=sp.ZZ), lo
        return sp.Poly.from_dict({(e - lo,): c for e, c in self.terms}, T, domain=sp.ZZ), lo

    def as_expr(self) -> sp.Expr:
        return sp.Add(*(c * T**e for e, c in self.terms))

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_exponent(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def max_exponent(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def leading_coefficient(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc = self.coefficients
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly.from_map(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_map(acc)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly.from_map({e: c * k for e, c in self.terms})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def evaluate(self, value: Number) -> Number:
        if value == 0 and self.terms and self.min_exponent() < 0:
            raise ZeroDivisionError("negative powers of t at t = 0")
        x = Fraction(value)
        total = sum((Fraction(c) * x**e for e, c in self.terms), Fraction(0))
        return int(total) if total.denominator == 1 else total

    def exact_divide(self, divisor: "LaurentPoly") -> "LaurentPoly":
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        # t is a unit, so divisibility is decided on the t-free parts in Z[t]
        num, num_lo = self.to_poly()
        den, den_lo = divisor.to_poly()
        quotient, remainder = num.div(den, auto=False)
        if not remainder.is_zero:
            raise NonExactDivision(f"{self} is not divisible by {divisor}", determinant=self)
        return LaurentPoly.from_poly(quotient, num_lo - den_lo)

    def normalize_units(self) -> "LaurentPoly":
        """Representative of p up to +-t^k: lowest exponent 0, positive top coefficient."""
        if self.is_zero():
            return self
        p = self.shift(-self.min_exponent())
        return -p if p.leading_coefficient() < 0 else p

    def __str__(self) -> str:
        return format_poly(self)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise BraidMarkovError(f"unknown polynomial operation {op!r}")


def _format_monomial(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "t"
    return f"t^{e}"


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts: List[str] = []
    for e, c in p.terms:
        mono = _format_monomial(e)
        mag = abs(c)
        body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM = re.compile(r"^([+-]?)(\d*)(t(?:\^(~?\d+))?)?$")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of format_poly; also accepts unspaced input such as `1-t+t^2`."""
    s = text.replace(" ", "").replace("^-", "^~")
    if s in ("", "0"):
        return ZERO
    acc: Dict[int, int] = {}
    for chunk in re.split(r"(?=[+-])", s):
        if not chunk:
            continue
        m = _TERM.match(chunk)
        if not m or (not m.group(2) and not m.group(3)):
            raise BraidMarkovError(f"cannot parse polynomial term {chunk!r} in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4).replace("~", "-")) if m.group(4) else 1
        else:
            exp = 0
        acc[exp] = acc.get(exp, 0) + sign * coeff
    return LaurentPoly.from_map(acc)


@dataclass(frozen=True, slots=True)
class LaurentMatrix:
    rows: int
    cols: int
    entries: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise BraidMarkovError("matrix dimensions must be positive")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise BraidMarkovError(f"entry grid does not match {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[LaurentPoly]]) -> "LaurentMatrix":
        grid = tuple(tuple(r) for r in rows)
        return cls(len(grid), len(grid[0]) if grid else 0, grid)

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls.from_rows([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: Tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise BraidMarkovError("matrix shapes do not chain")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix.from_rows(out)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise BraidMarkovError("matrix shapes differ")
        return LaurentMatrix.from_rows(
            [[self.entries[i][j] - other.entries[i][j] for j in range(self.cols)] for i in range(self.rows)]
        )

    def is_identity(self) -> bool:
        return self == LaurentMatrix.identity(self.rows) if self.rows == self.cols else False

    def determinant(self) -> LaurentPoly:
        """Exact determinant over Z[t, t^-1].

        Each row is multiplied by a power of t to clear negative exponents, the
        determinant is taken by sympy over ZZ[t], and the powers are put back.
        """
        if self.rows != self.cols:
            raise BraidMarkovError("determinant of a non-square matrix")
        shifts = [min((p.min_exponent() for p in row if p.terms), default=0) for row in self.entries]
        grid = [[p.shift(-k).as_expr() for p in row] for row, k in zip(self.entries, shifts)]
        dm = DomainMatrix.from_list_sympy(self.rows, self.cols, grid)
        det = sp.Poly(dm.domain.to_sympy(dm.det()), T, domain=sp.ZZ)
        return LaurentPoly.from_poly(det, sum(shifts))
