"""Exact rational functions c + N(t) / base^e with base (1 - t) or (t - 1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Poly = tuple[int, ...]  # coefficients, lowest degree first


def trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(a: Sequence[int], b: Sequence[int]) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def pscale(a: Sequence[int], c: int) -> Poly:
    return trim([c * x for x in a])


def pmul(a: Sequence[int], b: Sequence[int]) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def ppow(a: Sequence[int], e: int) -> Poly:
    out: Poly = (1,)
    for _ in range(e):
        out = pmul(out, a)
    return out


def peval(a: Sequence[int], t):
    acc = 0
    for c in reversed(a):
        acc = acc * t + c
    return acc


ONE_MINUS_T: Poly = (1, -1)
T_MINUS_ONE: Poly = (-1, 1)


def divide_one_minus_t(a: Sequence[int]) -> Poly:
    """Exact quotient a / (1 - t); requires a(1) == 0."""
    # a = (1 - t) q  =>  q_k = sum_{i<=k} a_i
    q, acc = [], 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    if acc + (a[-1] if a else 0) != 0:
        raise ValueError("polynomial is not divisible by 1 - t")
    return trim(q)


@dataclass(frozen=True, eq=False)
class RationalSeries:
    """``constant + numerator(t) / base^exponent`` with exact integers.

    ``base`` is ``"1-t"`` or ``"t-1"``.  Equality compares the reduced
    canonical form, so two series are equal iff they are the same rational
    function.
    """

    numerator: Poly
    base: str = "1-t"
    exponent: int = 0
    constant: int = 0

    def __post_init__(self):
        if self.base not in ("1-t", "t-1"):
            raise ValueError(f"unknown denominator base {self.base!r}")
        object.__setattr__(self, "numerator", trim(self.numerator))

    def canonical(self) -> tuple[Poly, int]:
        """(N, e) with value N(t) / (1-t)^e and (1-t) not dividing N unless e == 0."""
        num = self.numerator
        if self.base == "t-1" and self.exponent % 2:
            num = pscale(num, -1)
        num = padd(num, pscale(ppow(ONE_MINUS_T, self.exponent), self.constant))
        e = self.exponent
        while e > 0 and num and peval(num, 1) == 0:
            num = divide_one_minus_t(num)
            e -= 1
        if not num:
            e = 0
        return num, e

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        (a, ea), (b, eb) = self.canonical(), other.canonical()
        e = max(ea, eb)
        num = padd(pmul(a, ppow(ONE_MINUS_T, e - ea)), pmul(b, ppow(ONE_MINUS_T, e - eb)))
        return RationalSeries(num, "1-t", e)

    def is_zero(self) -> bool:
        return not self.canonical()[0]

    def pole_order(self) -> int:
        """Order of the pole at t = 1."""
        return self.canonical()[1]

    def times_one_minus_t_power(self, n: int) -> Poly:
        """Polynomial (1-t)^n * self; requires n >= pole order."""
        num, e = self.canonical()
        if n < e:
            raise ValueError(f"(1-t)^{n} does not clear a pole of order {e}")
        return pmul(num, ppow(ONE_MINUS_T, n - e))

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        b = 1 - t if self.base == "1-t" else t - 1
        return self.constant + Fraction(peval(self.numerator, t)) / b**self.exponent

    def coefficients(self, upto: int) -> list[int]:
        """Laurent expansion coefficients of t^0 .. t^upto around t = 0.

        Only meaningful for base (1 - t), where the expansion is a power series.
        """
        num, e = self.canonical()
        coeffs = list(num) + [0] * (upto + 1)
        for _ in range(e):
            acc = 0
            for k in range(len(coeffs)):
                acc += coeffs[k]
                coeffs[k] = acc
        return coeffs[: upto + 1]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.numerator):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*t^{k}" if k > 1 else f"{c}*t")
        body = " + ".join(terms) or "0"
        frac = f"({body})/({self.base})^{self.exponent}" if self.exponent else body
        return f"{self.constant} + {frac}" if self.constant else frac
