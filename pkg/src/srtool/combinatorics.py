"""Permutation statistics and the integer inequalities used by the bounds.

Everything here is exact big-integer (or ``Fraction``) arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial, prod
from typing import Sequence

from .errors import LengthMismatch, OutOfRange, OutOfStatedRange

# direct enumeration of S_n is only used up to this size
ENUMERATION_LIMIT = 8


@lru_cache(maxsize=None)
def stirling2(m: int, r: int) -> int:
    """Stirling number of the second kind S(m, r)."""
    if m < 0 or r < 0 or r > m:
        raise OutOfRange(f"S({m},{r}) requires 0 <= r <= m")
    if m == r:
        return 1
    if r == 0:
        return 0
    return r * stirling2(m - 1, r) + stirling2(m - 1, r - 1)


def descents(perm: Sequence[int]) -> int:
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


@dataclass(frozen=True)
class RefinedEulerianTable:
    """Counts A(n, j, i) of permutations with first letter i and j descents."""

    n: int
    entries: tuple[tuple[int, ...], ...]  # entries[j][i - 1]

    def __call__(self, j: int, i: int) -> int:
        if not (0 <= j < self.n and 1 <= i <= self.n):
            return 0
        return self.entries[j][i - 1]

    def eulerian(self, j: int) -> int:
        return sum(self.entries[j]) if 0 <= j < self.n else 0


def refined_eulerian_enumerated(n: int) -> RefinedEulerianTable:
    """A(n, j, i) by walking all of S_n.  Practical only for small n."""
    if n < 1:
        raise OutOfRange("n must be >= 1")
    rows = [[0] * n for _ in range(n)]
    for p in permutations(range(1, n + 1)):
        rows[descents(p)][p[0] - 1] += 1
    return RefinedEulerianTable(n, tuple(map(tuple, rows)))


@lru_cache(maxsize=None)
def _refined_rows(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((1,),)
    prev = _refined_rows(n - 1)
    rows = []
    for j in range(n):
        row = []
        for i in range(1, n + 1):
            # deleting the first letter i and standardising leaves a
            # permutation of S_{n-1} starting with i'; position 1 is a
            # descent exactly when i' < i
            below = sum(prev[j - 1][: i - 1]) if j >= 1 else 0
            above = sum(prev[j][i - 1 :]) if j < n - 1 else 0
            row.append(below + above)
        rows.append(tuple(row))
    return tuple(rows)


def refined_eulerian(n: int) -> RefinedEulerianTable:
    if n < 1:
        raise OutOfRange("n must be >= 1")
    return RefinedEulerianTable(n, _refined_rows(n))


def eulerian(n: int, j: int) -> int:
    return refined_eulerian(n).eulerian(j)


@dataclass(frozen=True)
class DescentPolynomial:
    m: int
    coefficients: tuple[int, ...]  # c_k for k = 0..m-1

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coefficients))


def descent_polynomial(m: int) -> DescentPolynomial:
    table = refined_eulerian(m)
    return DescentPolynomial(m, tuple(table.eulerian(k) for k in range(m)))


def stirling_descent_coefficient(m: int, k: int) -> int:
    """sum_{r=1}^{m-k} r! S(m,r) C(m-r,k) (-1)^{m-r-k}; equals c_k of the m-th descent polynomial."""
    return sum(
        factorial(r) * stirling2(m, r) * comb(m - r, k) * (-1) ** (m - r - k)
        for r in range(1, m - k + 1)
    )


def sd_h_transform(h: Sequence[int], dim: int | None = None) -> tuple[int, ...]:
    """h-vector of the barycentric subdivision from the h-vector of the complex.

    ``h`` has length d+1 for a (d-1)-dimensional complex; entry j of the
    result is sum_i h_i A(d+1, j, i+1).  The length is preserved, trailing
    zeros included.
    """
    if not h:
        raise LengthMismatch("empty h-vector")
    if dim is not None and len(h) != dim + 2:
        raise LengthMismatch(f"h-vector of a {dim}-dimensional complex has {dim + 2} entries, got {len(h)}")
    d = len(h) - 1
    table = refined_eulerian(d + 1)
    return tuple(sum(hi * table(j, i + 1) for i, hi in enumerate(h)) for j in range(d + 1))


# -- numeric inequalities ---------------------------------------------------
def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise OutOfStatedRange(msg)


def sd_product_ratio(d: int) -> Fraction:
    _need(d >= 1, "requires d >= 1")
    num = prod(2 ** (d + 1) - l for l in range(2, d + 2))
    den = factorial(d + 1) * prod(2 ** (m + 1) - 3 for m in range(2, d + 1))
    return Fraction(num, den)


def sd_product_ratio_bound(d: int) -> bool:
    """The ratio is at least 1 for 1 <= d <= 3 and at least 2 for d >= 4."""
    return sd_product_ratio(d) >= (1 if d <= 3 else 2)


def factorial_below_power(n: int) -> bool:
    """(n+1)! <= 2^(n^2/2 - 5n/2) for n >= 11."""
    _need(n >= 11, "requires n >= 11")
    # n(n-5) is always even, so the exponent is an integer
    return factorial(n + 1) <= 2 ** (n * (n - 5) // 2)


def shifted_product_ratio(n: int, k: int) -> Fraction:
    _need(n >= 1 and k >= 2, "requires n >= 1 and k >= 2")
    num = prod(2 ** (n + 1) + 2 * k - 4 + l for l in range(n))
    den = factorial(n + 1) * k * prod(2 ** (m + 1) - 3 for m in range(2, n + 1))
    return Fraction(num, den)


def shifted_product_ratio_bound(n: int, k: int) -> bool:
    return shifted_product_ratio(n, k) >= 1


def top_shift_product_bound(d: int) -> bool:
    """d * prod_{l=0}^{d-2} (2^{d+2}-d-6-l) >= (d+1)! * prod_{l=2}^{d} (2^{l+1}-3) for d >= 4."""
    _need(d >= 4, "requires d >= 4")
    left = d * prod(2 ** (d + 2) - d - 6 - l for l in range(d - 1))
    right = factorial(d + 1) * prod(2 ** (l + 1) - 3 for l in range(2, d + 1))
    return left >= right


def codim_one_face_bound(cx, field=None) -> bool:
    """f_{d-1} >= f_d + d for a d-dimensional complex with vanishing top homology."""
    from .complex import f_vector
    from .homology import QQ, reduced_homology

    d = cx.dim
    if reduced_homology(cx, field or QQ)[d] != 0:
        raise OutOfStatedRange("top-dimensional homology does not vanish")
    f = f_vector(cx)  # f[i + 1] = f_i
    return f[d] >= f[d + 1] + d
