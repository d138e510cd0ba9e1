"""Generalized Stirling numbers, Bell polynomials, and their classical limits.

The central object is the triangle S_r^(M)(n,k) defined by the finite
alternating sum

    S_r^(M)(n,k) = (1/k!) sum_{j=0}^{k} C(k,j) (-1)^{k-j} [prod_{i=1}^n (j+ir)]^M

whose row sums (and x=1 Bell-polynomial values) are the integer sequences
this package reproduces.  Every value is an exact integer; the k! division
is asserted, not assumed.  The classical second-kind triangle and Bell
numbers are implemented independently through the textbook recurrence and
serve as a cross-check at r=0, M=1.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from . import backend
from .hyperreal import HighPrecReal
from .series import PolyQ
from .weyl import NormalForm

__all__ = [
    "StirlingTriangle",
    "gen_stirling",
    "gen_bell_poly",
    "gen_bell_number",
    "bell_sequence",
    "classical_stirling2",
    "classical_bell",
    "classical_bell_poly",
    "stirling1_signless",
    "product_poly",
    "dobinski_partial",
    "dobinski_adaptive",
    "b_pp",
    "OEIS_ASSOCIATIONS",
]

# static catalogue entries only; nothing here performs lookups
OEIS_ASSOCIATIONS = {
    (1, 1): "A002720",
    (1, 2): "A069948",
    (2, 1): "A121629",
}


class StirlingTriangle:
    """Rows 0..n of S_r^(M) for fixed r >= 0, M >= 0, grown on demand.

    Row n has width M*n + 1.  The inner products prod_{i<=n}(j+ir) are
    carried across rows so each extension costs one multiply per entry.
    Extension is serialized by a lock; reads of already-built rows are
    safe without it (lists only ever grow).
    """

    __slots__ = ("r", "M", "rows", "_products", "_lock")

    def __init__(self, r: int, M: int):
        if r < 0 or M < 0:
            raise ValueError("r and M must be nonnegative")
        self.r = r
        self.M = M
        self.rows: list[list[int]] = [[1]]
        self._products: list[int] = [1]
        self._lock = threading.Lock()

    def extend_to(self, n_max: int) -> None:
        if n_max < len(self.rows):
            return
        with self._lock:
            while len(self.rows) <= n_max:
                n = len(self.rows)
                row, prods = backend.stirling_row_update(
                    self.r, self.M, n, self._products
                )
                self._products = prods
                self.rows.append(row)

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        self.extend_to(n)
        return list(self.rows[n])

    def value(self, n: int, k: int) -> int:
        if k < 0:
            raise ValueError(f"k={k} out of range")
        row = self.row(n)
        if k >= len(row):
            return 0  # the k-th difference of a lower-degree polynomial
        return row[k]


_TRIANGLES: dict = {}
_TRIANGLES_LOCK = threading.Lock()


def _triangle(r: int, M: int) -> StirlingTriangle:
    key = (r, M)
    tri = _TRIANGLES.get(key)
    if tri is None:
        with _TRIANGLES_LOCK:
            tri = _TRIANGLES.setdefault(key, StirlingTriangle(r, M))
    return tri


def gen_stirling(r: int, M: int, n: int, k: int) -> int:
    """S_r^(M)(n,k), exact; 0 for k beyond the row width M*n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _triangle(r, M).value(n, k)


def gen_bell_poly(r: int, M: int, n: int) -> PolyQ:
    """B_r^(M)(n,x) = sum_k S_r^(M)(n,k) x^k."""
    return PolyQ(_triangle(r, M).row(n))


def gen_bell_number(r: int, M: int, n: int) -> int:
    """B_r^(M)(n) = B_r^(M)(n,1), the row sum."""
    return sum(_triangle(r, M).row(n))


def bell_sequence(r: int, M: int, n_max: int) -> list[int]:
    tri = _triangle(r, M)
    tri.extend_to(n_max)
    return [sum(tri.rows[n]) for n in range(n_max + 1)]


_CLASSICAL_ROWS: list[list[int]] = [[1]]
_CLASSICAL_LOCK = threading.Lock()


def classical_stirling2(n: int, k: int) -> int:
    """Second-kind S(n,k) by the recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).

    Deliberately independent of gen_stirling so the r=0, M=1 reduction is
    a genuine cross-check.
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    with _CLASSICAL_LOCK:
        while len(_CLASSICAL_ROWS) <= n:
            prev = _CLASSICAL_ROWS[-1]
            m = len(_CLASSICAL_ROWS)
            row = [0] * (m + 1)
            for j in range(m + 1):
                acc = 0
                if j <= m - 1:
                    acc += j * prev[j]
                if 1 <= j <= m:
                    acc += prev[j - 1]
                row[j] = acc
            _CLASSICAL_ROWS.append(row)
        row = _CLASSICAL_ROWS[n]
    return row[k] if k < len(row) else 0


def classical_bell(n: int) -> int:
    return sum(classical_stirling2(n, k) for k in range(n + 1))


def classical_bell_poly(n: int) -> PolyQ:
    return PolyQ([classical_stirling2(n, k) for k in range(n + 1)])


def stirling1_signless(n: int, k: int) -> int:
    """Signless first-kind |sigma(n,k)|: |sigma(n+1,k)| = |sigma(n,k-1)| + n|sigma(n,k)|."""
    if n < 1 or k < 1 or k > n:
        raise ValueError(f"stirling1_signless({n},{k}) out of range")
    row = [1]  # row for n=1: |sigma(1,1)|
    for m in range(1, n):
        row = [
            (row[j - 1] if 1 <= j <= m else 0) + m * (row[j] if j < m else 0)
            for j in range(m + 1)
        ]
    return row[k - 1]


def product_poly(r: int) -> PolyQ:
    """prod_{p=1}^{r} (x+p); its x^{k-1} coefficient is |sigma(r+1,k)|."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    out = PolyQ.one()
    for p in range(1, r + 1):
        out = out * PolyQ((p, 1))
    return out


def _dobinski_term_factor(r: int, M: int, n: int, l: int) -> int:
    p = 1
    for i in range(1, n + 1):
        p *= l + i * r
    return p ** M


def dobinski_partial(r: int, M: int, n: int, x, L: int) -> Fraction:
    """sum_{l<L} [prod_{i=1}^n (l+ir)]^M x^l / l!, exactly (no e^{-x} factor)."""
    if L < 1:
        raise ValueError("L must be >= 1")
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be >= 0")
    total = Fraction(0)
    xpow = Fraction(1)
    fact = 1
    for l in range(L):
        if l:
            xpow *= x
            fact *= l
        total += Fraction(_dobinski_term_factor(r, M, n, l) * xpow.numerator,
                          fact * xpow.denominator)
    return total


def dobinski_adaptive(r: int, M: int, n: int, x, tol, prec: int = 50):
    """Adaptive exponentially weighted sum: e^{-x} * sum_l w_l x^l / l!.

    Stops once e^{-x} times the last increment falls below tol AND the
    term ratio has dropped to <= 1/2 (the ratio is eventually monotone
    decreasing, so from that point the whole remaining tail is bounded by
    twice the next term, making the reported value rigorously within tol).
    Returns (value: HighPrecReal, terms_used: int, exact_partial: Fraction).
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("x must be >= 0")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    ex = HighPrecReal.exp_of(-x, prec)
    if x == 0:
        w0 = Fraction(_dobinski_term_factor(r, M, n, 0))
        return HighPrecReal(w0, prec), 1, w0
    total = Fraction(0)
    prev_term = None
    xpow = Fraction(1)
    fact = 1
    l = 0
    while True:
        if l:
            xpow *= x
            fact *= l
        term = Fraction(_dobinski_term_factor(r, M, n, l) * xpow.numerator,
                        fact * xpow.denominator)
        total += term
        l += 1
        if prev_term is not None and 2 * term <= prev_term:
            # ratio <= 1/2 and decreasing from here on: tail < 2*next term
            gate = (ex * (2 * term)).value
            bound = HighPrecReal(tol, prec).value
            if gate < bound:
                break
        prev_term = term
        if l > 100000:
            raise RuntimeError("adaptive sum failed to converge")
    return ex * total, l, total


def b_pp(p: int, n: int) -> int:
    """z=1 expectation of [(ad)^p a^p]^n, an integer Bell-type number."""
    if p < 1 or n < 0:
        raise ValueError("need p >= 1 and n >= 0")
    nf = NormalForm.monomial(p, p) ** n
    val = nf.expectation_at_one()
    if val.denominator != 1:
        raise ArithmeticError(f"non-integer expectation {val} at p={p}, n={n}")
    return int(val)
