"""Operational calculus for D_x(r,M) = (d/dx)^r (x d/dx)^M on exact series.

The monomial action is x^p -> p(p-1)...(p-r+1) * p^M * x^{p-r}.  On top of
that sit the exponential map exp(lambda D_x), the eigenfunction series, the
Sheffer-type closed form of exp(lambda D(r,1)) in normally ordered form,
and the exponential generating function of the r-row Bell numbers.

`DotSeries` is the engine for double-dot expressions: a series in lambda
whose coefficients are words in which the creator and annihilator are
treated as commuting symbols.  Expanding a double-dot closed form with it
and reading off a lambda coefficient yields a NormalForm directly, which
is what lets the closed forms be compared against the rewriting oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import (
    BiSeriesQ,
    SeriesQ,
    factorial,
    falling_factorial,
    phyperq_series,
    series_binpow,
    series_exp,
)
from .weyl import NormalForm

__all__ = [
    "DxOperator",
    "apply_Dx",
    "exp_lambda_Dx",
    "exp_lambda_Dx_columns",
    "eigenfunction_series",
    "ShefferPair",
    "sheffer_forms",
    "exp_D_r1_normal_form",
    "egf_bell_r1",
    "DotSeries",
]


@dataclass(frozen=True)
class DxOperator:
    r: int
    M: int

    def __post_init__(self):
        if self.r < 1 or self.M < 0:
            raise ValueError("need r >= 1 and M >= 0")


def apply_Dx(op: DxOperator, s: SeriesQ) -> SeriesQ:
    """One application; the truncation order drops by r."""
    r, M = op.r, op.M
    n_out = max(s.order - r, 0)
    out = [Fraction(0)] * n_out
    for p in range(r, s.order):
        c = s.coeffs[p]
        if c:
            out[p - r] = c * (falling_factorial(p, r) * p**M)
    return SeriesQ(n_out, out)


def exp_lambda_Dx_columns(op: DxOperator, s: SeriesQ, m_max: int) -> list:
    """[Dx^m(s)/m! for m = 0..m_max], each at its own maximal x-order."""
    cols = [s]
    t = s
    for m in range(1, m_max + 1):
        t = apply_Dx(op, t)
        cols.append(t.scale(Fraction(1, factorial(m))))
    return cols


def exp_lambda_Dx(op: DxOperator, s: SeriesQ, lambda_order: int) -> BiSeriesQ:
    """exp(lambda D_x) s = sum_m lambda^m/m! Dx^m s, bivariate in (x, lambda).

    `lambda_order` is the highest retained power of lambda (so 0 returns s
    itself in bivariate clothing).  Rectangular truncation: the x-order of
    the result is s.order - r*lambda_order, dictated by the deepest column.
    """
    if lambda_order < 0:
        raise ValueError("lambda_order must be nonnegative")
    if op.r * lambda_order > s.order:
        raise ValueError(
            f"insufficient truncation order: need x-order >= {op.r * lambda_order}"
        )
    nx = s.order - op.r * lambda_order
    cols = exp_lambda_Dx_columns(op, s, lambda_order)
    mat = [[cols[m].coeffs[i] for m in range(lambda_order + 1)] for i in range(nx)]
    return BiSeriesQ(nx, lambda_order + 1, mat)


def eigenfunction_series(r: int, M: int, order: int) -> SeriesQ:
    """The eigenfunction of D_x(r,M) with eigenvalue 1 and E(0)=1.

    A 0F_{M+r-1} with lower parameters [1/r, ..., (r-1)/r] + [1]*M at
    argument x^r / r^{r+M}, written out as a series in x.
    """
    if r < 1 or M < 0:
        raise ValueError("need r >= 1 and M >= 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    lower = [Fraction(j, r) for j in range(1, r)] + [Fraction(1)] * M
    m_max = (order + r - 1) // r
    f = phyperq_series([], lower, m_max)
    out = [Fraction(0)] * order
    scale = Fraction(1)
    denom = r ** (r + M)
    for m in range(m_max):
        if r * m >= order:
            break
        out[r * m] = f.coeffs[m] * scale
        scale /= denom
    return SeriesQ(order, out)


@dataclass(frozen=True)
class ShefferPair:
    """Substitution kernel T and prefactor g of exp(lambda D(r,1))."""

    r: int
    T: BiSeriesQ  # x(1 - lambda r x^r)^(-1/r)
    g: BiSeriesQ  # (1 - lambda r x^r)^(-1)


def sheffer_forms(r: int, lambda_order: int, x_order: int) -> ShefferPair:
    """Build T and g as bivariate (x, lambda) truncations."""
    if r < 1:
        raise ValueError("need r >= 1")
    if lambda_order < 1 or x_order < 1:
        raise ValueError("orders must be >= 1")
    bt = series_binpow(-r, Fraction(-1, r), lambda_order)
    bg = series_binpow(-r, Fraction(-1), lambda_order)
    tmat = [[Fraction(0)] * lambda_order for _ in range(x_order)]
    gmat = [[Fraction(0)] * lambda_order for _ in range(x_order)]
    for k in range(lambda_order):
        if r * k + 1 < x_order:
            tmat[r * k + 1][k] = bt.coeffs[k]
        if r * k < x_order:
            gmat[r * k][k] = bg.coeffs[k]
    return ShefferPair(
        r,
        BiSeriesQ(x_order, lambda_order, tmat),
        BiSeriesQ(x_order, lambda_order, gmat),
    )


class DotSeries:
    """lambda-series with double-dot word coefficients.

    terms: {(n, dag, ann): Fraction} standing for lambda^n :ad^dag a^ann:.
    Inside double dots the two symbols commute, so products just add
    exponents; `order` is exclusive in lambda.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        clean: dict = {}
        if terms:
            for (n, k, l), c in terms.items():
                if n < order:
                    c = Fraction(c)
                    if c:
                        clean[(n, k, l)] = c
        self.terms = clean

    @classmethod
    def one(cls, order: int) -> "DotSeries":
        return cls(order, {(0, 0, 0): 1})

    @classmethod
    def monomial(cls, order: int, n: int, dag: int, ann: int, coeff=1) -> "DotSeries":
        return cls(order, {(n, dag, ann): coeff})

    @classmethod
    def binpow(cls, order: int, coeff, a_power: int, alpha) -> "DotSeries":
        """(1 + coeff * lambda * a^a_power)^alpha, expanded binomially."""
        s = series_binpow(coeff, alpha, order)
        return cls(order, {(k, 0, a_power * k): s.coeffs[k] for k in range(order)})

    def __add__(self, other: "DotSeries") -> "DotSeries":
        n = min(self.order, other.order)
        out = {k: v for k, v in self.terms.items() if k[0] < n}
        for k, v in other.terms.items():
            if k[0] < n:
                out[k] = out.get(k, Fraction(0)) + v
        return DotSeries(n, out)

    def __sub__(self, other: "DotSeries") -> "DotSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "DotSeries":
        c = Fraction(c)
        return DotSeries(self.order, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "DotSeries") -> "DotSeries":
        n = min(self.order, other.order)
        out: dict = {}
        for (n1, k1, l1), c1 in self.terms.items():
            if n1 >= n:
                continue
            for (n2, k2, l2), c2 in other.terms.items():
                if n1 + n2 >= n:
                    continue
                key = (n1 + n2, k1 + k2, l1 + l2)
                v = out.get(key, Fraction(0)) + c1 * c2
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return DotSeries(n, out)

    def min_lambda_order(self) -> int:
        return min((k[0] for k in self.terms), default=self.order)

    def exp(self) -> "DotSeries":
        """Power-sum exponential; needs every term to carry lambda^1 or higher."""
        m0 = self.min_lambda_order()
        if m0 < 1:
            raise ValueError("exp needs a series with no lambda^0 part")
        acc = DotSeries.one(self.order)
        term = DotSeries.one(self.order)
        kmax = (self.order - 1) // m0
        for k in range(1, kmax + 1):
            term = (term * self).scale(Fraction(1, k))
            acc = acc + term
        return acc

    def apply_function(self, taylor) -> "DotSeries":
        """sum_m taylor[m] * self^m, for self with min lambda order >= 1."""
        m0 = self.min_lambda_order()
        if m0 < 1:
            raise ValueError("function application needs lambda^1 or higher")
        kmax = (self.order - 1) // m0
        acc = DotSeries(self.order, {(0, 0, 0): taylor[0]}) if taylor else DotSeries(self.order)
        term = DotSeries.one(self.order)
        for k in range(1, kmax + 1):
            term = term * self
            if k < len(taylor) and taylor[k]:
                acc = acc + term.scale(taylor[k])
        return acc

    def lambda_coefficient(self, n: int) -> NormalForm:
        """The lambda^n coefficient, reinterpreted as a normally ordered operator."""
        if not (0 <= n < self.order):
            raise IndexError(f"lambda^{n} beyond truncation order {self.order}")
        return NormalForm(
            {(k, l): c for (m, k, l), c in self.terms.items() if m == n}
        )

    def __repr__(self) -> str:
        return f"DotSeries(order={self.order}, {len(self.terms)} terms)"


def exp_D_r1_normal_form(r: int, n_max: int) -> list:
    """NormalForms of n! * [lambda^n] exp(lambda D(r,1)) for n = 0..n_max.

    Expands the double-dot closed form g(lambda,a) * exp(ad*(T(lambda,a)-a))
    with T = a(1-lambda r a^r)^(-1/r), g = (1-lambda r a^r)^(-1); each
    lambda coefficient must equal the rewriting oracle's [D(r,1)]^n / n!.
    """
    if r < 1 or n_max < 0:
        raise ValueError("need r >= 1 and n_max >= 0")
    order = n_max + 1
    g = DotSeries.binpow(order, -r, r, Fraction(-1))
    bt = series_binpow(-r, Fraction(-1, r), order)
    arg = DotSeries(
        order,
        {(k, 1, r * k + 1): bt.coeffs[k] for k in range(1, order)},
    )
    full = g * arg.exp()
    return [
        full.lambda_coefficient(n).scale(factorial(n)) for n in range(n_max + 1)
    ]


def egf_bell_r1(r: int, order: int) -> SeriesQ:
    """(1-r*lambda)^(-1) exp((1-r*lambda)^(-1/r) - 1); n![lambda^n] = B_r^(1)(n)."""
    if r < 1:
        raise ValueError("need r >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    pref = series_binpow(-r, Fraction(-1), order)
    inner = series_binpow(-r, Fraction(-1, r), order) - SeriesQ.one(order)
    return pref * series_exp(inner)
