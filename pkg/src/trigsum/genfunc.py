"""Exact truncated series identities built on the power-sum closed forms.

The cosine/sine power sums package neatly into three generating objects:

  - G(n; z)   = sum_{k=0}^{n-1} exp(z*cos(k*pi/n)),
  - H(n, q; z)= sum_{k=0}^{n-1} exp(z*sin(q*k*pi/n)) for even q coprime to n,
  - the resolvent (1/n) * sum_{k=0}^{n-1} 1/(1 - z*trig^2(k*pi/n)).

Their coefficients are power sums divided by factorials, and each has a
second expression through the normalized tail sums

    sigma(k, n)       = (1/(2k)!) * sum_{p=1}^{floor(k/n)} binom(2k, k+pn)
    sigma_minus(k, n) = same with weight (-1)^{pn}.

Every constructor computes both routes with exact rationals and raises if
they ever disagree; the returned coefficients are from the defining side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .closed_forms import cos_power_sum, sin_power_sum
from .errors import ParameterError
from .exact_core import Rational, binom

__all__ = [
    "SeriesCoefficients",
    "sigma",
    "sigma_minus",
    "sigma_table",
    "bessel_i0_coefficient",
    "g1_coefficients",
    "h1_coefficients",
    "resolvent_coefficients",
]


@dataclass(frozen=True)
class SeriesCoefficients:
    """Truncated power series: coeffs[j] is the coefficient of z^j,
    len(coeffs) == order + 1."""

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.order + 1:
            raise ValueError("need exactly order+1 coefficients")

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j]


def sigma(k: int, n: int) -> Rational:
    """(1/(2k)!) * sum_{p=1}^{floor(k/n)} binom(2k, k+pn); zero for k < n."""
    if k < 0 or n < 1:
        raise ParameterError("need k >= 0 and n >= 1")
    window = sum(binom(2 * k, k + p * n) for p in range(1, k // n + 1))
    return Fraction(window, factorial(2 * k))


def sigma_minus(k: int, n: int) -> Rational:
    """sigma with alternating weight (-1)^{pn}; equals sigma for even n."""
    if k < 0 or n < 1:
        raise ParameterError("need k >= 0 and n >= 1")
    if n % 2 == 0:
        return sigma(k, n)
    window = sum(
        (-1) ** p * binom(2 * k, k + p * n) for p in range(1, k // n + 1)
    )
    return Fraction(window, factorial(2 * k))


def sigma_table(n: int, k_max: int, minus: bool = False) -> dict[tuple[int, int], Fraction]:
    """{(k, n): value} for k = 0..k_max, one n."""
    fn = sigma_minus if minus else sigma
    return {(k, n): fn(k, n) for k in range(k_max + 1)}


def bessel_i0_coefficient(j: int) -> Rational:
    """Coefficient of z^{2j} in the modified Bessel function I0(z):
    1/(4^j * (j!)^2)."""
    if j < 0:
        raise ParameterError("j must be non-negative")
    return Fraction(1, 4**j * factorial(j) ** 2)


def g1_coefficients(n: int, order: int) -> SeriesCoefficients:
    """Coefficients of sum_{k=0}^{n-1} exp(z*cos(k*pi/n)) to ``order``.

    Defining side: coefficient of z^{2j} is C(j, n)/(2j)! and of z^{2j+1}
    is 1/(2j+1)! (the odd cosine power sums all equal 1, contributing one
    sinh z). Identity side at even orders: n*[I0 coeff] + 2n*sigma(j,n)/4^j.
    Both are computed; mismatch raises.
    """
    if n < 1 or order < 0:
        raise ParameterError("need n >= 1 and order >= 0")
    coeffs = []
    for idx in range(order + 1):
        if idx % 2:
            value = Fraction(1, factorial(idx))
        else:
            j = idx // 2
            value = cos_power_sum(j, n) / factorial(2 * j)
            other = n * bessel_i0_coefficient(j) + Fraction(2 * n, 4**j) * sigma(j, n)
            if value != other:
                raise ArithmeticError("g1_coefficients: evaluation routes disagree")
        coeffs.append(value)
    return SeriesCoefficients(coeffs=tuple(coeffs), order=order)


def h1_coefficients(n: int, q: int, order: int) -> SeriesCoefficients:
    """Coefficients of sum_{k=0}^{n-1} exp(z*sin(q*k*pi/n)) to ``order``,
    for even q coprime to n (n is then odd).

    Even coefficient of z^{2j} is S(j, n)/(2j)!, checked against
    n*[I0 coeff] + 2n*sigma_minus(j, n)/4^j; odd coefficients are exactly 0
    (multiplying k by even q and reducing mod 2n pairs every angle with its
    negation).
    """
    if n < 1 or order < 0:
        raise ParameterError("need n >= 1 and order >= 0")
    if q < 1 or q % 2:
        raise ParameterError("q must be a positive even integer")
    if gcd(q, n) != 1:
        raise ParameterError("q must be coprime to n")
    coeffs = []
    for idx in range(order + 1):
        if idx % 2:
            value = Fraction(0)
        else:
            j = idx // 2
            value = sin_power_sum(j, n) / factorial(2 * j)
            other = n * bessel_i0_coefficient(j) + Fraction(2 * n, 4**j) * sigma_minus(j, n)
            if value != other:
                raise ArithmeticError("h1_coefficients: evaluation routes disagree")
        coeffs.append(value)
    return SeriesCoefficients(coeffs=tuple(coeffs), order=order)


def resolvent_coefficients(kind: str, n: int, order: int) -> SeriesCoefficients:
    """Coefficients of (1/n) * sum_{k=0}^{n-1} 1/(1 - z*trig^2(k*pi/n)).

    Coefficient of z^j is C(j, n)/n (resp. S(j, n)/n), checked against
    binom(2j, j)/4^j + 2*(2j)!*sigma(j, n)/4^j (resp. sigma_minus).
    """
    if n < 1 or order < 0:
        raise ParameterError("need n >= 1 and order >= 0")
    if kind not in ("cos", "sin"):
        raise ParameterError("kind must be 'cos' or 'sin'")
    base = cos_power_sum if kind == "cos" else sin_power_sum
    tail = sigma if kind == "cos" else sigma_minus
    coeffs = []
    for j in range(order + 1):
        value = base(j, n) / n
        other = Fraction(binom(2 * j, j), 4**j) + Fraction(
            2 * factorial(2 * j), 4**j
        ) * tail(j, n)
        if value != other:
            raise ArithmeticError("resolvent_coefficients: evaluation routes disagree")
        coeffs.append(value)
    return SeriesCoefficients(coeffs=tuple(coeffs), order=order)
