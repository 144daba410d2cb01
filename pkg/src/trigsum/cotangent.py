"""Even cotangent power sums at rational multiples of pi.

Two sum shapes live here. The integer-shift sum

    T(n, k) = sum_{r=1}^{k-1} cot^{2n}(r*pi/k),   k >= 2,

is evaluated through a multi-index Bernoulli-number expansion: with
BF(j) = B_{2j}/(2j)!,

    T(n, k) = (-1)^n * ( k - 4^n * sum k^{2*j_d} * prod_i BF(j_i) )

where the sum runs over all compositions (j_1, ..., j_{2n}, j_0) of n into
2n+1 non-negative parts and j_d is one distinguished part carrying the
power of k. The expansion is symmetric in which part is distinguished;
``distinguished`` exposes that choice so the symmetry is testable. T(n, k)
is also a degree-2n polynomial in k, recovered here by exact interpolation.

The half-shift sum

    U(n, k) = sum_{r=1}^{k} cot^{2n}((r - 1/2)*pi/(2k)),   k >= 1,

has the closed form (-1)^n * k + sum_{j=1}^{n} b_{n,j} * k^{2j} with a
rational coefficient triangle b built by recursion. The widely circulated
statement of that closed form contains two transcription errors (sign
(-1)^k instead of (-1)^n, recursion denominator 2^{2(n-j)-1} instead of
2^{2(n-j)} - 1); the corrected form is used, and the uncorrected one is
kept as a documented-erratum reproducer. A literal reading of the
multi-index expansion with all indices strictly positive is likewise kept
only as a counterexample generator (the index set is empty, so it returns
(-1)^n * k, which is wrong for every n >= 1, k >= 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import ParameterError
from .exact_core import Rational, bernoulli, binom, composition_tuples

__all__ = [
    "CotSumParams",
    "ByrneSmithParams",
    "CotPolynomial",
    "ByrneSmithCoefficients",
    "cot_power_sum",
    "cot_power_sum_all_positive",
    "cot_sum_polynomial",
    "byrne_smith_coefficients",
    "byrne_smith_coefficients_uncorrected",
    "byrne_smith_sum",
    "byrne_smith_sum_uncorrected",
]


@dataclass(frozen=True)
class CotSumParams:
    """Parameters of the integer-shift sum: exponent 2n, angle r*pi/k."""

    n: int
    k: int

    def validate(self) -> None:
        if self.n < 1:
            raise ParameterError("n must be positive")
        if self.k < 2:
            raise ParameterError("k must be >= 2 (the sum over r=1..k-1 is empty otherwise)")


@dataclass(frozen=True)
class ByrneSmithParams:
    """Parameters of the half-shift sum: exponent 2n, angles (r-1/2)*pi/2k."""

    n: int
    k: int

    def validate(self) -> None:
        if self.n < 1:
            raise ParameterError("n must be positive")
        if self.k < 1:
            raise ParameterError("k must be positive")


@dataclass(frozen=True)
class CotPolynomial:
    """T(n, -) as a polynomial in k; coefficients[j] multiplies k**j."""

    n: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, k: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def denominator_lcm(self) -> int:
        """lcm of coefficient denominators: an exact denominator bound for
        every value of the sum, used by rational reconstruction."""
        return lcm(*(c.denominator for c in self.coefficients))


_DISTINGUISHED = ("first", "last", "remainder")


@lru_cache(maxsize=None)
def _bf(j: int) -> Fraction:
    # B_{2j}/(2j)!
    num = bernoulli(2 * j)
    den = 1
    for i in range(1, 2 * j + 1):
        den *= i
    return num / den


@lru_cache(maxsize=None)
def cot_power_sum(n: int, k: int, distinguished: str = "last") -> Rational:
    """T(n, k) = sum_{r=1}^{k-1} cot^{2n}(r*pi/k) via the multi-index
    Bernoulli expansion.

    ``distinguished`` selects which composition slot carries the power of
    k: "first" (j_1), "last" (j_{2n}), or "remainder" (the dependent part
    j_0 = n - sum of the others). All three give the same value.
    """
    CotSumParams(n, k).validate()
    if distinguished not in _DISTINGUISHED:
        raise ParameterError(f"distinguished must be one of {_DISTINGUISHED}")
    d = {"first": 0, "last": 2 * n - 1, "remainder": 2 * n}[distinguished]
    total = Fraction(0)
    for parts in composition_tuples(n, 2 * n + 1):
        prod = Fraction(k) ** (2 * parts[d])
        for j in parts:
            prod *= _bf(j)
        total += prod
    return (-1) ** n * (k - Fraction(4) ** n * total)


def cot_power_sum_all_positive(n: int, k: int) -> Rational:
    """Erratum reproducer: the expansion read with every index strictly
    positive. n cannot be split into 2n+1 positive parts, so the inner sum
    is empty and the result collapses to (-1)^n * k, which disagrees with
    the true T(n, k) for every k >= 2 (T is non-negative, this alternates).
    """
    CotSumParams(n, k).validate()
    total = Fraction(0)
    if n - (2 * n + 1) >= 0:  # never for n >= 1; kept literal
        for parts in composition_tuples(n - (2 * n + 1), 2 * n + 1):
            shifted = tuple(p + 1 for p in parts)
            prod = Fraction(k) ** (2 * shifted[-1])
            for j in shifted:
                prod *= _bf(j)
            total += prod
    return (-1) ** n * (k - Fraction(4) ** n * total)


def _lagrange(points: list[tuple[int, Fraction]]) -> list[Fraction]:
    # exact Lagrange interpolation; returns monomial coefficients
    size = len(points)
    coeffs = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # basis *= (x - xj)
            shifted = [Fraction(0)] + basis
            basis = [shifted[d] - xj * basis[d] if d < len(basis) else shifted[d]
                     for d in range(len(shifted))]
            denom *= xi - xj
        w = yi / denom
        for d, c in enumerate(basis):
            coeffs[d] += w * c
    return coeffs


@lru_cache(maxsize=None)
def cot_sum_polynomial(n: int) -> CotPolynomial:
    """The degree-2n polynomial p with p(k) = T(n, k) for every k >= 2.

    Built by exact interpolation through T at k = 2..2n+3 (one more point
    than a degree-2n polynomial needs, so the vanishing of the top
    coefficient is itself a check) and verified at three further points.
    """
    if n < 1:
        raise ParameterError("n must be positive")
    points = [(k, cot_power_sum(n, k)) for k in range(2, 2 * n + 4)]
    coeffs = _lagrange(points)
    if coeffs[-1] != 0:
        raise ArithmeticError("cot_sum_polynomial: sum is not degree-2n polynomial")
    poly = CotPolynomial(n=n, coefficients=tuple(coeffs[:-1]))
    for k in range(2 * n + 4, 2 * n + 7):
        if poly(k) != cot_power_sum(n, k):
            raise ArithmeticError("cot_sum_polynomial: verification point failed")
    return poly


@dataclass(frozen=True)
class ByrneSmithCoefficients:
    """Triangular table b[n][j], 1 <= j <= n, of the half-shift closed form."""

    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def coefficient(self, n: int, j: int) -> Fraction:
        if not 1 <= j <= n <= self.n_max:
            raise ParameterError("need 1 <= j <= n <= n_max")
        return self.rows[n - 1][j - 1]

    def row_sum(self, n: int) -> Fraction:
        return sum(self.rows[n - 1], Fraction(0))


def _build_rows(n_max: int, corrected: bool) -> tuple[tuple[Fraction, ...], ...]:
    rows: list[tuple[Fraction, ...]] = []
    for n in range(1, n_max + 1):
        row: list[Fraction] = []
        for j in range(1, n):
            acc = Fraction(0)
            for ell in range(1, n - j + 1):
                acc += (-1) ** ell * binom(2 * n, ell) * rows[n - ell - 1][j - 1]
            if corrected:
                denom = 2 ** (2 * (n - j)) - 1
            else:
                denom = 2 ** (2 * (n - j) - 1)
            row.append(acc / denom)
        # top coefficient closes the row: sum_j b[n][j] = 1 + (-1)^(n-1),
        # equivalent to the k = 1 value cot^{2n}(pi/4) = 1
        row.append(1 + (-1) ** (n - 1) - sum(row, Fraction(0)))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def byrne_smith_coefficients(n_max: int) -> ByrneSmithCoefficients:
    """Coefficient triangle of the corrected closed form, by the recursion

        b[n][j] = (1/(2^{2(n-j)} - 1)) * sum_{l=1}^{n-j} (-1)^l
                  * binom(2n, l) * b[n-l][j]      (j < n)

    with b[n][n] fixed by the row-sum constraint. Independently validated
    (in tests) by exact polynomial fitting against oracle values.
    """
    if n_max < 1:
        raise ParameterError("n_max must be positive")
    return ByrneSmithCoefficients(rows=_build_rows(n_max, corrected=True))


@lru_cache(maxsize=None)
def byrne_smith_coefficients_uncorrected(n_max: int) -> ByrneSmithCoefficients:
    """Erratum reproducer: the same construction with the published
    recursion denominator 2^{2(n-j)-1}. Wrong from n = 2 on."""
    if n_max < 1:
        raise ParameterError("n_max must be positive")
    return ByrneSmithCoefficients(rows=_build_rows(n_max, corrected=False))


def byrne_smith_sum(n: int, k: int) -> Rational:
    """U(n, k) = sum_{r=1}^{k} cot^{2n}((r - 1/2)*pi/2k)
    = (-1)^n * k + sum_{j=1}^{n} b[n][j] * k^{2j}. Always an integer."""
    ByrneSmithParams(n, k).validate()
    rows = byrne_smith_coefficients(n).rows
    return (-1) ** n * k + sum(
        b * Fraction(k) ** (2 * j) for j, b in enumerate(rows[n - 1], start=1)
    )


def byrne_smith_sum_uncorrected(n: int, k: int) -> Rational:
    """Erratum reproducer: the published closed form, with linear term
    (-1)^k * k and the uncorrected coefficient triangle. Already wrong at
    (n, k) = (1, 2): yields 10 where the true value is 6."""
    ByrneSmithParams(n, k).validate()
    rows = byrne_smith_coefficients_uncorrected(n).rows
    return (-1) ** k * k + sum(
        b * Fraction(k) ** (2 * j) for j, b in enumerate(rows[n - 1], start=1)
    )


def clear_caches() -> None:
    """Drop memoized sums, polynomials, and coefficient tables (so a timing
    run measures evaluation, not a cache hit)."""
    _bf.cache_clear()
    cot_power_sum.cache_clear()
    cot_sum_polynomial.cache_clear()
    byrne_smith_coefficients.cache_clear()
    byrne_smith_coefficients_uncorrected.cache_clear()
