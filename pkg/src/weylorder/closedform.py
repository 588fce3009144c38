"""Closed form of the Weyl ordering of q^j p^k in normal order.

The coefficient h(j,k,u,v) factors into a sign prefactor, a contraction
count and the alternating Vandermonde convolution zeta.  zeta comes in four
equivalent implementations (alternating sum, polynomial coefficient,
guard-function sum, nonzero-range sum) that are cross-checked in the test
suite and optionally at call time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .poly import NormalPoly
from .scalar import Scalar

# When true, every zeta_poly call is checked against zeta_sum.
CROSS_CHECK_ZETA = False


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero when a < b or b < 0."""
    if a < 0:
        raise ValueError("upper index must be nonnegative")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def lambda_factor(j: int, k: int, u: int, v: int) -> int:
    """Multiplicity of each sign monomial in each slot: (j+k-u-v)! (u+v)!"""
    if u + v > j + k:
        raise ValueError("u+v exceeds j+k")
    return factorial(j + k - u - v) * factorial(u + v)


def xi_factor(j: int, k: int, u: int, v: int) -> Fraction:
    """Sum of the slot weights: (j+k)! / (2^u u! v! (j+k-2u-v)!)"""
    if 2 * u + v > j + k:
        raise ValueError("2u+v exceeds j+k")
    return Fraction(factorial(j + k),
                    2 ** u * factorial(u) * factorial(v) * factorial(j + k - 2 * u - v))


def zeta_sum(j: int, k: int, t: int) -> int:
    """Alternating-sign Vandermonde convolution sum."""
    return sum((-1) ** m * binom(j, t - m) * binom(k, m) for m in range(t + 1))


def zeta_poly(j: int, k: int, t: int) -> int:
    """Coefficient of x^t in (1+x)^j (1-x)^k, by exact expansion."""
    coeffs = [1]
    for _ in range(j):
        coeffs = [a + b for a, b in zip(coeffs + [0], [0] + coeffs)]
    for _ in range(k):
        coeffs = [a - b for a, b in zip(coeffs + [0], [0] + coeffs)]
    value = coeffs[t] if 0 <= t < len(coeffs) else 0
    if CROSS_CHECK_ZETA and value != zeta_sum(j, k, t):
        raise AssertionError(f"zeta mismatch at ({j},{k},{t})")
    return value


def _g(a: int, b: int) -> int:
    return 1 if a >= b else 0


def _gamma(a: int, b: int) -> int:
    if b < 0:
        return 0
    return _g(a, b) * comb(a, b) if a >= b else 0


def zeta_gamma(j: int, k: int, t: int) -> int:
    """The guard-function form of the convolution (derivation route)."""
    return sum((-1) ** m * _gamma(j, t - m) * _gamma(k, m) for m in range(t + 1))


def zeta_range(j: int, k: int, t: int) -> int:
    """Nonzero-contribution range form: m from max(0, t-j) to min(k, t)."""
    return sum((-1) ** m * comb(j, t - m) * comb(k, m)
               for m in range(max(0, t - j), min(k, t) + 1))


def h_coeff(j: int, k: int, u: int, v: int) -> Scalar:
    """Coefficient of ad^(j+k-2u-v) a^v in the normal form of the Weyl ordering."""
    if min(j, k, u, v) < 0:
        raise ValueError("indices must be nonnegative")
    if 2 * u + v > j + k:
        raise ValueError("2u+v exceeds j+k")
    rational = (Fraction(factorial(u), 2 ** u)
                * binom((j + k) - (u + v), u)
                * binom(u + v, u)
                * zeta_poly(j, k, u + v))
    return Scalar.i_power(k) * Scalar.inv_sqrt2_power(j + k) * Scalar.from_rational(rational)


@dataclass(frozen=True)
class WeylSpec:
    """Powers of q and p whose Weyl ordering is requested."""
    j: int
    k: int

    def __post_init__(self):
        if self.j < 0 or self.k < 0:
            raise ValueError("powers must be nonnegative")


@dataclass
class HCoeffTable:
    """All h coefficients of one (j, k), indexed by (u, v)."""
    j: int
    k: int
    entries: dict = field(default_factory=dict)

    def __eq__(self, other):
        if not isinstance(other, HCoeffTable):
            return NotImplemented
        mine = {key: c for key, c in self.entries.items() if c}
        theirs = {key: c for key, c in other.entries.items() if c}
        return (self.j, self.k, mine) == (other.j, other.k, theirs)


def h_table(j: int, k: int) -> HCoeffTable:
    entries = {}
    for u in range((j + k) // 2 + 1):
        for v in range(j + k - 2 * u + 1):
            entries[(u, v)] = h_coeff(j, k, u, v)
    return HCoeffTable(j, k, entries)


def weyl_normal_form(j: int, k: int) -> NormalPoly:
    """Normal-ordered equivalent of the Weyl ordering of q^j p^k (closed form)."""
    terms: dict = {}
    for u in range((j + k) // 2 + 1):
        for v in range(j + k - 2 * u + 1):
            key = (j + k - 2 * u - v, v)
            terms[key] = terms.get(key, Scalar()) + h_coeff(j, k, u, v)
    return NormalPoly(terms)


@dataclass
class SymmetryReport:
    """Outcome of the two coefficient identities for one (j, k)."""
    j: int
    k: int
    pair_rule_ok: bool
    odd_middle_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pair_rule_ok and self.odd_middle_ok


def symmetry_report(j: int, k: int) -> SymmetryReport:
    """Check h(j,k,u,v) = (-1)^k h(j,k,u,j+k-2u-v), and the odd-odd middle zero."""
    pair_ok = True
    middle_ok = True
    failures = []
    sign = (-1) ** k
    for u in range((j + k) // 2 + 1):
        width = j + k - 2 * u
        for v in range(width + 1):
            lhs = h_coeff(j, k, u, v)
            rhs = Scalar.from_rational(sign) * h_coeff(j, k, u, width - v)
            if lhs != rhs:
                pair_ok = False
                failures.append(("pair", u, v, lhs, rhs))
        if j % 2 == 1 and k % 2 == 1 and width % 2 == 0:
            mid = h_coeff(j, k, u, width // 2)
            if mid:
                middle_ok = False
                failures.append(("middle", u, width // 2, mid, Scalar()))
    return SymmetryReport(j, k, pair_ok, middle_ok, failures)
