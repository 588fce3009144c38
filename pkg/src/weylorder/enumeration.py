"""Brute-force routes: ordering averages and the symbolic-sign decomposition check.

These are deliberately naive.  They exist to be ground truth for the closed
form, so they follow the defining averages directly (with one recorded
shortcut: forced orderings enumerate distinct sign arrangements weighted by
j!k! instead of materializing all (j+k)! duplicates).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from . import closedform
from .poly import ANNIHILATE, CREATE, P, Q, NormalPoly, _normal_order_int, expand_qp_word
from .scalar import Scalar

FORCED_CAP = 8
ETA_CAP = 6


class CapExceededError(Exception):
    """Raised when an enumeration is asked to exceed its configured degree cap."""

    def __init__(self, what: str, degree: int, cap: int):
        self.what = what
        self.degree = degree
        self.cap = cap
        super().__init__(f"{what}: degree {degree} exceeds cap {cap}")


def distinct_orderings(j: int, k: int):
    """All multiset permutations of j Q's and k P's, lexicographic with Q < P."""
    if j < 0 or k < 0:
        raise ValueError("powers must be nonnegative")

    def gen(prefix, nq, np_):
        if nq == 0 and np_ == 0:
            yield tuple(prefix)
            return
        if nq:
            prefix.append(Q)
            yield from gen(prefix, nq - 1, np_)
            prefix.pop()
        if np_:
            prefix.append(P)
            yield from gen(prefix, nq, np_ - 1)
            prefix.pop()

    yield from gen([], j, k)


def weyl_bruteforce(j: int, k: int) -> NormalPoly:
    """Average of expand_qp_word over all distinct orderings of q^j p^k."""
    total = NormalPoly.zero()
    count = 0
    for word in distinct_orderings(j, k):
        total = total + expand_qp_word(word)
        count += 1
    return total * Fraction(1, count)


def weyl_forced(j: int, k: int, cap: int = FORCED_CAP) -> NormalPoly:
    """Forced-ordering average: signed factor products over all arrangements.

    Each distinct arrangement of j plus-signs and k minus-signs stands for
    j!k! identical permutations, cancelling against the (j+k)! denominator.
    """
    if j + k > cap:
        raise CapExceededError("forced-ordering average", j + k, cap)
    plus = NormalPoly({(1, 0): 1, (0, 1): 1})
    minus = NormalPoly({(1, 0): 1, (0, 1): -1})
    total = NormalPoly.zero()
    for word in distinct_orderings(j, k):
        prod = NormalPoly.one()
        for letter in word:
            prod = prod * (plus if letter == Q else minus)
        total = total + prod
    prefactor = Scalar.i_power(k) * Scalar.inv_sqrt2_power(j + k)
    return total * (prefactor * Scalar.from_rational(Fraction(1, comb(j + k, j))))


@dataclass
class EtaCheck:
    """Result of validating the three-factor decomposition for one (u, v) slot."""
    j: int
    k: int
    u: int
    v: int
    symbolic_sum: Fraction
    lambda_value: int
    xi_value: Fraction
    zeta_value: int
    matches: bool = field(init=False)

    def __post_init__(self):
        self.matches = self.symbolic_sum == self.lambda_value * self.xi_value * self.zeta_value


def eta_decomposition_check(j: int, k: int, u: int, v: int, cap: int = ETA_CAP) -> EtaCheck:
    """Sum the symbolic sign polynomial over all permutations and compare.

    Expands prod_r (ad + s_r a) keeping the signs symbolic: choosing a at the
    positions in a subset T contributes the monomial prod_{r in T} s_r, and
    normal-ordering the resulting word gives its integer weight in the
    (u, v) slot.  Only subsets of size u+v can reach that slot.
    """
    n = j + k
    if n > cap:
        raise CapExceededError("symbolic sign expansion", n, cap)
    if 2 * u + v > n:
        raise ValueError("2u+v exceeds j+k")
    slot = (n - 2 * u - v, v)
    monomials = []
    for subset in _subsets(n, u + v):
        word = tuple(ANNIHILATE if r in subset else CREATE for r in range(n))
        weight = _normal_order_int(word).get(slot, 0)
        if weight:
            monomials.append((subset, weight))
    canonical = [1] * j + [-1] * k
    total = 0
    for sigma in permutations(range(n)):
        signs = [canonical[sigma[r]] for r in range(n)]
        for subset, weight in monomials:
            prod = weight
            for r in subset:
                prod *= signs[r]
            total += prod
    return EtaCheck(
        j, k, u, v,
        symbolic_sum=Fraction(total),
        lambda_value=closedform.lambda_factor(j, k, u, v),
        xi_value=closedform.xi_factor(j, k, u, v),
        zeta_value=closedform.zeta_sum(j, k, u + v),
    )


def _subsets(n: int, size: int):
    from itertools import combinations
    return combinations(range(n), size)
