"""Normal-ordered ladder-operator polynomials and the rewriting oracle.

A NormalPoly is a finite mapping (m, n) -> Scalar standing for
sum_{m,n} c_mn ad^m a^n, the universal output form of the package.
`normal_order_word` is the ground-truth route: it literally applies the
rewrite a ad -> ad a + 1 until no inversion remains.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .scalar import Scalar

CREATE = "ad"
ANNIHILATE = "a"
Q = "q"
P = "p"


def _to_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar.from_rational(value)


class NormalPoly:
    """Sparse normal-ordered polynomial in ad and a; zero terms are pruned."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for (m, n), coeff in (terms or {}).items():
            if m < 0 or n < 0:
                raise ValueError(f"negative operator power in term ({m}, {n})")
            coeff = _to_scalar(coeff)
            if coeff:
                clean[(m, n)] = coeff
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "NormalPoly":
        return cls()

    @classmethod
    def one(cls) -> "NormalPoly":
        return cls({(0, 0): 1})

    @classmethod
    def create(cls) -> "NormalPoly":
        return cls({(1, 0): 1})

    @classmethod
    def annihilate(cls) -> "NormalPoly":
        return cls({(0, 1): 1})

    # -- access ------------------------------------------------------------

    def coeff(self, m: int, n: int) -> Scalar:
        return self._terms.get((m, n), Scalar())

    def items(self):
        """Terms in canonical order: descending m+n, then descending m."""
        return sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def keys(self):
        return self._terms.keys()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NormalPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({m},{n}): {c!r}" for (m, n), c in self.items())
        return f"NormalPoly({{{body}}})"

    # -- algebra -----------------------------------------------------------

    def __add__(self, other: "NormalPoly") -> "NormalPoly":
        acc = dict(self._terms)
        for key, coeff in other._terms.items():
            acc[key] = acc.get(key, Scalar()) + coeff
        return NormalPoly(acc)

    def __neg__(self) -> "NormalPoly":
        return NormalPoly({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other: "NormalPoly") -> "NormalPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NormalPoly):
            return self._np_mul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "NormalPoly":
        value = _to_scalar(value)
        return NormalPoly({key: coeff * value for key, coeff in self._terms.items()})

    def _np_mul(self, other: "NormalPoly") -> "NormalPoly":
        # ad^m1 a^n1 * ad^m2 a^n2: reorder the inner a^n1 ad^m2 via
        # a^n ad^m = sum_k k! C(n,k) C(m,k) ad^(m-k) a^(n-k)
        acc: dict = {}
        for (m1, n1), c1 in self._terms.items():
            for (m2, n2), c2 in other._terms.items():
                c = c1 * c2
                for k in range(min(n1, m2) + 1):
                    w = factorial(k) * comb(n1, k) * comb(m2, k)
                    key = (m1 + m2 - k, n1 + n2 - k)
                    acc[key] = acc.get(key, Scalar()) + c * Fraction(w)
        return NormalPoly(acc)

    def adjoint(self) -> "NormalPoly":
        """Hermitian conjugate: (m, n) with c goes to (n, m) with conj(c)."""
        return NormalPoly({(n, m): c.conj() for (m, n), c in self._terms.items()})


# -- word rewriting --------------------------------------------------------

_NO_CACHE: dict = {}


def _normal_order_int(word: tuple) -> dict:
    """Integer-coefficient normal form of a boson word, by exhaustive rewriting.

    Each step rewrites the leftmost a ad pair to ad a + 1; suffix results are
    memoized (confluence makes the rewrite order irrelevant).
    """
    cached = _NO_CACHE.get(word)
    if cached is not None:
        return cached
    result = None
    for idx in range(len(word) - 1):
        if word[idx] == ANNIHILATE and word[idx + 1] == CREATE:
            swapped = word[:idx] + (CREATE, ANNIHILATE) + word[idx + 2:]
            dropped = word[:idx] + word[idx + 2:]
            acc = dict(_normal_order_int(swapped))
            for key, c in _normal_order_int(dropped).items():
                acc[key] = acc.get(key, 0) + c
            result = {key: c for key, c in acc.items() if c}
            break
    if result is None:
        m = word.count(CREATE)
        result = {(m, len(word) - m): 1}
    _NO_CACHE[word] = result
    return result


def normal_order_word(word) -> NormalPoly:
    """Exact normal-ordered equivalent of a word over {CREATE, ANNIHILATE}."""
    word = tuple(word)
    for letter in word:
        if letter not in (CREATE, ANNIHILATE):
            raise ValueError(f"not a boson letter: {letter!r}")
    return NormalPoly({key: Fraction(c) for key, c in _normal_order_int(word).items()})


# -- q/p words -------------------------------------------------------------

_HALF = Fraction(1, 2)
# hbar = 1 convention: q = (a + ad)/sqrt2, p = i(ad - a)/sqrt2
Q_POLY = NormalPoly({(1, 0): Scalar(y_re=_HALF), (0, 1): Scalar(y_re=_HALF)})
P_POLY = NormalPoly({(1, 0): Scalar(y_im=_HALF), (0, 1): Scalar(y_im=-_HALF)})


def expand_qp_word(word) -> NormalPoly:
    """Substitute the ladder-operator forms of q and p and normal-order."""
    out = NormalPoly.one()
    for letter in word:
        if letter == Q:
            out = out * Q_POLY
        elif letter == P:
            out = out * P_POLY
        else:
            raise ValueError(f"not a q/p letter: {letter!r}")
    return out
