"""Weyl quantization of polynomial bivariate dynamical systems.

A classical vector field (q' = A(q,p), p' = B(q,p)) with rational polynomial
right-hand sides is mapped term by term through the Weyl normal form, giving
the expected dynamics of <q> and <p> as normal-ordered operator polynomials.
Systems are autonomous and coefficients must be real rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType

from .closedform import weyl_normal_form
from .poly import NormalPoly


def _clean_side(side, name: str) -> dict:
    clean = {}
    for (j, k), coeff in dict(side or {}).items():
        if j < 0 or k < 0:
            raise ValueError(f"{name}: negative exponent at ({j}, {k})")
        if isinstance(coeff, bool) or not isinstance(coeff, (int, Rational)):
            raise ValueError(f"{name}: coefficient at ({j}, {k}) is not a real rational")
        coeff = Fraction(coeff)
        if coeff:
            clean[(j, k)] = coeff
    return clean


@dataclass(frozen=True)
class PolySystem:
    """Sparse rational coefficients of q' and p' as mappings (j, k) -> Fraction."""
    qdot: "MappingProxyType"
    pdot: "MappingProxyType"

    def __init__(self, qdot=None, pdot=None):
        object.__setattr__(self, "qdot", MappingProxyType(_clean_side(qdot, "qdot")))
        object.__setattr__(self, "pdot", MappingProxyType(_clean_side(pdot, "pdot")))


@dataclass(frozen=True)
class ExpectedDynamics:
    """Quantized dynamics plus per-monomial hbar bookkeeping.

    hbar_note lists, per input monomial, the power of hbar (times 2 so it
    stays an integer) that the fixed hbar = 1 convention suppressed.
    """
    qdot_op: NormalPoly
    pdot_op: NormalPoly
    hbar_note: tuple = field(default_factory=tuple)


def quantize_side(side) -> NormalPoly:
    """Sum of coeff * weyl_normal_form(j, k) over the side's monomials."""
    acc = NormalPoly.zero()
    for (j, k), coeff in _clean_side(side, "side").items():
        acc = acc + weyl_normal_form(j, k) * coeff
    return acc


def quantize_system(system: PolySystem) -> ExpectedDynamics:
    notes = []
    for name, side in (("qdot", system.qdot), ("pdot", system.pdot)):
        for (j, k) in sorted(side):
            notes.append({"side": name, "j": j, "k": k,
                          "hbar_exponent_times_2": j + k})
    return ExpectedDynamics(
        qdot_op=quantize_side(system.qdot),
        pdot_op=quantize_side(system.pdot),
        hbar_note=tuple(notes),
    )
