from fractions import Fraction

import pytest

from weylorder.closedform import (binom, h_coeff, h_table, lambda_factor,
                                  symmetry_report, weyl_normal_form, xi_factor,
                                  zeta_gamma, zeta_poly, zeta_range, zeta_sum)
from weylorder.enumeration import weyl_bruteforce
from weylorder.poly import NormalPoly
from weylorder.scalar import Scalar


def test_binom_zero_convention():
    assert binom(4, 2) == 6
    assert binom(3, 5) == 0
    assert binom(5, -1) == 0
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_lambda_factor():
    assert lambda_factor(2, 1, 1, 1) == 2
    assert lambda_factor(3, 1, 0, 0) == 24  # (j+k)! when u = v = 0
    assert lambda_factor(2, 2, 0, 2) == 4


def test_xi_factor():
    assert xi_factor(2, 1, 1, 1) == 3
    assert xi_factor(3, 2, 0, 0) == 1
    assert xi_factor(1, 1, 1, 0) == 1


def test_zeta_values():
    for j, k in [(0, 0), (3, 2), (5, 5)]:
        assert zeta_sum(j, k, 0) == 1
    assert zeta_sum(1, 1, 1) == 0
    assert zeta_sum(2, 1, 2) == -1  # x^2 coefficient of (1+x)^2 (1-x)
    assert zeta_poly(0, 0, 0) == 1
    assert zeta_poly(2, 1, 2) == -1
    assert zeta_poly(3, 0, 2) == 3


def test_zeta_variants_agree():
    for j in range(21):
        for k in range(21):
            for t in range(j + k + 3):
                expected = zeta_sum(j, k, t)
                assert zeta_poly(j, k, t) == expected
                assert zeta_gamma(j, k, t) == expected
                assert zeta_range(j, k, t) == expected


def test_zeta_degenerate_rows():
    for j in range(9):
        for t in range(j + 2):
            assert zeta_sum(j, 0, t) == binom(j, t)
    for k in range(9):
        for t in range(k + 2):
            assert zeta_sum(0, k, t) == (-1) ** t * binom(k, t)


def test_h_coeff_pinned():
    assert h_coeff(0, 0, 0, 0) == Scalar.from_rational(1)
    assert h_coeff(1, 1, 0, 0) == Scalar(x_im=Fraction(1, 2))
    assert h_coeff(2, 0, 1, 0) == Scalar.from_rational(Fraction(1, 2))


def test_weyl_normal_form_pinned():
    assert weyl_normal_form(0, 0) == NormalPoly.one()
    i_half = Scalar(x_im=Fraction(1, 2))
    assert weyl_normal_form(1, 1) == NormalPoly({(2, 0): i_half, (0, 2): -i_half})
    half = Fraction(1, 2)
    assert weyl_normal_form(2, 0) == NormalPoly(
        {(2, 0): half, (1, 1): 1, (0, 2): half, (0, 0): half})


def test_closed_form_matches_bruteforce_oracle():
    for degree in range(7):
        for j in range(degree + 1):
            k = degree - j
            assert weyl_normal_form(j, k) == weyl_bruteforce(j, k)


def test_pair_symmetry():
    for degree in range(17):
        for j in range(degree + 1):
            k = degree - j
            sign = Scalar.from_rational((-1) ** k)
            for u in range(degree // 2 + 1):
                width = degree - 2 * u
                for v in range(width + 1):
                    assert h_coeff(j, k, u, v) == sign * h_coeff(j, k, u, width - v)


def test_odd_odd_middle_zero():
    for j in range(1, 16, 2):
        for k in range(1, 16, 2):
            if j + k > 16:
                continue
            for u in range((j + k) // 2 + 1):
                assert not h_coeff(j, k, u, (j + k - 2 * u) // 2)


def test_hermiticity():
    for degree in range(13):
        for j in range(degree + 1):
            poly = weyl_normal_form(j, degree - j)
            assert poly.adjoint() == poly


def test_term_degree_parity():
    for j, k in [(3, 2), (4, 4), (1, 0), (5, 2)]:
        for (m, n), _ in weyl_normal_form(j, k).items():
            assert m + n <= j + k
            assert (m + n) % 2 == (j + k) % 2


def test_symmetry_report():
    rep = symmetry_report(1, 1)
    assert rep.ok
    assert not h_coeff(1, 1, 0, 1)
    rep = symmetry_report(2, 0)
    assert rep.ok
    assert h_coeff(2, 0, 0, 0) == h_coeff(2, 0, 0, 2)
    assert symmetry_report(0, 0).ok


def test_h_table_equality_ignores_zeros():
    table = h_table(1, 1)
    pruned = h_table(1, 1)
    pruned.entries = {key: c for key, c in pruned.entries.items() if c}
    assert table == pruned
    assert table.entries[(0, 0)] == Scalar(x_im=Fraction(1, 2))


def test_h_coeff_range_checks():
    with pytest.raises(ValueError):
        h_coeff(1, 0, 1, 1)
    with pytest.raises(ValueError):
        xi_factor(1, 0, 1, 0)
