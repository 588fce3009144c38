import random
from fractions import Fraction
from itertools import product

import pytest

from weylorder.altroutes import (BosonString, blasiak_coeff, blasiak_normal_order,
                                 blockify, cg_weyl_monomial, falling, weyl_via_cg)
from weylorder.closedform import weyl_normal_form
from weylorder.enumeration import weyl_bruteforce
from weylorder.poly import ANNIHILATE, CREATE, NormalPoly, normal_order_word
from weylorder.scalar import Scalar


def test_falling_factorial():
    assert falling(5, 0) == 1
    assert falling(5, 2) == 20
    assert falling(2, 3) == 0  # vanishes at nonnegative x < n
    assert falling(-1, 2) == 2


def test_cg_monomial_examples():
    half = Scalar.from_rational(Fraction(1, 2))
    assert cg_weyl_monomial(1, 1) == NormalPoly({(1, 1): 1, (0, 0): half})
    for m in range(4):
        assert cg_weyl_monomial(m, 0) == NormalPoly({(0, m): 1})
    assert cg_weyl_monomial(2, 2) == NormalPoly({(2, 2): 1, (1, 1): 2, (0, 0): half})


def test_cg_monomial_adjoint_pairing():
    for m in range(5):
        for n in range(5):
            assert cg_weyl_monomial(m, n).adjoint() == cg_weyl_monomial(n, m)


def test_weyl_via_cg_examples():
    i_half = Scalar(x_im=Fraction(1, 2))
    assert weyl_via_cg(1, 1) == NormalPoly({(2, 0): i_half, (0, 2): -i_half})
    assert weyl_via_cg(0, 0) == NormalPoly.one()
    half = Fraction(1, 2)
    assert weyl_via_cg(0, 2) == NormalPoly(
        {(2, 0): -half, (1, 1): 1, (0, 2): -half, (0, 0): half})


def test_weyl_via_cg_matches_other_routes():
    for degree in range(9):
        for j in range(degree + 1):
            k = degree - j
            assert weyl_via_cg(j, k) == weyl_normal_form(j, k)
            assert weyl_via_cg(j, k) == weyl_bruteforce(j, k)


def test_blockify():
    bs = blockify((ANNIHILATE, CREATE))
    assert bs == BosonString((1, 0), (0, 1))
    assert blockify(()) == BosonString((0,), (0,))
    assert blockify((CREATE, ANNIHILATE, ANNIHILATE)) == BosonString((1,), (2,))


def test_blasiak_coeff_examples():
    assert blasiak_coeff((1,), (1,), 1) == 1
    assert blasiak_coeff((1, 0), (0, 1), 0) == 1
    assert blasiak_coeff((1, 0), (0, 1), 1) == 1
    # pure creation string: only k = 0 survives
    assert blasiak_coeff((2, 3), (0, 0), 0) == 1
    for k in range(1, 4):
        assert blasiak_coeff((2, 3), (0, 0), k) == 0


def test_blasiak_examples():
    assert blasiak_normal_order(BosonString((1, 0), (0, 1))) == \
        NormalPoly({(1, 1): 1, (0, 0): 1})
    assert blasiak_normal_order(BosonString((1,), (2,))) == NormalPoly({(1, 2): 1})
    assert blasiak_normal_order(BosonString((2, 0), (0, 2))) == \
        NormalPoly({(2, 2): 1, (1, 1): 4, (0, 0): 2})


def test_blasiak_exhaustive_short_words():
    for length in range(9):
        for word in product((CREATE, ANNIHILATE), repeat=length):
            assert blasiak_normal_order(blockify(word)) == normal_order_word(word)


def test_blasiak_random_long_words():
    rng = random.Random(2024)
    for _ in range(1000):
        word = tuple(rng.choice((CREATE, ANNIHILATE))
                     for _ in range(rng.randrange(15)))
        assert blasiak_normal_order(blockify(word)) == normal_order_word(word)


def test_excess_conservation():
    rng = random.Random(5)
    for _ in range(100):
        word = tuple(rng.choice((CREATE, ANNIHILATE))
                     for _ in range(rng.randrange(1, 11)))
        bs = blockify(word)
        d_m = bs.prefix_excess()[-1]
        for (m, n), _ in blasiak_normal_order(bs).items():
            assert m - n == d_m


def test_boson_string_validation():
    with pytest.raises(ValueError):
        BosonString((1,), (1, 2))
    with pytest.raises(ValueError):
        BosonString((), ())
    with pytest.raises(ValueError):
        BosonString((-1,), (0,))
