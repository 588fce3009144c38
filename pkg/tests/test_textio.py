import json
from fractions import Fraction

import pytest

from weylorder.closedform import weyl_normal_form
from weylorder.poly import ANNIHILATE, CREATE, NormalPoly, normal_order_word
from weylorder.scalar import Scalar
from weylorder.textio import (ParseError, SystemFormatError, load_system,
                              parse_boson_word, parse_qp_monomial, parse_qp_poly,
                              render, render_boson_word, render_qp_poly,
                              system_from_obj)


def test_parse_qp_monomial():
    assert parse_qp_monomial("q^2 p") == (Fraction(1), (2, 1))
    assert parse_qp_monomial("3/2 p^3") == (Fraction(3, 2), (0, 3))
    assert parse_qp_monomial("q") == (Fraction(1), (1, 0))
    assert parse_qp_monomial("5") == (Fraction(5), (0, 0))


def test_parse_qp_monomial_errors():
    with pytest.raises(ParseError):
        parse_qp_monomial("q p q")
    with pytest.raises(ParseError, match="q before p"):
        parse_qp_monomial("p q")
    with pytest.raises(ParseError):
        parse_qp_monomial("")
    with pytest.raises(ParseError):
        parse_qp_monomial("q^1/2")


def test_parse_error_has_span():
    try:
        parse_qp_monomial("q !")
    except ParseError as err:
        assert err.span == (2, 3)
    else:
        pytest.fail("expected ParseError")


def test_parse_qp_poly():
    assert parse_qp_poly("3/2 q p^3 - p") == {(1, 3): Fraction(3, 2),
                                              (0, 1): Fraction(-1)}
    assert parse_qp_poly("q - q") == {}
    assert parse_qp_poly("-q + 2 p") == {(1, 0): Fraction(-1), (0, 1): Fraction(2)}
    with pytest.raises(ParseError):
        parse_qp_poly("")


def test_parse_boson_word():
    assert parse_boson_word("ad^2 a") == (CREATE, CREATE, ANNIHILATE)
    assert parse_boson_word("a ad") == (ANNIHILATE, CREATE)
    assert parse_boson_word("ad^0") == ()
    with pytest.raises(ParseError):
        parse_boson_word("q")


def test_render_plain():
    assert render(weyl_normal_form(1, 1)) == "(i/2) ad^2 - (i/2) a^2"
    assert render(NormalPoly.zero()) == "0"
    assert render(normal_order_word((ANNIHILATE, CREATE))) == "ad a + 1"
    assert render(NormalPoly({(0, 0): Scalar(x_re=1, y_re=1)})) == "(1 + sqrt2)"


def test_render_structured():
    out = json.loads(render(NormalPoly({(0, 0): Scalar(x_re=1, y_re=1)}),
                            "structured"))
    assert out == {"terms": [{"m": 0, "n": 0, "x_re": "1/1", "x_im": "0/1",
                              "y_re": "1/1", "y_im": "0/1"}]}


def test_render_latex():
    out = render(weyl_normal_form(1, 1), "latex")
    assert r"\hat{a}^{\dagger 2}" in out
    assert r"\frac{i}{2}" in out


def test_render_is_injective_on_samples():
    polys = [weyl_normal_form(j, k) for j in range(4) for k in range(4)]
    for fmt in ("plain", "latex", "structured"):
        rendered = [render(p, fmt) for p in polys]
        assert len(set(rendered)) == len(polys)


def test_qp_poly_round_trip():
    mapping = {(1, 3): Fraction(3, 2), (0, 1): Fraction(-1), (2, 0): Fraction(7)}
    assert parse_qp_poly(render_qp_poly(mapping)) == mapping
    assert render_qp_poly({}) == "0"


def test_boson_word_round_trip():
    for text in ("ad^2 a", "a ad", "a^3 ad a^2"):
        word = parse_boson_word(text)
        assert parse_boson_word(render_boson_word(word)) == word


def test_system_from_obj():
    sys_obj = {"qdot": [{"j": 0, "k": 1, "coeff": "1/1"}],
               "pdot": [{"j": 1, "k": 0, "coeff": "-1/1"}]}
    system = system_from_obj(sys_obj)
    assert dict(system.qdot) == {(0, 1): Fraction(1)}
    assert dict(system.pdot) == {(1, 0): Fraction(-1)}


def test_duplicate_entries_are_summed():
    sys_obj = {"qdot": [{"j": 0, "k": 1, "coeff": "1/2"},
                        {"j": 0, "k": 1, "coeff": "1/2"}], "pdot": []}
    assert dict(system_from_obj(sys_obj).qdot) == {(0, 1): Fraction(1)}


def test_decimals_rejected_with_entry_index():
    sys_obj = {"qdot": [{"j": 0, "k": 1, "coeff": "0.5"}], "pdot": []}
    with pytest.raises(SystemFormatError, match=r"qdot\[0\]"):
        system_from_obj(sys_obj)


def test_load_system(tmp_path):
    path = tmp_path / "sys.json"
    path.write_text(json.dumps({"qdot": [{"j": 0, "k": 1, "coeff": "1/1"}],
                                "pdot": [{"j": 1, "k": 0, "coeff": "-1/1"}]}))
    system = load_system(path)
    assert dict(system.qdot) == {(0, 1): Fraction(1)}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SystemFormatError):
        load_system(bad)


def test_negative_exponent_rejected():
    with pytest.raises(SystemFormatError, match=r"pdot\[0\]"):
        system_from_obj({"qdot": [], "pdot": [{"j": -1, "k": 0, "coeff": "1"}]})
