"""Expression parsing, system-file ingestion and deterministic rendering.

Grammar notes: the creation operator is spelled "ad" (ASCII; the LaTeX
renderer restores the dagger).  All numeric literals are exact rationals
written num or num/den; decimals are rejected everywhere.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import ANNIHILATE, CREATE, P, Q, NormalPoly
from .quantize import PolySystem
from .scalar import Scalar


class ParseError(ValueError):
    """Syntax error carrying the offending source span (start, end)."""

    def __init__(self, message: str, span):
        self.span = tuple(span)
        super().__init__(f"{message} (at {self.span[0]}..{self.span[1]})")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    start: int
    end: int

    @property
    def span(self):
        return (self.start, self.end)


_TOKEN_RE = re.compile(
    r"(?P<number>\d+(?:/\d+)?)|(?P<ad>ad)|(?P<a>a)|(?P<q>q)|(?P<p>p)"
    r"|(?P<caret>\^)|(?P<plus>\+)|(?P<minus>-)|(?P<star>\*)"
)


def tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", (pos, pos + 1))
        tokens.append(Token(match.lastgroup, match.group(), match.start(), match.end()))
        pos = match.end()
    return tokens


class _Cursor:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def end_span(self):
        if self.tokens:
            last = self.tokens[-1]
            return (last.end, last.end)
        return (len(self.text), len(self.text))


def _take_exponent(cur: _Cursor, default: int = 1) -> int:
    tok = cur.peek()
    if tok is None or tok.kind != "caret":
        return default
    cur.take()
    num = cur.peek()
    if num is None or num.kind != "number" or "/" in num.text:
        span = num.span if num is not None else cur.end_span()
        raise ParseError("exponent must be a nonnegative integer", span)
    cur.take()
    return int(num.text)


def _parse_monomial(cur: _Cursor):
    """One unsigned monomial: [coeff ['*']] [q['^'j] ['*']] [p['^'k]]."""
    start_tok = cur.peek()
    if start_tok is None:
        raise ParseError("expected a monomial", cur.end_span())
    coeff = Fraction(1)
    saw_anything = False
    if start_tok.kind == "number":
        cur.take()
        coeff = Fraction(start_tok.text)
        saw_anything = True
        if cur.peek() is not None and cur.peek().kind == "star":
            cur.take()
    j = k = 0
    seen_q = seen_p = False
    while cur.peek() is not None and cur.peek().kind in ("q", "p"):
        tok = cur.take()
        if tok.kind == "q":
            if seen_q:
                raise ParseError("non-monomial: q appears twice", tok.span)
            if seen_p:
                raise ParseError("canonical order is q before p", tok.span)
            seen_q = True
            j = _take_exponent(cur)
        else:
            if seen_p:
                raise ParseError("non-monomial: p appears twice", tok.span)
            seen_p = True
            k = _take_exponent(cur)
        saw_anything = True
        if cur.peek() is not None and cur.peek().kind == "star":
            cur.take()
    if not saw_anything:
        raise ParseError(f"unexpected token {start_tok.text!r}", start_tok.span)
    return coeff, j, k


def parse_qp_monomial(text: str):
    """Parse "[coeff] q^j p^k" and return (coeff: Fraction, (j, k))."""
    cur = _Cursor(tokenize(text), text)
    if cur.peek() is None:
        raise ParseError("empty input", (0, max(len(text), 1)))
    coeff, j, k = _parse_monomial(cur)
    trailing = cur.peek()
    if trailing is not None:
        if trailing.kind == "q":
            raise ParseError("non-monomial input", trailing.span)
        raise ParseError(f"unexpected token {trailing.text!r}", trailing.span)
    return coeff, (j, k)


def parse_qp_poly(text: str) -> dict:
    """Parse a signed sum of q/p monomials into a sparse (j, k) -> Fraction map."""
    cur = _Cursor(tokenize(text), text)
    if cur.peek() is None:
        raise ParseError("empty input", (0, max(len(text), 1)))
    acc: dict = {}
    sign = Fraction(1)
    first = True
    while cur.peek() is not None:
        tok = cur.peek()
        if tok.kind in ("plus", "minus"):
            if not first:
                cur.take()
                sign = Fraction(-1) if tok.kind == "minus" else Fraction(1)
            else:
                cur.take()
                sign = Fraction(-1) if tok.kind == "minus" else Fraction(1)
        elif not first:
            raise ParseError("expected '+' or '-' between monomials", tok.span)
        coeff, j, k = _parse_monomial(cur)
        key = (j, k)
        acc[key] = acc.get(key, Fraction(0)) + sign * coeff
        sign = Fraction(1)
        first = False
    return {key: c for key, c in acc.items() if c}


def parse_boson_word(text: str) -> tuple:
    """Parse a product of "a" and "ad" factors with optional integer powers."""
    cur = _Cursor(tokenize(text), text)
    if cur.peek() is None:
        raise ParseError("empty input", (0, max(len(text), 1)))
    letters = []
    while cur.peek() is not None:
        tok = cur.take()
        if tok.kind == "ad":
            letter = CREATE
        elif tok.kind == "a":
            letter = ANNIHILATE
        else:
            raise ParseError(f"unexpected token {tok.text!r}", tok.span)
        power = _take_exponent(cur)
        letters.extend([letter] * power)
        if cur.peek() is not None and cur.peek().kind == "star":
            cur.take()
    return tuple(letters)


# -- rendering -------------------------------------------------------------

def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _component_plain(f: Fraction, symbol: str) -> str:
    num = abs(f.numerator)
    if symbol:
        head = symbol if num == 1 else f"{num}*{symbol}"
    else:
        head = str(num)
    return head if f.denominator == 1 else f"{head}/{f.denominator}"


def _component_latex(f: Fraction, symbol: str) -> str:
    num = abs(f.numerator)
    if symbol:
        head = symbol if num == 1 else f"{num}{symbol}"
    else:
        head = str(num)
    if f.denominator == 1:
        return head
    return rf"\frac{{{head}}}{{{f.denominator}}}"


def _scalar_pieces(c: Scalar, latex: bool):
    symbols = ["", "i", r"\sqrt{2}" if latex else "sqrt2",
               r"i\sqrt{2}" if latex else "i*sqrt2"]
    comps = [c.x_re, c.x_im, c.y_re, c.y_im]
    fmt = _component_latex if latex else _component_plain
    return [(f, fmt(f, s)) for f, s in zip(comps, symbols) if f]


def _scalar_text(c: Scalar, latex: bool):
    """Return (magnitude_text, negated_for_display, is_bare_positive_integer)."""
    pieces = _scalar_pieces(c, latex)
    negated = pieces[0][0] < 0
    if negated:
        pieces = _scalar_pieces(-c, latex)
    body = pieces[0][1]
    for f, text in pieces[1:]:
        body += (" - " if f < 0 else " + ") + text
    bare = (len(pieces) == 1 and pieces[0][0].denominator == 1
            and c.is_rational())
    return body, negated, bare


def _term_plain(m: int, n: int) -> str:
    parts = []
    if m:
        parts.append("ad" if m == 1 else f"ad^{m}")
    if n:
        parts.append("a" if n == 1 else f"a^{n}")
    return " ".join(parts)


def _term_latex(m: int, n: int) -> str:
    out = ""
    if m:
        out += r"\hat{a}^{\dagger}" if m == 1 else rf"\hat{{a}}^{{\dagger {m}}}"
    if n:
        out += r"\hat{a}" if n == 1 else rf"\hat{{a}}^{{{n}}}"
    return out


def scalar_fields(c: Scalar) -> dict:
    return {"x_re": _frac_str(c.x_re), "x_im": _frac_str(c.x_im),
            "y_re": _frac_str(c.y_re), "y_im": _frac_str(c.y_im)}


def structured_terms(poly: NormalPoly) -> list:
    return [{"m": m, "n": n, **scalar_fields(c)} for (m, n), c in poly.items()]


def render(poly: NormalPoly, format: str = "plain") -> str:
    """Deterministic rendering; term order is descending m+n, then descending m."""
    if format == "structured":
        return json.dumps({"terms": structured_terms(poly)})
    if format not in ("plain", "latex"):
        raise ValueError(f"unknown format {format!r}")
    latex = format == "latex"
    if not poly:
        return "0"
    out = []
    for (m, n), coeff in poly.items():
        body, negated, bare = _scalar_text(coeff, latex)
        term = _term_latex(m, n) if latex else _term_plain(m, n)
        if not term:
            piece = body if bare or len(_scalar_pieces(coeff, latex)) == 1 else f"({body})"
            if not bare and " " in body:
                piece = f"({body})"
        elif bare and body == "1":
            piece = term
        elif bare:
            piece = f"{body} {term}" if not latex else f"{body}{term}"
        else:
            piece = f"({body}) {term}" if not latex else rf"\left({body}\right){term}"
        if not out:
            out.append(("-" if negated else "") + piece)
        else:
            out.append(("- " if negated else "+ ") + piece)
    return " ".join(out)


def render_qp_poly(mapping) -> str:
    """Render a sparse (j, k) -> Fraction map; parse_qp_poly inverts this."""
    items = sorted(mapping.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
    if not items:
        return "0"
    out = []
    for (j, k), coeff in items:
        if not coeff:
            continue
        mag = abs(coeff)
        factors = []
        if mag != 1 or (j == 0 and k == 0):
            factors.append(str(mag.numerator) if mag.denominator == 1
                           else _frac_str(mag))
        if j:
            factors.append("q" if j == 1 else f"q^{j}")
        if k:
            factors.append("p" if k == 1 else f"p^{k}")
        piece = " ".join(factors)
        if not out:
            out.append(("-" if coeff < 0 else "") + piece)
        else:
            out.append(("- " if coeff < 0 else "+ ") + piece)
    return " ".join(out) if out else "0"


def render_boson_word(word) -> str:
    """Render a boson word as run-length powers, e.g. "ad^2 a"."""
    if not word:
        return "1"
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    return " ".join(letter if count == 1 else f"{letter}^{count}"
                    for letter, count in runs)


# -- system files ----------------------------------------------------------

class SystemFormatError(ValueError):
    """Malformed system document; the message names the offending entry."""


_COEFF_RE = re.compile(r"-?\d+(/\d+)?\Z")


def _read_side(obj, name: str) -> dict:
    entries = obj.get(name)
    if not isinstance(entries, list):
        raise SystemFormatError(f"field {name!r} must be an array")
    side: dict = {}
    for idx, entry in enumerate(entries):
        where = f"{name}[{idx}]"
        if not isinstance(entry, dict):
            raise SystemFormatError(f"{where}: entry must be an object")
        try:
            j, k, coeff = entry["j"], entry["k"], entry["coeff"]
        except KeyError as exc:
            raise SystemFormatError(f"{where}: missing field {exc.args[0]!r}") from None
        if not isinstance(j, int) or not isinstance(k, int) or isinstance(j, bool) or isinstance(k, bool):
            raise SystemFormatError(f"{where}: j and k must be integers")
        if j < 0 or k < 0:
            raise SystemFormatError(f"{where}: negative exponent ({j}, {k})")
        if not isinstance(coeff, str) or not _COEFF_RE.match(coeff):
            raise SystemFormatError(
                f"{where}: coeff must be an exact rational string num/den, got {coeff!r}")
        value = Fraction(coeff)
        side[(j, k)] = side.get((j, k), Fraction(0)) + value
    return side


def system_from_obj(obj) -> PolySystem:
    if not isinstance(obj, dict):
        raise SystemFormatError("document root must be an object")
    return PolySystem(_read_side(obj, "qdot"), _read_side(obj, "pdot"))


def load_system(path) -> PolySystem:
    """Load and validate a system document; duplicate (j, k) entries are summed."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SystemFormatError(f"not valid JSON: {exc}") from exc
    return system_from_obj(obj)
