"""Expression parsing and canonical text forms of values and expansions.

Grammar (whitespace is ignored)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := '-' factor | atom
    atom     := number ['i'] | 'i' | 'sqrt' '(' gaussint ')' | '(' expr ')'
    gaussint := ['-'] (number ['i'] | 'i') [('+' | '-') (number ['i'] | 'i')]

A number directly followed by ``i`` is an imaginary literal, so ``8i`` and
``(2+i)/(9+8i)`` parse as expected.  Only one radicand may appear.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cfengine import Expansion, Status
from .exactnum import FieldElement, FieldMismatch, gaussian_sqrt, sqrt_element
from .gaussian import GaussianRational, gaussian_int

__all__ = [
    "ExprError",
    "ParsedExpansion",
    "format_expansion",
    "format_gaussian",
    "parse_expansion",
    "parse_expr",
    "parse_gaussian_int",
]


class ExprError(ValueError):
    """Malformed or unsupported expression; ``pos`` is the 0-based column."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"column {pos + 1}: {message}")


_TOKEN = re.compile(r"\s*(?:(\d+)(i?)|(sqrt)|(i)|([-+*/()]))")


@dataclass
class _Tok:
    kind: str  # num, imag, sqrt, op, end
    text: str
    pos: int
    value: int = 0


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        num, imag, sqrt, unit, op = m.groups()
        if num is not None:
            toks.append(_Tok("imag" if imag else "num", m.group(0).strip(), start, int(num)))
        elif sqrt:
            toks.append(_Tok("sqrt", "sqrt", start))
        elif unit:
            toks.append(_Tok("imag", "i", start, 1))
        else:
            toks.append(_Tok("op", op, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.radicand: GaussianRational | None = None

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def accept(self, text: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise ExprError(f"expected {text!r}, found {found!r}", self.tok.pos)

    def parse(self) -> FieldElement:
        value = self.expr()
        if self.tok.kind != "end":
            raise ExprError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value

    def _combine(self, a, b, op: str, pos: int):
        try:
            if op == "+":
                return a + b
            if op == "-":
                return a - b
            if op == "*":
                return a * b
            if isinstance(b, GaussianRational) and b.is_zero():
                raise ExprError("division by zero", pos)
            return a / b
        except FieldMismatch as exc:  # pragma: no cover - guarded by the radicand rule
            raise ExprError(str(exc), pos) from exc

    def expr(self):
        value = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op, pos = self.tok.text, self.tok.pos
            self.i += 1
            value = self._combine(value, self.term(), op, pos)
        return value

    def term(self):
        value = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op, pos = self.tok.text, self.tok.pos
            self.i += 1
            value = self._combine(value, self.factor(), op, pos)
        return value

    def factor(self):
        if self.accept("-"):
            return -self.factor()
        return self.atom()

    def atom(self):
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return gaussian_int(tok.value)
        if tok.kind == "imag":
            self.i += 1
            return gaussian_int(0, tok.value)
        if tok.kind == "sqrt":
            self.i += 1
            self.expect("(")
            d = self.gaussint()
            self.expect(")")
            return self._sqrt(d, tok.pos)
        if self.accept("("):
            value = self.expr()
            self.expect(")")
            return value
        raise ExprError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)

    def _sqrt(self, d: GaussianRational, pos: int):
        root = gaussian_sqrt(d)
        if root is not None:
            return root
        if self.radicand is not None and self.radicand != d:
            raise ExprError(f"second radicand {d} (only sqrt({self.radicand}) may appear)", pos)
        self.radicand = d
        return sqrt_element(d.re_num, d.im_num)

    def _gauss_term(self) -> GaussianRational:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            return gaussian_int(tok.value)
        if tok.kind == "imag":
            self.i += 1
            return gaussian_int(0, tok.value)
        raise ExprError("expected a Gaussian integer", tok.pos)

    def gaussint(self) -> GaussianRational:
        sign = -1 if self.accept("-") else 1
        value = self._gauss_term() * sign
        if self.tok.kind == "op" and self.tok.text in "+-":
            s = 1 if self.tok.text == "+" else -1
            self.i += 1
            second = self._gauss_term()
            if (second.im_num == 0) == (value.im_num == 0):
                raise ExprError("expected one real and one imaginary part", self.toks[self.i - 1].pos)
            value = value + second * s
        return value


def parse_expr(text: str) -> FieldElement:
    """Parse an exact value such as ``"sqrt(2+i)-2"`` or ``"(2+i)/(9+8i)"``."""
    return _Parser(text).parse()


def parse_gaussian_int(text: str) -> GaussianRational:
    """Parse a Gaussian integer literal such as ``"-1-3i"``, ``"2i"`` or ``"-i"``."""
    p = _Parser(text)
    value = p.gaussint()
    if p.tok.kind != "end":
        raise ExprError(f"unexpected {p.tok.text!r}", p.tok.pos)
    return value


def format_gaussian(z: GaussianRational) -> str:
    """Canonical text: ``a+bi``, ``a-bi``, ``a``, ``bi`` (``(a+bi)/d`` off Z[i])."""
    return str(z)


# ---------------------------------------------------------------------------
# expansions


def format_expansion(e: Expansion, style: str = "human") -> str:
    """``[0; 5+i, over(2-2i)]`` (human) or ``[0;5+i,\\overline{2-2i}]`` (LaTeX)."""
    pre = [str(q) for q in e.preperiod]
    per = [str(q) for q in e.period]
    if style == "paper":
        body = list(pre)
        if per:
            body.append("\\overline{" + ",".join(per) + "}")
        if e.status is Status.TRUNCATED:
            body.append("\\ldots")
        return f"[{e.initial};" + ",".join(body) + "]"
    body = list(pre)
    if per:
        body.append("over(" + ", ".join(per) + ")")
    if e.status is Status.TRUNCATED:
        body.append("...")
    return f"[{e.initial}; " + ", ".join(body) + "]"


@dataclass(frozen=True)
class ParsedExpansion:
    initial: GaussianRational
    preperiod: tuple[GaussianRational, ...]
    period: tuple[GaussianRational, ...]
    truncated: bool = False


_PAPER_OVER = re.compile(r"\\overline\{([^}]*)\}")


def _split_items(s: str) -> list[str]:
    return [x.strip() for x in s.split(",") if x.strip()]


def parse_expansion(text: str) -> ParsedExpansion:
    """Inverse of :func:`format_expansion` for either style."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")) or ";" not in s:
        raise ExprError("expansion must look like [a0; ...]")
    head, _, body = s[1:-1].partition(";")
    initial = parse_gaussian_int(head.strip())
    truncated = False
    period: list[GaussianRational] = []
    m = _PAPER_OVER.search(body)
    if m is None and "over(" in body:
        start = body.index("over(")
        end = body.index(")", start)
        period_text = body[start + 5 : end]
        body = body[:start] + body[end + 1 :]
    elif m is not None:
        period_text = m.group(1)
        body = body[: m.start()] + body[m.end() :]
    else:
        period_text = ""
    items = _split_items(body)
    if items and items[-1] in ("...", "\\ldots"):
        truncated = True
        items.pop()
    period = [parse_gaussian_int(x) for x in _split_items(period_text)]
    return ParsedExpansion(initial, tuple(parse_gaussian_int(x) for x in items), tuple(period), truncated)
