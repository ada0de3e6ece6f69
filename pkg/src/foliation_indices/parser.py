"""Text forms for polynomials and scenario files.

Polynomial grammar (whitespace insignificant, ``*`` mandatory)::

    expr     := ['-'] term { ('+'|'-') term }
    term     := factor { '*' factor }
    factor   := base [ '^' uint ]
    base     := rational | var | '(' expr ')'
    rational := uint [ '/' uint ]
    var      := 'x' uint

The scenario format is line oriented; see :func:`parse_scenario`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .polynomial import Polynomial, VectorField, deglex_key


class ParseError(ValueError):
    """Syntax or semantic error with a 1-based ``line``/``column`` position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'var', 'op', 'end'
    value: object
    column: int
    text: str = ""


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|x(\d+)|([-+*/^()])|(\S))")


def _tokenize(text: str, line: int, col0: int) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, var, op, bad = m.groups()
        text_start = m.start(m.lastindex) - (1 if var is not None else 0)
        start = text_start + col0
        raw = text[text_start:m.end()]
        if num is not None:
            tokens.append(_Token("num", int(num), start, raw))
        elif var is not None:
            tokens.append(_Token("var", int(var), start, raw))
        elif op is not None:
            tokens.append(_Token("op", op, start, raw))
        else:
            raise ParseError(f"unexpected character {bad!r}", line, start)
        pos = m.end()
    tokens.append(_Token("end", None, len(text.rstrip()) + col0, "end of input"))
    return tokens


class _PolyParser:
    def __init__(self, text: str, nvars: int, line: int, col0: int):
        self.nvars = nvars
        self.line = line
        self.tokens = _tokenize(text, line, col0)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Optional[_Token] = None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, self.line, tok.column)

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok.kind != "op" or tok.value != op:
            raise self.error(f"expected {op!r}", tok)

    def parse(self) -> Polynomial:
        if self.peek().kind == "end":
            raise self.error("empty expression")
        p = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected token {self.peek().text!r}")
        return p

    def expr(self) -> Polynomial:
        negate = False
        tok = self.peek()
        if tok.kind == "op" and tok.value == "-":
            self.take()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "+-":
                self.take()
                t = self.term()
                acc = acc + t if tok.value == "+" else acc - t
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek().kind == "op" and self.peek().value == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.base()
        tok = self.peek()
        if tok.kind == "op" and tok.value == "^":
            self.take()
            exp = self.take()
            if exp.kind != "num":
                raise self.error("expected unsigned integer exponent", exp)
            return base ** exp.value
        return base

    def base(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "num":
            value = Fraction(tok.value)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.value == "/":
                self.take()
                den = self.take()
                if den.kind != "num":
                    raise self.error("expected unsigned integer denominator", den)
                if den.value == 0:
                    raise self.error("division by zero in rational literal", den)
                value /= den.value
            return Polynomial.constant(self.nvars, value)
        if tok.kind == "var":
            if not 1 <= tok.value <= self.nvars:
                raise self.error(
                    f"variable x{tok.value} out of range x1..x{self.nvars}", tok
                )
            return Polynomial.variable(self.nvars, tok.value)
        if tok.kind == "op" and tok.value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if tok.kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected token {tok.text!r}", tok)


def parse_polynomial(text: str, nvars: int, *, line: int = 1, column: int = 1) -> Polynomial:
    """Parse ``text`` as a polynomial in ``x1 .. x{nvars}``.

    ``line`` and ``column`` locate ``text`` inside a larger document so that
    error positions point into that document.
    """
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    return _PolyParser(text, nvars, line, column).parse()


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Deterministic text form, terms in degree-lexicographic descending order."""
    if p.is_zero():
        return "0"
    parts = []
    for mono in sorted(p.terms, key=deglex_key, reverse=True):
        c = p.terms[mono]
        factors = []
        for i, e in enumerate(mono, start=1):
            if e == 1:
                factors.append(f"x{i}")
            elif e > 1:
                factors.append(f"x{i}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def format_vector_field(v: VectorField) -> str:
    return " ; ".join(format_polynomial(c) for c in v.components)


# -- scenario files -------------------------------------------------------

_HEADER_KEYS = ("n", "d", "k", "complete")
_EXPECT_NAMES = ("schwartz_total", "gsv_total", "integral_X", "chi_D", "baum_bott_total")
_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def _parse_rational(text: str, line: int, column: int) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"malformed rational {text!r}", line, column)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError("division by zero in rational literal", line, column)
    return Fraction(int(num), int(den) if den else 1)


def _parse_uint(text: str, what: str, line: int, column: int) -> int:
    if not text.isdigit():
        raise ParseError(f"{what} must be a non-negative integer, got {text!r}", line, column)
    return int(text)


def _fields(body: str, offset: int) -> List[Tuple[str, int]]:
    """Split on whitespace, keeping 1-based columns."""
    return [(m.group(), m.start() + offset) for m in re.finditer(r"\S+", body)]


def parse_scenario(text: str):
    """Parse a scenario document.

    Format (``#`` starts a comment)::

        scenario n=<uint> d=<uint> k=<uint> complete=<true|false>
        chart <uint>
        hypersurface <polynomial>
        vectorfield <polynomial> ; <polynomial> ; ...
        point chart=<uint> at <rational>,...,<rational> [label=<word>]
        expect <name> = <int>
    """
    from .verify import Chart, Scenario, ScenarioPoint

    header: Optional[Dict[str, object]] = None
    header_line = 0
    charts: Dict[int, dict] = {}
    chart_order: List[int] = []
    current: Optional[int] = None
    points: List[ScenarioPoint] = []
    expectations: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col0 = len(line) - len(line.lstrip()) + 1
        keyword, _, rest = stripped.partition(" ")
        rest_col = col0 + len(keyword) + 1
        # keep original spacing for column bookkeeping
        rest = line[rest_col - 1:] if rest else ""

        if keyword == "scenario":
            if header is not None:
                raise ParseError("duplicate scenario header", lineno, col0)
            header = {}
            for field, col in _fields(rest, rest_col):
                key, eq, value = field.partition("=")
                if not eq or key not in _HEADER_KEYS:
                    raise ParseError(f"unknown header field {field!r}", lineno, col)
                if key in header:
                    raise ParseError(f"duplicate header field {key!r}", lineno, col)
                vcol = col + len(key) + 1
                if key == "complete":
                    if value not in ("true", "false"):
                        raise ParseError("complete must be true or false", lineno, vcol)
                    header[key] = value == "true"
                else:
                    header[key] = _parse_uint(value, key, lineno, vcol)
            missing = [k for k in _HEADER_KEYS if k not in header]
            if missing:
                raise ParseError(f"missing header fields: {', '.join(missing)}", lineno, col0)
            if header["n"] < 1:
                raise ParseError("n must be at least 1", lineno, col0)
            if header["k"] < 1:
                raise ParseError("k must be at least 1", lineno, col0)
            header_line = lineno
            continue

        if header is None:
            raise ParseError("expected 'scenario' header first", lineno, col0)
        n = header["n"]

        if keyword == "chart":
            fields = _fields(rest, rest_col)
            if len(fields) != 1:
                raise ParseError("expected: chart <uint>", lineno, col0)
            cid = _parse_uint(fields[0][0], "chart id", lineno, fields[0][1])
            if cid in charts:
                raise ParseError(f"chart {cid} declared twice", lineno, fields[0][1])
            charts[cid] = {"line": lineno, "f": None, "v": None}
            chart_order.append(cid)
            current = cid
        elif keyword == "hypersurface":
            if current is None:
                raise ParseError("hypersurface outside a chart block", lineno, col0)
            if charts[current]["f"] is not None:
                raise ParseError(f"chart {current} already has a hypersurface", lineno, col0)
            charts[current]["f"] = parse_polynomial(rest, n, line=lineno, column=rest_col)
        elif keyword == "vectorfield":
            if current is None:
                raise ParseError("vectorfield outside a chart block", lineno, col0)
            if charts[current]["v"] is not None:
                raise ParseError(f"chart {current} already has a vectorfield", lineno, col0)
            comps = []
            col = rest_col
            for piece in rest.split(";"):
                comps.append(parse_polynomial(piece, n, line=lineno, column=col))
                col += len(piece) + 1
            if len(comps) != n:
                raise ParseError(f"expected {n} components, got {len(comps)}", lineno, rest_col)
            try:
                charts[current]["v"] = VectorField(comps)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, rest_col) from None
        elif keyword == "point":
            fields = _fields(rest, rest_col)
            if len(fields) < 3 or not fields[0][0].startswith("chart=") or fields[1][0] != "at":
                raise ParseError(
                    "expected: point chart=<uint> at <coords> [label=<word>]", lineno, col0
                )
            cid = _parse_uint(fields[0][0][6:], "chart id", lineno, fields[0][1] + 6)
            if cid not in charts:
                raise ParseError(f"point references undeclared chart {cid}", lineno, fields[0][1])
            coord_text, ccol = fields[2]
            coords = []
            for piece in coord_text.split(","):
                coords.append(_parse_rational(piece, lineno, ccol))
                ccol += len(piece) + 1
            if len(coords) != n:
                raise ParseError(f"expected {n} coordinates, got {len(coords)}", lineno, fields[2][1])
            label = None
            for extra, ecol in fields[3:]:
                if extra.startswith("label=") and label is None and len(extra) > 6:
                    label = extra[6:]
                else:
                    raise ParseError(f"unexpected field {extra!r}", lineno, ecol)
            if label is None:
                label = f"p{len(points)}"
            points.append(ScenarioPoint(chart_id=cid, coords=tuple(coords), label=label))
        elif keyword == "expect":
            m = re.match(r"\s*(\w+)\s*=\s*(-?\d+)\s*$", rest)
            if not m:
                raise ParseError("expected: expect <name> = <int>", lineno, rest_col)
            name = m.group(1)
            if name not in _EXPECT_NAMES:
                raise ParseError(f"unknown expectation {name!r}", lineno, rest_col + m.start(1))
            if name in expectations:
                raise ParseError(f"duplicate expectation {name!r}", lineno, rest_col + m.start(1))
            expectations[name] = int(m.group(2))
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col0)

    if header is None:
        raise ParseError("empty scenario: missing 'scenario' header", 1, 1)
    for cid in chart_order:
        ch = charts[cid]
        if ch["f"] is None or ch["v"] is None:
            what = "hypersurface" if ch["f"] is None else "vectorfield"
            raise ParseError(f"chart {cid} has no {what} line", ch["line"], 1)
    if not points:
        raise ParseError("scenario lists no points", header_line, 1)

    return Scenario(
        n=header["n"],
        d=header["d"],
        k=header["k"],
        complete=header["complete"],
        charts=tuple(Chart(cid, charts[cid]["f"], charts[cid]["v"]) for cid in chart_order),
        points=tuple(points),
        expectations=expectations,
    )


def format_scenario(s) -> str:
    """Print a scenario back in its file format."""
    lines = [f"scenario n={s.n} d={s.d} k={s.k} complete={'true' if s.complete else 'false'}"]
    for ch in s.charts:
        lines.append(f"chart {ch.chart_id}")
        lines.append(f"hypersurface {format_polynomial(ch.f)}")
        lines.append(f"vectorfield {format_vector_field(ch.v)}")
    for pt in s.points:
        coords = ",".join(_format_coeff(c) if c >= 0 else "-" + _format_coeff(-c) for c in pt.coords)
        lines.append(f"point chart={pt.chart_id} at {coords} label={pt.label}")
    for name in sorted(s.expectations):
        lines.append(f"expect {name} = {s.expectations[name]}")
    return "\n".join(lines) + "\n"
