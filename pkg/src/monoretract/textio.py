"""Plain-text map and matrix files.

Map file::

    ring: Z/6
    vars: 2
    X1 -> 3 * X1 X2^2
    X2 -> 1

An image is ``0``, a bare coefficient (``1``, ``-1``, ``2/3``), or an
optional ``<coeff> *`` followed by factors ``X<j>`` / ``X<j>^<e>``.

Matrix file::

    matrix: 3
    1 0 0
    0 1 0
    1 0 0

Blank lines and ``#`` comments are ignored everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .domain import Domain, parse_domain
from .errors import InputError
from .matrix import ExponentMatrix
from .monomial import ZERO, Image, Monomial, MonomialMap


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(
    r"\s*(?:(?P<var>X(?P<idx>\d+)(?:\^(?P<exp>-?\d+))?)|(?P<num>-?\d+(?:/\d+)?)|(?P<star>\*)|(?P<bad>\S))"
)
_ASSIGN = re.compile(r"^\s*X(\d+)\s*->\s*(.*?)\s*$")


def _content_lines(text: str):
    """Yield ``(line_number, line)`` for lines that are not blank or comments."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if line.strip():
            yield no, line


def _header(lines, key: str, where: int):
    try:
        no, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{key}:' header", where) from None
    head, sep, value = line.partition(":")
    if not sep or head.strip() != key:
        raise ParseError(f"expected '{key}: ...'", no, 1)
    rest = line.index(":") + 1
    return no, value.strip(), rest + len(value) - len(value.lstrip()) + 1


def parse_image(body: str, domain: Domain, n: int, line: int = 1, offset: int = 1) -> Image:
    body = body.rstrip()
    if body.strip() == "0":
        return ZERO
    coeff = None
    exps = [0] * n
    saw_factor = saw_star = False
    for m in _TOKEN.finditer(body):
        col = offset + m.start(m.lastgroup)
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r}", line, col)
        if m.group("num"):
            if coeff is not None or saw_factor:
                raise ParseError("coefficient must come first and only once", line, col)
            try:
                coeff = domain(m.group("num"))
            except InputError as exc:
                raise ParseError(f"coefficient not in {domain}: {exc}", line, col) from None
        elif m.group("star"):
            if coeff is None or saw_star or saw_factor:
                raise ParseError("'*' must follow the coefficient", line, col)
            saw_star = True
        else:
            if coeff is not None and not saw_star:
                raise ParseError("write '<coeff> * X..' between coefficient and factors", line, col)
            j = int(m.group("idx"))
            e = int(m.group("exp")) if m.group("exp") is not None else 1
            if not 1 <= j <= n:
                raise ParseError(f"variable X{j} out of range 1..{n}", line, col)
            if e < 0:
                raise ParseError(f"negative exponent {e}", line, col)
            exps[j - 1] += e
            saw_factor = True
    if saw_star and not saw_factor:
        raise ParseError("'*' must be followed by factors", line, offset + len(body))
    if coeff is None and not saw_factor:
        raise ParseError("empty image", line, offset)
    if coeff is None:
        coeff = domain.one()
    if not coeff:
        return ZERO
    return Monomial(coeff, tuple(exps))


def parse_map(text: str) -> MonomialMap:
    lines = _content_lines(text)
    _, ring, _ = _header(lines, "ring", 1)
    try:
        domain = parse_domain(ring)
    except InputError as exc:
        raise ParseError(str(exc), 1) from None
    no, nvars, col = _header(lines, "vars", 2)
    if not nvars.isdigit() or int(nvars) < 1:
        raise ParseError(f"vars must be a positive integer, got {nvars!r}", no, col)
    n = int(nvars)
    images: dict[int, Image] = {}
    last = no
    for no, line in lines:
        last = no
        m = _ASSIGN.match(line)
        if not m:
            raise ParseError("expected 'X<i> -> <image>'", no, 1)
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"X{i} is not one of X1..X{n}", no, line.index("X") + 1)
        if i in images:
            raise ParseError(f"X{i} assigned twice", no, line.index("X") + 1)
        images[i] = parse_image(m.group(2), domain, n, no, m.start(2) + 1)
    missing = [i for i in range(1, n + 1) if i not in images]
    if missing:
        raise ParseError("no assignment for " + ", ".join(f"X{i}" for i in missing), last)
    return MonomialMap(n, domain, tuple(images[i] for i in range(1, n + 1)))


def render_image(img: Image) -> str:
    return str(img)


def render_map(phi: MonomialMap) -> str:
    lines = [f"ring: {phi.domain}", f"vars: {phi.n}"]
    lines += [f"X{i} -> {render_image(img)}" for i, img in enumerate(phi.images, start=1)]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> ExponentMatrix:
    lines = _content_lines(text)
    no, size, col = _header(lines, "matrix", 1)
    if not size.isdigit() or int(size) < 1:
        raise ParseError(f"matrix size must be a positive integer, got {size!r}", no, col)
    n = int(size)
    rows = []
    for no, line in lines:
        toks = line.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, got {len(toks)}", no)
        row = []
        for t in toks:
            if not t.isdigit():
                raise ParseError(f"entry {t!r} is not a non-negative integer", no, line.index(t) + 1)
            row.append(int(t))
        rows.append(row)
    if len(rows) != n:
        raise ParseError(f"expected {n} rows, got {len(rows)}", no)
    return ExponentMatrix.from_rows(rows)


def render_matrix(M: ExponentMatrix) -> str:
    return f"matrix: {M.n}\n{M}\n"


@dataclass(frozen=True)
class ParsedInput:
    kind: str  # "map" or "matrix"
    value: MonomialMap | ExponentMatrix


def parse_input(text: str) -> ParsedInput:
    """Dispatch on the header token of the first content line."""
    first = next(_content_lines(text), None)
    if first is None:
        raise ParseError("empty input", 1)
    head = first[1].split(":", 1)[0].strip()
    if head == "ring":
        return ParsedInput("map", parse_map(text))
    if head == "matrix":
        return ParsedInput("matrix", parse_matrix(text))
    raise ParseError("input must start with 'ring:' (map file) or 'matrix:' (matrix file)", first[0])
