"""Ring constructor expressions and the ``starring v1`` table file format.

Grammar::

    spec := "zn" INT
          | "matrix" INT "(" spec ")"
          | "product" ("(" spec ")")+
          | "table" PATH
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .ring import (
    DEFAULT_SIZE_CAP,
    FiniteStarRing,
    RingError,
    SizeCapError,
    build_matrix_ring,
    build_product,
    build_zn,
)

TABLE_MAGIC = "starring v1"


class SpecParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class TableFormatError(RingError):
    pass


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class Matrix:
    k: int
    base: "RingSpec"


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Table:
    path: str


RingSpec = Zn | Matrix | Product | Table

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    return tokens


def parse_spec(text: str) -> RingSpec:
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, len(text))

    def take(expected=None):
        nonlocal i
        tok, pos = peek()
        if tok is None:
            raise SpecParseError(f"unexpected end of input, expected {expected or 'a token'}", pos)
        if expected is not None and tok != expected:
            raise SpecParseError(f"expected {expected!r}, got {tok!r}", pos)
        i += 1
        return tok, pos

    def integer(minimum):
        tok, pos = take()
        if not tok.isdigit():
            raise SpecParseError(f"expected an integer, got {tok!r}", pos)
        value = int(tok)
        if value < minimum:
            raise SpecParseError(f"integer must be >= {minimum}", pos)
        return value

    def spec():
        tok, pos = take()
        if tok == "zn":
            return Zn(integer(1))
        if tok == "matrix":
            k = integer(1)
            take("(")
            inner = spec()
            take(")")
            return Matrix(k, inner)
        if tok == "product":
            factors = []
            while peek()[0] == "(" or not factors:
                take("(")
                factors.append(spec())
                take(")")
            return Product(tuple(factors))
        if tok == "table":
            path, _ = take()
            if path in "()":
                raise SpecParseError("expected a path", pos)
            return Table(path)
        raise SpecParseError(f"unknown constructor {tok!r}", pos)

    result = spec()
    tok, pos = peek()
    if tok is not None:
        raise SpecParseError(f"trailing input {tok!r}", pos)
    return result


def build(spec: RingSpec | str, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteStarRing:
    """Construct the ring described by ``spec`` (an AST or its text)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if isinstance(spec, Zn):
        return build_zn(spec.n, size_cap)
    if isinstance(spec, Matrix):
        return build_matrix_ring(build(spec.base, size_cap), spec.k, size_cap)
    if isinstance(spec, Product):
        return build_product([build(f, size_cap) for f in spec.factors], size_cap)
    if isinstance(spec, Table):
        ring = load_table(spec.path)
        if ring.size > size_cap:
            raise SizeCapError(f"ring of size {ring.size} exceeds size cap {size_cap}")
        return ring
    raise TypeError(f"not a ring spec: {spec!r}")


def save_table(ring: FiniteStarRing, path):
    lines = [TABLE_MAGIC, f"# label: {ring.label}", str(ring.size), str(ring.zero), str(ring.one)]
    lines += [" ".join(map(str, row)) for row in ring.add.tolist()]
    lines += [" ".join(map(str, row)) for row in ring.mul.tolist()]
    lines.append(" ".join(map(str, ring.star.tolist())))
    Path(path).write_text("\n".join(lines) + "\n")


def load_table(path) -> FiniteStarRing:
    path = Path(path)
    label = path.stem
    rows = []
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        body, _, comment = raw.partition("#")
        if comment.strip().startswith("label:"):
            label = comment.strip()[len("label:"):].strip() or label
        if body.strip():
            rows.append((lineno, body.split()))
    if not rows or " ".join(rows[0][1]) != TABLE_MAGIC:
        raise TableFormatError(f"{path}: missing '{TABLE_MAGIC}' header")

    def ints(lineno, fields, count):
        if len(fields) != count:
            raise TableFormatError(f"{path}:{lineno}: expected {count} integers, got {len(fields)}")
        try:
            return [int(f) for f in fields]
        except ValueError as exc:
            raise TableFormatError(f"{path}:{lineno}: {exc}") from None

    body = rows[1:]
    if len(body) < 3:
        raise TableFormatError(f"{path}: truncated header")
    (n,) = ints(*body[0], 1)
    (zero,) = ints(*body[1], 1)
    (one,) = ints(*body[2], 1)
    if n < 1:
        raise TableFormatError(f"{path}: size must be positive")
    expected = 3 + 2 * n + 1
    if len(body) != expected:
        raise TableFormatError(f"{path}: expected {expected} data lines after the header, got {len(body)}")
    add = [ints(*body[3 + i], n) for i in range(n)]
    mul = [ints(*body[3 + n + i], n) for i in range(n)]
    star = ints(*body[3 + 2 * n], n)
    for name, table in (("add", add), ("mul", mul), ("star", [star])):
        arr = np.array(table)
        if arr.min() < 0 or arr.max() >= n:
            raise TableFormatError(f"{path}: {name} table index out of range 0..{n - 1}")
    if not (0 <= zero < n and 0 <= one < n):
        raise TableFormatError(f"{path}: zero/one index out of range")
    return FiniteStarRing(add, mul, star, zero, one, label=label)
