"""Ring construction DSL and the ring-table text format.

Grammar (whitespace insignificant):

    Expr := "Z(" int ")"
          | "Mat(" Expr "," int ")"
          | "Tri(" Expr "," int "," ("lower"|"upper") ")"
          | "Prod(" Expr ("," Expr)+ ")"
          | "Op(" Expr ")"
          | "Table(" path ")"

Table files are plain text: ``ring <name> <order>``, then ``zero <idx>``,
``one <idx>``, then ``add`` followed by <order> rows of <order> indices, then
``mul`` likewise.  ``#`` starts a comment; indices are decimal and 0-based.
Loaded tables are run through the full axiom check and rejected with the
violated law and witness on failure.
"""

from __future__ import annotations

import os
import re
from typing import Optional

from .rings import (
    DEFAULT_CONSTRUCTION_CAP,
    InvalidRingError,
    RingTable,
    check_ring_axioms,
    make_cyclic_ring,
    make_matrix_ring,
    make_product_ring,
    make_triangular_ring,
    opposite_ring,
)


class DslError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"parse error at position {position}: {message}")
        self.position = position


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise DslError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def word(self) -> str:
        self.skip_ws()
        m = re.match(r"[A-Za-z_][A-Za-z0-9_]*", self.text[self.pos:])
        if not m:
            raise DslError("expected a name", self.pos)
        self.pos += m.end()
        return m.group(0)

    def integer(self) -> int:
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise DslError("expected an integer", self.pos)
        self.pos += m.end()
        return int(m.group(0))

    def path_token(self) -> str:
        self.skip_ws()
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    break
                depth -= 1
            elif c == "," and depth == 0:
                break
            self.pos += 1
        token = self.text[start:self.pos].strip()
        if not token:
            raise DslError("expected a file path", start)
        return token


def parse_ring_expr(text: str, base_dir: Optional[str] = None,
                    order_cap: int = DEFAULT_CONSTRUCTION_CAP) -> RingTable:
    """Parse and build a ring from a constructor expression."""
    sc = _Scanner(text)
    ring = _parse(sc, base_dir, order_cap)
    sc.skip_ws()
    if sc.pos != len(text):
        raise DslError("trailing input", sc.pos)
    return ring


def _parse(sc: _Scanner, base_dir: Optional[str], order_cap: int) -> RingTable:
    at = sc.pos
    head = sc.word()
    sc.expect("(")
    if head == "Z":
        n = sc.integer()
        sc.expect(")")
        if n <= 1:
            raise DslError("Z(n) needs n >= 2", at)
        return make_cyclic_ring(n)
    if head == "Mat":
        base = _parse(sc, base_dir, order_cap)
        sc.expect(",")
        k = sc.integer()
        sc.expect(")")
        return make_matrix_ring(base, k, order_cap=order_cap)
    if head == "Tri":
        base = _parse(sc, base_dir, order_cap)
        sc.expect(",")
        k = sc.integer()
        sc.expect(",")
        shape = sc.word()
        sc.expect(")")
        if shape not in ("lower", "upper"):
            raise DslError("shape must be lower or upper", at)
        return make_triangular_ring(base, k, shape, order_cap=order_cap)
    if head == "Prod":
        factors = [_parse(sc, base_dir, order_cap)]
        while sc.peek() == ",":
            sc.expect(",")
            factors.append(_parse(sc, base_dir, order_cap))
        sc.expect(")")
        if len(factors) < 2:
            raise DslError("Prod needs at least two factors", at)
        return make_product_ring(factors, order_cap=order_cap)
    if head == "Op":
        base = _parse(sc, base_dir, order_cap)
        sc.expect(")")
        return opposite_ring(base)
    if head == "Table":
        path = sc.path_token()
        sc.expect(")")
        full = path if base_dir is None else os.path.join(base_dir, path)
        return parse_ring_table_file(full)
    raise DslError(f"unknown constructor {head!r}", at)


# ---------------------------------------------------------------------------
# table files


def parse_ring_table_text(text: str, source: str = "<string>") -> RingTable:
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    cursor = 0

    def take() -> str:
        nonlocal cursor
        if cursor >= len(lines):
            raise ValueError(f"{source}: unexpected end of table file")
        line = lines[cursor]
        cursor += 1
        return line

    header = take().split()
    if len(header) != 3 or header[0] != "ring":
        raise ValueError(f"{source}: first line must be 'ring <name> <order>'")
    name, order = header[1], int(header[2])

    def indexed(keyword: str) -> int:
        parts = take().split()
        if len(parts) != 2 or parts[0] != keyword:
            raise ValueError(f"{source}: expected '{keyword} <idx>'")
        return int(parts[1])

    zero = indexed("zero")
    one = indexed("one")

    def table(keyword: str) -> list[list[int]]:
        if take() != keyword:
            raise ValueError(f"{source}: expected '{keyword}' section")
        rows = []
        for _ in range(order):
            row = [int(v) for v in take().split()]
            if len(row) != order:
                raise ValueError(f"{source}: {keyword} row must have {order} entries")
            rows.append(row)
        return rows

    add = table("add")
    mul = table("mul")
    if cursor != len(lines):
        raise ValueError(f"{source}: trailing content after tables")

    violation = check_ring_axioms(add, mul, zero, one)
    if violation is not None:
        raise InvalidRingError(violation)
    names = [f"e{i}" for i in range(order)]
    names[zero] = "0"
    names[one] = "1"
    return RingTable(add, mul, zero, one, name, origin=("table", name),
                     elem_names=names, validate=False)


def parse_ring_table_file(path: str) -> RingTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ring_table_text(fh.read(), source=path)


def format_ring_table(T: RingTable) -> str:
    """Serialise a ring in the table file format."""
    out = [f"ring {T.label} {T.order}", f"zero {T.zero}", f"one {T.one}", "add"]
    for row in T.add:
        out.append(" ".join(str(int(v)) for v in row))
    out.append("mul")
    for row in T.mul:
        out.append(" ".join(str(int(v)) for v in row))
    return "\n".join(out) + "\n"
