"""Reading and writing tournaments.

Two text formats are understood:

``.trn``
    line 1 is ``n``; line 2 has n(n-1)/2 characters ``0``/``1``, one per pair
    (i, j) with i < j in lexicographic order, ``1`` meaning i -> j.

arc list
    line 1 is ``n``; every further line is ``u v`` for an arc u -> v.
    Pairs that are not listed point from the lower to the higher index.
"""

from __future__ import annotations

from math import comb
from pathlib import Path

from .core import Tournament, build, from_orientation


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, column: int, source: str = "<string>"):
        super().__init__(f"{source}:{line}:{column}: {msg}")
        self.line = line
        self.column = column
        self.source = source


def to_trn(t: Tournament) -> str:
    return f"{t.n}\n{t.orientation_bits()}\n"


def to_arc_list(t: Tournament) -> str:
    return f"{t.n}\n" + "".join(f"{u} {v}\n" for u, v in t.arcs())


def _parse_n(line: str, source: str) -> int:
    s = line.strip()
    if not s.isdigit():
        col = next((i for i, ch in enumerate(line) if not ch.isdigit() and not ch.isspace()), 0)
        raise ParseError(f"expected a vertex count, got {s!r}", 1, col + 1, source)
    n = int(s)
    if not 1 <= n <= 64:
        raise ParseError(f"vertex count {n} outside 1..64", 1, 1, source)
    return n


def parse(text: str, source: str = "<string>") -> Tournament:
    """Parse either format, detected from the second line."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1, 1, source)
    n = _parse_n(lines[0], source)
    body = lines[1:]
    if body and len(body[0].split()) >= 2:
        return _parse_arcs(n, body, source)
    return _parse_trn(n, body, source)


def _parse_trn(n: int, body: list[str], source: str) -> Tournament:
    need = comb(n, 2)
    bits = body[0].strip() if body else ""
    if len(body) > 1:
        raise ParseError("unexpected extra line after the orientation string", 3, 1, source)
    for col, ch in enumerate(bits, start=1):
        if ch not in "01":
            raise ParseError(f"invalid orientation character {ch!r}", 2, col, source)
    if len(bits) != need:
        raise ParseError(f"expected {need} orientation characters, got {len(bits)}",
                         2, len(bits) + 1, source)
    return from_orientation(n, bits)


def _parse_arcs(n: int, body: list[str], source: str) -> Tournament:
    arcs = []
    for lineno, line in enumerate(body, start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("expected 'u v'", lineno, 1, source)
        col = 1
        pair = []
        for p in parts:
            col = line.index(p, col - 1) + 1
            if not p.isdigit():
                raise ParseError(f"invalid vertex {p!r}", lineno, col, source)
            pair.append(int(p))
        arcs.append(tuple(pair))
    try:
        return build(n, arcs)
    except ValueError as exc:
        raise ParseError(str(exc), len(body) + 1, 1, source) from exc


def read(path: str | Path) -> Tournament:
    path = Path(path)
    return parse(path.read_text(), str(path))


def write(t: Tournament, path: str | Path) -> None:
    Path(path).write_text(to_trn(t))


def resolve(ref: str) -> Tournament:
    """Load a tournament from ``catalog:<id>`` or from a file path."""
    if ref.startswith("catalog:"):
        from . import catalog
        return catalog.build_named(ref.split(":", 1)[1])
    return read(ref)
