"""Readers and writers for polytope files.

Two input formats are understood:

* PALP matrix blocks: a header ``r c [comment]`` followed by ``r`` rows of
  ``c`` integers. With ``r <= c`` the rows are coordinates (``r`` must be 3)
  and columns are vertices; with ``r > c`` the rows are vertices.
* The simple JSON format: a list of objects, each with a ``"vertices"`` array
  of integer triples and an optional ``"comment"``. A single object, or an
  object with a ``"polytopes"`` list, is accepted too.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence

from .errors import (
    MalformedHeader,
    MatrixShapeMismatch,
    NonInteger,
    SchemaError,
    WrongDimension,
)
from .lattice import Point


@dataclass(frozen=True)
class CensusEntry:
    id: int
    vertices: tuple[Point, ...]
    comment: str | None = None


def _read_text(stream: IO[str] | str) -> str:
    return stream if isinstance(stream, str) else stream.read()


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise NonInteger(f"line {lineno}: {tok!r} is not an integer") from None


def parse_palp(stream: IO[str] | str) -> list[CensusEntry]:
    lines = _read_text(stream).splitlines()
    entries: list[CensusEntry] = []
    i = 0
    while i < len(lines):
        header = lines[i].split()
        i += 1
        if not header:
            continue
        if len(header) < 2:
            raise MalformedHeader(f"line {i}: expected 'rows cols [comment]'")
        try:
            r, c = int(header[0]), int(header[1])
        except ValueError:
            raise MalformedHeader(f"line {i}: expected 'rows cols [comment]'") from None
        if r <= 0 or c <= 0:
            raise MalformedHeader(f"line {i}: matrix dimensions must be positive")
        comment = " ".join(header[2:]) or None
        rows = []
        for _ in range(r):
            if i >= len(lines):
                raise MatrixShapeMismatch(f"block at line {i}: file ends before {r} rows")
            toks = lines[i].split()
            i += 1
            if len(toks) != c:
                raise MatrixShapeMismatch(f"line {i}: expected {c} entries, got {len(toks)}")
            rows.append([_int_token(t, i) for t in toks])
        if r <= c:
            if r != 3:
                raise WrongDimension(f"block {len(entries) + 1}: {r}x{c} matrix has no side of length 3")
            verts = [tuple(rows[k][j] for k in range(3)) for j in range(c)]
        else:
            if c != 3:
                raise WrongDimension(f"block {len(entries) + 1}: {r}x{c} matrix has no side of length 3")
            verts = [tuple(row) for row in rows]
        entries.append(CensusEntry(len(entries) + 1, tuple(verts), comment))
    return entries


def parse_simple(stream: IO[str] | str) -> list[CensusEntry]:
    try:
        doc = json.loads(_read_text(stream))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    if isinstance(doc, dict):
        doc = doc["polytopes"] if "polytopes" in doc else [doc]
    if not isinstance(doc, list):
        raise SchemaError("expected a list of polytope objects")
    entries = []
    for n, obj in enumerate(doc, start=1):
        if not isinstance(obj, dict) or "vertices" not in obj:
            raise SchemaError(f"entry {n}: missing 'vertices'")
        verts = obj["vertices"]
        if not isinstance(verts, list) or not verts:
            raise SchemaError(f"entry {n}: 'vertices' must be a non-empty array")
        out = []
        for v in verts:
            if (
                not isinstance(v, list)
                or len(v) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in v)
            ):
                raise SchemaError(f"entry {n}: vertex {v!r} is not an integer triple")
            out.append((v[0], v[1], v[2]))
        comment = obj.get("comment")
        if comment is not None and not isinstance(comment, str):
            raise SchemaError(f"entry {n}: 'comment' must be a string")
        entries.append(CensusEntry(n, tuple(out), comment))
    return entries


def parse_any(text: str) -> list[CensusEntry]:
    """Pick the simple format for JSON documents and PALP otherwise."""
    head = text.lstrip()[:1]
    return parse_simple(text) if head in ("[", "{") else parse_palp(text)


def read_entries(path: str | Path) -> list[CensusEntry]:
    return parse_any(Path(path).read_text(encoding="utf-8"))


def emit_simple(polytopes: Iterable[tuple[Sequence[Sequence[int]], str | None]]) -> str:
    """Serialize ``(vertices, comment)`` pairs in the simple format, one vertex per line."""
    blocks = []
    for verts, comment in polytopes:
        vs = ",\n".join(f"      [{v[0]}, {v[1]}, {v[2]}]" for v in verts)
        head = f'    "comment": {json.dumps(comment)},\n' if comment is not None else ""
        blocks.append("  {\n" + head + '    "vertices": [\n' + vs + "\n    ]\n  }")
    return "[\n" + ",\n".join(blocks) + "\n]\n"


def emit_palp(polytopes: Iterable[tuple[Sequence[Sequence[int]], str | None]]) -> str:
    """PALP blocks in the 3 x n (coordinates by vertices) orientation."""
    out = []
    for verts, comment in polytopes:
        header = f"3 {len(verts)}" + (f" {comment}" if comment else "")
        out.append(header)
        for k in range(3):
            out.append(" ".join(str(v[k]) for v in verts))
    return "\n".join(out) + "\n"
