"""Text formats: .bhg hypergraph files and path/cycle certificates.

A .bhg file is line oriented.  ``#`` starts a comment that runs to the end of
the line; blank lines are ignored.  The first significant line is ``n m``;
the next m significant lines each hold one edge as ascending space-separated
vertex ids.

A certificate is a small structured-text document naming a Berge path or
cycle: its type, its vertices, its edge ids, and (redundantly, for human
audit) the members of each of those edges.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .core import (
    BergeCycle,
    BergePath,
    Hypergraph,
    Verdict,
    verify_berge_cycle,
    verify_berge_path,
)

CERTIFICATE_HEADER = "berge-certificate v1"


class ParseError(ValueError):
    """Malformed input file; carries 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            out.append((lineno, body))
    return out


def _int_fields(lineno: int, body: str) -> list[tuple[int, int]]:
    """(column, value) per whitespace-separated token; rejects non-integers."""
    fields = []
    col = 0
    i = 0
    while i < len(body):
        if body[i].isspace():
            i += 1
            continue
        start = i
        while i < len(body) and not body[i].isspace():
            i += 1
        token = body[start:i]
        col = start + 1
        try:
            value = int(token, 10)
        except ValueError:
            raise ParseError(lineno, col, f"expected an integer, got {token!r}") from None
        fields.append((col, value))
    return fields


def read_bhg(text: str) -> Hypergraph:
    """Parse .bhg text; raises ParseError naming line and column on bad input."""
    lines = _significant_lines(text)
    if not lines:
        raise ParseError(1, 1, "missing header line 'n m'")
    lineno, body = lines[0]
    header = _int_fields(lineno, body)
    if len(header) != 2:
        col = header[2][0] if len(header) > 2 else 1
        raise ParseError(lineno, col, "header must be exactly 'n m'")
    (ncol, n), (mcol, m) = header
    if n < 0 or n > 63:
        raise ParseError(lineno, ncol, f"vertex count {n} out of range 0..63")
    if m < 0:
        raise ParseError(lineno, mcol, f"edge count {m} is negative")
    if len(lines) - 1 != m:
        raise ParseError(
            lines[-1][0] if len(lines) > 1 else lineno,
            1,
            f"expected {m} edge lines, found {len(lines) - 1}",
        )
    edges = []
    for lineno, body in lines[1:]:
        fields = _int_fields(lineno, body)
        if not fields:
            raise ParseError(lineno, 1, "empty edge line")
        members = []
        prev = -1
        for col, v in fields:
            if not 0 <= v < n:
                raise ParseError(lineno, col, f"vertex {v} out of range 0..{n - 1}")
            if v == prev:
                raise ParseError(lineno, col, f"vertex {v} repeated within the edge")
            if v < prev:
                raise ParseError(lineno, col, "edge members must be ascending")
            prev = v
            members.append(v)
        edges.append(members)
    try:
        return Hypergraph(n, edges)
    except ValueError as exc:
        raise ParseError(lines[0][0], 1, str(exc)) from None


def write_bhg(hg: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"{hg.n} {hg.num_edges}")
    for e in range(hg.num_edges):
        lines.append(" ".join(map(str, hg.edge_tuple(e))))
    return "\n".join(lines) + "\n"


def load_bhg(path: str | os.PathLike) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_bhg(fh.read())


def save_bhg(hg: Hypergraph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(write_bhg(hg, comment))


@dataclass(frozen=True)
class Certificate:
    """Parsed certificate: ``kind`` is 'path' or 'cycle'."""

    kind: str
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    edge_members: tuple[tuple[int, ...], ...]

    def as_path(self) -> BergePath:
        return BergePath(self.vertices, self.edge_ids)

    def as_cycle(self) -> BergeCycle:
        return BergeCycle(self.vertices, self.edge_ids)


def write_certificate(hg: Hypergraph, walk: BergePath | BergeCycle) -> str:
    kind = "cycle" if isinstance(walk, BergeCycle) else "path"
    lines = [
        CERTIFICATE_HEADER,
        f"type: {kind}",
        "vertices: " + " ".join(map(str, walk.vertices)),
        "edge_ids: " + " ".join(map(str, walk.edge_ids)),
        "edges:",
    ]
    for e in walk.edge_ids:
        lines.append(" ".join(map(str, hg.edge_tuple(e))))
    return "\n".join(lines) + "\n"


def read_certificate(text: str) -> Certificate:
    lines = _significant_lines(text)
    if not lines or lines[0][1].strip() != CERTIFICATE_HEADER:
        raise ParseError(1, 1, f"expected header {CERTIFICATE_HEADER!r}")
    fields: dict[str, tuple[int, str]] = {}
    edges_at = None
    for idx, (lineno, body) in enumerate(lines[1:], start=1):
        stripped = body.strip()
        if stripped == "edges:":
            edges_at = idx
            break
        if ":" not in stripped:
            raise ParseError(lineno, 1, "expected 'key: value'")
        key, value = stripped.split(":", 1)
        fields[key.strip()] = (lineno, value.strip())
    if edges_at is None:
        raise ParseError(lines[-1][0], 1, "missing 'edges:' section")
    for want in ("type", "vertices", "edge_ids"):
        if want not in fields:
            raise ParseError(lines[0][0], 1, f"missing field {want!r}")
    lineno, kind = fields["type"]
    if kind not in ("path", "cycle"):
        raise ParseError(lineno, 1, f"type must be 'path' or 'cycle', got {kind!r}")
    lineno, vtext = fields["vertices"]
    vertices = tuple(v for _, v in _int_fields(lineno, vtext))
    lineno, etext = fields["edge_ids"]
    edge_ids = tuple(v for _, v in _int_fields(lineno, etext))
    members = []
    for lineno, body in lines[1 + edges_at:]:
        members.append(tuple(v for _, v in _int_fields(lineno, body)))
    return Certificate(kind, vertices, edge_ids, tuple(members))


def verify_certificate(cert: Certificate, hg: Hypergraph | None = None) -> Verdict:
    """Check a certificate's internal consistency, and against ``hg`` when given.

    Without a hypergraph the embedded edge member lists stand in for the edge
    ids; with one, the ids must resolve to edges with exactly those members
    and the walk must verify against the hypergraph itself.
    """
    if len(cert.edge_members) != len(cert.edge_ids):
        return Verdict(
            False,
            f"{len(cert.edge_ids)} edge ids but {len(cert.edge_members)} edge member lines",
        )
    expected = len(cert.vertices) if cert.kind == "cycle" else len(cert.vertices) - 1
    if len(cert.edge_ids) != expected:
        return Verdict(
            False,
            f"a {cert.kind} on {len(cert.vertices)} vertices needs {expected} edges, "
            f"got {len(cert.edge_ids)}",
        )
    if len(set(cert.vertices)) != len(cert.vertices):
        return Verdict(False, "vertices repeat")
    if len(set(cert.edge_ids)) != len(cert.edge_ids):
        return Verdict(False, "edge ids repeat")
    t = len(cert.vertices)
    for i, members in enumerate(cert.edge_members):
        if len(set(members)) != len(members):
            return Verdict(False, f"edge member line {i + 1} repeats a vertex")
        a = cert.vertices[i]
        b = cert.vertices[(i + 1) % t] if cert.kind == "cycle" else cert.vertices[i + 1]
        if not {a, b} <= set(members):
            return Verdict(
                False,
                f"edge at step {i + 1} does not contain the pair {{{a}, {b}}}",
            )
    if hg is None:
        return Verdict(True)
    for i, (eid, members) in enumerate(zip(cert.edge_ids, cert.edge_members)):
        if not 0 <= eid < hg.num_edges:
            return Verdict(False, f"edge id {eid} out of range for the hypergraph")
        if hg.edge_tuple(eid) != tuple(sorted(members)):
            return Verdict(
                False,
                f"edge id {eid} resolves to {hg.edge_tuple(eid)}, "
                f"but the certificate lists {tuple(sorted(members))}",
            )
    if cert.kind == "cycle":
        return verify_berge_cycle(hg, cert.as_cycle())
    return verify_berge_path(hg, cert.as_path())
