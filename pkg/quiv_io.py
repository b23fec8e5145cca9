"""
Text formats for quivers, morphisms and set functions, plus DOT export.

Quiver document (.qv), one statement per line, '#' starts a comment:

    quiver G
    vertex 0
    vertex 1
    edge e 0 0
    edge f 0 1

Morphism document (.qm), dom/cod paths relative to the document:

    dom g.qv
    cod h.qv
    vmap 0 -> 2
    emap e -> h

Function document (.qf):

    map a -> 0
    codomain 7      # extra codomain point outside the image
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from quiv_adjunction import FactorizationResult, LawReport
from quiv_core import Quiver, QuiverMorphism, validate_morphism
from quiv_errors import ConstraintError, ParseError
from quiv_sets import FiniteSet, SetFunction, is_label, is_token

_TOKEN = re.compile(r"\S+")

Token = tuple[str, int]  # text, 1-based column


def _statements(text: str) -> Iterator[tuple[int, list[Token]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if toks:
            yield lineno, toks


def read_document(path: str | Path) -> str:
    """File contents as text; bytes that are not UTF-8 become a ParseError at their position."""
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(f"{path}: not UTF-8 text ({e.reason})", line, column) from None


def _expect(toks: list[Token], lineno: int, n: int, usage: str) -> None:
    if len(toks) != n:
        col = toks[n][1] if len(toks) > n else toks[-1][1] + len(toks[-1][0])
        raise ParseError(f"expected `{usage}`", lineno, col)


def _label(tok: Token, lineno: int) -> str:
    text, col = tok
    if not is_label(text):
        raise ConstraintError(
            f"line {lineno}, column {col}: label {text!r} must avoid '(', ')' and ',' "
            "outside a well-formed pair"
        )
    return text


def _arrow(toks: list[Token], lineno: int, keyword: str) -> tuple[str, str]:
    _expect(toks, lineno, 4, f"{keyword} <label> -> <label>")
    if toks[2][0] != "->":
        raise ParseError("expected `->`", lineno, toks[2][1])
    return _label(toks[1], lineno), _label(toks[3], lineno)


# --- quivers -----------------------------------------------------------------


@dataclass
class QuiverDocument:
    name: str | None = None
    vertices: list[str] = field(default_factory=list)
    edges: list[tuple[str, str, str]] = field(default_factory=list)

    def to_quiver(self) -> Quiver:
        seen: set[str] = set()
        for v in self.vertices:
            if v in seen:
                raise ConstraintError(f"vertex {v!r} declared twice")
            seen.add(v)
        edge_seen: set[str] = set()
        for e, s, t in self.edges:
            if e in edge_seen:
                raise ConstraintError(f"edge {e!r} declared twice")
            edge_seen.add(e)
            for end in (s, t):
                if end not in seen:
                    raise ConstraintError(f"edge {e!r} uses undeclared vertex {end!r}")
        return Quiver.from_edges(self.vertices, self.edges, name=self.name or "")


def parse_quiver_document(text: str) -> QuiverDocument:
    doc = QuiverDocument()
    for lineno, toks in _statements(text):
        keyword, col = toks[0]
        if keyword == "quiver":
            _expect(toks, lineno, 2, "quiver <name>")
            if doc.name is not None:
                raise ParseError("quiver name given twice", lineno, col)
            doc.name = toks[1][0]
        elif keyword == "vertex":
            _expect(toks, lineno, 2, "vertex <label>")
            doc.vertices.append(_label(toks[1], lineno))
        elif keyword == "edge":
            _expect(toks, lineno, 4, "edge <label> <source> <target>")
            doc.edges.append((_label(toks[1], lineno), _label(toks[2], lineno), _label(toks[3], lineno)))
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno, col)
    return doc


def parse_quiver(text: str) -> Quiver:
    return parse_quiver_document(text).to_quiver()


def serialize_quiver(q: Quiver) -> str:
    lines: list[str] = []
    if q.name:
        lines.append(f"quiver {q.name}")
    lines += [f"vertex {v}" for v in q.vertices.sorted()]
    lines += [f"edge {e} {s} {t}" for e, s, t in q.edge_triples()]
    return "".join(line + "\n" for line in lines)


def load_quiver(path: str | Path) -> Quiver:
    p = Path(path)
    q = parse_quiver(read_document(p))
    if q.name or not is_token(p.stem):
        return q
    return q.with_name(p.stem)


# --- morphisms ---------------------------------------------------------------


@dataclass
class MorphismDocument:
    dom: str = ""
    cod: str = ""
    vertex_map: list[tuple[str, str]] = field(default_factory=list)
    edge_map: list[tuple[str, str]] = field(default_factory=list)


def parse_morphism_document(text: str) -> MorphismDocument:
    doc = MorphismDocument()
    for lineno, toks in _statements(text):
        keyword, col = toks[0]
        if keyword in ("dom", "cod"):
            _expect(toks, lineno, 2, f"{keyword} <quiver-file>")
            if getattr(doc, keyword):
                raise ParseError(f"{keyword} given twice", lineno, col)
            setattr(doc, keyword, toks[1][0])
        elif keyword == "vmap":
            doc.vertex_map.append(_arrow(toks, lineno, keyword))
        elif keyword == "emap":
            doc.edge_map.append(_arrow(toks, lineno, keyword))
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno, col)
    if not doc.dom or not doc.cod:
        raise ConstraintError("morphism document needs both `dom` and `cod`")
    return doc


def _table(pairs: list[tuple[str, str]], what: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for a, b in pairs:
        if a in out and out[a] != b:
            raise ConstraintError(f"{what} sends {a!r} to both {out[a]!r} and {b!r}")
        out[a] = b
    return out


def morphism_parts(
    doc: MorphismDocument, loader: Callable[[str], Quiver]
) -> tuple[Quiver, Quiver, SetFunction, SetFunction]:
    """Resolve dom/cod through `loader` and build both maps; no square check."""
    dom = loader(doc.dom)
    cod = loader(doc.cod)
    fv = SetFunction(dom.vertices, cod.vertices, _table(doc.vertex_map, "vertex map"))
    fe = SetFunction(dom.edges, cod.edges, _table(doc.edge_map, "edge map"))
    return dom, cod, fv, fe


def load_morphism(path: str | Path) -> QuiverMorphism:
    p = Path(path)
    doc = parse_morphism_document(read_document(p))
    return validate_morphism(*morphism_parts(doc, lambda ref: load_quiver(p.parent / ref)))


def serialize_morphism(m: QuiverMorphism, dom_ref: str, cod_ref: str) -> str:
    lines = [f"dom {dom_ref}", f"cod {cod_ref}"]
    lines += [f"vmap {a} -> {b}" for a, b in m.vertex_map.items()]
    lines += [f"emap {a} -> {b}" for a, b in m.edge_map.items()]
    return "".join(line + "\n" for line in lines)


# --- set functions -----------------------------------------------------------


@dataclass
class FunctionDocument:
    pairs: list[tuple[str, str]] = field(default_factory=list)
    codomain: list[str] = field(default_factory=list)

    def to_function(self, domain: FiniteSet | None = None, codomain: FiniteSet | None = None) -> SetFunction:
        table = _table(self.pairs, "map")
        dom = FiniteSet(tuple(sorted(table))) if domain is None else domain
        if codomain is None:
            points = sorted(set(table.values()) | set(self.codomain))
            cod = FiniteSet(tuple(points))
        else:
            stray = sorted(set(self.codomain) - set(codomain))
            if stray:
                raise ConstraintError(f"declared codomain points outside {codomain}: {', '.join(stray)}")
            cod = codomain
        return SetFunction(dom, cod, table)


def parse_function_document(text: str) -> FunctionDocument:
    doc = FunctionDocument()
    for lineno, toks in _statements(text):
        keyword, col = toks[0]
        if keyword == "map":
            doc.pairs.append(_arrow(toks, lineno, keyword))
        elif keyword == "codomain":
            _expect(toks, lineno, 2, "codomain <label>")
            doc.codomain.append(_label(toks[1], lineno))
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno, col)
    return doc


def serialize_function(f: SetFunction) -> str:
    image = set(f.mapping.values())
    lines = [f"map {x} -> {y}" for x, y in f.items()]
    lines += [f"codomain {y}" for y in f.codomain.sorted() if y not in image]
    return "".join(line + "\n" for line in lines)


# --- DOT ---------------------------------------------------------------------


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(q: Quiver) -> str:
    lines = [f"digraph {_dot_id(q.name or 'quiver')} {{"]
    lines += [f"  {_dot_id(v)};" for v in q.vertices.sorted()]
    lines += [f"  {_dot_id(s)} -> {_dot_id(t)} [label={_dot_id(e)}];" for e, s, t in q.edge_triples()]
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- reports -----------------------------------------------------------------


def format_morphism(m: QuiverMorphism) -> str:
    lines = [f"vmap {a} -> {b}" for a, b in m.vertex_map.items()]
    lines += [f"emap {a} -> {b}" for a, b in m.edge_map.items()]
    return "".join(line + "\n" for line in lines)


def format_factorization(result: FactorizationResult) -> str:
    out = format_morphism(result.mediating)
    out += f"triangle {'holds' if result.identity_witness else 'FAILS'}\n"
    if result.uniqueness_witness is not None:
        out += f"uniqueness {result.uniqueness_witness}\n"
    return out


def format_report(report: LawReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{report.subject}: {status}"]
    failed: dict[str, int] = {}
    for c in report.failures():
        failed[c.law] = failed.get(c.law, 0) + 1
    for law, (instances, checked) in report.totals().items():
        lines.append(f"  {law}: {instances} instances, {checked} checks, {failed.get(law, 0)} failed")
    for c in report.failures():
        lines.append(f"  FAIL {c.law} [{c.instance}] {c.detail}")
    return "\n".join(lines) + "\n"


# --- worked examples -----------------------------------------------------------

SAMPLES: dict[str, str] = {
    "G": "quiver G\nvertex 0\nvertex 1\nedge e 0 0\nedge f 0 1\nedge g 0 1\n",
    "H": "quiver H\nvertex 2\nedge h 2 2\nedge i 2 2\n",
    "phi": "dom G.qv\ncod H.qv\nvmap 0 -> 2\nvmap 1 -> 2\nemap e -> h\nemap f -> i\nemap g -> i\n",
}
