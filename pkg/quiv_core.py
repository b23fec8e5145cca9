from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from quiv_errors import ConstraintError, DomainMismatch, SquareViolation
from quiv_sets import FiniteSet, SetFunction, compose_fn, identity_fn, is_token

log = logging.getLogger("quiv.core")


@dataclass(frozen=True, eq=False)
class Quiver:
    """(V, E, sigma, tau). `name` is a display tag only and takes no part in equality."""

    vertices: FiniteSet
    edges: FiniteSet
    source: SetFunction
    target: SetFunction
    name: str = ""

    def __post_init__(self) -> None:
        if self.name and not is_token(self.name):
            raise ConstraintError(f"quiver name {self.name!r} must be one token without whitespace or '#'")
        for which, fn in (("source", self.source), ("target", self.target)):
            if fn.domain != self.edges:
                raise DomainMismatch(f"{which} map domain {fn.domain} is not the edge set {self.edges}")
            if fn.codomain != self.vertices:
                raise DomainMismatch(f"{which} map codomain {fn.codomain} is not the vertex set {self.vertices}")

    @classmethod
    def from_edges(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str]],
        name: str = "",
    ) -> Quiver:
        vs = FiniteSet(tuple(vertices))
        triples = list(edges)
        es = FiniteSet(tuple(e for e, _, _ in triples))
        src = SetFunction(es, vs, {e: s for e, s, _ in triples})
        tgt = SetFunction(es, vs, {e: t for e, _, t in triples})
        return cls(vs, es, src, tgt, name=name)

    def edge_triples(self) -> list[tuple[str, str, str]]:
        return [(e, self.source.mapping[e], self.target.mapping[e]) for e in self.edges.sorted()]

    def loops(self) -> list[str]:
        return [e for e, s, t in self.edge_triples() if s == t]

    def edges_between(self, u: str, v: str) -> list[str]:
        return [e for e, s, t in self.edge_triples() if s == u and t == v]

    def with_name(self, name: str) -> Quiver:
        return Quiver(self.vertices, self.edges, self.source, self.target, name=name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return quiver_equal(self, other)

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.source, self.target))

    def __str__(self) -> str:
        label = self.name or "quiver"
        return f"{label}(V={self.vertices}, E={self.edges})"


def quiver_equal(a: Quiver, b: Quiver) -> bool:
    return (
        a.vertices == b.vertices
        and a.edges == b.edges
        and a.source == b.source
        and a.target == b.target
    )


def _check_carriers(dom: Quiver, cod: Quiver, fv: SetFunction, fe: SetFunction) -> None:
    if fv.domain != dom.vertices or fv.codomain != cod.vertices:
        raise DomainMismatch(
            f"vertex map {fv.domain} -> {fv.codomain} does not go {dom.vertices} -> {cod.vertices}"
        )
    if fe.domain != dom.edges or fe.codomain != cod.edges:
        raise DomainMismatch(
            f"edge map {fe.domain} -> {fe.codomain} does not go {dom.edges} -> {cod.edges}"
        )


def find_square_violation(
    dom: Quiver, cod: Quiver, fv: SetFunction, fe: SetFunction
) -> SquareViolation | None:
    """First edge (sorted order) where fv.sigma != sigma'.fe or fv.tau != tau'.fe."""
    _check_carriers(dom, cod, fv, fe)
    for e in dom.edges.sorted():
        image = fe.mapping[e]
        lhs = fv.mapping[dom.source.mapping[e]]
        rhs = cod.source.mapping[image]
        if lhs != rhs:
            return SquareViolation(e, "source", lhs, rhs)
        lhs = fv.mapping[dom.target.mapping[e]]
        rhs = cod.target.mapping[image]
        if lhs != rhs:
            return SquareViolation(e, "target", lhs, rhs)
    return None


@dataclass(frozen=True, eq=False)
class QuiverMorphism:
    """A (vertex map, edge map) pair; construction validates both commuting squares."""

    dom: Quiver
    cod: Quiver
    vertex_map: SetFunction
    edge_map: SetFunction

    def __post_init__(self) -> None:
        violation = find_square_violation(self.dom, self.cod, self.vertex_map, self.edge_map)
        if violation is not None:
            log.debug("rejected morphism %s -> %s: %s", self.dom, self.cod, violation)
            raise violation

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuiverMorphism):
            return NotImplemented
        return (
            quiver_equal(self.dom, other.dom)
            and quiver_equal(self.cod, other.cod)
            and self.vertex_map == other.vertex_map
            and self.edge_map == other.edge_map
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.vertex_map, self.edge_map))

    def __str__(self) -> str:
        vm = ", ".join(f"{a}->{b}" for a, b in self.vertex_map.items())
        em = ", ".join(f"{a}->{b}" for a, b in self.edge_map.items())
        return f"({{{vm}}}, {{{em}}}): {self.dom} -> {self.cod}"


def validate_morphism(dom: Quiver, cod: Quiver, fv: SetFunction, fe: SetFunction) -> QuiverMorphism:
    return QuiverMorphism(dom, cod, fv, fe)


def identity_morphism(g: Quiver) -> QuiverMorphism:
    return QuiverMorphism(g, g, identity_fn(g.vertices), identity_fn(g.edges))


def compose_morphism(psi: QuiverMorphism, phi: QuiverMorphism) -> QuiverMorphism:
    """psi after phi."""
    if not quiver_equal(phi.cod, psi.dom):
        raise DomainMismatch(f"cannot compose: {phi.cod} is not {psi.dom}")
    return QuiverMorphism(
        phi.dom,
        psi.cod,
        compose_fn(psi.vertex_map, phi.vertex_map),
        compose_fn(psi.edge_map, phi.edge_map),
    )


def vertex_functor_obj(g: Quiver) -> FiniteSet:
    return g.vertices


def vertex_functor_mor(phi: QuiverMorphism) -> SetFunction:
    return phi.vertex_map


def edge_functor_obj(g: Quiver) -> FiniteSet:
    return g.edges


def edge_functor_mor(phi: QuiverMorphism) -> SetFunction:
    return phi.edge_map
