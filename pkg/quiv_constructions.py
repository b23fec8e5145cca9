from __future__ import annotations

from typing import Callable, Literal

from quiv_core import Quiver, QuiverMorphism
from quiv_sets import (
    EMPTY,
    POINT,
    FiniteSet,
    SetFunction,
    constant_fn,
    empty_fn,
    identity_fn,
    inclusion_fn,
    pair_label,
    projection_fn,
    split_pair,
    square,
    tagged_double,
)

ConstructionKind = Literal["I", "M", "K", "B"]
StructureMapKind = Literal["eta", "theta", "zeta", "epsilon"]

CONSTRUCTION_NAMES: dict[str, str] = {
    "I": "empty",
    "M": "matching",
    "K": "complete",
    "B": "bouquet",
}


def empty_quiver(s: FiniteSet) -> Quiver:
    """I_S: vertex set S, no edges."""
    return Quiver(s, EMPTY, empty_fn(s), empty_fn(s), name="I")


def independent_edges(s: FiniteSet) -> Quiver:
    """M_S: one arrow (0,s) -> (1,s) per element s."""
    doubled = tagged_double(s)
    return Quiver(doubled, s, inclusion_fn(0, s), inclusion_fn(1, s), name="M")


def complete_quiver(s: FiniteSet) -> Quiver:
    """K_S: one edge (s,t) from s to t per ordered pair, loops included."""
    return Quiver(s, square(s), projection_fn(1, s), projection_fn(2, s), name="K")


def bouquet(s: FiniteSet) -> Quiver:
    """B_S: the single vertex "1" with one loop per element of S."""
    return Quiver(POINT, s, constant_fn(s), constant_fn(s), name="B")


CONSTRUCTIONS: dict[str, Callable[[FiniteSet], Quiver]] = {
    "I": empty_quiver,
    "M": independent_edges,
    "K": complete_quiver,
    "B": bouquet,
}


def construct(which: ConstructionKind, s: FiniteSet) -> Quiver:
    try:
        return CONSTRUCTIONS[which](s)
    except KeyError:
        raise ValueError(f"unknown construction: {which!r}") from None


# Morphism actions: the unique choice making eta/theta/zeta/epsilon natural.


def _empty_on(f: SetFunction) -> QuiverMorphism:
    return QuiverMorphism(empty_quiver(f.domain), empty_quiver(f.codomain), f, empty_fn(EMPTY))


def _matching_on(f: SetFunction) -> QuiverMorphism:
    dom = independent_edges(f.domain)
    cod = independent_edges(f.codomain)
    vmap = {}
    for v in dom.vertices:
        j, x = split_pair(v)
        vmap[v] = pair_label(j, f.mapping[x])
    return QuiverMorphism(dom, cod, SetFunction(dom.vertices, cod.vertices, vmap), f)


def _complete_on(f: SetFunction) -> QuiverMorphism:
    dom = complete_quiver(f.domain)
    cod = complete_quiver(f.codomain)
    emap = {}
    for e in dom.edges:
        a, b = split_pair(e)
        emap[e] = pair_label(f.mapping[a], f.mapping[b])
    return QuiverMorphism(dom, cod, f, SetFunction(dom.edges, cod.edges, emap))


def _bouquet_on(f: SetFunction) -> QuiverMorphism:
    return QuiverMorphism(bouquet(f.domain), bouquet(f.codomain), identity_fn(POINT), f)


_MORPHISM_ACTIONS: dict[str, Callable[[SetFunction], QuiverMorphism]] = {
    "I": _empty_on,
    "M": _matching_on,
    "K": _complete_on,
    "B": _bouquet_on,
}


def functor_on_morphism(which: ConstructionKind, f: SetFunction) -> QuiverMorphism:
    try:
        action = _MORPHISM_ACTIONS[which]
    except KeyError:
        raise ValueError(f"unknown construction: {which!r}") from None
    return action(f)


def unit_or_counit(which: StructureMapKind, s: FiniteSet) -> SetFunction:
    """eta_S: S -> V(I_S), theta_S: S -> E(M_S), zeta_S: V(K_S) -> S,
    epsilon_S: E(B_S) -> S. All four are id_S."""
    if which == "eta":
        return identity_fn(empty_quiver(s).vertices)
    if which == "theta":
        return identity_fn(independent_edges(s).edges)
    if which == "zeta":
        return identity_fn(complete_quiver(s).vertices)
    if which == "epsilon":
        return identity_fn(bouquet(s).edges)
    raise ValueError(f"unknown structure map: {which!r}")
