from __future__ import annotations

import pytest

from quiv_constructions import (
    CONSTRUCTIONS,
    bouquet,
    complete_quiver,
    construct,
    empty_quiver,
    functor_on_morphism,
    independent_edges,
    unit_or_counit,
)
from quiv_core import compose_morphism, edge_functor_mor, identity_morphism, vertex_functor_mor
from quiv_oracle import set_catalogue
from quiv_sets import (
    EMPTY,
    POINT,
    FiniteSet,
    SetFunction,
    compose_fn,
    enumerate_functions,
    identity_fn,
    pairing,
    square,
)

SETS = set_catalogue(3)
FUNCTIONS = [f for s in SETS for t in SETS for f in enumerate_functions(s, t)]

# Which carrier each construction hands back (the functor it is adjoint to).
RETRACTION = {"I": vertex_functor_mor, "M": edge_functor_mor, "K": vertex_functor_mor, "B": edge_functor_mor}
CARRIER = {"I": "vertices", "M": "edges", "K": "vertices", "B": "edges"}


def test_empty_quiver():
    q = empty_quiver(FiniteSet.of("0", "1"))
    assert q.vertices == FiniteSet.of("0", "1")
    assert q.edges == EMPTY
    assert q.name == "I"


def test_independent_edges():
    q = independent_edges(FiniteSet.of("a"))
    assert q.vertices == FiniteSet.of("(0,a)", "(1,a)")
    assert q.edge_triples() == [("a", "(0,a)", "(1,a)")]
    big = independent_edges(FiniteSet.of("a", "b", "c"))
    assert len(big.vertices) == 6 and len(big.edges) == 3
    assert big.loops() == []


def test_complete_quiver_on_two_points():
    q = complete_quiver(FiniteSet.of("0", "1"))
    assert q.vertices == FiniteSet.of("0", "1")
    assert q.edge_triples() == [
        ("(0,0)", "0", "0"),
        ("(0,1)", "0", "1"),
        ("(1,0)", "1", "0"),
        ("(1,1)", "1", "1"),
    ]
    assert q.loops() == ["(0,0)", "(1,1)"]


@pytest.mark.parametrize("s", SETS)
def test_complete_quiver_edges_match_ordered_pairs(s):
    q = complete_quiver(s)
    ends = pairing(q.source, q.target)
    assert ends.image() == square(s)
    assert len(q.edges) == len(s) ** 2
    for u in s:
        for v in s:
            assert len(q.edges_between(u, v)) == 1


def test_bouquet():
    q = bouquet(FiniteSet.of("e", "f", "g", "h"))
    assert q.vertices == POINT
    assert q.loops() == ["e", "f", "g", "h"]
    assert bouquet(EMPTY).vertices == POINT and not bouquet(EMPTY).edges


def test_construct_dispatch():
    s = FiniteSet.of("x")
    for which, build in CONSTRUCTIONS.items():
        assert construct(which, s) == build(s)
    with pytest.raises(ValueError):
        construct("Z", s)  # type: ignore[arg-type]


def test_morphism_actions():
    f = SetFunction(FiniteSet.of("0", "1"), FiniteSet.of("0"), {"0": "0", "1": "0"})
    k = functor_on_morphism("K", f)
    assert k.edge_map("(0,1)") == "(0,0)"
    assert k.vertex_map == f

    g = SetFunction(FiniteSet.of("a"), FiniteSet.of("x", "y"), {"a": "x"})
    i = functor_on_morphism("I", g)
    assert i.vertex_map == g and not i.edge_map.mapping
    m = functor_on_morphism("M", g)
    assert m.vertex_map.items() == [("(0,a)", "(0,x)"), ("(1,a)", "(1,x)")]
    b = functor_on_morphism("B", g)
    assert b.vertex_map == identity_fn(POINT) and b.edge_map == g


@pytest.mark.parametrize("which", tuple(CONSTRUCTIONS))
@pytest.mark.parametrize("s", SETS)
def test_object_retraction_and_identity(which, s):
    c = construct(which, s)
    assert getattr(c, CARRIER[which]) == s
    assert functor_on_morphism(which, identity_fn(s)) == identity_morphism(c)


@pytest.mark.parametrize("which", tuple(CONSTRUCTIONS))
def test_morphism_retraction(which):
    for f in FUNCTIONS:
        assert RETRACTION[which](functor_on_morphism(which, f)) == f


@pytest.mark.parametrize("which", tuple(CONSTRUCTIONS))
def test_functor_preserves_composition(which):
    small = set_catalogue(2)
    for a in small:
        for b in small:
            for f in enumerate_functions(a, b):
                cf = functor_on_morphism(which, f)
                for c in small:
                    for g in enumerate_functions(b, c):
                        expected = compose_morphism(functor_on_morphism(which, g), cf)
                        assert functor_on_morphism(which, compose_fn(g, f)) == expected


@pytest.mark.parametrize(
    "which, kind, left",
    [("I", "eta", True), ("M", "theta", True), ("K", "zeta", False), ("B", "epsilon", False)],
)
def test_structure_maps_are_natural_identities(which, kind, left):
    for f in FUNCTIONS:
        u_dom = unit_or_counit(kind, f.domain)
        u_cod = unit_or_counit(kind, f.codomain)
        assert u_dom == identity_fn(f.domain)
        cf = RETRACTION[which](functor_on_morphism(which, f))
        if left:
            assert compose_fn(cf, u_dom) == compose_fn(u_cod, f)
        else:
            assert compose_fn(u_cod, cf) == compose_fn(f, u_dom)


def test_unknown_structure_map():
    with pytest.raises(ValueError):
        unit_or_counit("iota", EMPTY)  # type: ignore[arg-type]


@pytest.mark.parametrize("s", SETS)
def test_matching_ends_are_disjoint(s):
    q = independent_edges(s)
    sources = q.source.image()
    targets = q.target.image()
    assert len(sources) == len(s) and len(targets) == len(s)
    assert not set(sources) & set(targets)
