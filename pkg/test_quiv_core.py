from __future__ import annotations

import pytest

from quiv_core import (
    Quiver,
    compose_morphism,
    edge_functor_mor,
    edge_functor_obj,
    find_square_violation,
    identity_morphism,
    quiver_equal,
    validate_morphism,
    vertex_functor_mor,
    vertex_functor_obj,
)
from quiv_errors import ConstraintError, DomainMismatch, SquareViolation
from quiv_oracle import enumerate_homs, quiver_catalogue
from quiv_sets import FiniteSet, SetFunction, compose_fn, identity_fn


def test_sample_morphism_is_valid(G, H, phi_GH):
    assert phi_GH.dom == G and phi_GH.cod == H
    assert vertex_functor_obj(G) == FiniteSet.of("0", "1")
    assert edge_functor_obj(G) == FiniteSet.of("e", "f", "g")
    assert vertex_functor_mor(phi_GH).items() == [("0", "2"), ("1", "2")]
    assert edge_functor_mor(phi_GH).items() == [("e", "h"), ("f", "i"), ("g", "i")]


def test_broken_square_names_the_edge(G):
    fe = SetFunction(G.edges, G.edges, {"e": "f", "f": "f", "g": "g"})
    fv = identity_fn(G.vertices)
    violation = find_square_violation(G, G, fv, fe)
    assert violation is not None
    assert (violation.edge, violation.which, violation.lhs, violation.rhs) == ("e", "target", "0", "1")
    with pytest.raises(SquareViolation, match="'e'"):
        validate_morphism(G, G, fv, fe)


def test_source_square_checked(G):
    # f goes 0 -> 1; sending vertex 0 to 1 breaks the source square at e.
    fv = SetFunction(G.vertices, G.vertices, {"0": "1", "1": "1"})
    with pytest.raises(SquareViolation) as info:
        validate_morphism(G, G, fv, identity_fn(G.edges))
    assert info.value.edge == "e" and info.value.which == "source"


def test_carrier_mismatch(G, H):
    with pytest.raises(DomainMismatch):
        validate_morphism(G, H, identity_fn(G.vertices), identity_fn(G.edges))


def test_quiver_requires_matching_structure_maps():
    vs = FiniteSet.of("0")
    es = FiniteSet.of("a")
    ok = SetFunction(es, vs, {"a": "0"})
    with pytest.raises(DomainMismatch):
        Quiver(vs, es, ok, SetFunction(es, FiniteSet.of("0", "1"), {"a": "0"}))
    with pytest.raises(DomainMismatch):
        Quiver(vs, FiniteSet.of("a", "b"), ok, ok)


def test_quiver_helpers(G, H):
    assert G.loops() == ["e"]
    assert G.edges_between("0", "1") == ["f", "g"]
    assert G.edges_between("1", "0") == []
    assert H.loops() == ["h", "i"]
    assert G.edge_triples() == [("e", "0", "0"), ("f", "0", "1"), ("g", "0", "1")]


def test_quiver_equality_ignores_name_and_order(G):
    same = Quiver.from_edges(["1", "0"], [("g", "0", "1"), ("e", "0", "0"), ("f", "0", "1")])
    assert same == G and hash(same) == hash(G)
    assert quiver_equal(G.with_name("other"), G)
    retargeted = Quiver.from_edges(["0", "1"], [("e", "0", "1"), ("f", "0", "1"), ("g", "0", "1")])
    assert not quiver_equal(retargeted, G)


def test_identity_and_composition(G, H, phi_GH):
    assert compose_morphism(identity_morphism(H), phi_GH) == phi_GH
    assert compose_morphism(phi_GH, identity_morphism(G)) == phi_GH
    with pytest.raises(DomainMismatch):
        compose_morphism(phi_GH, phi_GH)


def test_functors_preserve_identity(G, H):
    for q in (G, H):
        assert vertex_functor_mor(identity_morphism(q)) == identity_fn(q.vertices)
        assert edge_functor_mor(identity_morphism(q)) == identity_fn(q.edges)


def test_category_laws_on_small_catalogue():
    quivers = quiver_catalogue(1, 2)
    homs = {(a, b): enumerate_homs(x, y) for a, x in enumerate(quivers) for b, y in enumerate(quivers)}
    n = len(quivers)
    for a in range(n):
        for b in range(n):
            for phi in homs[(a, b)]:
                assert compose_morphism(identity_morphism(quivers[b]), phi) == phi
                assert compose_morphism(phi, identity_morphism(quivers[a])) == phi
                for c in range(n):
                    for psi in homs[(b, c)]:
                        psi_phi = compose_morphism(psi, phi)
                        assert vertex_functor_mor(psi_phi) == compose_fn(psi.vertex_map, phi.vertex_map)
                        assert edge_functor_mor(psi_phi) == compose_fn(psi.edge_map, phi.edge_map)
                        for d in range(n):
                            for chi in homs[(c, d)]:
                                assert compose_morphism(chi, psi_phi) == compose_morphism(compose_morphism(chi, psi), phi)


def test_morphism_str_lists_both_maps(phi_GH):
    text = str(phi_GH)
    assert "0->2" in text and "e->h" in text


@pytest.mark.parametrize("name", ["a b", "c#d", "x\ty"])
def test_quiver_name_is_one_token(name):
    with pytest.raises(ConstraintError, match="one token"):
        Quiver.from_edges(["v"], [], name=name)


def test_labels_outside_document_grammar_rejected():
    with pytest.raises(ConstraintError):
        Quiver.from_edges(["a b"], [])
    with pytest.raises(ConstraintError):
        Quiver.from_edges(["v"], [("c#d", "v", "v")])
