"""
Brute-force ground truth: hom-set enumeration and small catalogues.

Every candidate (vertex map, edge map) pair is generated and filtered by
the two commuting squares. quiv_adjunction certifies its factorizations
against the result.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from quiv_core import Quiver, QuiverMorphism, validate_morphism
from quiv_errors import CapExceeded, ConstraintError
from quiv_sets import FiniteSet, SetFunction, enumerate_functions, function_count

log = logging.getLogger("quiv.oracle")

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class SizeCaps:
    max_vertex_maps: int = DEFAULT_CAP
    max_edge_maps: int = DEFAULT_CAP
    max_total_pairs: int = DEFAULT_CAP

    def __post_init__(self) -> None:
        for name in ("max_vertex_maps", "max_edge_maps", "max_total_pairs"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ConstraintError(f"{name} must be a positive integer, got {value!r}")


def search_space(g: Quiver, h: Quiver) -> tuple[int, int, int]:
    nv = function_count(g.vertices, h.vertices)
    ne = function_count(g.edges, h.edges)
    return nv, ne, nv * ne


def check_caps(g: Quiver, h: Quiver, caps: SizeCaps) -> None:
    nv, ne, total = search_space(g, h)
    if nv > caps.max_vertex_maps:
        raise CapExceeded("vertex maps", nv, caps.max_vertex_maps)
    if ne > caps.max_edge_maps:
        raise CapExceeded("edge maps", ne, caps.max_edge_maps)
    if total > caps.max_total_pairs:
        raise CapExceeded("candidate pairs", total, caps.max_total_pairs)


def _commutes(g: Quiver, h: Quiver, fv: SetFunction, fe: SetFunction) -> bool:
    # Independent of quiv_core.find_square_violation; survivors go through
    # validate_morphism again.
    vm, em = fv.mapping, fe.mapping
    for e, s, t in g.edge_triples():
        image = em[e]
        if vm[s] != h.source.mapping[image] or vm[t] != h.target.mapping[image]:
            return False
    return True


def iter_homs(g: Quiver, h: Quiver, caps: SizeCaps | None = None) -> Iterator[QuiverMorphism]:
    check_caps(g, h, caps or SizeCaps())
    edge_maps = list(enumerate_functions(g.edges, h.edges))
    for fv in enumerate_functions(g.vertices, h.vertices):
        for fe in edge_maps:
            if _commutes(g, h, fv, fe):
                yield validate_morphism(g, h, fv, fe)


def enumerate_homs(g: Quiver, h: Quiver, caps: SizeCaps | None = None) -> list[QuiverMorphism]:
    """Every quiver morphism g -> h, ordered by (vertex map, edge map)."""
    homs = list(iter_homs(g, h, caps))
    log.debug("hom(%s, %s): %d of %d candidates", g, h, len(homs), search_space(g, h)[2])
    return homs


def count_homs(g: Quiver, h: Quiver, caps: SizeCaps | None = None) -> int:
    return sum(1 for _ in iter_homs(g, h, caps))


def set_catalogue(max_size: int, prefix: str = "s") -> list[FiniteSet]:
    """[{}, {s0}, {s0,s1}, ...] up to max_size elements."""
    return [FiniteSet(tuple(f"{prefix}{i}" for i in range(n))) for n in range(max(0, int(max_size)) + 1)]


def quiver_catalogue(max_v: int, max_e: int) -> list[Quiver]:
    """Every labelled quiver with vertices v0.. and edges e0.. up to the caps.

    Order: by vertex count, then edge count, then (source map, target map)."""
    out: list[Quiver] = []
    for n in range(max(0, int(max_v)) + 1):
        vs = FiniteSet(tuple(f"v{i}" for i in range(n)))
        for m in range(max(0, int(max_e)) + 1):
            es = FiniteSet(tuple(f"e{i}" for i in range(m)))
            targets = list(enumerate_functions(es, vs))
            for src in enumerate_functions(es, vs):
                for tgt in targets:
                    out.append(Quiver(vs, es, src, tgt, name=f"q{len(out)}"))
    log.debug("quiver catalogue (max_v=%d, max_e=%d): %d quivers", max_v, max_e, len(out))
    return out
