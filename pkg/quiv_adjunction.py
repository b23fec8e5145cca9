from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Literal, Sequence

from quiv_constructions import (
    ConstructionKind,
    StructureMapKind,
    bouquet,
    complete_quiver,
    construct,
    empty_quiver,
    functor_on_morphism,
    independent_edges,
    unit_or_counit,
)
from quiv_core import (
    Quiver,
    QuiverMorphism,
    compose_morphism,
    edge_functor_mor,
    edge_functor_obj,
    identity_morphism,
    vertex_functor_mor,
    vertex_functor_obj,
)
from quiv_errors import DomainMismatch, LawViolation
from quiv_oracle import SizeCaps, enumerate_homs
from quiv_sets import (
    FiniteSet,
    SetFunction,
    compose_fn,
    constant_fn,
    empty_fn,
    enumerate_functions,
    function_count,
    identity_fn,
    pair_label,
    split_pair,
)

log = logging.getLogger("quiv.adjunction")

AdjunctionKind = Literal["I-V", "M-E", "V-K", "E-B"]
ADJUNCTIONS: tuple[str, ...] = ("I-V", "M-E", "V-K", "E-B")


@dataclass(frozen=True)
class FactorizationResult:
    mediating: QuiverMorphism
    identity_witness: bool
    uniqueness_witness: int | None = None


# --- the four factorizations ------------------------------------------------


def reflect_vertices(g: Quiver, phi: SetFunction) -> FactorizationResult:
    """phi: S -> V(G) factors uniquely as V(phi_hat) . eta_S with phi_hat: I_S -> G."""
    if phi.codomain != g.vertices:
        raise DomainMismatch(f"map lands in {phi.codomain}, expected V(G) = {g.vertices}")
    s = phi.domain
    mediating = QuiverMorphism(empty_quiver(s), g, phi, empty_fn(g.edges))
    ok = compose_fn(vertex_functor_mor(mediating), unit_or_counit("eta", s)) == phi
    return FactorizationResult(mediating, ok)


def reflect_edges(g: Quiver, phi: SetFunction) -> FactorizationResult:
    """phi: S -> E(G) factors uniquely as E(phi_hat) . theta_S with phi_hat: M_S -> G."""
    if phi.codomain != g.edges:
        raise DomainMismatch(f"map lands in {phi.codomain}, expected E(G) = {g.edges}")
    s = phi.domain
    m = independent_edges(s)
    vmap = {}
    for v in m.vertices:
        j, x = split_pair(v)
        ends = g.source if j == "0" else g.target
        vmap[v] = ends.mapping[phi.mapping[x]]
    mediating = QuiverMorphism(m, g, SetFunction(m.vertices, g.vertices, vmap), phi)
    ok = compose_fn(edge_functor_mor(mediating), unit_or_counit("theta", s)) == phi
    return FactorizationResult(mediating, ok)


def coreflect_vertices(g: Quiver, phi: SetFunction) -> FactorizationResult:
    """phi: V(G) -> S factors uniquely as zeta_S . V(phi_hat) with phi_hat: G -> K_S."""
    if phi.domain != g.vertices:
        raise DomainMismatch(f"map starts at {phi.domain}, expected V(G) = {g.vertices}")
    s = phi.codomain
    k = complete_quiver(s)
    emap = {
        e: pair_label(phi.mapping[src], phi.mapping[tgt]) for e, src, tgt in g.edge_triples()
    }
    mediating = QuiverMorphism(g, k, phi, SetFunction(g.edges, k.edges, emap))
    ok = compose_fn(unit_or_counit("zeta", s), vertex_functor_mor(mediating)) == phi
    return FactorizationResult(mediating, ok)


def coreflect_edges(g: Quiver, phi: SetFunction) -> FactorizationResult:
    """phi: E(G) -> S factors uniquely as epsilon_S . E(phi_hat) with phi_hat: G -> B_S."""
    if phi.domain != g.edges:
        raise DomainMismatch(f"map starts at {phi.domain}, expected E(G) = {g.edges}")
    s = phi.codomain
    mediating = QuiverMorphism(g, bouquet(s), constant_fn(g.vertices), phi)
    ok = compose_fn(unit_or_counit("epsilon", s), edge_functor_mor(mediating)) == phi
    return FactorizationResult(mediating, ok)


@dataclass(frozen=True)
class _Adjunction:
    key: str
    construction: ConstructionKind
    structure_map: StructureMapKind
    functor_obj: Callable[[Quiver], FiniteSet]
    functor_mor: Callable[[QuiverMorphism], SetFunction]
    left: bool  # construction is the left adjoint
    factorize: Callable[[Quiver, SetFunction], FactorizationResult]

    def triangle(self, s: FiniteSet, m: QuiverMorphism) -> SetFunction:
        u = unit_or_counit(self.structure_map, s)
        if self.left:
            return compose_fn(self.functor_mor(m), u)
        return compose_fn(u, self.functor_mor(m))

    def hom_set(self, s: FiniteSet, g: Quiver, caps: SizeCaps | None) -> list[QuiverMorphism]:
        c = construct(self.construction, s)
        return enumerate_homs(c, g, caps) if self.left else enumerate_homs(g, c, caps)

    def set_side(self, s: FiniteSet, g: Quiver) -> list[SetFunction]:
        fg = self.functor_obj(g)
        return list(enumerate_functions(s, fg) if self.left else enumerate_functions(fg, s))

    def set_side_count(self, s: FiniteSet, g: Quiver) -> int:
        fg = self.functor_obj(g)
        return function_count(s, fg) if self.left else function_count(fg, s)

    def set_of(self, phi: SetFunction) -> FiniteSet:
        return phi.domain if self.left else phi.codomain

    def derived(self, g: Quiver) -> QuiverMorphism:
        """Counit C(F(G)) -> G for a left C, unit G -> C(F(G)) for a right C."""
        return self.factorize(g, identity_fn(self.functor_obj(g))).mediating


_SIDES: dict[str, _Adjunction] = {
    "I-V": _Adjunction("I-V", "I", "eta", vertex_functor_obj, vertex_functor_mor, True, reflect_vertices),
    "M-E": _Adjunction("M-E", "M", "theta", edge_functor_obj, edge_functor_mor, True, reflect_edges),
    "V-K": _Adjunction("V-K", "K", "zeta", vertex_functor_obj, vertex_functor_mor, False, coreflect_vertices),
    "E-B": _Adjunction("E-B", "B", "epsilon", edge_functor_obj, edge_functor_mor, False, coreflect_edges),
}

FACTORIZATIONS: dict[str, str] = {
    "reflect-v": "I-V",
    "reflect-e": "M-E",
    "coreflect-v": "V-K",
    "coreflect-e": "E-B",
}


def _side(which: str) -> _Adjunction:
    try:
        return _SIDES[which]
    except KeyError:
        raise ValueError(f"unknown adjunction: {which!r} (expected one of {', '.join(ADJUNCTIONS)})") from None


def factorize(which: AdjunctionKind, g: Quiver, phi: SetFunction) -> FactorizationResult:
    return _side(which).factorize(g, phi)


def certify_factorization(
    which: AdjunctionKind,
    g: Quiver,
    phi: SetFunction,
    caps: SizeCaps | None = None,
) -> FactorizationResult:
    """Factorize, then count the hom-set members satisfying the triangle.

    Raises LawViolation unless exactly one does and it is the constructed one."""
    side = _side(which)
    result = side.factorize(g, phi)
    s = side.set_of(phi)
    if not result.identity_witness:
        raise LawViolation("existence", f"{which} S={s} G={g}", side.triangle(s, result.mediating), phi)
    hits = [m for m in side.hom_set(s, g, caps) if side.triangle(s, m) == phi]
    if len(hits) != 1:
        raise LawViolation("unique-factorization", f"{which} S={s} G={g} phi={phi}", len(hits), 1)
    if hits[0] != result.mediating:
        raise LawViolation("unique-factorization", f"{which} S={s} G={g} phi={phi}", hits[0], result.mediating)
    return replace(result, uniqueness_witness=len(hits))


# --- derived structure maps ------------------------------------------------


def counit_empty(g: Quiver) -> QuiverMorphism:
    """I_{V(G)} -> G."""
    return _SIDES["I-V"].derived(g)


def counit_matching(g: Quiver) -> QuiverMorphism:
    """M_{E(G)} -> G."""
    return _SIDES["M-E"].derived(g)


def unit_complete(g: Quiver) -> QuiverMorphism:
    """G -> K_{V(G)}."""
    return _SIDES["V-K"].derived(g)


def unit_bouquet(g: Quiver) -> QuiverMorphism:
    """G -> B_{E(G)}."""
    return _SIDES["E-B"].derived(g)


# --- law reports -------------------------------------------------------------


@dataclass(frozen=True)
class LawCheck:
    law: str
    instance: str
    passed: bool
    checked: int
    detail: str = ""


@dataclass
class LawReport:
    subject: str
    checks: list[LawCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[LawCheck]:
        return [c for c in self.checks if not c.passed]

    def totals(self) -> dict[str, tuple[int, int]]:
        """law -> (instances, comparisons), in first-seen order."""
        out: dict[str, tuple[int, int]] = {}
        for c in self.checks:
            n, k = out.get(c.law, (0, 0))
            out[c.law] = (n + 1, k + c.checked)
        return out

    def raise_for_failures(self) -> None:
        for c in self.checks:
            if not c.passed:
                raise LawViolation(c.law, f"{c.instance} ({c.detail})" if c.detail else c.instance)


class _Tally:
    def __init__(self, instance: str) -> None:
        self.instance = instance
        self._counts: dict[str, int] = {}
        self._failures: dict[str, str] = {}

    def check(self, law: str, lhs: object, rhs: object, witness: str = "") -> None:
        self._counts[law] = self._counts.get(law, 0) + 1
        if lhs != rhs and law not in self._failures:
            self._failures[law] = f"{witness}: {lhs} != {rhs}" if witness else f"{lhs} != {rhs}"

    def results(self) -> list[LawCheck]:
        return [
            LawCheck(law, self.instance, law not in self._failures, n, self._failures.get(law, ""))
            for law, n in self._counts.items()
        ]


@dataclass
class _Context:
    sets: list[FiniteSet]
    quivers: list[Quiver]
    caps: SizeCaps | None
    functions: dict[tuple[int, int], list[SetFunction]]
    homs: dict[tuple[int, int], list[QuiverMorphism]]


def _build_context(sets: Sequence[FiniteSet], quivers: Sequence[Quiver], caps: SizeCaps | None) -> _Context:
    sets = list(sets)
    quivers = list(quivers)
    functions = {
        (i, j): list(enumerate_functions(a, b)) for i, a in enumerate(sets) for j, b in enumerate(sets)
    }
    homs = {(i, j): enumerate_homs(a, b, caps) for i, a in enumerate(quivers) for j, b in enumerate(quivers)}
    return _Context(sets, quivers, caps, functions, homs)


def _set_laws(side: _Adjunction, ctx: _Context, i: int) -> list[LawCheck]:
    s = ctx.sets[i]
    c = construct(side.construction, s)
    t = _Tally(f"S={s}")
    u = unit_or_counit(side.structure_map, s)
    cid = identity_morphism(c)

    t.check("object-retraction", side.functor_obj(c), s)
    t.check("structure-map-is-identity", u, identity_fn(s))
    t.check("functor-identity", functor_on_morphism(side.construction, identity_fn(s)), cid)

    # Triangle on the construction side: counit/unit of C_S against C(u_S).
    d = side.derived(c)
    cu = functor_on_morphism(side.construction, u)
    if side.left:
        t.check("triangle-construction", compose_morphism(d, cu), cid)
    else:
        t.check("triangle-construction", compose_morphism(cu, d), cid)

    for j, target in enumerate(ctx.sets):
        for f in ctx.functions[(i, j)]:
            cf = functor_on_morphism(side.construction, f)
            t.check("morphism-retraction", side.functor_mor(cf), f, str(f))
            ut = unit_or_counit(side.structure_map, target)
            if side.left:
                t.check("unit-naturality", compose_fn(side.functor_mor(cf), u), compose_fn(ut, f), str(f))
            else:
                t.check("counit-naturality", compose_fn(ut, side.functor_mor(cf)), compose_fn(f, u), str(f))
            for k in range(len(ctx.sets)):
                for g in ctx.functions[(j, k)]:
                    lhs = functor_on_morphism(side.construction, compose_fn(g, f))
                    rhs = compose_morphism(functor_on_morphism(side.construction, g), cf)
                    t.check("functor-composition", lhs, rhs, f"{g} . {f}")
    return t.results()


def _quiver_laws(side: _Adjunction, ctx: _Context, a: int) -> list[LawCheck]:
    g = ctx.quivers[a]
    t = _Tally(f"G={g.name or g}")
    fg = side.functor_obj(g)
    d = side.derived(g)
    ufg = unit_or_counit(side.structure_map, fg)
    if side.left:
        t.check("triangle-functor", compose_fn(side.functor_mor(d), ufg), identity_fn(fg))
    else:
        t.check("triangle-functor", compose_fn(ufg, side.functor_mor(d)), identity_fn(fg))

    # Naturality of the derived counit (left) / unit (right) along every psi: G -> G'.
    for b, h in enumerate(ctx.quivers):
        dh = side.derived(h)
        for psi in ctx.homs[(a, b)]:
            cpsi = functor_on_morphism(side.construction, side.functor_mor(psi))
            if side.left:
                t.check("derived-naturality", compose_morphism(psi, d), compose_morphism(dh, cpsi), str(psi))
            else:
                t.check("derived-naturality", compose_morphism(cpsi, d), compose_morphism(dh, psi), str(psi))
    return t.results()


def _pair_laws(side: _Adjunction, ctx: _Context, i: int, a: int) -> list[LawCheck]:
    s = ctx.sets[i]
    g = ctx.quivers[a]
    t = _Tally(f"S={s} G={g.name or g}")
    homs = side.hom_set(s, g, ctx.caps)
    phis = side.set_side(s, g)

    t.check("hom-cardinality", len(homs), side.set_side_count(s, g))

    mediators: list[QuiverMorphism] = []
    for phi in phis:
        result = side.factorize(g, phi)
        mediators.append(result.mediating)
        t.check("existence", result.identity_witness, True, str(phi))
        hits = [m for m in homs if side.triangle(s, m) == phi]
        t.check("unique-factorization", len(hits), 1, str(phi))
        if len(hits) == 1:
            t.check("unique-factorization", hits[0], result.mediating, str(phi))

    t.check("hom-bijection", len(set(mediators)), len(phis), "injective")
    t.check("hom-bijection", set(mediators), set(homs), "surjective")

    # Naturality of phi |-> phi_hat in the set argument.
    for j, other in enumerate(ctx.sets):
        if side.left:
            for f in ctx.functions[(j, i)]:
                cf = functor_on_morphism(side.construction, f)
                for phi in phis:
                    lhs = side.factorize(g, compose_fn(phi, f)).mediating
                    rhs = compose_morphism(side.factorize(g, phi).mediating, cf)
                    t.check("bijection-naturality-set", lhs, rhs, f"{phi} . {f}")
        else:
            for f in ctx.functions[(i, j)]:
                cf = functor_on_morphism(side.construction, f)
                for phi in phis:
                    lhs = side.factorize(g, compose_fn(f, phi)).mediating
                    rhs = compose_morphism(cf, side.factorize(g, phi).mediating)
                    t.check("bijection-naturality-set", lhs, rhs, f"{f} . {phi}")

    # ... and in the quiver argument.
    for b, h in enumerate(ctx.quivers):
        if side.left:
            for psi in ctx.homs[(a, b)]:
                fpsi = side.functor_mor(psi)
                for phi in phis:
                    lhs = side.factorize(h, compose_fn(fpsi, phi)).mediating
                    rhs = compose_morphism(psi, side.factorize(g, phi).mediating)
                    t.check("bijection-naturality-quiver", lhs, rhs, f"{psi} . {phi}")
        else:
            for psi in ctx.homs[(b, a)]:
                fpsi = side.functor_mor(psi)
                for phi in phis:
                    lhs = side.factorize(h, compose_fn(phi, fpsi)).mediating
                    rhs = compose_morphism(side.factorize(g, phi).mediating, psi)
                    t.check("bijection-naturality-quiver", lhs, rhs, f"{phi} . {psi}")
    return t.results()


def check_adjunction_laws(
    which: AdjunctionKind,
    set_catalogue: Sequence[FiniteSet],
    quiver_catalogue: Sequence[Quiver],
    caps: SizeCaps | None = None,
    jobs: int = 1,
    *,
    context: _Context | None = None,
) -> LawReport:
    """Certify one adjunction over every (S, G) in the catalogues.

    Records each law per instance instead of stopping at the first failure;
    use LawReport.raise_for_failures() for the exception form."""
    side = _side(which)
    ctx = context or _build_context(set_catalogue, quiver_catalogue, caps)
    tasks: list[Callable[[], list[LawCheck]]] = []
    tasks += [lambda i=i: _set_laws(side, ctx, i) for i in range(len(ctx.sets))]
    tasks += [lambda a=a: _quiver_laws(side, ctx, a) for a in range(len(ctx.quivers))]
    tasks += [
        lambda i=i, a=a: _pair_laws(side, ctx, i, a)
        for i in range(len(ctx.sets))
        for a in range(len(ctx.quivers))
    ]
    log.debug("%s: %d instances, %d worker(s)", which, len(tasks), jobs)
    report = LawReport(which)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            # map() keeps task order, so the report is the same for any worker count.
            for checks in pool.map(lambda task: task(), tasks):
                report.checks.extend(checks)
    else:
        for task in tasks:
            report.checks.extend(task())
    log.info("%s: %d checks, %d failed", which, len(report.checks), len(report.failures()))
    return report


def check_all_adjunctions(
    set_catalogue: Sequence[FiniteSet],
    quiver_catalogue: Sequence[Quiver],
    caps: SizeCaps | None = None,
    jobs: int = 1,
    which: Sequence[str] = ADJUNCTIONS,
) -> list[LawReport]:
    ctx = _build_context(set_catalogue, quiver_catalogue, caps)
    return [check_adjunction_laws(w, ctx.sets, ctx.quivers, caps, jobs, context=ctx) for w in which]  # type: ignore[arg-type]


def _spread(items: Sequence[Quiver], k: int) -> list[Quiver]:
    if k <= 0 or not items:
        return []
    if k >= len(items):
        return list(items)
    step = (len(items) - 1) / (k - 1) if k > 1 else 0
    picked = sorted({round(i * step) for i in range(k)})
    return [items[i] for i in picked]


def check_category_laws(
    quiver_catalogue: Sequence[Quiver],
    caps: SizeCaps | None = None,
    sample: int = 5,
    per_hom: int = 3,
) -> LawReport:
    """Unit and associativity laws of Quiv, plus functor laws of V and E.

    Identities are checked against every morphism between catalogue quivers;
    associativity uses `sample` evenly spread quivers and at most `per_hom`
    morphisms from each hom-set."""
    quivers = list(quiver_catalogue)
    report = LawReport("Quiv")
    for g in quivers:
        t = _Tally(f"G={g.name or g}")
        gid = identity_morphism(g)
        t.check("V-identity", vertex_functor_mor(gid), identity_fn(g.vertices))
        t.check("E-identity", edge_functor_mor(gid), identity_fn(g.edges))
        for h in quivers:
            hid = identity_morphism(h)
            for phi in enumerate_homs(g, h, caps):
                t.check("left-unit", compose_morphism(hid, phi), phi, str(phi))
                t.check("right-unit", compose_morphism(phi, gid), phi, str(phi))
        report.checks.extend(t.results())

    picked = _spread(quivers, sample)
    homs = {(a, b): enumerate_homs(x, y, caps)[:per_hom] for a, x in enumerate(picked) for b, y in enumerate(picked)}
    n = len(picked)
    t = _Tally(f"sample of {n} quivers")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for phi in homs[(a, b)]:
                    for psi in homs[(b, c)]:
                        psi_phi = compose_morphism(psi, phi)
                        t.check("V-composition", vertex_functor_mor(psi_phi),
                                compose_fn(vertex_functor_mor(psi), vertex_functor_mor(phi)), str(psi_phi))
                        t.check("E-composition", edge_functor_mor(psi_phi),
                                compose_fn(edge_functor_mor(psi), edge_functor_mor(phi)), str(psi_phi))
                        for d in range(n):
                            for chi in homs[(c, d)]:
                                lhs = compose_morphism(chi, psi_phi)
                                rhs = compose_morphism(compose_morphism(chi, psi), phi)
                                t.check("associativity", lhs, rhs, f"{chi} . {psi} . {phi}")
    report.checks.extend(t.results())
    return report
