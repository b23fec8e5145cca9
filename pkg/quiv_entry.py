from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import quiv_adjunction as adj
import quiv_io as qio
from quiv_constructions import CONSTRUCTION_NAMES, construct
from quiv_core import validate_morphism
from quiv_errors import (
    CapExceeded,
    ConstraintError,
    DomainMismatch,
    LawViolation,
    ParseError,
    SquareViolation,
)
from quiv_oracle import enumerate_homs, quiver_catalogue, set_catalogue
from quiv_sets import FiniteSet
from quiv_settings import Settings, configure_logging, load_settings

log = logging.getLogger("quiv.entry")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_CONSTRUCT_KINDS = {name: kind for kind, name in CONSTRUCTION_NAMES.items()}


def _parse_args(argv: list[str]) -> argparse.Namespace:
    p = argparse.ArgumentParser(
        prog="quiv",
        description="Véges quiverek (irányított multigráfok): konstrukciók, hom-halmazok és a "
        "négy Quiv/Set adjunkció ellenőrzése kimerítő felsorolással.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        allow_abbrev=False,
    )
    p.add_argument("--debug", action="store_true", help="Részletes naplózás (DEBUG) a stderr-re")
    p.add_argument("--preset", default="", help="Beállítás fájl (JSON); üres = QUIV_PRESET vagy a felhasználói adatmappa")
    p.add_argument("--max-total-pairs", type=int, default=None, help="Legfeljebb ennyi (csúcs-, él-) leképezéspárt vizsgál")

    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="Morfizmus fájl ellenőrzése (kommutáló négyzetek)")
    sp.add_argument("morphism_file")

    sp = sub.add_parser("construct", help="I/M/K/B konstrukció kiírása quiver dokumentumként")
    sp.add_argument("kind", choices=tuple(_CONSTRUCT_KINDS))
    sp.add_argument("elements", nargs="*", help="A halmaz elemei")
    sp.add_argument("--name", default="", help="A quiver neve (üres = I/M/K/B)")

    sp = sub.add_parser("hom", help="Hom-halmaz felsorolása vagy megszámolása")
    sp.add_argument("dom_file")
    sp.add_argument("cod_file")
    sp.add_argument("--count", action="store_true", help="Csak a darabszámot írja ki")

    sp = sub.add_parser("factorize", help="Univerzális faktorizáció kiszámítása és egyértelműségének ellenőrzése")
    sp.add_argument("kind", choices=tuple(adj.FACTORIZATIONS))
    sp.add_argument("quiver_file")
    sp.add_argument("map_file")
    sp.add_argument("--no-certify", action="store_true", help="Ne ellenőrizze az egyértelműséget felsorolással")

    sp = sub.add_parser("laws", help="Kategória- és adjunkció-törvények ellenőrzése generált katalógusokon")
    sp.add_argument("--max-set", type=int, default=None, help="Halmazkatalógus maximális mérete (üres = beállítás)")
    sp.add_argument("--max-v", type=int, default=None, help="Csúcsok maximális száma a katalógusban")
    sp.add_argument("--max-e", type=int, default=None, help="Élek maximális száma a katalógusban")
    sp.add_argument(
        "--adjunction",
        action="append",
        choices=adj.ADJUNCTIONS,
        default=None,
        help="Csak a megadott adjunkció(k); ismételhető",
    )
    sp.add_argument("--jobs", type=int, default=None, help="Párhuzamos szálak száma")
    sp.add_argument("--skip-category", action="store_true", help="Kategóriatörvények kihagyása")

    sp = sub.add_parser("export-dot", help="Quiver exportálása DOT formátumba")
    sp.add_argument("quiver_file")

    sp = sub.add_parser("catalogue", help="A katalógus összes quiverének kiírása")
    sp.add_argument("--max-v", type=int, default=None)
    sp.add_argument("--max-e", type=int, default=None)

    sp = sub.add_parser("sample", help="Mintapéldák kiírása (G, H, phi)")
    sp.add_argument("name", choices=tuple(qio.SAMPLES))

    return p.parse_args(argv)


def _err(msg: object) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _cmd_validate(args: argparse.Namespace, settings: Settings) -> int:
    p = Path(args.morphism_file)
    doc = qio.parse_morphism_document(qio.read_document(p))
    parts = qio.morphism_parts(doc, lambda ref: qio.load_quiver(p.parent / ref))
    try:
        m = validate_morphism(*parts)
    except SquareViolation as e:
        print(f"invalid: {e}")
        return EXIT_FAILED
    print(f"valid: {m.dom.name} -> {m.cod.name}")
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace, settings: Settings) -> int:
    kind = _CONSTRUCT_KINDS[args.kind]
    q = construct(kind, FiniteSet(tuple(args.elements)))  # type: ignore[arg-type]
    if args.name:
        q = q.with_name(args.name)
    sys.stdout.write(qio.serialize_quiver(q))
    return EXIT_OK


def _cmd_hom(args: argparse.Namespace, settings: Settings) -> int:
    g = qio.load_quiver(args.dom_file)
    h = qio.load_quiver(args.cod_file)
    homs = enumerate_homs(g, h, settings.size_caps())
    if args.count:
        print(len(homs))
        return EXIT_OK
    for n, m in enumerate(homs, 1):
        sys.stdout.write(f"# hom {n}\n")
        sys.stdout.write(qio.format_morphism(m))
    return EXIT_OK


def _cmd_factorize(args: argparse.Namespace, settings: Settings) -> int:
    which = adj.FACTORIZATIONS[args.kind]
    g = qio.load_quiver(args.quiver_file)
    doc = qio.parse_function_document(qio.read_document(args.map_file))
    carrier = g.vertices if args.kind.endswith("-v") else g.edges
    if args.kind.startswith("reflect"):
        phi = doc.to_function(codomain=carrier)
    else:
        phi = doc.to_function(domain=carrier)
    if args.no_certify:
        result = adj.factorize(which, g, phi)  # type: ignore[arg-type]
    else:
        result = adj.certify_factorization(which, g, phi, settings.size_caps())  # type: ignore[arg-type]
    sys.stdout.write(qio.format_factorization(result))
    return EXIT_OK


def _cmd_laws(args: argparse.Namespace, settings: Settings) -> int:
    max_set = settings.max_set if args.max_set is None else args.max_set
    max_v = settings.max_v if args.max_v is None else args.max_v
    max_e = settings.max_e if args.max_e is None else args.max_e
    jobs = settings.jobs if args.jobs is None else max(1, args.jobs)
    caps = settings.size_caps()
    sets = set_catalogue(max_set)
    quivers = quiver_catalogue(max_v, max_e)
    log.info("catalogues: %d sets, %d quivers", len(sets), len(quivers))

    reports = []
    if not args.skip_category:
        reports.append(adj.check_category_laws(quivers, caps))
    reports += adj.check_all_adjunctions(sets, quivers, caps, jobs, which=args.adjunction or adj.ADJUNCTIONS)
    for report in reports:
        sys.stdout.write(qio.format_report(report))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def _cmd_export_dot(args: argparse.Namespace, settings: Settings) -> int:
    sys.stdout.write(qio.export_dot(qio.load_quiver(args.quiver_file)))
    return EXIT_OK


def _cmd_catalogue(args: argparse.Namespace, settings: Settings) -> int:
    max_v = settings.max_v if args.max_v is None else args.max_v
    max_e = settings.max_e if args.max_e is None else args.max_e
    sys.stdout.write("\n".join(qio.serialize_quiver(q) for q in quiver_catalogue(max_v, max_e)))
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace, settings: Settings) -> int:
    sys.stdout.write(qio.SAMPLES[args.name])
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "construct": _cmd_construct,
    "hom": _cmd_hom,
    "factorize": _cmd_factorize,
    "laws": _cmd_laws,
    "export-dot": _cmd_export_dot,
    "catalogue": _cmd_catalogue,
    "sample": _cmd_sample,
}


def main(argv: list[str]) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors and 0 on --help.
        return int(e.code or 0)

    settings = load_settings(args.preset or None)
    if args.max_total_pairs is not None:
        settings.max_total_pairs = max(1, int(args.max_total_pairs))
    configure_logging("DEBUG" if args.debug else settings.log_level)

    try:
        return _COMMANDS[args.command](args, settings)
    except CapExceeded as e:
        _err(e)
        return EXIT_CAP
    except (SquareViolation, LawViolation) as e:
        _err(e)
        return EXIT_FAILED
    except (ParseError, ConstraintError, DomainMismatch, OSError) as e:
        _err(e)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
