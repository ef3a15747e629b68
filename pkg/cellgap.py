"""Command-line front end: cell structure, dimensions, gaps and protocols of diagram monoids"""
import argparse
import json
import logging
import os
import sys
from datetime import datetime
from typing import Any, List, Optional

from modules.cells import cell_sizes, green_cells
from modules.diagram import Diagram, FamilyId
from modules.errors import AmbiguityError, ProtocolError, ResourceGuardError, UnsupportedError, ValidationError
from modules.extensions import ExtCase, additive_hom_dim, ext_dim, roundedness
from modules.families import (FamilyInstance, cardinality, cyclic_monoid, enumerate_family, family_monoid,
                              family_truncation, transformation_monoid, verify_cardinality)
from modules.gaps import GapReport, cyclic_report, family_gap, gap_bounds, gap_exact
from modules.linalg import FieldSpec, rank
from modules.logger import setup_logging
from modules.monoid import FiniteMonoid
from modules.protocols import (DiagramPlatform, commuting_generator_sets, dh_suitability, run_stickel, run_su)
from modules.representations import diagram_gram_matrix
from modules.selftest import run_selftest
from modules.settings import Settings
from modules.tables import FORMATS, dims_table, render, render_records, ssdims_table

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GUARD = 3
EXIT_SELFTEST = 4

FIXTURES = ('transformation', 'cyclic')

logger = logging.getLogger('cellgap')


def get_current_version() -> str:
    """Read current version from version.txt."""
    try:
        with open(os.path.join(os.path.dirname(os.path.abspath(__file__)), "version.txt"), "r") as f:
            return f.read().strip()
    except FileNotFoundError:
        return "0.0.0"


def _family(name: str) -> FamilyId:
    return FamilyId.parse(name)


def _fixture(name: Optional[str]) -> Optional[str]:
    """The fixture tag for a --family value, None for diagram families."""
    if name is None:
        return None
    key = name.strip().lower()
    return key if key in FIXTURES else None


def _instance(args) -> FamilyInstance:
    family = _family(args.family)
    if args.n is None:
        raise ValidationError(f"--family {args.family} needs --n")
    return FamilyInstance(family, args.n)


def _fixture_monoid(kind: str, args) -> FiniteMonoid:
    if kind == 'transformation':
        if args.n is None:
            raise ValidationError("--family transformation needs --n")
        return transformation_monoid(args.n)
    # --n alone means the cyclic group of order n
    period = args.period if getattr(args, 'period', None) is not None else args.n
    if period is None:
        raise ValidationError("--family cyclic needs --period or --n")
    return cyclic_monoid(getattr(args, 'index', None) or 0, period)


def _monoid(args) -> FiniteMonoid:
    """The monoid named by --family/--n, truncated when asked."""
    low = getattr(args, 'truncate_low', None)
    high = getattr(args, 'truncate_high', None)
    kind = _fixture(args.family)
    if kind is not None:
        if low is not None or high is not None:
            raise ValidationError("Truncation flags apply to diagram families only")
        return _fixture_monoid(kind, args)
    fi = _instance(args)
    if low is None and high is None:
        return family_monoid(fi)
    return family_truncation(fi, low, high).result


def _emit(text: str, args) -> None:
    if args.timestamps:
        sys.stdout.write(f"# generated {datetime.now().isoformat(timespec='seconds')}\n")
    sys.stdout.write(text)


def _report_text(report: GapReport) -> str:
    lines = [f"{report.description} over {report.field}" + ("" if report.size is None else f" (|M| = {report.size})")]
    for name in ('gap', 'ssgap', 'faith'):
        e = getattr(report, name)
        lines.append(f"  {name:6} {e.exact_text():>24}  ~{e.decimal_text():>14}  [{e.status.value}, {e.source}]")
    for name, e in report.extras.items():
        lines.append(f"  {name:6} {e.exact_text():>24}  ~{e.decimal_text():>14}  [{e.status.value}, {e.source}]")
    return "\n".join(lines) + "\n"


def _emit_report(report: GapReport, args) -> None:
    if args.format == 'json':
        _emit(json.dumps({'schema_version': 1, **report.to_dict()}, indent=2, sort_keys=True) + "\n", args)
    elif args.format == 'csv':
        rows = []
        for name in ('gap', 'ssgap', 'faith', *report.extras):
            e = report.extras.get(name) or getattr(report, name)
            rows.append({'monoid': report.description, 'field': str(report.field), 'quantity': name,
                         'value': e.exact_text(), 'decimal': e.decimal_text(),
                         'status': e.status.value, 'source': e.source})
        _emit(render_records(rows, 'csv'), args)
    else:
        _emit(_report_text(report), args)


# --- verbs -----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    fi = _instance(args)
    if args.count:
        ok = verify_cardinality(fi)
        record = {'family': fi.family.value, 'n': fi.n, 'closed_form': cardinality(fi), 'matches': ok}
        _emit(render_records([record], args.format), args)
        return EXIT_OK if ok else EXIT_VALIDATION
    rows = [{'index': i, 'diagram': d.serialize(), 'width': d.width} for i, d in enumerate(enumerate_family(fi))]
    _emit(render_records(rows, args.format, ['index', 'diagram', 'width']), args)
    return EXIT_OK


def cmd_cells(args) -> int:
    monoid = _monoid(args)
    cells = green_cells(monoid)
    by_j = {entry.j: entry for entry in cell_sizes(cells)}
    rows = []
    for j in cells.ordered_js():
        entry = by_j[j]
        element = monoid.elements[cells.j_members(j)[0]] if monoid.elements else None
        rows.append({'j': j, 'width': element.width if isinstance(element, Diagram) else '',
                     'size': entry.size, 'l_classes': entry.l_count, 'r_classes': entry.r_count,
                     'h_size': entry.h_size, 'idempotent': cells.is_idempotent_j(j),
                     'representative': cells.describe(j)})
    _emit(render_records(rows, args.format), args)
    return EXIT_OK


def cmd_dims(args) -> int:
    table = dims_table(_family(args.family), args.n, args.char, args.threads)
    _emit(render(table, args.format), args)
    return EXIT_OK


def cmd_ssdims(args) -> int:
    table = ssdims_table(_family(args.family), args.n, args.char, args.threads)
    _emit(render(table, args.format), args)
    return EXIT_OK


def cmd_gram(args) -> int:
    field = FieldSpec(args.char)
    matrix = diagram_gram_matrix(_family(args.family), args.n, args.k, field)
    r = rank(matrix)
    if args.format == 'json':
        payload = {'schema_version': 1, 'family': args.family, 'n': args.n, 'k': args.k, 'field': str(field),
                   'rank': r, 'matrix': matrix.dump()}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args)
    else:
        _emit(f"# rank over {field}: {r}\n" + matrix.dump(), args)
    return EXIT_OK


def cmd_gap(args) -> int:
    field = FieldSpec(args.char)
    if args.cyclic is not None:
        report = cyclic_report(args.cyclic, args.q)
    elif _fixture(args.family) is not None:
        report = gap_exact(_monoid(args), field)
    else:
        fi = _instance(args)
        report = family_gap(fi, field, args.truncate_low, args.truncate_high)
    _emit_report(report, args)
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = gap_bounds(_family(args.family), args.n, args.k, FieldSpec(args.char))
    _emit_report(report, args)
    return EXIT_OK


def cmd_rounded(args) -> int:
    r = roundedness(_monoid(args))
    record = {'left': r.left, 'right': r.right, 'null': r.null, 'well': r.well,
              'left_classes': r.left_classes, 'right_classes': r.right_classes}
    _emit(render_records([record], args.format), args)
    return EXIT_OK


def cmd_h1(args) -> int:
    monoid = _monoid(args)
    field = FieldSpec(args.char)
    record = {'monoid': monoid.name, 'field': str(field), 'dim': additive_hom_dim(monoid, field)}
    _emit(render_records([record], args.format), args)
    return EXIT_OK


def cmd_ext(args) -> int:
    monoid = _monoid(args)
    field = FieldSpec(args.char)
    cases = list(ExtCase) if args.case == 'all' else [ExtCase(args.case)]
    cells = green_cells(monoid)
    rows = [{'monoid': monoid.name, 'field': str(field), 'case': c.value, 'dim': ext_dim(monoid, field, c, cells)}
            for c in cases]
    _emit(render_records(rows, args.format), args)
    return EXIT_OK


def cmd_period(args) -> int:
    monoid = _monoid(args)
    cells = green_cells(monoid)
    if args.element is not None:
        if ';' in args.element:
            targets = [monoid.index_of(Diagram.parse(args.element))]
        elif args.element in monoid.labels:
            targets = [monoid.labels.index(args.element)]
        else:
            raise ValidationError(f"{args.element} is not an element of {monoid.name}")
    else:
        targets = range(monoid.size)
    rows = [dh_suitability(monoid, a, cells).to_dict() for a in targets]
    _emit(render_records(rows, args.format), args)
    return EXIT_OK if all(r['divides'] for r in rows) else EXIT_VALIDATION


def cmd_truncate(args) -> int:
    fi = _instance(args)
    t = family_truncation(fi, args.truncate_low, args.truncate_high)
    if args.dump:
        _emit(t.result.dump(), args)
        return EXIT_OK
    record = {'monoid': t.result.name, 'base_size': t.base.size, 'size': t.result.size,
              'zero': '' if t.zero is None else t.result.labels[t.zero],
              'unit': '' if t.adjoined_unit is None else t.result.labels[t.adjoined_unit]}
    _emit(render_records([record], args.format), args)
    return EXIT_OK


def cmd_protocol(args) -> int:
    fi = _instance(args)
    platform = DiagramPlatform(fi, args.truncate_low)
    transcripts = []
    for trial in range(args.trials):
        seed = args.seed + trial
        if args.kind == 'su':
            a, b = commuting_generator_sets(fi, args.a_count, args.b_count)
            transcripts.append(run_su(platform, a, b, seed=seed, word_length=args.word_length))
        else:
            transcripts.append(run_stickel(platform, seed=seed, max_exponent=args.max_exponent,
                                           word_length=args.word_length))
    if args.format == 'json':
        payload: Any = transcripts[0].to_dict() if len(transcripts) == 1 else \
            {'schema_version': 1, 'transcripts': [t.to_dict() for t in transcripts]}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args)
    else:
        rows = [{'seed': t.seed, 'protocol': t.protocol, 'monoid': t.platform, 'equal': t.equal,
                 'secret': t.secrets[0]} for t in transcripts]
        _emit(render_records(rows, args.format), args)
    return EXIT_OK if all(t.equal for t in transcripts) else EXIT_VALIDATION


def cmd_selftest(args) -> int:
    report = run_selftest(quick=args.quick, only=args.only)
    if args.format == 'json':
        rows = [{'name': r.name, 'passed': r.passed, 'seconds': round(r.seconds, 3), 'message': r.message}
                for r in report.results]
        _emit(render_records(rows, 'json'), args)
    else:
        _emit(report.to_text(), args)
    return EXIT_OK if report.passed else EXIT_SELFTEST


# --- parser ----------------------------------------------------------------

def _add_output_args(p: argparse.ArgumentParser, settings: Optional[Settings]) -> None:
    """Output options. With settings None every default is argparse.SUPPRESS."""
    suppress = settings is None
    p.add_argument('--format', choices=FORMATS, default=argparse.SUPPRESS if suppress else 'text')
    p.add_argument('--threads', type=int, default=argparse.SUPPRESS if suppress else settings.get('threads'))
    p.add_argument('--timestamps', action='store_true', default=argparse.SUPPRESS if suppress else False,
                   help="prefix output with a generation time")


def _add_monoid_args(p: argparse.ArgumentParser, truncation: bool = True, fixtures: bool = True) -> None:
    p.add_argument('--family', required=True, help="tl, motzkin, brauer, prook, rook, rookbrauer, "
                                                    "ppartition, partition, sym, transformation or cyclic")
    p.add_argument('--n', type=int, default=None)
    if truncation:
        p.add_argument('--truncate-low', type=int, default=None,
                       help="keep the cells with at most this many through strands, adjoin a unit")
        p.add_argument('--truncate-high', type=int, default=None,
                       help="collapse the cells with fewer through strands to zero")
    if fixtures:
        _add_cyclic_args(p)


def _add_cyclic_args(p: argparse.ArgumentParser) -> None:
    p.add_argument('--index', type=int, default=None, help="index of the cyclic fixture (default 0)")
    p.add_argument('--period', type=int, default=None, help="period of the cyclic fixture (default --n)")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='cellgap', description=__doc__)
    parser.add_argument('--version', action='version', version=f"%(prog)s {get_current_version()}")
    _add_output_args(parser, settings)
    output = argparse.ArgumentParser(add_help=False)
    _add_output_args(output, None)
    sub = parser.add_subparsers(dest='verb', required=True)

    def verb(name: str, **kwargs) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[output], **kwargs)

    p = verb('enumerate', help="list the diagrams of a family")
    _add_monoid_args(p, truncation=False, fixtures=False)
    p.add_argument('--count', action='store_true', help="only compare the count with the closed form")
    p.set_defaults(func=cmd_enumerate)

    p = verb('cells', help="Green's cells of a (truncated) monoid")
    _add_monoid_args(p)
    p.set_defaults(func=cmd_cells)

    for name, func in (('dims', cmd_dims), ('ssdims', cmd_ssdims)):
        p = verb(name, help=f"{name} table up to n")
        p.add_argument('--family', required=True)
        p.add_argument('--n', type=int, required=True)
        p.add_argument('--char', type=int, default=0)
        p.set_defaults(func=func)

    p = verb('gram', help="Gram matrix of a cell and its rank")
    p.add_argument('--family', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--char', type=int, default=0)
    p.set_defaults(func=cmd_gram)

    p = verb('gap', help="representation gap of a family, truncation, fixture or cyclic group")
    p.add_argument('--family', default=None)
    p.add_argument('--n', type=int, default=None)
    p.add_argument('--truncate-low', type=int, default=None)
    p.add_argument('--truncate-high', type=int, default=None)
    _add_cyclic_args(p)
    p.add_argument('--char', type=int, default=0)
    p.add_argument('--cyclic', type=int, default=None, help="order of a cyclic group instead of a family")
    p.add_argument('--q', type=int, default=None, help="field size for --cyclic; omitted means Q")
    p.set_defaults(func=cmd_gap)

    p = verb('bounds', help="closed-form lower bounds")
    p.add_argument('--family', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--k', type=int, default=None)
    p.add_argument('--char', type=int, default=0)
    p.set_defaults(func=cmd_bounds)

    p = verb('rounded', help="left, right and null roundedness")
    _add_monoid_args(p)
    p.set_defaults(func=cmd_rounded)

    for name, func, helptext in (('h1', cmd_h1, "dimension of the additive characters"),
                                 ('ext', cmd_ext, "Ext^1 between the trivial representations")):
        p = verb(name, help=helptext)
        _add_monoid_args(p)
        p.add_argument('--char', type=int, default=0)
        if name == 'ext':
            p.add_argument('--case', choices=['all'] + [c.value for c in ExtCase], default='all')
        p.set_defaults(func=func)

    p = verb('period', help="index, period and H-cell of elements")
    _add_monoid_args(p)
    p.add_argument('--element', default=None, help="serialized diagram or element label; default all")
    p.set_defaults(func=cmd_period)

    p = verb('truncate', help="build a cell subquotient")
    _add_monoid_args(p, fixtures=False)
    p.add_argument('--dump', action='store_true', help="print the multiplication table")
    p.set_defaults(func=cmd_truncate)

    p = verb('protocol', help="run a key exchange")
    p.add_argument('kind', choices=['su', 'stickel'])
    p.add_argument('--family', required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--truncate-low', type=int, default=None)
    p.add_argument('--seed', type=int, default=settings.get('protocol_default_seed'))
    p.add_argument('--trials', type=int, default=1)
    p.add_argument('--word-length', type=int, default=settings.get('protocol_word_length'))
    p.add_argument('--a-count', type=int, default=2, help="generator positions for A (su)")
    p.add_argument('--b-count', type=int, default=3, help="generator positions for B (su)")
    p.add_argument('--max-exponent', type=int, default=256, help="largest secret exponent (stickel)")
    p.set_defaults(func=cmd_protocol)

    p = verb('selftest', help="run the acceptance checks")
    p.add_argument('--quick', action='store_true')
    p.add_argument('--only', nargs='*', default=None)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    settings = Settings()
    setup_logging(settings)
    args = build_parser(settings).parse_args(argv)
    if args.verb == 'gap' and args.cyclic is None and args.family is None:
        logger.error("gap needs --family, or --cyclic")
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except ResourceGuardError as e:
        logger.error(str(e))
        return EXIT_GUARD
    except (ValidationError, UnsupportedError, AmbiguityError, ProtocolError, KeyError) as e:
        logger.error(str(e))
        return EXIT_VALIDATION


if __name__ == '__main__':
    sys.exit(main())
