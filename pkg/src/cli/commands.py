"""
grpmat command line

Verbs: build, solve, verify, iso, census, cohomology. Exit codes are 0 on
success, 1 when a check fails, 2 for usage errors, 3 for malformed input
and 4 when a scale limit is hit.
"""
import argparse
import json
import sys
from typing import List, Optional

from .. import __version__
from ..models.canonical import canonical_b, census, compare
from ..models.catalog import catalog
from ..models.cohomology import b_matches_encoder, cohomology_slice_120, sigma_independence
from ..models.encoder import AUTO, EXTENDED, STRICT, BMatrix, build_b, serialize_b
from ..models.errors import GrpMatError, NotClosedError, ScaleLimitError
from ..models.group import Group
from ..models.isomorphism import identify
from ..models.settings import EngineSettings, load_settings
from ..models.solver import cross_check_linear, solution_group, structured_solutions, verify_group
from ..models.sullivan import d_z
from ..utils.error_logger import get_logger
from ..utils.file_handlers import BMatrixFile, GroupFileLoader
from ..utils.rational_matrix import to_text
from ..utils.report import (
    ReportWriter, census_frame, census_payload, solver_frame, solver_payload, verify_payload,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

LOG_RETENTION_DAYS = 7


def _yes(flag: bool) -> str:
    return 'yes' if flag else 'no'


def _emit_json(payload: dict):
    print(json.dumps(payload, indent=2))


def resolve_group(name: str) -> Group:
    """Catalog name, or '@path' for a group file"""
    if name.startswith('@'):
        return GroupFileLoader.load(name[1:])
    return catalog(name)


# Verbs

def cmd_build(args, settings: EngineSettings) -> int:
    group = resolve_group(args.group)
    if args.canonical:
        form = canonical_b(group, settings.threads, settings.canonical_max_order)
        b = build_b(group.relabel(form.ordering), args.mode)
    else:
        b = build_b(group, args.mode)
    if args.out:
        BMatrixFile.save(b, args.out)
        print(f"wrote {args.out}: rows: {b.rows}, cols: {b.n}, mode: {b.mode}")
    else:
        sys.stdout.write(serialize_b(b))
    return EXIT_OK


def cmd_solve(args, settings: EngineSettings) -> int:
    logger = get_logger()
    b: BMatrix = BMatrixFile.load(args.b)
    emit_x = args.emit_x or settings.emit_x
    solutions = structured_solutions(b)

    group = None
    try:
        group = solution_group(b, solutions)
    except NotClosedError as e:
        logger.log_warning(str(e), 'solve')

    linear = None
    try:
        linear = cross_check_linear(b, solutions, settings.size_limit)
    except ScaleLimitError as e:
        logger.log_warning(f"Skipping intertwiner cross-check: {e}", 'solve')

    if args.export:
        ReportWriter.save(solver_frame(solutions), args.export)

    if args.report == 'json':
        _emit_json(solver_payload(b, solutions, group, linear, emit_x))
    else:
        print(f"n: {b.n}, mode: {b.mode}")
        print(f"solutions: {len(solutions)}")
        for idx, pair in enumerate(solutions, start=1):
            print(f"  {idx}: {pair.sigma.cycle_notation()}  label {pair.sigma(1)}")
            print("  Y:")
            print(to_text(pair.y).rstrip('\n'))
            if emit_x:
                print("  X:")
                print(to_text(pair.x).rstrip('\n'))
        if group is not None:
            print(f"solution group: order {group.order}, identified as {identify(group.group) or 'unknown'}")
            print(f"labeling: {' '.join(str(s) for s in group.labeling)}")
            print("group table:")
            for row in group.table:
                print('  ' + ' '.join(str(v) for v in row))
        else:
            print("solution group: not closed")
        if linear is not None:
            print(f"intertwiner dimension: {linear.dimension}, contains all: {_yes(linear.all_contained)}")
    return EXIT_OK if group is not None else EXIT_FAILED


def cmd_verify(args, settings: EngineSettings) -> int:
    group = resolve_group(args.group)
    report = verify_group(group, args.mode)
    if args.report == 'json':
        _emit_json(verify_payload(args.group, report))
    else:
        print(f"solutions: {len(report.solutions)}, isomorphic: {_yes(report.isomorphic)}")
        print(f"mode: {report.b.mode}")
        print(f"labeling: {report.psi.direction if report.psi else 'not a bijection'}")
        print(f"left translations solve: {_yes(report.translations_solve)}")
        if report.error:
            print(f"error: {report.error}")
        print(f"verdict: {'pass' if report.passed else 'fail'}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_iso(args, settings: EngineSettings) -> int:
    g1, g2 = resolve_group(args.g1), resolve_group(args.g2)
    result = compare(g1, g2, settings.threads, settings.canonical_max_order)
    print(
        f"isomorphic: {_yes(result.canonical_equal)}; canonical matrices "
        f"{'equal' if result.canonical_equal else 'differ'}"
    )
    print(f"brute force: {_yes(result.isomorphic)}")
    if not result.agree:
        print("disagreement: canonical test and brute force differ")
        return EXIT_FAILED
    return EXIT_OK


def cmd_census(args, settings: EngineSettings) -> int:
    result = census(args.order, args.exhaustive, settings.threads, settings.canonical_max_order)
    if args.export:
        ReportWriter.save(census_frame(result), args.export)
    if args.report == 'json':
        _emit_json(census_payload(result))
        return EXIT_OK

    print(f"order: {result.order}")
    print(f"count: {result.count}")
    print(f"groups: {result.group_count}")
    for class_id, matrix in enumerate(result.matrices, start=1):
        names = [e.name for e in result.entries if e.class_id == class_id]
        print(f"class {class_id}: {', '.join(names)} ({matrix.mode})")
        print(matrix.pretty())
    for first, second in result.collisions:
        print(f"collision: {first} and {second} share a canonical matrix")
    if result.extended:
        print(f"extended: {', '.join(result.extended)}")
    return EXIT_OK


def cmd_cohomology(args, settings: EngineSettings) -> int:
    group = resolve_group(args.group)
    slice_ = cohomology_slice_120(group, settings.sullivan_max_order, settings.degree_limit)
    independence = sigma_independence(group, settings.sullivan_max_order, slice_)
    matches = b_matches_encoder(group, settings.sullivan_max_order, slice_)

    for key, value in slice_.summary().items():
        print(f"{key}: {value}")
    print(f"representatives closed: {_yes(independence.all_cocycles)}")
    print(f"representatives independent: {_yes(independence.independent)}")
    print(f"b matches encoder: {_yes(matches)}")
    for j in range(1, group.n + 1):
        print(f"d(z{j}) = {d_z(j, group).text()}")
    ok = independence.all_cocycles and independence.independent and matches
    return EXIT_OK if ok else EXIT_FAILED


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='grpmat',
        description="Encode finite groups as 0/1 matrices and recover them from XB = BY",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--settings', help="Settings JSON (default: <home>/settings.json)")
    sub = parser.add_subparsers(dest='verb', required=True)

    group_help = "Catalog name (e.g. Z4, V4, S3, Q8) or @path to a group file"
    modes = (STRICT, EXTENDED, AUTO)

    p = sub.add_parser('build', help="Write the B-matrix of a group")
    p.add_argument('--group', required=True, help=group_help)
    p.add_argument('--mode', choices=modes, default=AUTO)
    p.add_argument('--canonical', action='store_true', help="Use the canonical element ordering")
    p.add_argument('--out', help="Output file (default: stdout)")
    p.set_defaults(handler=cmd_build)

    p = sub.add_parser('solve', help="Structured solutions of XB = BY for a B-matrix file")
    p.add_argument('--b', required=True, help="B-matrix file")
    p.add_argument('--report', choices=('text', 'json'), default='text')
    p.add_argument('--emit-x', action='store_true', help="Include the X matrices")
    p.add_argument('--export', help="Write the solution table to .csv or .xlsx")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser('verify', help="Rebuild a group from the solutions of its B-matrix")
    p.add_argument('--group', required=True, help=group_help)
    p.add_argument('--mode', choices=modes, default=AUTO)
    p.add_argument('--report', choices=('text', 'json'), default='text')
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('iso', help="Isomorphism test by canonical B-matrices")
    p.add_argument('--g1', required=True, help=group_help)
    p.add_argument('--g2', required=True, help=group_help)
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser('census', help="Distinct canonical B-matrices for one order")
    p.add_argument('--order', required=True, type=_positive_int)
    p.add_argument('--exhaustive', action='store_true', help="Enumerate tables instead of the catalog")
    p.add_argument('--report', choices=('text', 'json'), default='text')
    p.add_argument('--export', help="Write the census table to .csv or .xlsx")
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser('cohomology', help="Degree-120 cohomology report")
    p.add_argument('--group', required=True, help=group_help)
    p.set_defaults(handler=cmd_cohomology)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one verb

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    logger = get_logger()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings(args.settings)
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    logger.cleanup_old_logs(LOG_RETENTION_DAYS)
    logger.log_info(f"Running {args.verb}", 'cli')
    try:
        return args.handler(args, settings)
    except GrpMatError as e:
        logger.log_debug(f"{type(e).__name__}: {e}", args.verb)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except FileNotFoundError as e:
        logger.log_debug(f"{type(e).__name__}: {e}", args.verb)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        logger.log_debug(f"{type(e).__name__}: {e}", args.verb)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED
    except Exception as e:
        logger.log_exception(e, args.verb)
        print(
            f"error: unexpected {type(e).__name__}: {e} (details in {logger.get_log_file_path()})",
            file=sys.stderr,
        )
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
