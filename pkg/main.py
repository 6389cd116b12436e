#!/usr/bin/env python3
"""
tetragap - Exact tetrahedron construction and Grace-Danielsson gap verification

Builds the tetrahedron with a given basic face, insphere tangent point and
inradius, and verifies the two-term gap identity and its special cases in
exact rational / quadratic-field arithmetic.

Usage:
    python main.py construct configs/example1.cfg    # Tetrahedron and tangent points
    python main.py gap configs/example1.cfg --approx # Certificate and verdict
    python main.py example 1                         # Built-in example, diff-checked
    python main.py example --export                  # All examples to output/examples.xlsx
    python main.py fuzz --trials 1000 --seed 42      # Identity fuzz
    python main.py planar --p 2/5                    # Planar critical inradius
    python main.py pech --trials 20                  # Pech / Euler checks
    python main.py equilateral --l2 4 --r 1/2        # Equilateral base

Exit codes: 0 success, 1 verification failure, 2 input error, 3 degeneracy.
"""
import argparse
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent))

from src.tetragap.config import (EXIT_OK, EXIT_VERIFICATION, FUZZ_COORDINATE_BOUND,
                                 FUZZ_DENOMINATOR_BOUND, FUZZ_SEED, FUZZ_TRIALS,
                                 PECH_TRIALS)
from src.tetragap.errors import TetragapError
from src.tetragap.scalar import parse_scalar


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='tetragap',
        description=__doc__.splitlines()[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest='command', required=True)

    for name, help_text in (('construct', 'build the tetrahedron from a config file'),
                            ('gap', 'verify the gap certificate for a config file')):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument('config', help='configuration file (key = value lines)')
        cmd.add_argument('--json', action='store_true', help='emit a flat JSON object')
        cmd.add_argument('--approx', action='store_true', help='add ~decimal renderings')

    example = sub.add_parser('example', help='run a built-in example')
    example.add_argument('n', type=int, nargs='?', choices=[1, 2, 3],
                         help='example number (default: all)')
    example.add_argument('--json', action='store_true')
    example.add_argument('--export', action='store_true', help='write output/examples.xlsx')

    fuzz = sub.add_parser('fuzz', help='seeded random identity fuzz')
    fuzz.add_argument('--trials', type=int, default=FUZZ_TRIALS)
    fuzz.add_argument('--seed', type=int, default=FUZZ_SEED)
    fuzz.add_argument('--coordinate-bound', type=int, default=FUZZ_COORDINATE_BOUND)
    fuzz.add_argument('--denominator-bound', type=int, default=FUZZ_DENOMINATOR_BOUND)
    fuzz.add_argument('--workers', type=int, default=1)
    fuzz.add_argument('--export', action='store_true', help='write output/fuzz_trials.csv')

    planar = sub.add_parser('planar', help='planar critical inradius')
    planar.add_argument('--p', type=parse_scalar, required=True)
    planar.add_argument('--json', action='store_true')

    pech = sub.add_parser('pech', help="Pech's criterion and Euler's relation")
    pech.add_argument('--trials', type=int, default=PECH_TRIALS)
    pech.add_argument('--seed', type=int, default=FUZZ_SEED)
    pech.add_argument('--json', action='store_true')

    equilateral = sub.add_parser('equilateral', help='equilateral base touched at its center')
    equilateral.add_argument('--l2', type=parse_scalar, required=True,
                             help='squared side length')
    equilateral.add_argument('--r', type=parse_scalar, required=True)
    equilateral.add_argument('--json', action='store_true')

    return parser


def emit(report, args) -> int:
    from src.tetragap.exporter import print_json, print_report

    if getattr(args, 'json', False):
        print_json(report)
    else:
        print_report(report, approx=getattr(args, 'approx', False))
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def run(args) -> int:
    if args.command in ('construct', 'gap'):
        from src.tetragap.parsers import parse_config_file
        from src.tetragap.verifier import construct_report, gap_report

        cfg = parse_config_file(args.config)
        report = construct_report(cfg) if args.command == 'construct' else gap_report(cfg)
        return emit(report, args)

    if args.command == 'example':
        from src.tetragap.exporter import export_examples_excel, print_example_diff
        from src.tetragap.fixtures import EXAMPLES, run_example
        from src.tetragap.verifier import example_report

        numbers = [args.n] if args.n else sorted(EXAMPLES)
        results = [run_example(n) for n in numbers]
        code = EXIT_OK
        for result in results:
            code = max(code, emit(example_report(result), args))
            if not result.ok and not args.json:
                print_example_diff(result)
        if args.export:
            export_examples_excel(results)
        return code

    if args.command == 'fuzz':
        from src.tetragap.exporter import export_fuzz, print_fuzz_summary
        from src.tetragap.fuzzer import run_fuzz

        summary = run_fuzz(trials=args.trials, seed=args.seed, M=args.coordinate_bound,
                           D=args.denominator_bound, workers=args.workers)
        print_fuzz_summary(summary)
        if args.export:
            export_fuzz(summary)
        return EXIT_OK if not summary.failures else EXIT_VERIFICATION

    if args.command == 'planar':
        from src.tetragap.exporter import render_value
        from src.tetragap.verifier import planar_report

        report = planar_report(args.p)
        code = emit(report, args)
        if not args.json:
            print(f"r_crit^2 = {render_value(report.values['r_crit^2'])}")
        return code

    if args.command == 'pech':
        from src.tetragap.verifier import pech_report

        return emit(pech_report(args.trials, args.seed), args)

    if args.command == 'equilateral':
        from src.tetragap.exporter import render_value
        from src.tetragap.verifier import equilateral_report

        report = equilateral_report(args.l2, args.r)
        code = emit(report, args)
        if not args.json:
            print(f"G = {render_value(report.values['G'])}, regime: {report.values['regime']}")
        return code

    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except TetragapError as e:
        print(f"✗ Erro: {e}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
